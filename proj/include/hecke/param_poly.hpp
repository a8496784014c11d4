#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hecke {

// The three formal parameters of the coefficient field, in monomial-order rank.
enum class Param { q = 0, t = 1, a = 2 };

// Exponent triple (q, t, a) packed into one word as
//   total degree | q | t | a   (16 bits each).
// Unsigned comparison of packed words is exactly graded-lex order with
// q > t > a, and adding packed words multiplies monomials.
using PackedMonomial = std::uint64_t;

PackedMonomial pack_monomial(unsigned eq, unsigned et, unsigned ea);
unsigned monomial_exponent(PackedMonomial m, int var);
bool monomial_divides(PackedMonomial d, PackedMonomial m);

// Integer-coefficient polynomial in q, t, a.  Terms are kept sorted by
// decreasing graded-lex order with no zero coefficients, so equality is
// structural.
class ParamPoly {
public:
    struct Term {
        PackedMonomial mono;
        mpz_class coeff;
    };

    ParamPoly() = default;
    ParamPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit ParamPoly(const mpz_class& c);

    static ParamPoly monomial(unsigned eq, unsigned et, unsigned ea, const mpz_class& c = 1);
    static ParamPoly variable(Param p, unsigned power = 1);
    static ParamPoly from_terms(std::vector<Term> terms);  // sorts and combines

    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    const mpz_class& leading_coeff() const { return terms_.front().coeff; }
    PackedMonomial leading_monomial() const { return terms_.front().mono; }
    int sign() const;  // sign of the leading coefficient, 0 for zero

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend bool operator==(const ParamPoly& a, const ParamPoly& b);
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    ParamPoly times_monomial(PackedMonomial m, const mpz_class& c = 1) const;
    ParamPoly times(const mpz_class& c) const;
    ParamPoly divided_by(const mpz_class& c) const;  // exact integer division of every coefficient

    // Exact division over Z; nullopt when the divisor does not divide.
    std::optional<ParamPoly> try_divide(const ParamPoly& d) const;
    ParamPoly divide_exact(const ParamPoly& d) const;  // throws DivisibilityError

    mpz_class content() const;  // positive gcd of the coefficients (0 for zero)
    PackedMonomial monomial_content() const;  // componentwise minimum exponent
    mpz_class max_norm() const;

    unsigned degree_in(int var) const;
    bool uses(int var) const;
    ParamPoly coefficient_of(int var, unsigned power) const;  // coefficient of var^power
    ParamPoly substitute(int var, const mpz_class& value) const;
    mpq_class evaluate(const mpq_class& q, const mpq_class& t, const mpq_class& a) const;

    // p(1/q, 1/t) scaled by the smallest monomial making it a polynomial again;
    // the scaling monomial is returned through `shift`.
    ParamPoly reflect(bool q, bool t, PackedMonomial& shift) const;

    std::string to_string() const;

    static ParamPoly gcd(const ParamPoly& f, const ParamPoly& g);

private:
    std::vector<Term> terms_;
};

}  // namespace hecke
