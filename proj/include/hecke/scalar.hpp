#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hecke/param_poly.hpp"

namespace hecke {

// An element of Q(q,t,a) in canonical form: coprime integer polynomials,
// integer content removed, denominator with positive leading coefficient.
// Canonical form is unique, so operator== is representation equality.
class ExactScalar {
public:
    ExactScalar() : den_(1) {}
    ExactScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit ExactScalar(const mpz_class& c) : num_(c), den_(1) {}
    explicit ExactScalar(const mpq_class& c);
    explicit ExactScalar(ParamPoly p) : num_(std::move(p)), den_(1) {}

    // scalar_normalize: throws DivisionByZero when den is zero.
    static ExactScalar fraction(const ParamPoly& num, const ParamPoly& den);
    static ExactScalar q() { return ExactScalar(ParamPoly::variable(Param::q)); }
    static ExactScalar t() { return ExactScalar(ParamPoly::variable(Param::t)); }
    static ExactScalar a() { return ExactScalar(ParamPoly::variable(Param::a)); }
    // q^i t^j a^k for integer (possibly negative) exponents.
    static ExactScalar monomial(int eq, int et, int ea = 0);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    ExactScalar operator-() const;
    ExactScalar& operator+=(const ExactScalar& o);
    ExactScalar& operator-=(const ExactScalar& o);
    ExactScalar& operator*=(const ExactScalar& o);
    ExactScalar& operator/=(const ExactScalar& o);
    friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
    friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
    friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
    friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    ExactScalar inverse() const;
    ExactScalar pow(int k) const;

    // scalar_invert_params: p -> 1/p for each selected parameter.
    ExactScalar invert_params(bool q, bool t) const;
    ExactScalar tilde() const { return invert_params(true, true); }
    // Specialize a = value; throws PoleError if the denominator vanishes.
    ExactScalar substitute_a(const ExactScalar& value) const;

    // Exact rational value at (q0, t0, a0); throws PoleError naming the vanishing denominator.
    mpq_class evaluate(const mpq_class& q0, const mpq_class& t0, const mpq_class& a0) const;

    // "(num)" when the denominator is 1, otherwise "(num)/(den)".
    std::string to_string() const;
    std::string num_string() const { return "(" + num_.to_string() + ")"; }
    std::string den_string() const { return "(" + den_.to_string() + ")"; }

private:
    ExactScalar(ParamPoly num, ParamPoly den, bool) : num_(std::move(num)), den_(std::move(den)) {}

    ParamPoly num_;
    ParamPoly den_;
};

// Coefficients of u^m in a formal power series, m = 0..degree.
struct SeriesTable {
    std::vector<ExactScalar> coefficients;
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    const ExactScalar& operator[](std::size_t m) const { return coefficients[m]; }
};

enum class SeriesDirection { product, reciprocal };

// Series of rho_a(u) = (u;q)_inf (au;q)_inf, or of its reciprocal.
SeriesTable rho_series(SeriesDirection direction, int degree);
// Euler expansions of (u;q)_inf and 1/(u;q)_inf.
SeriesTable euler_series(SeriesDirection direction, int degree);
// Cauchy product truncated to the common degree.
SeriesTable series_product(const SeriesTable& x, const SeriesTable& y);

// (x;q)_m for an exact scalar x.
ExactScalar qpochhammer(const ExactScalar& x, int m);

}  // namespace hecke
