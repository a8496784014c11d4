#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/scalar.hpp"

namespace hecke {

// Kernels use two variable sets of size n, so n <= 4 there; single-set
// polynomials allow up to 8 variables.
inline constexpr int kMaxVars = 8;

struct ExponentVector {
    std::array<std::uint8_t, kMaxVars> e{};

    int operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    void set(int i, int v);
    int degree() const;
    auto operator<=>(const ExponentVector&) const = default;

    static ExponentVector from(const std::vector<int>& parts);
    std::vector<int> to_vector(int n) const;
};

// Graded order: larger total degree first, then lexicographically larger first.
struct GradedGreater {
    bool operator()(const ExponentVector& x, const ExponentVector& y) const {
        int dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx > dy;
        return x.e > y.e;
    }
};

class MultiPoly {
public:
    using TermMap = std::map<ExponentVector, ExactScalar, GradedGreater>;

    explicit MultiPoly(int n = 0);
    static MultiPoly constant(int n, const ExactScalar& c);
    static MultiPoly monomial(int n, const ExponentVector& exp, const ExactScalar& c = ExactScalar(1));
    static MultiPoly monomial(int n, const std::vector<int>& exp, const ExactScalar& c = ExactScalar(1));
    static MultiPoly variable(int n, int i);  // x_{i+1}, 0-based index

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;  // -1 for zero
    ExactScalar coefficient(const ExponentVector& exp) const;

    void add_term(const ExponentVector& exp, const ExactScalar& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly x, const MultiPoly& y) { return x += y; }
    friend MultiPoly operator-(MultiPoly x, const MultiPoly& y) { return x -= y; }
    friend MultiPoly operator*(const MultiPoly& x, const MultiPoly& y);
    friend bool operator==(const MultiPoly& x, const MultiPoly& y) { return x.n_ == y.n_ && x.terms_ == y.terms_; }
    friend bool operator!=(const MultiPoly& x, const MultiPoly& y) { return !(x == y); }

    MultiPoly scaled(const ExactScalar& c) const;
    MultiPoly mul_var(int i, int power = 1) const;
    MultiPoly div_var(int i) const;  // exact; throws DivisibilityError
    MultiPoly map_coefficients(const std::function<ExactScalar(const ExactScalar&)>& fn) const;
    MultiPoly map_terms(const std::function<std::pair<ExponentVector, ExactScalar>(const ExponentVector&,
                                                                                   const ExactScalar&)>& fn) const;

    // perm[i] = image index of variable i.
    MultiPoly permute_vars(const std::vector<int>& perm) const;
    MultiPoly reverse_vars() const;
    MultiPoly scale_var(int i, const ExactScalar& factor) const;
    MultiPoly tilde() const;
    MultiPoly hat() const { return tilde().reverse_vars(); }
    MultiPoly substitute_a(const ExactScalar& value) const;
    MultiPoly homogeneous_part(int d) const;
    MultiPoly truncate(int max_degree) const;
    bool is_symmetric() const;

    ExactScalar evaluate(const std::vector<ExactScalar>& point) const;

    // Least common multiple of the coefficient denominators (up to integer content).
    ParamPoly common_denominator() const;

    std::string to_string(const std::string& var = "x") const;

private:
    int n_;
    TermMap terms_;
};

// f = g * h with exact division by a graded-leading-term algorithm; throws
// DivisibilityError carrying the remainder when not exact.
MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g);

struct LeadingTerm {
    ExponentVector exp;
    ExactScalar coeff;
};

// A maximal top-degree term under the composition order.  With
// require_unique, two incomparable maximal terms raise DegeneracyError.
LeadingTerm leading_term(const MultiPoly& f, bool require_unique = true);

}  // namespace hecke
