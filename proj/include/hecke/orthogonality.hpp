#pragma once

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

#include <functional>
#include <json.hpp>
#include <string>
#include <vector>

#include "hecke/asc.hpp"

namespace hecke {

using Real = boost::multiprecision::mpfr_float_100;

struct InnerProductConfig {
    mpq_class q0{1, 2};
    int k = 1;  // t = q^k
    mpq_class a0{-1};
    int lattice_cutoff = 60;   // M terms per variable
    int product_cutoff = 120;  // J factors per infinite product
    double tolerance = 1e-8;

    mpq_class t0() const;
    void validate() const;  // DomainError unless 0 < q0 < 1, a0 < 0, k >= 1, cutoffs positive
};

Real to_real(const mpq_class& x);
std::string real_string(const Real& x);

enum class JacksonDomain { a_to_one, one_to_infinity };

struct JacksonSum {
    Real value;
    Real last_term;
    bool tail_warning = false;
};

JacksonSum jackson_integral(const std::function<Real(const mpq_class&)>& f, JacksonDomain domain,
                            const InnerProductConfig& config);

// (x; q)_J.  With dash, factors that vanish exactly are dropped.
Real truncated_qpochhammer(const mpq_class& x, const mpq_class& q, int J, bool dash);

// w_V on the lattice q^{-m} (dash rule) or w_U on the bilateral lattice; a
// zero denominator factor outside the dash rule raises PoleError.
Real weight_eval(Family kind, const mpq_class& x, const InnerProductConfig& config);

// A polynomial with its coefficients specialized at (q0, t0, a0).
struct NumericPoly {
    int n = 0;
    std::vector<std::pair<std::vector<int>, mpq_class>> terms;
    mpq_class evaluate(const std::vector<mpq_class>& x) const;
};
NumericPoly specialize(const MultiPoly& f, const InnerProductConfig& config);

// Delta_q^{(k)} as an exact polynomial in x with coefficients in q.
MultiPoly delta_polynomial(int n, int k);

struct GramResult {
    std::string family;
    int degree_cap = 0;
    std::vector<Composition> labels;
    std::vector<std::vector<Real>> matrix;
    std::vector<std::vector<Real>> tails;  // magnitude of the first discarded lattice shell
    Real max_off_diagonal;                 // max |G_ij| / sqrt(|G_ii G_jj|)
};

GramResult gram_matrix(Family kind, const std::vector<MultiPoly>& polys, const std::vector<Composition>& labels,
                       const InnerProductConfig& config, int degree_cap = 0);
Real inner_product(const MultiPoly& f, const MultiPoly& g, Family kind, const InnerProductConfig& config);

nlohmann::json gram_json(const GramResult& g, const InnerProductConfig& config);
std::string gram_csv(const GramResult& g);

// N_eta / N_0 in Q(q,t,a); `alt` flips the sign of the leading U factor (a variant that fails).
ExactScalar norm_ratio(Family kind, const Composition& eta, bool alt = false);
mpq_class norm_zero(Family kind, int n, const InnerProductConfig& config);

struct GramReport {
    GramResult gram;
    std::vector<NumericCheck> checks;
};

// Orthogonality, closed-form norms and the two norm recurrences for |eta| <= cap.
GramReport gram_and_norms(Family kind, int n, int degree_cap, const InnerProductConfig& config, Workspace& ws);

std::vector<NumericCheck> adjoint_and_measure_checks(const InnerProductConfig& config, Workspace& ws);
// The symbolic inversion of Delta under q -> 1/q, with the variant exponent -kn(n-1) as an informational line.
std::vector<OperatorReport> delta_inversion(int n, int k);

SuiteReport orthogonality_suite(const InnerProductConfig& config, Workspace& ws, int degree_cap = 3);

}  // namespace hecke
