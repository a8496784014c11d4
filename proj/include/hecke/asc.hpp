#pragma once

#include <vector>

#include "hecke/macdonald.hpp"

namespace hecke {

enum class Family { V, U };
enum class VPipeline { operator_form, series };
enum class UPipeline { reflection, series };

struct ASCRecord {
    Composition eta;
    Family family = Family::V;
    MultiPoly poly;
};

// Each call computes both pipelines and raises IdentityViolation when they differ.
ASCRecord asc_V(const Composition& eta, VPipeline pipeline, Workspace& ws);
ASCRecord asc_U(const Composition& eta, UPipeline pipeline, Workspace& ws);

// The U series with the unmodified operator, kept as a contrast:
// prod_i rho_a(-q tilde(scriptD_i)) applied to E~_eta(x^R).
MultiPoly EU_series_variant(const Composition& eta, Workspace& ws);

// prod_i sum_m coeffs[m] (sign op_i)^m f; stops once a power vanishes.
MultiPoly apply_operator_series(const MultiPoly& f, const std::function<MultiPoly(int, const MultiPoly&)>& op,
                                const SeriesTable& coeffs, const ExactScalar& sign);

OperatorReport eigen_replay_V(const Composition& eta, Workspace& ws);

enum class SpecialPoint { one, a_point };
// Substitutes (t^{j-n+1}) or (a t^{j-n+1}); IdentityViolation on mismatch.
ExactScalar eval_special(const Composition& eta, SpecialPoint point, Workspace& ws);

SuiteReport asc_suite(int n, int max_degree, Workspace& ws);

// Two-set polynomials: x occupies variables 0..n-1 and y variables n..2n-1.
enum class KernelKind { KA, calKA };

struct TruncatedKernel {
    int n = 0;
    int degree = 0;
    MultiPoly value;
};

TruncatedKernel kernel(KernelKind kind, int n, int degree, Workspace& ws);

MultiPoly outer(const MultiPoly& fx, const MultiPoly& gy);
MultiPoly act_x(const Operator& op, const MultiPoly& K, int n);
MultiPoly act_y(const Operator& op, const MultiPoly& K, int n);
MultiPoly swap_sets(const MultiPoly& K, int n);
// Keeps the terms whose degree in the chosen set is at most d.
MultiPoly truncate_set(const MultiPoly& K, int n, int set, int d);
// Multiplies by prod_i sum_m coeffs[m] (scale z_i)^m with z the chosen set, keeping z-degree <= d.
MultiPoly multiply_set_series(const MultiPoly& K, int n, int set, const SeriesTable& coeffs,
                              const ExactScalar& scale, int d);
// Substitutes a point for x, leaving a polynomial in y.
MultiPoly evaluate_x(const MultiPoly& K, int n, const std::vector<ExactScalar>& point);

SuiteReport kernel_property_suite(int n, int degree, Workspace& ws);
OperatorReport genfun_check(Family family, int n, int degree, Workspace& ws);
std::vector<OperatorReport> A_consistency(int n, int degree);
SuiteReport kernel_suite(int n, int degree, Workspace& ws);

MultiPoly shifted_G(const Composition& eta, Workspace& ws);
ExactScalar sahi_evaluation(const Composition& eta, const ExactScalar& alpha, Workspace& ws);
// Generalized q-binomial from the generating function, checked against the
// ratio G_nu(t^{bar eta}) / G_nu(t^{bar nu}).
ExactScalar qbinomial(const Composition& eta, const Composition& nu, Workspace& ws);
ExactScalar qbinomial_ratio(const Composition& eta, const Composition& nu, Workspace& ws);
ExactScalar sym_qbinomial(const Partition& kappa, const Partition& mu, Workspace& ws);
std::vector<OperatorReport> binomial_sum_rules(const Partition& kappa, const Partition& mu, Workspace& ws);
SuiteReport shifted_suite(int n, int max_degree, Workspace& ws);

// Expansion f = sum c_eta basis(eta) by peeling maximal leading terms.
std::map<Composition, ExactScalar> expand_in_basis(MultiPoly f,
                                                   const std::function<const MultiPoly&(const Composition&)>& basis);

// U+ E^(V)_eta / a_eta, the symmetric V polynomial reached from eta.
MultiPoly symmetric_V(const Composition& eta, Workspace& ws);
std::vector<OperatorReport> sym_asc_relation(const Partition& lambda, Workspace& ws);
std::vector<OperatorReport> hamiltonian_comparison(int n, int max_degree);
SuiteReport symmetric_suite(int n, int max_degree, Workspace& ws);

}  // namespace hecke
