#include "hecke/asc.hpp"

#include "hecke/operators.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

MultiPoly asymmetry(const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly r(n);
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(n);
        for (int k = 0; k < n; ++k) perm[k] = k;
        std::swap(perm[i], perm[i + 1]);
        r += f.permute_vars(perm) - f;
    }
    return r;
}

MultiPoly monomial_symmetric(const Partition& lambda) {
    int n = static_cast<int>(lambda.size());
    MultiPoly m(n);
    for (const auto& eta : orbit(lambda)) m.add_term(ExponentVector::from(eta), kOne);
    return m;
}

// The eigenoperator H whose tilde restricts to the sum of the h_i on symmetric functions.
MultiPoly apply_H(const MultiPoly& f) {
    int n = f.nvars();
    const ExactScalar t = ExactScalar::t(), a = ExactScalar::a();
    MultiPoly r(n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly yi = apply_Y(i, -1, f);
        MultiPoly dyi = apply_D(i, yi);
        ExactScalar ti = ExactScalar::monomial(0, 1 - i);
        r += yi.scaled(ExactScalar::monomial(0, 1 - n));
        r -= dyi.scaled((kOne + a) * ti);
        r += apply_D(i, dyi).scaled(a * ti);
        for (int j = i + 1; j <= n; ++j) r += apply_D(j, dyi).scaled(a * (kOne - t.inverse()) * ti);
    }
    return r;
}

OperatorReport sym_genfun_check(int n, int d, Workspace& ws) {
    const ExactScalar q = ExactScalar::q();
    MultiPoly psi(2 * n), rhs(2 * n);
    for (int m = 0; m <= d; ++m)
        for (const auto& lambda : partitions(n, m)) {
            ExactScalar w = ExactScalar(m % 2 ? -1 : 1) * q.pow(b_statistic(conjugate(lambda))) /
                            (composition_constants(lambda).d_prime * principal_value_P(lambda));
            psi += outer(ws.P(lambda), ws.P(lambda)).scaled(w);
            rhs += outer(ws.P(lambda), symmetric_V(lambda, ws)).scaled(w);
        }
    MultiPoly lhs = multiply_set_series(psi, n, 0, rho_series(SeriesDirection::reciprocal, d),
                                        ExactScalar::monomial(0, 1 - n), d);
    return compare("symmetric V generating function prod 1/rho_a(t^{1-n} x) 0psi0(x;y)", n,
                   "degree<=" + std::to_string(d) + " in x", lhs, rhs);
}

}  // namespace

MultiPoly symmetric_V(const Composition& eta, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    auto c = composition_constants(eta);
    ExactScalar a_eta = t_factorial(n) * ExactScalar::monomial(0, c.l_stat) * c.e /
                        (principal_value_P(sorted_partition(eta)) * c.d);
    return apply_uplus(ws.EV(eta)).scaled(a_eta.inverse());
}

std::vector<OperatorReport> sym_asc_relation(const Partition& lambda, Workspace& ws) {
    std::vector<OperatorReport> out;
    int n = static_cast<int>(lambda.size());
    std::string at = "lambda=(" + composition_string(lambda) + ")";
    MultiPoly first = symmetric_V(lambda, ws);
    for (const auto& eta : orbit(lambda))
        out.push_back(compare("U+ E^V_eta / a_eta independent of eta", n, at + " eta=(" + composition_string(eta) + ")",
                              symmetric_V(eta, ws), first));
    out.push_back(OperatorReport{"symmetric V polynomial is symmetric", n, at, asymmetry(first)});
    out.push_back(OperatorReport{"top-degree part equals P_lambda", n, at,
                                 (first - ws.P(lambda)).homogeneous_part(size_of(lambda))});
    return out;
}

std::vector<OperatorReport> hamiltonian_comparison(int n, int max_degree) {
    std::vector<OperatorReport> out;
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& lambda : partitions(n, d)) {
            MultiPoly f = monomial_symmetric(lambda);
            std::string at = "m_(" + composition_string(lambda) + ")";
            MultiPoly lhs(n), id1l(n), id1r(n), id2l(n), id2r(n), id3l(n), id3r(n);
            for (int i = 1; i <= n; ++i) {
                lhs += apply_h(i, f);
                id1l += tilde_conjugate([i](const MultiPoly& g) { return apply_Y(i, -1, g); })(f);
                id1r += apply_Y(i, 1, f);
                ExactScalar ti = ExactScalar::monomial(0, i - 1);
                id2l -= tilde_conjugate([i](const MultiPoly& g) { return apply_D(i, apply_Y(i, -1, g)); })(f).scaled(ti);
                id2r += apply_D(i, f);
                id3l += tilde_conjugate([i](const MultiPoly& g) { return apply_D(i, apply_D(i, apply_Y(i, -1, g))); })(f)
                            .scaled(ti);
                for (int j = i + 1; j <= n; ++j)
                    id3l += tilde_conjugate([i, j](const MultiPoly& g) { return apply_D(j, apply_D(i, apply_Y(i, -1, g))); })(
                                f)
                                .scaled((kOne - ExactScalar::t()) * ti);
                id3r += apply_D(i, apply_Y(i, -1, apply_D(i, f))).scaled(ExactScalar::monomial(0, 1 - n));
            }
            out.push_back(compare("sum h_i = t^{1-n} tilde(H) on symmetric f", n, at, lhs,
                                  tilde_conjugate(apply_H)(f).scaled(ExactScalar::monomial(0, 1 - n))));
            out.push_back(compare("restriction sum tilde(Y_i^{-1}) = sum Y_i", n, at, id1l, id1r));
            out.push_back(compare("restriction -sum t^{i-1} tilde(D_i Y_i^{-1}) = sum D_i", n, at, id2l, id2r));
            out.push_back(compare("restriction second-order D terms", n, at, id3l, id3r));
        }
    return out;
}

SuiteReport symmetric_suite(int n, int max_degree, Workspace& ws) {
    SuiteReport out{"symmetric", {}, {}};
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& lambda : partitions(n, d))
            for (auto& r : sym_asc_relation(lambda, ws)) out.add(std::move(r));
    out.add(sym_genfun_check(n, max_degree, ws));
    for (auto& r : hamiltonian_comparison(n, max_degree)) out.add(std::move(r));
    return out;
}

}  // namespace hecke
