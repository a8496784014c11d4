#include "hecke/asc.hpp"

#include "hecke/errors.hpp"
#include "hecke/operators.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

int set_degree(const ExponentVector& k, int n, int set) {
    int s = 0;
    for (int j = 0; j < n; ++j) s += k[set * n + j];
    return s;
}

// Groups the terms of K by the exponent of the other set; each group is a
// polynomial in the n variables of x.
std::map<ExponentVector, MultiPoly> split_x(const MultiPoly& K, int n) {
    std::map<ExponentVector, MultiPoly> groups;
    for (const auto& [k, v] : K.terms()) {
        ExponentVector xe, ye;
        for (int j = 0; j < n; ++j) {
            xe.set(j, k[j]);
            ye.set(j, k[n + j]);
        }
        auto it = groups.try_emplace(ye, MultiPoly(n)).first;
        it->second.add_term(xe, v);
    }
    return groups;
}

MultiPoly scale_by_degree(const MultiPoly& f, const ExactScalar& c) {
    return f.map_terms([&c](const ExponentVector& k, const ExactScalar& v) {
        return std::make_pair(k, v * c.pow(k.degree()));
    });
}

std::string cap(int d) { return "degree<=" + std::to_string(d); }

}  // namespace

MultiPoly outer(const MultiPoly& fx, const MultiPoly& gy) {
    int n = fx.nvars();
    if (2 * n > kMaxVars) throw SizeError("two-set polynomials need 2n <= " + std::to_string(kMaxVars));
    MultiPoly r(2 * n);
    for (const auto& [k1, v1] : fx.terms())
        for (const auto& [k2, v2] : gy.terms()) {
            ExponentVector k = k1;
            for (int j = 0; j < n; ++j) k.set(n + j, k2[j]);
            r.add_term(k, v1 * v2);
        }
    return r;
}

MultiPoly act_x(const Operator& op, const MultiPoly& K, int n) {
    MultiPoly r(2 * n);
    for (const auto& [ye, p] : split_x(K, n)) {
        MultiPoly image = op(p);
        for (const auto& [k, v] : image.terms()) {
            ExponentVector e = k;
            for (int j = 0; j < n; ++j) e.set(n + j, ye[j]);
            r.add_term(e, v);
        }
    }
    return r;
}

MultiPoly swap_sets(const MultiPoly& K, int n) {
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[j] = n + j;
        perm[n + j] = j;
    }
    return K.permute_vars(perm);
}

MultiPoly act_y(const Operator& op, const MultiPoly& K, int n) { return swap_sets(act_x(op, swap_sets(K, n), n), n); }

MultiPoly truncate_set(const MultiPoly& K, int n, int set, int d) {
    MultiPoly r(K.nvars());
    for (const auto& [k, v] : K.terms())
        if (set_degree(k, n, set) <= d) r.add_term(k, v);
    return r;
}

MultiPoly multiply_set_series(const MultiPoly& K, int n, int set, const SeriesTable& coeffs,
                              const ExactScalar& scale, int d) {
    MultiPoly cur = truncate_set(K, n, set, d);
    for (int i = 0; i < n; ++i) {
        int var = set * n + i;
        MultiPoly acc(K.nvars());
        for (const auto& [k, v] : cur.terms()) {
            int room = d - set_degree(k, n, set);
            for (int m = 0; m <= room && m <= coeffs.degree(); ++m) {
                ExponentVector e = k;
                e.set(var, k[var] + m);
                acc.add_term(e, v * coeffs[static_cast<std::size_t>(m)] * scale.pow(m));
            }
        }
        cur = std::move(acc);
    }
    return cur;
}

MultiPoly evaluate_x(const MultiPoly& K, int n, const std::vector<ExactScalar>& point) {
    MultiPoly r(n);
    for (const auto& [k, v] : K.terms()) {
        ExactScalar c = v;
        ExponentVector ye;
        for (int j = 0; j < n; ++j) {
            c *= point[static_cast<std::size_t>(j)].pow(k[j]);
            ye.set(j, k[n + j]);
        }
        r.add_term(ye, c);
    }
    return r;
}

TruncatedKernel kernel(KernelKind kind, int n, int degree, Workspace& ws) {
    MultiPoly K(2 * n);
    for (const auto& eta : compositions_up_to(n, degree)) {
        auto c = composition_constants(eta);
        ExactScalar w = c.d / (c.d_prime * c.e);
        if (kind == KernelKind::calKA) w *= ExactScalar::monomial(c.a_stat, (n - 1) * size_of(eta) - c.lprime_stat);
        K += outer(ws.E(eta), ws.E_tilde(eta)).scaled(w);
    }
    return {n, degree, std::move(K)};
}

OperatorReport genfun_check(Family family, int n, int degree, Workspace& ws) {
    MultiPoly rhs(2 * n);
    if (family == Family::V) {
        const MultiPoly& cK = kernel(KernelKind::calKA, n, degree, ws).value;
        MultiPoly lhs = multiply_set_series(cK, n, 1, rho_series(SeriesDirection::reciprocal, degree),
                                            ExactScalar(-1), degree);
        for (const auto& nu : compositions_up_to(n, degree)) {
            auto c = composition_constants(nu);
            ExactScalar A = ExactScalar::monomial(c.a_stat, (n - 1) * size_of(nu) - c.lprime_stat) * c.d /
                            (c.d_prime * c.e);
            rhs += outer(ws.EV(nu), ws.E_tilde(nu)).scaled(A);
        }
        return compare("prod 1/rho_a(-z) calK(y;z) = sum A E^V(y) E~(z)", n, cap(degree), lhs, rhs);
    }
    // K(z; y^R) written with y as the first set.
    const MultiPoly& K = kernel(KernelKind::KA, n, degree, ws).value;
    std::vector<int> perm(2 * n);
    for (int j = 0; j < n; ++j) {
        perm[j] = n + j;
        perm[n + j] = n - 1 - j;
    }
    MultiPoly lhs = multiply_set_series(K.permute_vars(perm), n, 1, rho_series(SeriesDirection::product, degree), kOne,
                                        degree);
    for (const auto& nu : compositions_up_to(n, degree)) {
        auto c = composition_constants(nu);
        rhs += outer(ws.EU(nu), ws.E(nu)).scaled(c.d / (c.d_prime * c.e));
    }
    return compare("prod rho_a(z) K(z;y^R) = sum d/(d'e) E^U(y) E(z)", n, cap(degree), lhs, rhs);
}

std::vector<OperatorReport> A_consistency(int n, int degree) {
    std::vector<OperatorReport> out;
    const ExactScalar q = ExactScalar::q(), a = ExactScalar::a();
    for (const auto& nu : compositions_up_to(n, degree)) {
        auto c = composition_constants(nu);
        int m = size_of(nu);
        ExactScalar norm_ratio = (a / q * ExactScalar::monomial(0, 2 - 2 * n)).pow(m) *
                                 ExactScalar::monomial(-2 * c.a_stat, c.l_stat + c.lprime_stat) * c.d_prime * c.e / c.d;
        ExactScalar first = (a / q).pow(m) / (alpha_coefficient(nu) * norm_ratio);
        ExactScalar second = ExactScalar::monomial(c.a_stat, (n - 1) * m - c.lprime_stat) * c.d / (c.d_prime * c.e);
        out.push_back(compare_scalar("A first form = second form", n, "nu=(" + composition_string(nu) + ")", first, second));
    }
    return out;
}

SuiteReport kernel_property_suite(int n, int degree, Workspace& ws) {
    SuiteReport out{"kernel", {}, {}};
    const ExactScalar q = ExactScalar::q(), t = ExactScalar::t();
    const MultiPoly& K = kernel(KernelKind::KA, n, degree, ws).value;
    const MultiPoly& cK = kernel(KernelKind::calKA, n, degree, ws).value;
    const int d = degree;
    std::string at = cap(d);

    MultiPoly swapped = swap_sets(K, n).map_terms([n, &q](const ExponentVector& k, const ExactScalar& v) {
        return std::make_pair(k, v * (-q).pow(set_degree(k, n, 1)));
    });
    out.add(compare("tilde(calK)(x;y) = K(-qy;x)", n, at, cK.tilde(), swapped));

    for (int i = 1; i < n; ++i)
        for (int s : {1, -1}) {
            Operator tx = [i, s](const MultiPoly& f) { return apply_T(i, s, f); };
            Operator ty = tilde_conjugate([i, s](const MultiPoly& f) { return apply_T(i, -s, f); });
            out.add(compare("(a) T_i^{" + std::to_string(s) + "} in x = tilde T_i^{" +
                                std::to_string(-s) + "} in y i=" + std::to_string(i),
                            n, at, act_x(tx, cK, n), act_y(ty, cK, n)));
        }

    Operator psi1 = [](const MultiPoly& f) { return apply_lower(Lower::Psi1, f); };
    Operator phi2 = tilde_conjugate([](const MultiPoly& f) { return apply_raise(Raise::Phi2, f); });
    out.add(compare("(b) Psi_1 in x = tilde Phi_2 in y", n, cap(d - 1) + " in x",
                    truncate_set(act_x(psi1, cK, n), n, 0, d - 1), truncate_set(act_y(phi2, cK, n), n, 0, d - 1)));

    for (int i = 1; i <= n; ++i) {
        std::string ai = cap(d - 1) + " i=" + std::to_string(i);
        Operator sd = [i](const MultiPoly& f) { return apply_scriptD(i, f); };
        Operator dd = [i](const MultiPoly& f) { return apply_D(i, f); };
        out.add(compare("(c) scriptD_i in x calK = y_i calK", n, ai + " in y",
                        truncate_set(act_x(sd, cK, n), n, 1, d - 1), truncate_set(cK.mul_var(n + i - 1), n, 1, d - 1)));
        out.add(compare("D_i in x K = y_i K", n, ai + " in y", truncate_set(act_x(dd, K, n), n, 1, d - 1),
                        truncate_set(K.mul_var(n + i - 1), n, 1, d - 1)));
        out.add(compare("tilde scriptD_i in y K = -q^{-1} x_i K", n, ai + " in x",
                        truncate_set(act_y(tilde_conjugate(sd), K, n), n, 0, d - 1),
                        truncate_set(K.mul_var(i - 1).scaled(-q.inverse()), n, 0, d - 1)));
        MultiPoly l2 = truncate_set(act_y(tilde_conjugate(dd), cK, n), n, 0, d - 1);
        out.add(compare("tilde D_i in y calK = -q^{-1} x_i calK", n, ai + " in x", l2,
                        truncate_set(cK.mul_var(i - 1).scaled(-q.inverse()), n, 0, d - 1)));
        OperatorReport alt = compare("tilde D_i in y calK with constant -q (alternative)", n, ai + " in x", l2,
                                         truncate_set(cK.mul_var(i - 1).scaled(-q), n, 0, d - 1));
        alt.informational = true;
        out.add(std::move(alt));
    }

    // Kaneko's 0psi0 with the conjugate-partition exponent, and with b(lambda) for contrast.
    for (bool alt : {false, true}) {
        MultiPoly psi(2 * n);
        for (int m = 0; m <= d; ++m)
            for (const auto& lambda : partitions(n, m)) {
                int b = alt ? b_statistic(lambda) : b_statistic(conjugate(lambda));
                ExactScalar w = ExactScalar(m % 2 ? -1 : 1) * q.pow(b) /
                                (composition_constants(lambda).d_prime * principal_value_P(lambda));
                const MultiPoly& P = ws.P(lambda);
                psi += outer(P, scale_by_degree(P, -t.pow(n - 1))).scaled(w);
            }
        OperatorReport r = compare(alt ? "U+ in x calK with exponent q^{b(lambda)} (alternative)"
                                           : "U+ in x calK = [n]_t! 0psi0(x; -t^{n-1} y)",
                                   n, at, act_x([](const MultiPoly& f) { return apply_uplus(f); }, cK, n),
                                   psi.scaled(t_factorial(n)));
        r.informational = alt;
        out.add(std::move(r));
    }

    auto shell = [n, d](const SeriesTable& coeffs, const ExactScalar& scale) {
        return multiply_set_series(MultiPoly::constant(n, kOne), n, 0, coeffs, scale, d);
    };
    out.add(compare("calK(t^delta; z) = prod (-t^{n-1} z_i; q)_inf", n, at, evaluate_x(cK, n, principal_point(n)),
                    shell(euler_series(SeriesDirection::product, d), -t.pow(n - 1))));
    out.add(compare("K(t^delta; z) = prod 1/(z_i; q)_inf", n, at, evaluate_x(K, n, principal_point(n)),
                    shell(euler_series(SeriesDirection::reciprocal, d), kOne)));
    return out;
}

SuiteReport kernel_suite(int n, int degree, Workspace& ws) {
    SuiteReport out = kernel_property_suite(n, degree, ws);
    out.add(genfun_check(Family::V, n, degree, ws));
    out.add(genfun_check(Family::U, n, degree, ws));
    for (auto& r : A_consistency(n, degree)) out.add(std::move(r));
    return out;
}

}  // namespace hecke
