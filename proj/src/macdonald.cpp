#include "hecke/macdonald.hpp"

#include <algorithm>

#include "hecke/errors.hpp"
#include "hecke/operators.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

ExactScalar tpow(int k) { return ExactScalar::monomial(0, k); }

std::string label(const Composition& eta) { return "eta=(" + composition_string(eta) + ")"; }

Composition unit_removed(const Composition& nu, int j) {
    Composition r = nu;
    --r[j];
    return r;
}

int first_positive(const Composition& nu) {
    for (std::size_t j = 0; j < nu.size(); ++j)
        if (nu[j] > 0) return static_cast<int>(j);
    return -1;
}

}  // namespace

const MultiPoly& Workspace::Y_on_monomial(int i, const Composition& mu) {
    auto key = std::make_pair(i, mu);
    auto it = Y_mono_.find(key);
    if (it != Y_mono_.end()) return it->second;
    int n = static_cast<int>(mu.size());
    return Y_mono_.emplace(key, apply_Y(i, 1, MultiPoly::monomial(n, mu))).first->second;
}

const MultiPoly& Workspace::E(const Composition& eta) {
    auto it = E_.find(eta);
    if (it != E_.end()) return it->second;
    int n = static_cast<int>(eta.size());
    if (n < 1 || n > kMaxVars) throw SizeError("unsupported number of variables");
    std::vector<Composition> below;
    for (auto& nu : compositions(n, size_of(eta)))
        if (comp_less(nu, eta)) below.push_back(nu);
    const auto lambda = spectral_vector(eta);

    // Back-substitution from the top: for each nu pick an operator Y_i whose
    // eigenvalue separates nu from eta and read off the coefficient of x^nu.
    std::map<Composition, ExactScalar> c{{eta, kOne}};
    for (const auto& nu : topological_order(below)) {
        const auto sn = spectral_vector(nu);
        int i = 0;
        while (i < n && sn[i] == lambda[i]) ++i;
        if (i == n) throw DegeneracyError("spectral vectors of (" + composition_string(nu) + ") and (" +
                                          composition_string(eta) + ") coincide");
        ExponentVector key = ExponentVector::from(nu);
        ExactScalar s;
        for (const auto& [mu, cm] : c) s += cm * Y_on_monomial(i + 1, mu).coefficient(key);
        c[nu] = -s / (sn[i] - lambda[i]);
    }
    MultiPoly poly(n);
    for (const auto& [mu, cm] : c) poly.add_term(ExponentVector::from(mu), cm);

    for (int i = 1; i <= n; ++i) {
        MultiPoly y(n);
        for (const auto& [mu, cm] : c) y += Y_on_monomial(i, mu).scaled(cm);
        if (y != poly.scaled(lambda[i - 1]))
            throw DegeneracyError("joint eigenproblem for (" + composition_string(eta) + ") is not one-dimensional");
    }
    return E_.emplace(eta, std::move(poly)).first->second;
}

const MultiPoly& Workspace::E_tilde(const Composition& eta) {
    auto it = E_tilde_.find(eta);
    if (it != E_tilde_.end()) return it->second;
    MultiPoly f = E(eta).tilde();
    return E_tilde_.emplace(eta, std::move(f)).first->second;
}

const MultiPoly& Workspace::P(const Partition& lambda) {
    auto it = P_.find(lambda);
    if (it != P_.end()) return it->second;
    if (!is_partition(lambda)) throw DomainError("(" + composition_string(lambda) + ") is not a partition");
    int n = static_cast<int>(lambda.size());
    const ExactScalar dl = composition_constants(lambda).d_prime;
    MultiPoly f(n);
    for (const auto& eta : orbit(lambda)) f += E(eta).scaled(dl / composition_constants(eta).d_prime);
    return P_.emplace(lambda, std::move(f)).first->second;
}

const MultiPoly& Workspace::e_word(const Composition& nu) {
    auto it = e_word_.find(nu);
    if (it != e_word_.end()) return it->second;
    int j = first_positive(nu);
    int n = static_cast<int>(nu.size());
    MultiPoly f = j < 0 ? MultiPoly::constant(n, kOne) : apply_e(j + 1, e_word(unit_removed(nu, j)));
    return e_word_.emplace(nu, std::move(f)).first->second;
}

const MultiPoly& Workspace::E_word(const Composition& nu) {
    auto it = E_word_.find(nu);
    if (it != E_word_.end()) return it->second;
    int j = first_positive(nu);
    int n = static_cast<int>(nu.size());
    MultiPoly f = j < 0 ? MultiPoly::constant(n, kOne) : apply_bigE(j + 1, E_word(unit_removed(nu, j)));
    return E_word_.emplace(nu, std::move(f)).first->second;
}

MacdonaldRecord nonsym_macdonald(const Composition& eta, Orientation orientation, Workspace& ws) {
    MacdonaldRecord r{eta, orientation, ws.E(eta), spectral_vector(eta)};
    if (orientation == Orientation::inverted) {
        r.poly = r.poly.tilde();
        for (auto& s : r.spectral) s = s.tilde();
    }
    return r;
}

MacdonaldRecord nonsym_macdonald(const Composition& eta, Orientation orientation) {
    Workspace ws;
    return nonsym_macdonald(eta, orientation, ws);
}

MultiPoly sym_macdonald(const Partition& lambda, Workspace& ws) { return ws.P(lambda); }

ExactScalar principal_specialization(const Composition& eta, Workspace& ws) {
    auto c = composition_constants(eta);
    ExactScalar closed = tpow(c.l_stat) * c.e / c.d;
    ExactScalar value = ws.E(eta).evaluate(principal_point(static_cast<int>(eta.size())));
    if (value != closed)
        throw IdentityViolation("principal specialization of E(" + composition_string(eta) + ") disagrees: " +
                                value.to_string() + " vs " + closed.to_string());
    return closed;
}

ExactScalar principal_value_check(const Partition& lambda, Workspace& ws) {
    ExactScalar closed = principal_value_P(lambda);
    ExactScalar value = ws.P(lambda).evaluate(principal_point(static_cast<int>(lambda.size())));
    if (value != closed)
        throw IdentityViolation("principal specialization of P(" + composition_string(lambda) + ") disagrees");
    return closed;
}

MultiPoly apply_operator_polynomial(const MultiPoly& coefficients,
                                    const std::function<const MultiPoly&(const Composition&)>& word) {
    int n = coefficients.nvars();
    MultiPoly r(n);
    for (const auto& [k, v] : coefficients.terms()) r += word(k.to_vector(n)).scaled(v);
    return r;
}

std::vector<OperatorReport> raising_lowering_replay(const Composition& eta, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    const ExactScalar q = ExactScalar::q();
    std::vector<OperatorReport> out;
    const MultiPoly& E = ws.E(eta);
    Composition phi = phi_map(eta);
    const MultiPoly& F = ws.E(phi);
    out.push_back(
        compare("Phi_1 E = q^{eta_1} E_{Phi eta}", n, label(eta), apply_raise(Raise::Phi1, E), F.scaled(q.pow(eta[0]))));
    int weak = 0;
    for (int k = 1; k < n; ++k) weak += eta[k] <= eta[0];
    MultiPoly phi2 = apply_raise(Raise::Phi2, E);
    out.push_back(compare("Phi_2 E = t^{-#{i>1: eta_i <= eta_1}} E_{Phi eta}", n, label(eta), phi2, F.scaled(tpow(-weak))));
    OperatorReport literal = compare("Phi_2 E with constant t^{-#{i: eta_i <= eta_1}} (alternative)", n, label(eta), phi2,
                                     F.scaled(tpow(-weak - 1)));
    literal.informational = true;
    out.push_back(std::move(literal));
    out.push_back(compare("Phi_1 = t^{n-1} Phi_2 Y_1", n, label(eta), apply_raise(Raise::Phi1, E),
                          apply_raise(Raise::Phi2, apply_Y(1, 1, E)).scaled(tpow(n - 1))));
    if (eta.back() >= 1) {
        Composition psi = psi_map(eta);
        const MultiPoly& G = ws.E(psi);
        ExactScalar c = kOne - tpow(n - 1) * spectral_vector(eta).back();
        out.push_back(compare("Psi_1 E = q^{1-eta_n}(1 - t^{n-1} t^{bar eta_n}) E_{Psi eta}", n, label(eta),
                              apply_lower(Lower::Psi1, E), G.scaled(q.pow(1 - eta.back()) * c)));
        int strict = 0;
        for (int k = 0; k < n; ++k) strict += eta[k] < eta.back();
        out.push_back(compare("Psi_2 E = t^{#{i: eta_i < eta_n}}(1 - t^{n-1} t^{bar eta_n}) E_{Psi eta}", n, label(eta),
                              apply_lower(Lower::Psi2, E), G.scaled(tpow(strict) * c)));
    }
    return out;
}

OperatorReport uplus_action_replay(const Composition& eta, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    Partition lambda = sorted_partition(eta);
    auto c = composition_constants(eta);
    ExactScalar k = t_factorial(n) * tpow(c.l_stat) * c.e / (principal_value_P(lambda) * c.d);
    return compare("U+ E = [n]_t! t^l e / (P(t^delta) d) P", n, label(eta), apply_uplus(ws.E(eta)),
                   ws.P(lambda).scaled(k));
}

OperatorReport thm11_replay(const Composition& eta, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    MultiPoly lhs = apply_operator_polynomial(ws.E_tilde(eta), [&ws](const Composition& nu) -> const MultiPoly& {
        return ws.e_word(nu);
    });
    return compare("E~(e_1..e_n).1 = alpha E", n, label(eta), lhs, ws.E(eta).scaled(alpha_coefficient(eta)));
}

std::vector<OperatorReport> node_constant_replay(const Composition& eta) {
    int n = static_cast<int>(eta.size());
    const ExactScalar q = ExactScalar::q(), t = ExactScalar::t();
    std::vector<OperatorReport> out;
    auto c = composition_constants(eta);
    auto sv = spectral_vector(eta);
    std::string at = label(eta);
    Composition phi = phi_map(eta);
    auto cp = composition_constants(phi);
    ExactScalar tb = sv[0];
    auto integer = [](int v) { return ExactScalar(static_cast<long>(v)); };
    out.push_back(compare_scalar("d_{Phi eta}/d_eta", n, at, cp.d / c.d, kOne - q * tpow(n) * tb));
    out.push_back(compare_scalar("e_{Phi eta}/e_eta", n, at, cp.e / c.e, kOne - q * tpow(n) * tb));
    out.push_back(compare_scalar("d'_{Phi eta}/d'_eta", n, at, cp.d_prime / c.d_prime, kOne - q * tpow(n - 1) * tb));
    int weak = 0;
    for (int k = 1; k < n; ++k) weak += eta[k] <= eta[0];
    out.push_back(compare_scalar("a(Phi eta)", n, at, integer(cp.a_stat), integer(eta[0] + c.a_stat)));
    out.push_back(compare_scalar("l(Phi eta)", n, at, integer(cp.l_stat), integer(c.l_stat + weak)));
    out.push_back(compare_scalar("l'(Phi eta)", n, at, integer(cp.lprime_stat),
                                 integer(c.lprime_stat + n - 1 - weak)));
    for (int i = 1; i < n; ++i) {
        if (eta[i - 1] <= eta[i]) continue;
        auto cs = composition_constants(swap_map(eta, i));
        ExactScalar td = sv[i - 1] / sv[i];
        std::string ati = at + " i=" + std::to_string(i);
        out.push_back(compare_scalar("e_{s_i eta} = e_eta", n, ati, cs.e, c.e));
        out.push_back(compare_scalar("d_{s_i eta}/d_eta", n, ati, cs.d / c.d, (kOne - td * t) / (kOne - td)));
        out.push_back(compare_scalar("d'_{s_i eta}/d'_eta", n, ati, cs.d_prime / c.d_prime,
                                     (kOne - td) / (kOne - td / t)));
        out.push_back(compare_scalar("a(s_i eta)", n, ati, integer(cs.a_stat), integer(c.a_stat)));
        out.push_back(compare_scalar("l'(s_i eta)", n, ati, integer(cs.lprime_stat), integer(c.lprime_stat)));
        out.push_back(compare_scalar("l(s_i eta)", n, ati, integer(cs.l_stat), integer(c.l_stat + 1)));
    }
    Partition p = sorted_partition(eta);
    out.push_back(compare_scalar("l'(eta) = b(eta+)", n, at, integer(c.lprime_stat), integer(b_statistic(p))));
    out.push_back(compare_scalar("l'(eta) = l'(eta+)", n, at, integer(c.lprime_stat),
                                 integer(composition_constants(p).lprime_stat)));
    out.push_back(compare_scalar("a(eta) = b((eta+)')", n, at, integer(c.a_stat), integer(b_statistic(conjugate(p)))));
    out.push_back(compare_scalar("a(eta) = a(eta+)", n, at, integer(c.a_stat),
                                 integer(composition_constants(p).a_stat)));
    out.push_back(compare_scalar("alpha from statistics", n, at, alpha_coefficient(eta), alpha_coefficient_from_stats(eta)));
    return out;
}

SuiteReport macdonald_suite(int n, int max_degree, Workspace& ws) {
    SuiteReport out{"macdonald", {}, {}};
    const ExactScalar q = ExactScalar::q(), t = ExactScalar::t();
    for (const auto& eta : compositions_up_to(n, max_degree)) {
        const MultiPoly& E = ws.E(eta);
        std::string at = label(eta);
        MultiPoly outside(n);
        for (const auto& [k, v] : E.terms()) {
            Composition nu = k.to_vector(n);
            if (nu == eta)
                outside.add_term(k, v - kOne);
            else if (!comp_less(nu, eta))
                outside.add_term(k, v);
        }
        out.add(OperatorReport{"triangularity and unit leading coefficient", n, at, outside});
        auto sv = spectral_vector(eta);
        for (int i = 1; i <= n; ++i)
            out.add(compare("eigen Y_i E = t^{bar eta_i} E i=" + std::to_string(i), n, at, apply_Y(i, 1, E),
                            E.scaled(sv[i - 1])));
        out.add(thm11_replay(eta, ws));
        for (auto& r : raising_lowering_replay(eta, ws)) out.add(std::move(r));
        for (auto& r : node_constant_replay(eta)) out.add(std::move(r));
        auto c = composition_constants(eta);
        out.add(compare_scalar("E(t^delta) = t^l e / d", n, at, E.evaluate(principal_point(n)),
                               tpow(c.l_stat) * c.e / c.d));
        if (n <= 5) out.add(uplus_action_replay(eta, ws));
    }
    for (int d = 0; d <= max_degree; ++d) {
        for (const auto& lambda : partitions(n, d)) {
            const MultiPoly& P = ws.P(lambda);
            std::string at = "lambda=(" + composition_string(lambda) + ")";
            MultiPoly asym(n);
            for (int i = 0; i + 1 < n; ++i) {
                std::vector<int> perm(n);
                for (int k = 0; k < n; ++k) perm[k] = k;
                std::swap(perm[i], perm[i + 1]);
                asym += P.permute_vars(perm) - P;
            }
            out.add(OperatorReport{"P symmetric", n, at, asym});
            out.add(compare_scalar("P leading coefficient", n, at, P.coefficient(ExponentVector::from(lambda)), kOne));
            out.add(compare_scalar("P(t^delta) closed form", n, at, P.evaluate(principal_point(n)),
                                   principal_value_P(lambda)));
        }
    }
    if (n == 2 && max_degree >= 1) {
        MultiPoly expected = MultiPoly::monomial(2, std::vector<int>{1, 0}) +
                             MultiPoly::monomial(2, std::vector<int>{0, 1}, q * (t - kOne) / (q * t - kOne));
        out.add(compare("worked instance E_(1,0)", 2, "eta=(1,0)", ws.E({1, 0}), expected));
        out.add(compare_scalar("worked instance alpha_(1,0) = t", 2, "eta=(1,0)", alpha_coefficient({1, 0}), t));
    }
    return out;
}

}  // namespace hecke
