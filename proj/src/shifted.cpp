#include "hecke/asc.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

std::string label(const Composition& eta) { return "eta=(" + composition_string(eta) + ")"; }

// f times prod_i 1/(x_i; q)_inf, kept to total degree d.
MultiPoly times_inverse_euler(const MultiPoly& f, int d) {
    return multiply_set_series(f, f.nvars(), 0, euler_series(SeriesDirection::reciprocal, d), kOne, d);
}

// Coefficients of E~_eta in E~_nu prod 1/(x_i;q)_inf for all |eta| <= d.
std::map<Composition, ExactScalar> genfun_row(const Composition& nu, int d, Workspace& ws) {
    return expand_in_basis(times_inverse_euler(ws.E_tilde(nu), d),
                           [&ws](const Composition& k) -> const MultiPoly& { return ws.E_tilde(k); });
}

ExactScalar genfun_normalize(const Composition& eta, const Composition& nu, const ExactScalar& coeff) {
    auto ce = composition_constants(eta), cn = composition_constants(nu);
    return coeff / (ExactScalar::monomial(0, ce.l_stat - cn.l_stat) * cn.d_prime / ce.d_prime);
}

ExactScalar lookup(const std::map<Composition, ExactScalar>& row, const Composition& eta) {
    auto it = row.find(eta);
    return it == row.end() ? ExactScalar() : it->second;
}

ExactScalar weighted_sum_value(const Partition& kappa, const Partition& mu, const Composition& nu, bool alt,
                      Workspace& ws) {
    int n = static_cast<int>(kappa.size());
    auto td = principal_point(n);
    ExactScalar sum;
    for (const auto& eta : orbit(kappa))
        sum += qbinomial_ratio(eta, nu, ws) * ws.E(eta).evaluate(td) / composition_constants(eta).d_prime;
    ExactScalar ratio = principal_value_P(mu) / principal_value_P(kappa);
    if (alt) ratio = ratio.inverse();
    return composition_constants(kappa).d_prime / composition_constants(mu).d_prime * ratio *
           composition_constants(nu).d_prime / ws.E(nu).evaluate(td) * sum;
}

}  // namespace

std::map<Composition, ExactScalar> expand_in_basis(MultiPoly f,
                                                   const std::function<const MultiPoly&(const Composition&)>& basis) {
    std::map<Composition, ExactScalar> out;
    int n = f.nvars();
    while (!f.is_zero()) {
        LeadingTerm lt = leading_term(f, false);
        Composition eta = lt.exp.to_vector(n);
        const MultiPoly& b = basis(eta);
        ExactScalar lead = b.coefficient(lt.exp);
        if (lead.is_zero()) throw DegeneracyError("basis element (" + composition_string(eta) + ") misses its leading term");
        ExactScalar c = lt.coeff / lead;
        f -= b.scaled(c);
        out[eta] += c;
    }
    return out;
}

const MultiPoly& Workspace::G(const Composition& eta) {
    auto it = G_.find(eta);
    if (it != G_.end()) return it->second;
    int n = static_cast<int>(eta.size());
    int m = size_of(eta);
    MultiPoly g = EV_series(eta).substitute_a(ExactScalar()).tilde();
    g = g.map_terms([n, m](const ExponentVector& k, const ExactScalar& v) {
        return std::make_pair(k, v * ExactScalar::monomial(0, (n - 1) * (k.degree() - m)));
    });
    return G_.emplace(eta, std::move(g)).first->second;
}

const MultiPoly& Workspace::P_tilde(const Partition& lambda) {
    auto it = P_tilde_.find(lambda);
    if (it != P_tilde_.end()) return it->second;
    MultiPoly f = P(lambda).tilde();
    return P_tilde_.emplace(lambda, std::move(f)).first->second;
}

MultiPoly shifted_G(const Composition& eta, Workspace& ws) { return ws.G(eta); }

ExactScalar sahi_evaluation(const Composition& eta, const ExactScalar& alpha, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    int m = size_of(eta);
    auto c = composition_constants(eta);
    std::vector<ExactScalar> pt;
    for (int j = 0; j < n; ++j) pt.push_back(ExactScalar::monomial(0, -j) * alpha);
    ExactScalar closed = alpha.pow(m) * generalized_pochhammer(alpha.inverse(), sorted_partition(eta)) *
                         ExactScalar::monomial(0, -(n - 1) * m) * c.e / c.d;
    ExactScalar value = ws.G(eta).evaluate(pt);
    if (value != closed)
        throw IdentityViolation("Sahi evaluation of G(" + composition_string(eta) + ") disagrees: " + value.to_string() +
                                " vs " + closed.to_string());
    return closed;
}

ExactScalar qbinomial_ratio(const Composition& eta, const Composition& nu, Workspace& ws) {
    const MultiPoly& g = ws.G(nu);
    return g.evaluate(spectral_vector(eta)) / g.evaluate(spectral_vector(nu));
}

ExactScalar qbinomial(const Composition& eta, const Composition& nu, Workspace& ws) {
    if (eta.size() != nu.size()) throw SizeError("compositions of different length");
    if (size_of(nu) > size_of(eta)) throw DomainError("qbinomial needs |nu| <= |eta|");
    ExactScalar gen = genfun_normalize(eta, nu, lookup(genfun_row(nu, size_of(eta), ws), eta));
    ExactScalar ratio = qbinomial_ratio(eta, nu, ws);
    if (gen != ratio)
        throw IdentityViolation("binomial (" + composition_string(eta) + " | " + composition_string(nu) +
                                ") differs between generating function and evaluation ratio");
    return gen;
}

ExactScalar sym_qbinomial(const Partition& kappa, const Partition& mu, Workspace& ws) {
    if (!is_partition(kappa) || !is_partition(mu)) throw DomainError("symmetric binomial needs partitions");
    if (size_of(mu) > size_of(kappa)) throw DomainError("symmetric binomial needs |mu| <= |kappa|");
    auto row = expand_in_basis(times_inverse_euler(ws.P(mu), size_of(kappa)),
                               [&ws](const Composition& k) -> const MultiPoly& { return ws.P(k); });
    ExactScalar norm = ExactScalar::monomial(0, b_statistic(kappa) - b_statistic(mu)) *
                       composition_constants(mu).d_prime / composition_constants(kappa).d_prime;
    return lookup(row, kappa) / norm;
}

std::vector<OperatorReport> binomial_sum_rules(const Partition& kappa, const Partition& mu, Workspace& ws) {
    std::vector<OperatorReport> out;
    int n = static_cast<int>(kappa.size());
    ExactScalar sym = sym_qbinomial(kappa, mu, ws);
    std::string at = "kappa=(" + composition_string(kappa) + ") mu=(" + composition_string(mu) + ")";
    for (const auto& eta : orbit(kappa)) {
        ExactScalar s;
        for (const auto& nu : orbit(mu)) s += qbinomial_ratio(eta, nu, ws);
        out.push_back(compare_scalar("sum over nu+ = mu of (eta nu) = (kappa mu)", n, at + " " + label(eta), s, sym));
    }
    for (const auto& nu : orbit(mu)) {
        std::string an = at + " nu=(" + composition_string(nu) + ")";
        out.push_back(compare_scalar("weighted sum with P_mu(t^delta)/P_kappa(t^delta)", n, an,
                                     weighted_sum_value(kappa, mu, nu, false, ws), sym));
        OperatorReport alt = compare_scalar("weighted binomial sum with ratio P_kappa(t^delta)/P_mu(t^delta) (alternative)", n, an,
                                                weighted_sum_value(kappa, mu, nu, true, ws), sym);
        alt.informational = true;
        out.push_back(std::move(alt));
    }
    return out;
}

SuiteReport shifted_suite(int n, int max_degree, Workspace& ws) {
    SuiteReport out{"shifted", {}, {}};
    const ExactScalar a = ExactScalar::a();
    const std::vector<ExactScalar> zero(static_cast<std::size_t>(n));
    auto all = compositions_up_to(n, max_degree);
    std::map<Composition, std::map<Composition, ExactScalar>> rows;
    for (const auto& nu : all) rows.emplace(nu, genfun_row(nu, max_degree, ws));

    for (const auto& eta : all) {
        std::string at = label(eta);
        int m = size_of(eta);
        const MultiPoly& g = ws.G(eta);
        for (const auto& xi : compositions_up_to(n, m)) {
            if (xi == eta) continue;
            out.add(compare_scalar("G vanishes at t^{bar xi}", n, at + " xi=(" + composition_string(xi) + ")",
                                   g.evaluate(spectral_vector(xi)), ExactScalar()));
        }
        ExactScalar self = g.evaluate(spectral_vector(eta));
        out.add(compare_scalar("G nonzero at t^{bar eta}", n, at, ExactScalar(self.is_zero() ? 1 : 0), ExactScalar()));

        std::vector<ExactScalar> pt;
        for (int j = 0; j < n; ++j) pt.push_back(ExactScalar::monomial(0, -j) * a);
        auto c = composition_constants(eta);
        out.add(compare_scalar("Sahi evaluation G(t^{-delta} alpha)", n, at, g.evaluate(pt),
                               a.pow(m) * generalized_pochhammer(a.inverse(), sorted_partition(eta)) *
                                   ExactScalar::monomial(0, -(n - 1) * m) * c.e / c.d));

        MultiPoly expansion(n);
        for (const auto& nu : compositions_up_to(n, m)) {
            ExactScalar ratio = qbinomial_ratio(eta, nu, ws);
            std::string an = at + " nu=(" + composition_string(nu) + ")";
            out.add(compare_scalar("generating-function binomial = Sahi bracket", n, an,
                                   genfun_normalize(eta, nu, lookup(rows.at(nu), eta)), ratio));
            expansion += ws.E_tilde(nu).scaled(ratio.tilde() / ws.G(nu).evaluate(zero));
        }
        out.add(compare("G_eta/G_eta(0) = sum tilde(eta nu) E~_nu/G_nu(0)", n, at,
                        g.scaled(g.evaluate(zero).inverse()), expansion));
        out.add(compare_scalar("(eta 0) = 1", n, at, qbinomial_ratio(eta, Composition(n, 0), ws), kOne));
        out.add(compare_scalar("(eta eta) = 1", n, at, genfun_normalize(eta, eta, lookup(rows.at(eta), eta)), kOne));
    }
    for (int dk = 0; dk <= max_degree; ++dk)
        for (const auto& kappa : partitions(n, dk))
            for (int dm = 0; dm <= dk; ++dm)
                for (const auto& mu : partitions(n, dm))
                    for (auto& r : binomial_sum_rules(kappa, mu, ws)) out.add(std::move(r));
    if (n == 2 && max_degree >= 1) {
        MultiPoly expected = MultiPoly::variable(2, 1) - MultiPoly::constant(2, ExactScalar::t().inverse());
        out.add(compare("worked instance G_(0,1) = z_2 - t^{-1}", 2, "eta=(0,1)", ws.G({0, 1}), expected));
        out.add(compare_scalar("worked instance ((1,0) (0,1)) = 0", 2, "eta=(1,0)", qbinomial({1, 0}, {0, 1}, ws),
                               ExactScalar()));
    }
    return out;
}

}  // namespace hecke
