#include "hecke/asc.hpp"

#include "hecke/errors.hpp"
#include "hecke/operators.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

ExactScalar tpow(int k) { return ExactScalar::monomial(0, k); }

std::string label(const Composition& eta) { return "eta=(" + composition_string(eta) + ")"; }

std::string pipeline_mismatch(const char* family, const Composition& eta) {
    return std::string(family) + " pipelines disagree at (" + composition_string(eta) + ")";
}

}  // namespace

MultiPoly apply_operator_series(const MultiPoly& f, const std::function<MultiPoly(int, const MultiPoly&)>& op,
                                const SeriesTable& coeffs, const ExactScalar& sign) {
    int n = f.nvars();
    MultiPoly cur = f;
    for (int i = 1; i <= n; ++i) {
        MultiPoly acc(n);
        MultiPoly g = cur;
        for (std::size_t m = 0; m < coeffs.coefficients.size() && !g.is_zero(); ++m) {
            acc += g.scaled(coeffs[m]);
            g = op(i, g).scaled(sign);
        }
        cur = std::move(acc);
    }
    return cur;
}

const MultiPoly& Workspace::EV(const Composition& eta) {
    auto it = EV_.find(eta);
    if (it != EV_.end()) return it->second;
    const ExactScalar a = ExactScalar::a();
    MultiPoly f = apply_operator_polynomial(E_tilde(eta), [this](const Composition& nu) -> const MultiPoly& {
        return E_word(nu);
    });
    f = f.scaled((-a).pow(size_of(eta)) / alpha_coefficient(eta));
    return EV_.emplace(eta, std::move(f)).first->second;
}

const MultiPoly& Workspace::EV_series(const Composition& eta) {
    auto it = EV_series_.find(eta);
    if (it != EV_series_.end()) return it->second;
    MultiPoly f = apply_operator_series(E(eta), apply_scriptD, rho_series(SeriesDirection::reciprocal, size_of(eta)),
                                        ExactScalar(-1));
    return EV_series_.emplace(eta, std::move(f)).first->second;
}

const MultiPoly& Workspace::EU(const Composition& eta) {
    auto it = EU_.find(eta);
    if (it != EU_.end()) return it->second;
    MultiPoly f = EV(eta).tilde().reverse_vars();
    return EU_.emplace(eta, std::move(f)).first->second;
}

const MultiPoly& Workspace::EU_series(const Composition& eta) {
    auto it = EU_series_.find(eta);
    if (it != EU_series_.end()) return it->second;
    MultiPoly f = apply_operator_series(E_tilde(eta).reverse_vars(), apply_D,
                                        rho_series(SeriesDirection::product, size_of(eta)), kOne);
    return EU_series_.emplace(eta, std::move(f)).first->second;
}

MultiPoly EU_series_variant(const Composition& eta, Workspace& ws) {
    auto op = [](int i, const MultiPoly& f) { return apply_scriptD(i, f.tilde()).tilde(); };
    return apply_operator_series(ws.E_tilde(eta).reverse_vars(), op,
                                 rho_series(SeriesDirection::product, size_of(eta)), -ExactScalar::q());
}

ASCRecord asc_V(const Composition& eta, VPipeline pipeline, Workspace& ws) {
    const MultiPoly& op = ws.EV(eta);
    const MultiPoly& series = ws.EV_series(eta);
    if (op != series) throw IdentityViolation(pipeline_mismatch("V", eta));
    return {eta, Family::V, pipeline == VPipeline::operator_form ? op : series};
}

ASCRecord asc_U(const Composition& eta, UPipeline pipeline, Workspace& ws) {
    const MultiPoly& refl = ws.EU(eta);
    const MultiPoly& series = ws.EU_series(eta);
    if (refl != series) throw IdentityViolation(pipeline_mismatch("U", eta));
    return {eta, Family::U, pipeline == UPipeline::reflection ? refl : series};
}

OperatorReport eigen_replay_V(const Composition& eta, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    const MultiPoly& f = ws.EV(eta);
    auto sv = spectral_vector(eta);
    for (int i = 1; i <= n; ++i) {
        auto r = compare("h_i E^V = t^{bar eta_i} E^V", n, label(eta) + " i=" + std::to_string(i), apply_h(i, f),
                         f.scaled(sv[i - 1]));
        if (!r.pass()) return r;
    }
    return OperatorReport{"h_i E^V = t^{bar eta_i} E^V", n, label(eta) + " all i", MultiPoly(n)};
}

ExactScalar eval_special(const Composition& eta, SpecialPoint point, Workspace& ws) {
    int n = static_cast<int>(eta.size());
    int m = size_of(eta);
    auto c = composition_constants(eta);
    const ExactScalar a = ExactScalar::a();
    ExactScalar base = principal_specialization(eta, ws) * ExactScalar::monomial(-c.a_stat, c.lprime_stat - (n - 1) * m);
    std::vector<ExactScalar> pt;
    for (int j = 0; j < n; ++j) pt.push_back(tpow(j - n + 1) * (point == SpecialPoint::a_point ? a : kOne));
    ExactScalar closed = base * (point == SpecialPoint::one ? (-a).pow(m) : ExactScalar(m % 2 ? -1 : 1));
    ExactScalar value = ws.EV(eta).evaluate(pt);
    if (value != closed)
        throw IdentityViolation("special evaluation of E^V(" + composition_string(eta) + ") disagrees: " +
                                value.to_string() + " vs " + closed.to_string());
    return closed;
}

SuiteReport asc_suite(int n, int max_degree, Workspace& ws) {
    SuiteReport out{"asc", {}, {}};
    const ExactScalar q = ExactScalar::q(), a = ExactScalar::a();
    for (const auto& eta : compositions_up_to(n, max_degree)) {
        std::string at = label(eta);
        int m = size_of(eta);
        const MultiPoly& V = ws.EV(eta);
        out.add(compare("E^V operator form vs series form", n, at, V, ws.EV_series(eta)));
        out.add(compare("E^U reflection vs series form", n, at, ws.EU(eta), ws.EU_series(eta)));
        OperatorReport literal = compare("E^U series with the operator rho_a(-q tilde scriptD_i) (alternative)", n, at, ws.EU(eta),
                                         EU_series_variant(eta, ws));
        literal.informational = true;
        out.add(std::move(literal));
        out.add(eigen_replay_V(eta, ws));

        // Coefficients of E^V - E_eta in the E basis must sit in lower degrees.
        MultiPoly high(n);
        for (const auto& [nu, c] : expand_in_basis(V - ws.E(eta), [&ws](const Composition& k) -> const MultiPoly& {
                 return ws.E(k);
             }))
            if (size_of(nu) >= m) high.add_term(ExponentVector::from(nu), c);
        out.add(OperatorReport{"E^V - E_eta in span of lower-degree E_nu", n, at, high});

        auto c = composition_constants(eta);
        if (eta.back() >= 1) {
            Composition psi = psi_map(eta);
            ExactScalar ratio = c.d_prime / composition_constants(psi).d_prime;
            MultiPoly lhs = apply_lower(Lower::Psi1, V);
            out.add(compare("Psi_1 E^V = q^{1-eta_n} d'/d' E^V_{Psi eta}", n, at, lhs,
                            ws.EV(psi).scaled(q.pow(1 - eta.back()) * ratio)));
            OperatorReport alt = compare("Psi_1 E^V with constant q^{eta_n+1} (alternative)", n, at, lhs,
                                             ws.EV(psi).scaled(q.pow(eta.back() + 1) * ratio));
            alt.informational = true;
            out.add(std::move(alt));
        }
        out.add(compare("Psi_1^* E^V = a^{-1} t^{n-1} q^{eta_1+1} E^V_{Phi eta}", n, at,
                        apply_lower_adjoint(V),
                        ws.EV(phi_map(eta)).scaled(a.inverse() * tpow(n - 1) * q.pow(eta[0] + 1))));

        std::vector<ExactScalar> one_pt, a_pt;
        for (int j = 0; j < n; ++j) {
            one_pt.push_back(tpow(j - n + 1));
            a_pt.push_back(tpow(j - n + 1) * a);
        }
        ExactScalar base = ws.E(eta).evaluate(principal_point(n)) *
                           ExactScalar::monomial(-c.a_stat, c.lprime_stat - (n - 1) * m);
        out.add(compare_scalar("E^V(t^{delta-n+1})", n, at, V.evaluate(one_pt), (-a).pow(m) * base));
        out.add(compare_scalar("E^V(a t^{delta-n+1})", n, at, V.evaluate(a_pt),
                               ExactScalar(m % 2 ? -1 : 1) * base));
    }
    if (n == 2) {
        const ExactScalar t = ExactScalar::t();
        auto X = [](std::vector<int> e, ExactScalar c) { return MultiPoly::monomial(2, e, c); };
        ExactScalar lift = kOne + a;
        if (max_degree >= 1) {
            out.add(compare("worked instance E^V_(0,1)", 2, "eta=(0,1)", ws.EV({0, 1}),
                            X({0, 1}, kOne) - MultiPoly::constant(2, lift)));
            out.add(compare("worked instance E^U_(0,1)", 2, "eta=(0,1)", ws.EU({0, 1}),
                            X({1, 0}, kOne) - MultiPoly::constant(2, lift)));
            MultiPoly expected = X({1, 0}, kOne) + X({0, 1}, q * (t - kOne) / (q * t - kOne)) -
                                 MultiPoly::constant(2, lift * (kOne - q * t * t) / (t * (kOne - q * t)));
            out.add(compare("worked instance E^V_(1,0)", 2, "eta=(1,0)", ws.EV({1, 0}), expected));
        }
    }
    return out;
}

}  // namespace hecke
