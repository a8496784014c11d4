#include "hecke/orthogonality.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/operators.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

mpq_class qpow(const mpq_class& q, int e) {
    mpq_class r(1);
    mpq_class b = e >= 0 ? q : mpq_class(1) / q;
    for (int i = 0; i < std::abs(e); ++i) r *= b;
    return r;
}

Real abs_real(const Real& x) { return boost::multiprecision::abs(x); }

struct Site {
    mpq_class x;
    Real w;  // Jackson measure factor times the weight
    int shell = 0;
    std::vector<mpq_class> powers;
};

int max_degree(const std::vector<NumericPoly>& polys) {
    int d = 0;
    for (const auto& p : polys)
        for (const auto& [e, c] : p.terms) {
            int s = 0;
            for (int v : e) s += v;
            d = std::max(d, s);
        }
    return d;
}

std::vector<Site> lattice(Family kind, const InnerProductConfig& cfg, int shells, int degree) {
    std::vector<Site> out;
    const mpq_class one_minus_q = 1 - cfg.q0;
    auto push = [&](const mpq_class& x, const Real& w, int m) {
        Site s{x, w, m, {}};
        s.powers.push_back(mpq_class(1));
        for (int e = 1; e <= degree; ++e) s.powers.push_back(s.powers.back() * x);
        out.push_back(std::move(s));
    };
    for (int m = 0; m < shells; ++m) {
        if (kind == Family::V) {
            mpq_class x = qpow(cfg.q0, -m);
            push(x, to_real(one_minus_q * x) * weight_eval(Family::V, x, cfg), m);
        } else {
            mpq_class x = qpow(cfg.q0, m);
            push(x, to_real(one_minus_q * x) * weight_eval(Family::U, x, cfg), m);
            mpq_class y = cfg.a0 * x;
            push(y, to_real(-one_minus_q * y) * weight_eval(Family::U, y, cfg), m);
        }
    }
    return out;
}

mpq_class delta_value(const std::vector<const Site*>& pt, const InnerProductConfig& cfg) {
    mpq_class r(1);
    int n = static_cast<int>(pt.size());
    for (int p = -(cfg.k - 1); p <= cfg.k; ++p) {
        mpq_class qp = qpow(cfg.q0, p);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) r *= pt[i]->x - qp * pt[j]->x;
    }
    return r;
}

mpq_class evaluate_at(const NumericPoly& f, const std::vector<const Site*>& pt) {
    mpq_class r(0);
    for (const auto& [e, c] : f.terms) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) term *= pt[i]->powers[static_cast<std::size_t>(e[i])];
        r += term;
    }
    return r;
}

Real relative_error(const Real& measured, const Real& expected) {
    Real scale = abs_real(expected);
    if (scale == 0) return abs_real(measured);
    return abs_real(measured - expected) / scale;
}

NumericCheck numeric(std::string identity, int n, std::string instance, const Real& measured, const Real& expected,
                     const Real& error, double tolerance) {
    return NumericCheck{std::move(identity), n,           std::move(instance), real_string(measured),
                        real_string(expected), error.convert_to<double>(), tolerance};
}

std::string label(const Composition& eta) { return "eta=(" + composition_string(eta) + ")"; }

// (y; p)_inf for p > 1, continued as 1/(y/p; 1/p)_inf with the dash rule.
Real continued_qpochhammer(const mpq_class& y, const mpq_class& p, int J) {
    mpq_class inv = 1 / p;
    return Real(1) / truncated_qpochhammer(y * inv, inv, J, true);
}

}  // namespace

mpq_class InnerProductConfig::t0() const { return qpow(q0, k); }

void InnerProductConfig::validate() const {
    if (!(q0 > 0 && q0 < 1)) throw DomainError("q0 must lie in (0,1)");
    if (!(a0 < 0)) throw DomainError("a0 must be negative");
    if (k < 1) throw DomainError("k must be a positive integer");
    if (lattice_cutoff < 1 || product_cutoff < 1) throw DomainError("cutoffs must be positive");
    if (!(tolerance > 0)) throw DomainError("tolerance must be positive");
}

Real to_real(const mpq_class& x) { return Real(x.get_mpq_t()); }

std::string real_string(const Real& x) { return x.str(30, std::ios_base::scientific); }

Real truncated_qpochhammer(const mpq_class& x, const mpq_class& q, int J, bool dash) {
    Real r(1);
    mpq_class qj(1);
    for (int j = 0; j < J; ++j) {
        mpq_class f = 1 - x * qj;
        qj *= q;
        if (f == 0) {
            if (dash) continue;
            return Real(0);
        }
        r *= to_real(f);
    }
    return r;
}

Real weight_eval(Family kind, const mpq_class& x, const InnerProductConfig& cfg) {
    const mpq_class& q = cfg.q0;
    const mpq_class& a = cfg.a0;
    int J = cfg.product_cutoff;
    auto x_str = [&x] { return x.get_str(); };
    if (kind == Family::V) {
        Real den = truncated_qpochhammer(x, q, J, true) * truncated_qpochhammer(x / a, q, J, false);
        if (den == 0) throw PoleError("w_V has a vanishing denominator at x = " + x_str());
        return truncated_qpochhammer(q, q, J, false) * truncated_qpochhammer(1 / a, q, J, false) *
               truncated_qpochhammer(q * a, q, J, false) / den;
    }
    Real den = truncated_qpochhammer(q, q, J, false) * truncated_qpochhammer(a, q, J, false) *
               truncated_qpochhammer(q / a, q, J, false);
    if (den == 0) throw PoleError("w_U has a vanishing denominator");
    return truncated_qpochhammer(q * x, q, J, false) * truncated_qpochhammer(q * x / a, q, J, false) / den;
}

JacksonSum jackson_integral(const std::function<Real(const mpq_class&)>& f, JacksonDomain domain,
                            const InnerProductConfig& cfg) {
    cfg.validate();
    const mpq_class& q = cfg.q0;
    Real sum(0), last(0);
    for (int m = 0; m < cfg.lattice_cutoff; ++m) {
        Real term;
        if (domain == JacksonDomain::one_to_infinity) {
            mpq_class x = qpow(q, -m);
            term = f(x) * to_real(x);
        } else {
            mpq_class qm = qpow(q, m);
            term = f(qm) * to_real(qm) - to_real(cfg.a0 * qm) * f(cfg.a0 * qm);
        }
        if (!boost::multiprecision::isfinite(term)) throw PoleError("non-finite Jackson term at m = " + std::to_string(m));
        sum += term;
        last = abs_real(term);
    }
    Real value = to_real(1 - q) * sum;
    last *= to_real(1 - q);
    return {value, last, last > Real(cfg.tolerance) * abs_real(value)};
}

mpq_class NumericPoly::evaluate(const std::vector<mpq_class>& x) const {
    mpq_class r(0);
    for (const auto& [e, c] : terms) {
        mpq_class term = c;
        for (std::size_t i = 0; i < e.size(); ++i) term *= qpow(x[i], e[i]);
        r += term;
    }
    return r;
}

NumericPoly specialize(const MultiPoly& f, const InnerProductConfig& cfg) {
    NumericPoly p;
    p.n = f.nvars();
    mpq_class t0 = cfg.t0();
    for (const auto& [k, v] : f.terms()) p.terms.emplace_back(k.to_vector(p.n), v.evaluate(cfg.q0, t0, cfg.a0));
    return p;
}

MultiPoly delta_polynomial(int n, int k) {
    MultiPoly r = MultiPoly::constant(n, kOne);
    for (int p = -(k - 1); p <= k; ++p)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                r = r * (MultiPoly::variable(n, i) - MultiPoly::variable(n, j).scaled(ExactScalar::monomial(p, 0)));
    return r;
}

GramResult gram_matrix(Family kind, const std::vector<MultiPoly>& polys, const std::vector<Composition>& labels,
                       const InnerProductConfig& cfg, int degree_cap) {
    cfg.validate();
    if (polys.empty()) throw DomainError("gram matrix of an empty family");
    int n = polys.front().nvars();
    std::vector<NumericPoly> num;
    for (const auto& f : polys) num.push_back(specialize(f, cfg));
    const int M = cfg.lattice_cutoff;
    auto sites = lattice(kind, cfg, M + 1, max_degree(num));
    const std::size_t count = num.size();

    GramResult g;
    g.family = kind == Family::V ? "V" : "U";
    g.degree_cap = degree_cap;
    g.labels = labels;
    g.matrix.assign(count, std::vector<Real>(count, Real(0)));
    g.tails = g.matrix;

    // Odometer over n-tuples of lattice sites, accumulated in a fixed order.
    std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
    std::vector<const Site*> pt(static_cast<std::size_t>(n));
    std::vector<Real> vals(count);
    for (;;) {
        int shell = 0;
        Real w(1);
        for (int i = 0; i < n; ++i) {
            pt[i] = &sites[idx[i]];
            shell = std::max(shell, pt[i]->shell);
            w *= pt[i]->w;
        }
        mpq_class delta = delta_value(pt, cfg);
        if (delta != 0) {
            w *= to_real(delta);
            for (std::size_t a = 0; a < count; ++a) vals[a] = to_real(evaluate_at(num[a], pt));
            bool tail = shell == M;
            for (std::size_t a = 0; a < count; ++a)
                for (std::size_t b = a; b < count; ++b) {
                    Real s = w * vals[a] * vals[b];
                    if (tail)
                        g.tails[a][b] += abs_real(s);
                    else
                        g.matrix[a][b] += s;
                }
        }
        int pos = n - 1;
        while (pos >= 0 && ++idx[pos] == sites.size()) idx[pos--] = 0;
        if (pos < 0) break;
    }
    g.max_off_diagonal = 0;
    for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
            g.matrix[b][a] = g.matrix[a][b];
            g.tails[b][a] = g.tails[a][b];
            Real scale = boost::multiprecision::sqrt(abs_real(g.matrix[a][a] * g.matrix[b][b]));
            if (scale > 0) g.max_off_diagonal = std::max<Real>(g.max_off_diagonal, abs_real(g.matrix[a][b]) / scale);
        }
    return g;
}

Real inner_product(const MultiPoly& f, const MultiPoly& g, Family kind, const InnerProductConfig& cfg) {
    return gram_matrix(kind, {f, g}, {}, cfg).matrix[0][1];
}

nlohmann::json gram_json(const GramResult& g, const InnerProductConfig& cfg) {
    nlohmann::json j;
    j["family"] = g.family;
    j["degree_cap"] = g.degree_cap;
    j["config"] = {{"q0", cfg.q0.get_str()},       {"k", cfg.k},
                   {"a0", cfg.a0.get_str()},       {"M", cfg.lattice_cutoff},
                   {"J", cfg.product_cutoff},      {"tolerance", cfg.tolerance}};
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& eta : g.labels) labels.push_back(composition_string(eta));
    j["labels"] = labels;
    auto matrix = [](const std::vector<std::vector<Real>>& m) {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& r : m) {
            nlohmann::json row = nlohmann::json::array();
            for (const auto& v : r) row.push_back(real_string(v));
            rows.push_back(row);
        }
        return rows;
    };
    j["matrix"] = matrix(g.matrix);
    j["tails"] = matrix(g.tails);
    j["max_off_diagonal"] = real_string(g.max_off_diagonal);
    return j;
}

std::string gram_csv(const GramResult& g) {
    std::ostringstream out;
    out << "row,col,value,tail\n";
    for (std::size_t a = 0; a < g.matrix.size(); ++a)
        for (std::size_t b = 0; b < g.matrix.size(); ++b) {
            auto name = [&g](std::size_t i) {
                return i < g.labels.size() ? "\"(" + composition_string(g.labels[i]) + ")\"" : std::to_string(i);
            };
            out << name(a) << ',' << name(b) << ',' << real_string(g.matrix[a][b]) << ',' << real_string(g.tails[a][b])
                << '\n';
        }
    return out.str();
}

ExactScalar norm_ratio(Family kind, const Composition& eta, bool alt) {
    int n = static_cast<int>(eta.size());
    int m = size_of(eta);
    auto c = composition_constants(eta);
    const ExactScalar q = ExactScalar::q(), a = ExactScalar::a();
    ExactScalar tail = c.d_prime * c.e / c.d;
    if (kind == Family::V)
        return (a / q * ExactScalar::monomial(0, 2 - 2 * n)).pow(m) *
               ExactScalar::monomial(-2 * c.a_stat, c.l_stat + c.lprime_stat) * tail;
    ExactScalar lead = (alt ? a : -a) * ExactScalar::monomial(0, n - 1);
    return lead.pow(m) * ExactScalar::monomial(c.a_stat, -c.l_stat) * tail;
}

mpq_class norm_zero(Family kind, int n, const InnerProductConfig& cfg) {
    const int k = cfg.k;
    const mpq_class& q = cfg.q0;
    auto poch = [&q](int m) {
        mpq_class r(1);
        for (int j = 1; j <= m; ++j) r *= 1 - qpow(q, j);
        return r;
    };
    int c2 = n * (n - 1) / 2, c3 = n * (n - 1) * (n - 2) / 6;
    mpq_class r = qpow(1 - q, n);
    r *= qpow(kind == Family::V ? cfg.a0 : mpq_class(-cfg.a0), k * c2);
    // Powers of t = q^k; the U exponent k C(n,3) - (k-1)/2 C(n,2) is integral once multiplied by k.
    int qexp = kind == Family::V ? k * (-2 * k * c3 - k * c2) : k * k * c3 - k * (k - 1) * c2 / 2;
    r *= qpow(q, qexp);
    for (int l = 1; l <= n; ++l) r *= poch(k * l) / poch(k);
    return r;
}

GramReport gram_and_norms(Family kind, int n, int degree_cap, const InnerProductConfig& cfg, Workspace& ws) {
    std::vector<Composition> etas = compositions_up_to(n, degree_cap);
    std::vector<MultiPoly> polys;
    for (const auto& eta : etas) polys.push_back(kind == Family::V ? ws.EV(eta) : ws.EU(eta));
    GramReport rep{gram_matrix(kind, polys, etas, cfg, degree_cap), {}};
    const auto& G = rep.gram.matrix;
    const char* fam = kind == Family::V ? "V" : "U";
    std::string at = "k=" + std::to_string(cfg.k) + " q0=" + cfg.q0.get_str() + " a0=" + cfg.a0.get_str();
    rep.checks.push_back(numeric(std::string("Gram off-diagonal relative magnitude ") + fam, n, at,
                                 rep.gram.max_off_diagonal, Real(0), rep.gram.max_off_diagonal, cfg.tolerance));
    const mpq_class t0 = cfg.t0();
    const Real N0 = to_real(norm_zero(kind, n, cfg));
    auto index = [&etas](const Composition& eta) {
        return static_cast<std::size_t>(std::find(etas.begin(), etas.end(), eta) - etas.begin());
    };
    for (std::size_t i = 0; i < etas.size(); ++i) {
        std::string ai = at + " " + label(etas[i]);
        Real expected = N0 * to_real(norm_ratio(kind, etas[i]).evaluate(cfg.q0, t0, cfg.a0));
        rep.checks.push_back(numeric(kind == Family::V ? "V Gram diagonal vs closed-form norm" : "U Gram diagonal vs closed-form norm (leading -a t^{n-1})", n,
                                     ai, G[i][i], expected, relative_error(G[i][i], expected), cfg.tolerance));
        if (kind == Family::U) {
            Real lit = N0 * to_real(norm_ratio(kind, etas[i], true).evaluate(cfg.q0, t0, cfg.a0));
            NumericCheck c = numeric("U norm with leading factor a t^{n-1} (alternative)", n, ai, G[i][i], lit,
                                     relative_error(G[i][i], lit), cfg.tolerance);
            c.informational = true;
            rep.checks.push_back(std::move(c));
        }
    }
    if (kind != Family::V) return rep;

    const ExactScalar a = ExactScalar::a(), t = ExactScalar::t();
    for (std::size_t i = 0; i < etas.size(); ++i) {
        const Composition& eta = etas[i];
        Composition phi = phi_map(eta);
        std::size_t j = index(phi);
        if (j < etas.size()) {
            ExactScalar r = a * ExactScalar::monomial(-2 * eta[0] - 1, 1 - n) * composition_constants(phi).d_prime /
                            composition_constants(eta).d_prime;
            Real expected = to_real(r.evaluate(cfg.q0, t0, cfg.a0));
            Real measured = G[j][j] / G[i][i];
            rep.checks.push_back(numeric("norm recurrence N_{Phi eta}/N_eta", n, at + " " + label(eta), measured, expected,
                                         relative_error(measured, expected), cfg.tolerance));
        }
        auto sv = spectral_vector(eta);
        for (int s = 1; s < n; ++s) {
            if (eta[s - 1] == eta[s]) continue;
            std::size_t js = index(swap_map(eta, s));
            ExactScalar td = sv[s - 1] / sv[s];
            ExactScalar r = (kOne - td / t) * (kOne - td * t) / (t * (kOne - td) * (kOne - td));
            Real expected = to_real(r.evaluate(cfg.q0, t0, cfg.a0));
            Real measured = G[js][js] / G[i][i];
            bool ascending = eta[s - 1] < eta[s];
            NumericCheck c = numeric(ascending ? "norm recurrence N_{s_i eta}/N_eta for eta_i < eta_{i+1}"
                                               : "s_i norm recurrence applied with eta_i > eta_{i+1} (alternative)",
                                     n, at + " " + label(eta) + " i=" + std::to_string(s), measured, expected,
                                     relative_error(measured, expected), cfg.tolerance);
            c.informational = !ascending;
            rep.checks.push_back(std::move(c));
        }
    }
    return rep;
}

std::vector<OperatorReport> delta_inversion(int n, int k) {
    MultiPoly d = delta_polynomial(n, k);
    MultiPoly lhs = d.map_coefficients([](const ExactScalar& c) { return c.invert_params(true, false); });
    std::string at = "k=" + std::to_string(k);
    std::vector<OperatorReport> out;
    out.push_back(compare("Delta_{1/q}(x) = q^{-kn(n-1)/2} Delta_q(x^R)", n, at, lhs,
                          d.reverse_vars().scaled(ExactScalar::monomial(-k * n * (n - 1) / 2, 0))));
    OperatorReport alt = compare("Delta inversion with exponent q^{-kn(n-1)} (alternative)", n, at, lhs,
                                     d.reverse_vars().scaled(ExactScalar::monomial(-k * n * (n - 1), 0)));
    alt.informational = true;
    out.push_back(std::move(alt));
    return out;
}

std::vector<NumericCheck> adjoint_and_measure_checks(const InnerProductConfig& cfg, Workspace& ws) {
    (void)ws;
    std::vector<NumericCheck> out;
    const int n = 2;
    const ExactScalar q = ExactScalar::q(), t = ExactScalar::t(), a = ExactScalar::a();
    std::string at = "k=" + std::to_string(cfg.k);
    auto X = [](std::vector<int> e, ExactScalar c = ExactScalar(1)) { return MultiPoly::monomial(n, e, c); };
    auto agree = [&](const std::string& identity, const std::string& inst, const MultiPoly& f1, const MultiPoly& g1,
                     const MultiPoly& f2, const MultiPoly& g2) {
        GramResult g = gram_matrix(Family::V, {f1, g1, f2, g2}, {}, cfg);
        const Real& lhs = g.matrix[0][1];
        const Real& rhs = g.matrix[2][3];
        Real scale = std::max({abs_real(lhs), abs_real(rhs),
                               boost::multiprecision::sqrt(abs_real(g.matrix[0][0] * g.matrix[1][1]))});
        Real err = scale > 0 ? abs_real(lhs - rhs) / scale : Real(0);
        out.push_back(numeric(identity, n, at + " " + inst, lhs, rhs, err, cfg.tolerance));
    };

    std::vector<std::pair<MultiPoly, MultiPoly>> pairs{{X({1, 0}), X({0, 1})},
                                                       {X({1, 0}) + X({0, 1}, ExactScalar(3)), X({0, 0})},
                                                       {X({1, 1}), X({1, 0})},
                                                       {X({0, 1}), X({0, 1})}};
    MultiPoly bump = (X({1, 0}) - X({0, 0}, q)) * (X({1, 0}) - X({0, 0}, a * q));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto& [f, g] = pairs[p];
        std::string inst = "pair " + std::to_string(p);
        for (int s : {1, -1})
            agree("adjoint T_1^{" + std::to_string(s) + "} self-adjoint", inst, apply_T(1, s, f), g, f, apply_T(1, s, g));
        agree("adjoint (omega^{-1})^* = t^{n-1}/(aq) omega (x_1-q)(x_1-aq)", inst, apply_omega(-1, f), g, f,
              apply_omega(1, bump * g).scaled(t.pow(n - 1) / (a * q)));
    }

    std::mt19937_64 rng(20240611);
    auto random_poly = [&rng, &X]() {
        MultiPoly f(n);
        for (const auto& c : compositions_up_to(n, 2)) f += X(c, ExactScalar(static_cast<long>(rng() % 7) - 3));
        return f;
    };
    for (int trial = 0; trial < 3; ++trial) {
        MultiPoly f = random_poly(), g = random_poly();
        for (int i = 1; i <= n; ++i)
            agree("h_i self-adjoint i=" + std::to_string(i), "random pair " + std::to_string(trial), apply_h(i, f), g, f,
                  apply_h(i, g));
    }

    // One-variable measure identity with the U side continued to base 1/q0.
    InnerProductConfig one = cfg;
    const mpq_class p = 1 / cfg.q0;
    const int J = cfg.product_cutoff;
    for (int power = 0; power <= 2; ++power) {
        auto f = [power](const mpq_class& x) {
            mpq_class r(1);
            for (int e = 0; e < power; ++e) r *= x;
            return r;
        };
        Real rhs = jackson_integral([&](const mpq_class& x) { return weight_eval(Family::V, x, one) * to_real(f(x)); },
                                    JacksonDomain::one_to_infinity, one)
                       .value /
                   to_real(1 - cfg.q0);
        const mpq_class a0 = cfg.a0;
        Real den = continued_qpochhammer(p, p, J) * continued_qpochhammer(a0, p, J) * continued_qpochhammer(p / a0, p, J);
        // The prefactor 1/(1-p) cancels the (1-p) of the Jackson sum; the
        // a-lattice carries no weight after continuation.
        Real lhs(0), scale(0);
        mpq_class x(1);
        for (int m = 0; m < cfg.lattice_cutoff; ++m, x *= p) {
            Real w = continued_qpochhammer(p * x, p, J) * continued_qpochhammer(p * x / a0, p, J) / den;
            Real term = w * to_real(f(x) * x);
            lhs += term;
            scale += abs_real(term);
        }
        // Odd moments vanish at a0 = -1, so the error is measured against the absolute series.
        Real err = abs_real(lhs - rhs) / scale;
        out.push_back(numeric("U integral at 1/q equals V integral", 1, "f=x^" + std::to_string(power), lhs, rhs, err,
                              cfg.tolerance));
    }
    return out;
}

SuiteReport orthogonality_suite(const InnerProductConfig& cfg, Workspace& ws, int degree_cap) {
    SuiteReport out{"orthogonality", {}, {}};
    std::string at = "k=" + std::to_string(cfg.k);
    InnerProductConfig doubled = cfg;
    doubled.lattice_cutoff = 2 * cfg.lattice_cutoff;
    for (Family kind : {Family::V, Family::U}) {
        GramReport rep = gram_and_norms(kind, 2, degree_cap, cfg, ws);
        for (auto& c : rep.checks) out.add(std::move(c));
        std::vector<MultiPoly> polys;
        for (const auto& eta : rep.gram.labels) polys.push_back(kind == Family::V ? ws.EV(eta) : ws.EU(eta));
        GramResult wide = gram_matrix(kind, polys, rep.gram.labels, doubled, degree_cap);
        Real worst(0);
        const auto& G = rep.gram.matrix;
        for (std::size_t i = 0; i < G.size(); ++i)
            for (std::size_t j = 0; j < G.size(); ++j) {
                Real scale = boost::multiprecision::sqrt(abs_real(G[i][i] * G[j][j]));
                worst = std::max<Real>(worst, abs_real(wide.matrix[i][j] - G[i][j]) / scale);
            }
        out.add(numeric(std::string("lattice doubling M -> 2M changes Gram entries ") + (kind == Family::V ? "V" : "U"), 2,
                        at, worst, Real(0), worst, 1e-10));
    }
    InnerProductConfig one = cfg;
    Real unit = inner_product(MultiPoly::constant(1, kOne), MultiPoly::constant(1, kOne), Family::V, one);
    Real expected = to_real(1 - cfg.q0);
    out.add(numeric("<1,1>^V at n=1 equals 1-q0", 1, at, unit, expected, relative_error(unit, expected), 1e-10));
    InnerProductConfig longer = cfg;
    longer.product_cutoff = cfg.product_cutoff + 10;
    for (int m : {0, 3}) {
        mpq_class x = qpow(cfg.q0, -m);
        Real w1 = weight_eval(Family::V, x, cfg), w2 = weight_eval(Family::V, x, longer);
        out.add(numeric("product cutoff J -> J+10 for w_V", 1, at + " m=" + std::to_string(m), w1, w2,
                        relative_error(w1, w2), 1e-15));
    }
    for (auto& c : adjoint_and_measure_checks(cfg, ws)) out.add(std::move(c));
    for (int n : {2, 3})
        for (auto& r : delta_inversion(n, cfg.k)) out.add(std::move(r));
    return out;
}

}  // namespace hecke
