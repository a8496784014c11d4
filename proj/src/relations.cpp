#include "hecke/relations.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

ExactScalar tpow(int k) { return ExactScalar::monomial(0, k); }

std::vector<int> ascending(int lo, int hi) {
    std::vector<int> w;
    for (int j = lo; j <= hi; ++j) w.push_back(j);
    return w;
}

std::vector<int> descending(int hi, int lo) {
    std::vector<int> w;
    for (int j = hi; j >= lo; --j) w.push_back(j);
    return w;
}

std::vector<int> concat(std::vector<int> x, const std::vector<int>& y) {
    x.insert(x.end(), y.begin(), y.end());
    return x;
}

Operator T(int i, int p = 1) {
    return [i, p](const MultiPoly& f) { return apply_T(i, p, f); };
}
Operator omega(int p = 1) {
    return [p](const MultiPoly& f) { return apply_omega(p, f); };
}
Operator mulx(int i) {
    return [i](const MultiPoly& f) { return f.mul_var(i - 1); };
}

// Operator algebra on callables: products apply the right factor first.
Operator operator*(Operator x, Operator y) {
    return [x = std::move(x), y = std::move(y)](const MultiPoly& f) { return x(y(f)); };
}
Operator operator+(Operator x, Operator y) {
    return [x = std::move(x), y = std::move(y)](const MultiPoly& f) { return x(f) + y(f); };
}
Operator operator-(Operator x, Operator y) {
    return [x = std::move(x), y = std::move(y)](const MultiPoly& f) { return x(f) - y(f); };
}
Operator operator*(const ExactScalar& c, Operator x) {
    return [c, x = std::move(x)](const MultiPoly& f) { return x(f).scaled(c); };
}
Operator identity() {
    return [](const MultiPoly& f) { return f; };
}

using Family = std::function<Operator(int)>;

std::string idx(int i) { return " i=" + std::to_string(i); }
std::string idx(int i, int j) { return " i=" + std::to_string(i) + " j=" + std::to_string(j); }

void commuting(SuiteReport& out, const std::string& name, const Family& op, const Span& span) {
    int n = span.n;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.add(check_on_span(name + idx(i, j), span, op(i) * op(j), op(j) * op(i)));
}

// Relations shared by D and script D with the Hecke generators and omega.
void dunkl_relations(SuiteReport& out, const std::string& name, const Family& d, const Span& span) {
    int n = span.n;
    const ExactScalar t = ExactScalar::t(), q = ExactScalar::q();
    for (int i = 1; i < n; ++i) {
        out.add(check_on_span(name + " T_i X_{i+1} = t X_i T_i^-1" + idx(i), span, T(i) * d(i + 1),
                              t * (d(i) * T(i, -1))));
        out.add(check_on_span(name + " T_i X_i = X_{i+1} T_i + (t-1) X_i" + idx(i), span, T(i) * d(i),
                              d(i + 1) * T(i) + (t - kOne) * d(i)));
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                out.add(check_on_span(name + " [T_i, X_j] = 0" + idx(i, j), span, T(i) * d(j), d(j) * T(i)));
    }
    out.add(check_on_span(name + " X_n omega = q omega X_1", span, d(n) * omega(), q * (omega() * d(1))));
    for (int i = 1; i < n; ++i)
        out.add(check_on_span(name + " X_i omega = omega X_{i+1}" + idx(i), span, d(i) * omega(), omega() * d(i + 1)));
}

MultiPoly psi_omega_core(const MultiPoly& f, bool inverse_middle) {
    int n = f.nvars();
    const ExactScalar a = ExactScalar::a();
    MultiPoly df = apply_D(n, f);
    MultiPoly g = apply_Y(n, 1, f) + df.scaled((kOne + a) * tpow(1 - n)) +
                  apply_D(n, apply_Y(n, inverse_middle ? -1 : 1, df)).scaled(a * tpow(2 - 2 * n));
    return apply_T_word(ascending(1, n - 1), 1, g);
}

}  // namespace

MultiPoly apply_phi_omega(const MultiPoly& f) {
    int n = f.nvars();
    auto w = ascending(1, n - 1);
    return apply_T_word(w, 1, apply_omega(1, apply_T_word(w, -1, f)));
}

MultiPoly apply_psi_omega(const MultiPoly& f) { return psi_omega_core(f, true); }

MultiPoly apply_psi_dunkl(int i, const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly g = apply_T_word(concat(ascending(i, n - 1), descending(n - 1, i)), -1, f);
    g = apply_scriptD(i, g);
    g = apply_T_word(concat(descending(i - 1, 1), ascending(1, i - 1)), 1, g);
    return g.scaled(ExactScalar::a() * ExactScalar::q().inverse() * tpow(n + 1 - 2 * i));
}

SuiteReport relation_suite(int n, int max_degree, unsigned long long seed) {
    if (n < 2) throw DomainError("relation suite needs n >= 2");
    SuiteReport out{"relations", {}, {}};
    Span span = monomial_span(n, max_degree, seed, 2);
    const ExactScalar t = ExactScalar::t(), q = ExactScalar::q();

    for (int i = 0; i < n; ++i)
        out.add(check_on_span("(T_i - t)(T_i + 1) = 0" + idx(i), span,
                              (T(i) - t * identity()) * (T(i) + identity()), [n](const MultiPoly&) { return MultiPoly(n); }));
    if (n >= 3)
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            out.add(check_on_span("braid" + idx(i, j), span, T(i) * T(j) * T(i), T(j) * T(i) * T(j)));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            if (!(i == 0 && j == n - 1))
                out.add(check_on_span("commuting generators" + idx(i, j), span, T(i) * T(j), T(j) * T(i)));
    for (int i = 0; i < n; ++i)
        out.add(check_on_span("omega T_i = T_{i-1} omega" + idx(i), span, omega() * T(i),
                              T((i + n - 1) % n) * omega()));
    out.add(check_on_span("T0 divided-difference form", span, T(0),
                          [](const MultiPoly& f) { return apply_T0_divided(f); }));

    auto Y = [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_Y(i, 1, f); }; };
    for (int i = 1; i < n; ++i) {
        out.add(check_on_span("T_i Y_{i+1} = t Y_i T_i^-1" + idx(i), span, T(i) * Y(i + 1), t * (Y(i) * T(i, -1))));
        out.add(check_on_span("T_i Y_i = Y_{i+1} T_i + (t-1) Y_i" + idx(i), span, T(i) * Y(i),
                              Y(i + 1) * T(i) + (t - kOne) * Y(i)));
        for (int j = 1; j <= n; ++j)
            if (j != i && j != i + 1)
                out.add(check_on_span("[T_i, Y_j] = 0" + idx(i, j), span, T(i) * Y(j), Y(j) * T(i)));
    }
    for (int i = 1; i <= n; ++i)
        out.add(check_on_span("Y_i^-1 Y_i = 1" + idx(i), span,
                              [i](const MultiPoly& f) { return apply_Y(i, -1, apply_Y(i, 1, f)); }, identity()));

    const ExactScalar ti = t.inverse();
    for (int i = 1; i < n; ++i) {
        out.add(check_on_span("T_i^-1 x_{i+1} = t^-1 x_i T_i" + idx(i), span, T(i, -1) * mulx(i + 1),
                              ti * (mulx(i) * T(i))));
        out.add(check_on_span("T_i^-1 x_i = x_{i+1} T_i^-1 + (t^-1 - 1) x_i" + idx(i), span, T(i, -1) * mulx(i),
                              mulx(i + 1) * T(i, -1) + (ti - kOne) * mulx(i)));
        out.add(check_on_span("T_i x_i = t x_{i+1} T_i^-1" + idx(i), span, T(i) * mulx(i),
                              t * (mulx(i + 1) * T(i, -1))));
        out.add(check_on_span("T_i x_{i+1} = x_i T_i + (t-1) x_{i+1}" + idx(i), span, T(i) * mulx(i + 1),
                              mulx(i) * T(i) + (t - kOne) * mulx(i + 1)));
    }
    out.add(check_on_span("omega x_1 = q x_n omega", span, omega() * mulx(1), q * (mulx(n) * omega())));
    for (int i = 1; i < n; ++i)
        out.add(check_on_span("omega x_{i+1} = x_i omega" + idx(i), span, omega() * mulx(i + 1), mulx(i) * omega()));

    Family sD = [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_scriptD(i, f); }; };
    Family D = [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_D(i, f); }; };
    dunkl_relations(out, "script-D_i relations", sD, span);
    dunkl_relations(out, "D_i relations", D, span);

    Family E = [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_bigE(i, f); }; };
    for (int i = 1; i < n; ++i)
        out.add(check_on_span("T_i^-1 E_i T_i^-1 = t^-1 E_{i+1}" + idx(i), span, T(i, -1) * E(i) * T(i, -1),
                              ti * E(i + 1)));

    for (int i = 1; i < n; ++i)
        out.add(check_on_span("hat T_i hat = T_{n-i}^-1" + idx(i), span, hat_conjugate(T(i)), T(n - i, -1)));
    out.add(check_on_span("hat omega hat = omega^-1", span, hat_conjugate(omega()), omega(-1)));

    for (int i = 1; i <= n; ++i) {
        out.add(check_on_span("dunk.new second form = -q hat D_{n+1-i} hat" + idx(i), span, sD(i),
                              [i](const MultiPoly& f) { return apply_scriptD_hat_form(i, f); }));
        out.add(check_on_span("dunk.new third form" + idx(i), span, sD(i),
                              [i](const MultiPoly& f) { return apply_scriptD_product_form(i, f); }));
    }

    commuting(out, "commuting Y", Y, span);
    commuting(out, "commuting D", D, span);
    commuting(out, "commuting script-D", sD, span);
    commuting(out, "commuting e", [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_e(i, f); }; },
              span);
    commuting(out, "commuting E", E, span);
    commuting(out, "commuting h", [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_h(i, f); }; },
              span);

    if (n <= 5) {
        Operator U = [](const MultiPoly& f) { return apply_uplus(f); };
        for (int i = 1; i < n; ++i) {
            std::vector<int> perm(n);
            for (int k = 0; k < n; ++k) perm[k] = k;
            std::swap(perm[i - 1], perm[i]);
            out.add(check_on_span("U+ symmetric under s_i" + idx(i), span,
                                  [perm](const MultiPoly& f) { return apply_uplus(f).permute_vars(perm); }, U));
            out.add(check_on_span("T_i U+ = t U+" + idx(i), span, T(i) * U, t * U));
        }
    }
    return out;
}

SuiteReport isomorphism_suite(Isomorphism which, int n, int max_degree, unsigned long long seed) {
    if (n < 2) throw DomainError("isomorphism suite needs n >= 2");
    bool psi = which == Isomorphism::psi_a;
    SuiteReport out{psi ? "isomorphisms psi_a" : "isomorphisms phi", {}, {}};
    Span span = monomial_span(n, max_degree, seed, 1);
    const ExactScalar t = ExactScalar::t(), q = ExactScalar::q(), ti = t.inverse();
    const std::string tag = psi ? "psi_a " : "phi ";

    Family X = psi ? Family([](int i) -> Operator { return [i](const MultiPoly& f) { return apply_bigE(i, f); }; })
                   : Family([](int i) -> Operator { return [i](const MultiPoly& f) { return apply_e(i, f); }; });
    Operator Om = psi ? Operator(apply_psi_omega) : Operator(apply_phi_omega);
    // Images of tilde T_i and tilde T_i^-1.
    auto Tt = [](int i) { return T(i, -1); };
    auto Tti = [](int i) { return T(i, 1); };

    for (int i = 1; i < n; ++i)
        out.add(check_on_span(tag + "(T~_i - t^-1)(T~_i + 1) = 0" + idx(i), span,
                              (Tt(i) - ti * identity()) * (Tt(i) + identity()),
                              [n](const MultiPoly&) { return MultiPoly(n); }));
    for (int i = 1; i + 1 < n; ++i)
        out.add(check_on_span(tag + "braid" + idx(i, i + 1), span, Tt(i) * Tt(i + 1) * Tt(i),
                              Tt(i + 1) * Tt(i) * Tt(i + 1)));
    for (int i = 1; i < n; ++i)
        for (int j = i + 2; j < n; ++j)
            out.add(check_on_span(tag + "commuting" + idx(i, j), span, Tt(i) * Tt(j), Tt(j) * Tt(i)));
    for (int i = 2; i < n; ++i)
        out.add(check_on_span(tag + "T~_i w~^-1 = w~^-1 T~_{i-1}" + idx(i), span, Tt(i) * Om, Om * Tt(i - 1)));

    for (int i = 1; i < n; ++i) {
        out.add(check_on_span(tag + "T~_i^-1 x_{i+1} = t x_i T~_i" + idx(i), span, Tti(i) * X(i + 1),
                              t * (X(i) * Tt(i))));
        out.add(check_on_span(tag + "T~_i^-1 x_i = x_{i+1} T~_i^-1 + (t-1) x_i" + idx(i), span, Tti(i) * X(i),
                              X(i + 1) * Tti(i) + (t - kOne) * X(i)));
        out.add(check_on_span(tag + "T~_i x_i = t^-1 x_{i+1} T~_i^-1" + idx(i), span, Tt(i) * X(i),
                              ti * (X(i + 1) * Tti(i))));
        out.add(check_on_span(tag + "T~_i x_{i+1} = x_i T~_i + (t^-1 - 1) x_{i+1}" + idx(i), span,
                              Tt(i) * X(i + 1), X(i) * Tt(i) + (ti - kOne) * X(i + 1)));
    }
    out.add(check_on_span(tag + "x_1 w~^-1 = q^-1 w~^-1 x_n", span, X(1) * Om, q.inverse() * (Om * X(n))));
    for (int i = 1; i < n; ++i)
        out.add(check_on_span(tag + "x_{i+1} w~^-1 = w~^-1 x_i" + idx(i), span, X(i + 1) * Om, Om * X(i)));
    commuting(out, tag + "commuting x images", X, span);

    for (int i = 1; i <= n; ++i) {
        // t^{i-n} T~_{i-1}^-1 ... T~_1^-1 w~^-1 T~_{n-1} ... T~_i, mapped term by term.
        Operator image = [i, n, Om](const MultiPoly& f) {
            MultiPoly g = apply_T_word(descending(n - 1, i), 1, f);
            g = Om(g);
            return apply_T_word(descending(i - 1, 1), -1, g).scaled(tpow(i - n));
        };
        Operator target = psi ? Operator([i](const MultiPoly& f) { return apply_h(i, f); })
                              : Operator([i](const MultiPoly& f) { return apply_Y(i, 1, f); });
        out.add(check_on_span(tag + (psi ? "image of Y~_i^-1 = h_i" : "image of Y~_i^-1 = Y_i") + idx(i), span, image,
                              target));
    }

    if (psi) {
        Family Dl = [](int i) -> Operator { return [i](const MultiPoly& f) { return apply_psi_dunkl(i, f); }; };
        for (int i = 1; i < n; ++i) {
            out.add(check_on_span(tag + "T~_i D~_{i+1} = t^-1 D~_i T~_i^-1" + idx(i), span, Tt(i) * Dl(i + 1),
                                  ti * (Dl(i) * Tti(i))));
            out.add(check_on_span(tag + "T~_i D~_i = D~_{i+1} T~_i + (t^-1 - 1) D~_i" + idx(i), span,
                                  Tt(i) * Dl(i), Dl(i + 1) * Tt(i) + (ti - kOne) * Dl(i)));
            for (int j = 1; j <= n; ++j)
                if (j != i && j != i + 1)
                    out.add(check_on_span(tag + "[T~_i, D~_j] = 0" + idx(i, j), span, Tt(i) * Dl(j),
                                          Dl(j) * Tt(i)));
        }
        out.add(check_on_span(tag + "w~^-1 D~_n = q^-1 D~_1 w~^-1", span, Om * Dl(n),
                              q.inverse() * (Dl(1) * Om)));
        for (int i = 1; i < n; ++i)
            out.add(check_on_span(tag + "w~^-1 D~_i = D~_{i+1} w~^-1" + idx(i), span, Om * Dl(i), Dl(i + 1) * Om));
        commuting(out, tag + "commuting D~ images", Dl, span);

        // A variant omega image carrying Y_n rather than Y_n^-1 in its last term.
        Operator literal = [](const MultiPoly& f) { return psi_omega_core(f, false); };
        OperatorReport r = check_on_span(tag + "omega image with Y_n in its last term (alternative): image of Y~_n^-1 = h_n", span, literal,
                                         [n](const MultiPoly& f) { return apply_h(n, f); });
        r.informational = true;
        out.add(std::move(r));
    }
    return out;
}

}  // namespace hecke
