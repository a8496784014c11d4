#include "hecke/operators.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

const ExactScalar kOne(1);

void require_index(int i, int lo, int hi, const char* what) {
    if (i < lo || i > hi)
        throw DomainError(std::string(what) + " index " + std::to_string(i) + " outside " + std::to_string(lo) + ".." +
                          std::to_string(hi));
}

// Shared kernel of T_i and T_i^{-1} on x_i, x_{i+1} (0-based a, a+1):
//   result = diag * x^k + (ci * x_i + cj * x_{i+1}) * (s_i x^k - x^k) / (x_i - x_{i+1}).
MultiPoly hecke_generator(int a, const ExactScalar& diag, const ExactScalar& ci, const ExactScalar& cj,
                          const MultiPoly& f) {
    MultiPoly r(f.nvars());
    for (const auto& [k, v] : f.terms()) {
        r.add_term(k, v * diag);
        int A = k[a], B = k[a + 1];
        if (A == B) continue;
        int lo = std::min(A, B), span = std::abs(A - B);
        ExactScalar sign = A > B ? -v : v;
        ExactScalar wi = sign * ci, wj = sign * cj;
        for (int m = 0; m < span; ++m) {
            ExponentVector g = k;
            g.set(a, lo + m + 1);
            g.set(a + 1, lo + span - 1 - m);
            r.add_term(g, wi);
            g.set(a, lo + m);
            g.set(a + 1, lo + span - m);
            r.add_term(g, wj);
        }
    }
    return r;
}

MultiPoly chain(const MultiPoly& f, int from, int to, int power) {
    // Applies T_from first, stepping towards T_to.
    MultiPoly g = f;
    int step = from <= to ? 1 : -1;
    for (int j = from;; j += step) {
        g = apply_T(j, power, g);
        if (j == to) break;
    }
    return g;
}

// T_{hi} ... T_{lo} with T_lo applied first; identity when lo > hi.
MultiPoly down_product(int hi, int lo, int power, const MultiPoly& f) { return lo > hi ? f : chain(f, lo, hi, power); }
// T_{lo} ... T_{hi} with T_hi applied first.
MultiPoly up_product(int lo, int hi, int power, const MultiPoly& f) { return lo > hi ? f : chain(f, hi, lo, power); }

}  // namespace

MultiPoly apply_T(int i, int power, const MultiPoly& f) {
    int n = f.nvars();
    if (n < 2) throw DomainError("T_i needs at least two variables");
    require_index(i, 0, n - 1, "T");
    if (power != 1 && power != -1) throw DomainError("T power must be +1 or -1");
    if (i == 0) return apply_omega(1, apply_T(1, power, apply_omega(-1, f)));
    const ExactScalar t = ExactScalar::t();
    if (power == 1) return hecke_generator(i - 1, t, t, ExactScalar(-1), f);
    ExactScalar ti = t.inverse();
    return hecke_generator(i - 1, ti, kOne, -ti, f);
}

MultiPoly apply_T0_divided(const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly s0f(n);
    for (const auto& [k, v] : f.terms()) {
        ExponentVector m = k;
        m.set(0, k[n - 1]);
        m.set(n - 1, k[0]);
        s0f.add_term(m, v * ExactScalar::monomial(k[0] - k[n - 1], 0));
    }
    const ExactScalar q = ExactScalar::q(), t = ExactScalar::t();
    MultiPoly x1 = MultiPoly::variable(n, 0), xn = MultiPoly::variable(n, n - 1);
    MultiPoly numer = (xn.scaled(q * t) - x1) * (s0f - f);
    return f.scaled(t) + exact_divide(numer, xn.scaled(q) - x1);
}

MultiPoly apply_T_word(const std::vector<int>& word, int power, const MultiPoly& f) {
    MultiPoly g = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) g = apply_T(*it, power, g);
    return g;
}

MultiPoly apply_omega(int power, const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly r(n);
    for (const auto& [k, v] : f.terms()) {
        ExponentVector m;
        if (power == 1) {
            for (int j = 0; j + 1 < n; ++j) m.set(j, k[j + 1]);
            m.set(n - 1, k[0]);
            r.add_term(m, k[0] ? v * ExactScalar::monomial(k[0], 0) : v);
        } else {
            m.set(0, k[n - 1]);
            for (int j = 1; j < n; ++j) m.set(j, k[j - 1]);
            r.add_term(m, k[n - 1] ? v * ExactScalar::monomial(-k[n - 1], 0) : v);
        }
    }
    return r;
}

MultiPoly apply_Y(int i, int power, const MultiPoly& f) {
    int n = f.nvars();
    require_index(i, 1, n, "Y");
    if (power == 1) {
        MultiPoly g = up_product(1, i - 1, -1, f);  // T_1^{-1} ... T_{i-1}^{-1}
        g = apply_omega(1, g);
        g = up_product(i, n - 1, 1, g);  // T_i ... T_{n-1}
        return g.scaled(ExactScalar::monomial(0, i - n));
    }
    MultiPoly g = down_product(n - 1, i, -1, f);  // T_{n-1}^{-1} ... T_i^{-1}
    g = apply_omega(-1, g);
    g = down_product(i - 1, 1, 1, g);  // T_{i-1} ... T_1
    return g.scaled(ExactScalar::monomial(0, n - i));
}

MultiPoly apply_D(int i, const MultiPoly& f) {
    int n = f.nvars();
    require_index(i, 1, n, "D");
    MultiPoly g = up_product(1, i - 1, -1, f);  // T_1^{-1} ... T_{i-1}^{-1}
    g = apply_omega(1, g);
    g = up_product(i, n - 1, -1, g);  // T_i^{-1} ... T_{n-1}^{-1}
    return (f - g.scaled(ExactScalar::monomial(0, n - 1))).div_var(i - 1);
}

MultiPoly apply_scriptD(int i, const MultiPoly& f) {
    int n = f.nvars();
    require_index(i, 1, n, "script D");
    MultiPoly g = down_product(n - 1, i, 1, f);  // T_{n-1} ... T_i
    g = apply_omega(-1, g);
    g = down_product(i - 1, 1, 1, g);  // T_{i-1} ... T_1
    MultiPoly diff = f - g.scaled(ExactScalar::monomial(0, 1 - n));
    return diff.div_var(i - 1).scaled(-ExactScalar::q());
}

MultiPoly apply_scriptD_hat_form(int i, const MultiPoly& f) {
    int n = f.nvars();
    return apply_D(n + 1 - i, f.hat()).hat().scaled(-ExactScalar::q());
}

MultiPoly apply_scriptD_product_form(int i, const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly g = down_product(n - 1, i, 1, f);  // T_{n-1} ... T_i
    g = up_product(i, n - 1, 1, g);              // T_i ... T_{n-1}
    g = apply_D(i, apply_Y(i, -1, g));
    return g.scaled(ExactScalar::q() * ExactScalar::monomial(0, -2 * n + i + 1));
}

MultiPoly apply_e(int i, const MultiPoly& f) {
    int n = f.nvars();
    require_index(i, 1, n, "e");
    MultiPoly g = up_product(1, i - 1, -1, f);
    g = apply_omega(1, g).mul_var(n - 1);
    g = up_product(i, n - 1, 1, g);
    return g.scaled(ExactScalar::monomial(0, i - 1));
}

MultiPoly apply_bigE(int i, const MultiPoly& f) {
    int n = f.nvars();
    const ExactScalar ainv = ExactScalar::a().inverse();
    return apply_D(i, f) + apply_Y(i, 1, f).scaled((kOne + ainv) * ExactScalar::monomial(0, n - 1)) -
           apply_e(i, f).scaled(ainv);
}

MultiPoly apply_raise(Raise which, const MultiPoly& f) {
    int n = f.nvars();
    if (which == Raise::Phi1) return apply_omega(1, f).mul_var(n - 1);
    return down_product(n - 1, 1, -1, f).mul_var(n - 1);  // T_1^{-1} applied first
}

MultiPoly apply_lower(Lower which, const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly g = apply_D(n, f);
    if (which == Lower::Psi1) return apply_omega(-1, g);
    return up_product(1, n - 1, 1, g);  // T_1 ... T_{n-1}
}

MultiPoly apply_lower_adjoint(const MultiPoly& f) {
    int n = f.nvars();
    MultiPoly g = down_product(n - 1, 1, 1, f);  // T_{n-1} ... T_1
    return apply_bigE(n, g).scaled(-ExactScalar::q());
}

std::vector<std::vector<int>> bubble_sort_words(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> words;
    do {
        std::vector<int> s = p, word;
        bool changed = true;
        while (changed) {
            changed = false;
            for (int i = 0; i + 1 < n; ++i) {
                if (s[i] > s[i + 1]) {
                    std::swap(s[i], s[i + 1]);
                    word.push_back(i + 1);
                    changed = true;
                }
            }
        }
        words.push_back(word);
    } while (std::next_permutation(p.begin(), p.end()));
    return words;
}

MultiPoly apply_uplus(const MultiPoly& f, int max_n) {
    int n = f.nvars();
    if (n > max_n) throw SizeError("U+ limited to n <= " + std::to_string(max_n));
    if (n == 1) return f;
    MultiPoly r(n);
    for (const auto& w : bubble_sort_words(n)) r += apply_T_word(w, 1, f);
    return r;
}

MultiPoly apply_h(int i, const MultiPoly& f) {
    int n = f.nvars();
    const ExactScalar a = ExactScalar::a();
    MultiPoly df = apply_D(i, f);
    return apply_Y(i, 1, f) + df.scaled((kOne + a) * ExactScalar::monomial(0, 1 - n)) +
           apply_D(i, apply_Y(i, -1, df)).scaled(a * ExactScalar::monomial(0, 2 - 2 * n));
}

MultiPoly apply_h_hat(int i, const MultiPoly& f) { return apply_h(i, f.hat()).hat(); }

Operator tilde_conjugate(Operator op) {
    return [op = std::move(op)](const MultiPoly& f) { return op(f.tilde()).tilde(); };
}

Operator hat_conjugate(Operator op) {
    return [op = std::move(op)](const MultiPoly& f) { return op(f.hat()).hat(); };
}

}  // namespace hecke
