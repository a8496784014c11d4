#include "hecke/composition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

int size_of(const Composition& eta) { return std::accumulate(eta.begin(), eta.end(), 0); }

Partition sorted_partition(const Composition& eta) {
    Partition p = eta;
    std::sort(p.begin(), p.end(), std::greater<>());
    return p;
}

Partition conjugate(const Partition& lambda) {
    int m = lambda.empty() ? 0 : *std::max_element(lambda.begin(), lambda.end());
    Partition c(m, 0);
    for (int j = 0; j < m; ++j)
        c[j] = static_cast<int>(std::count_if(lambda.begin(), lambda.end(), [j](int x) { return x > j; }));
    return c;
}

bool is_partition(const Composition& eta) { return std::is_sorted(eta.begin(), eta.end(), std::greater<>()); }

std::vector<Composition> compositions(int n, int degree) {
    std::vector<Composition> out;
    if (n == 0) {
        if (degree == 0) out.emplace_back();
        return out;
    }
    for (int k = degree; k >= 0; --k) {
        for (auto rest : compositions(n - 1, degree - k)) {
            rest.insert(rest.begin(), k);
            out.push_back(std::move(rest));
        }
    }
    return out;
}

std::vector<Composition> compositions_up_to(int n, int max_degree) {
    std::vector<Composition> out;
    for (int d = 0; d <= max_degree; ++d) {
        auto shell = compositions(n, d);
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

std::vector<Partition> partitions(int n, int degree) {
    std::vector<Partition> out;
    for (auto& c : compositions(n, degree))
        if (is_partition(c)) out.push_back(c);
    return out;
}

std::vector<Composition> orbit(const Partition& lambda) {
    Composition c = sorted_partition(lambda);
    std::vector<Composition> out;
    do {
        out.push_back(c);
    } while (std::prev_permutation(c.begin(), c.end()));
    return out;
}

bool dominates(const Partition& mu, const Partition& lambda) {
    int s1 = 0, s2 = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        s1 += mu[i];
        s2 += i < lambda.size() ? lambda[i] : 0;
        if (s1 > s2) return false;
    }
    return true;
}

bool comp_less(const Composition& nu, const Composition& eta) {
    if (nu.size() != eta.size() || nu == eta || size_of(nu) != size_of(eta)) return false;
    Partition np = sorted_partition(nu), ep = sorted_partition(eta);
    if (np != ep) return dominates(np, ep);
    int s = 0;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        s += eta[i] - nu[i];
        if (s < 0) return false;
    }
    return true;
}

std::vector<Composition> topological_order(std::vector<Composition> set) {
    std::sort(set.begin(), set.end(), std::greater<>());
    std::vector<Composition> order;
    std::vector<bool> used(set.size(), false);
    for (std::size_t round = 0; round < set.size(); ++round) {
        for (std::size_t i = 0; i < set.size(); ++i) {
            if (used[i]) continue;
            bool maximal = true;
            for (std::size_t j = 0; j < set.size() && maximal; ++j)
                if (!used[j] && comp_less(set[i], set[j])) maximal = false;
            if (maximal) {
                used[i] = true;
                order.push_back(set[i]);
                break;
            }
        }
    }
    return order;
}

std::vector<ExactScalar> spectral_vector(const Composition& eta) {
    int n = static_cast<int>(eta.size());
    std::vector<ExactScalar> out;
    for (int i = 0; i < n; ++i) {
        int count = 0;
        for (int k = 0; k < i; ++k) count += eta[k] >= eta[i];
        for (int k = i + 1; k < n; ++k) count += eta[k] > eta[i];
        out.push_back(ExactScalar::monomial(eta[i], -count));
    }
    return out;
}

std::vector<ExactScalar> principal_point(int n) {
    std::vector<ExactScalar> p;
    for (int i = 0; i < n; ++i) p.push_back(ExactScalar::monomial(0, i));
    return p;
}

std::vector<Node> nodes(const Composition& eta) {
    std::vector<Node> out;
    for (int i = 0; i < static_cast<int>(eta.size()); ++i)
        for (int j = 1; j <= eta[i]; ++j) out.push_back({i, j});
    return out;
}

int arm(const Composition& eta, const Node& s) { return eta[s.row] - s.col; }

int leg(const Composition& eta, const Node& s) {
    int n = static_cast<int>(eta.size()), i = s.row, j = s.col, count = 0;
    for (int k = i + 1; k < n; ++k) count += j <= eta[k] && eta[k] <= eta[i];
    for (int k = 0; k < i; ++k) count += j <= eta[k] + 1 && eta[k] + 1 <= eta[i];
    return count;
}

int coarm(const Composition&, const Node& s) { return s.col - 1; }

int coleg(const Composition& eta, const Node& s) {
    int n = static_cast<int>(eta.size()), i = s.row, count = 0;
    for (int k = i + 1; k < n; ++k) count += eta[k] > eta[i];
    for (int k = 0; k < i; ++k) count += eta[k] >= eta[i];
    return count;
}

int b_statistic(const Partition& lambda) {
    int b = 0;
    for (std::size_t i = 0; i < lambda.size(); ++i) b += static_cast<int>(i) * lambda[i];
    return b;
}

CompositionConstants composition_constants(const Composition& eta) {
    int n = static_cast<int>(eta.size());
    CompositionConstants c{ExactScalar(1), ExactScalar(1), ExactScalar(1)};
    const ExactScalar one(1);
    for (const Node& s : nodes(eta)) {
        int a = arm(eta, s), l = leg(eta, s), lp = coleg(eta, s);
        c.d *= one - ExactScalar::monomial(a + 1, l + 1);
        c.d_prime *= one - ExactScalar::monomial(a + 1, l);
        c.e *= one - ExactScalar::monomial(coarm(eta, s) + 1, n - lp);
        c.a_stat += a;
        c.l_stat += l;
        c.lprime_stat += lp;
    }
    Partition p = sorted_partition(eta);
    c.b_plus = b_statistic(p);
    c.b_conj = b_statistic(conjugate(p));
    return c;
}

int min_perm_length(const Composition& eta) {
    int n = static_cast<int>(eta.size()), inv = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) inv += eta[i] < eta[j];
    return inv;
}

ExactScalar alpha_coefficient(const Composition& eta) {
    int n = static_cast<int>(eta.size()), qe = 0, te = 0;
    Partition p = sorted_partition(eta);
    for (int i = 0; i < n; ++i) {
        qe += eta[i] * (eta[i] - 1) / 2;
        te += (n - 1 - i) * p[i];
    }
    return ExactScalar::monomial(qe, te - min_perm_length(eta));
}

ExactScalar alpha_coefficient_from_stats(const Composition& eta) {
    int n = static_cast<int>(eta.size());
    CompositionConstants c = composition_constants(eta);
    return ExactScalar::monomial(c.a_stat, (n - 1) * size_of(eta) - c.l_stat);
}

Composition phi_map(const Composition& eta) {
    if (eta.empty()) throw DomainError("Phi needs at least one part");
    Composition out(eta.begin() + 1, eta.end());
    out.push_back(eta.front() + 1);
    return out;
}

Composition psi_map(const Composition& eta) {
    if (eta.empty() || eta.back() == 0) throw DomainError("Psi needs a positive last part");
    Composition out{eta.back() - 1};
    out.insert(out.end(), eta.begin(), eta.end() - 1);
    return out;
}

Composition swap_map(const Composition& eta, int i) {
    if (i < 1 || i >= static_cast<int>(eta.size())) throw DomainError("swap index out of range");
    Composition out = eta;
    std::swap(out[i - 1], out[i]);
    return out;
}

ExactScalar t_factorial(int n) {
    ExactScalar r(1);
    for (int i = 1; i <= n; ++i) {
        ExactScalar s;
        for (int j = 0; j < i; ++j) s += ExactScalar::monomial(0, j);
        r *= s;
    }
    return r;
}

ExactScalar principal_value_P(const Partition& lambda) {
    int n = static_cast<int>(lambda.size());
    const ExactScalar one(1);
    ExactScalar r(1);
    int l_total = 0;
    for (const Node& s : nodes(lambda)) {
        int l = leg(lambda, s);
        l_total += l;
        r *= (one - ExactScalar::monomial(coarm(lambda, s), n - coleg(lambda, s))) /
             (one - ExactScalar::monomial(arm(lambda, s), l + 1));
    }
    return r * ExactScalar::monomial(0, l_total);
}

ExactScalar generalized_pochhammer(const ExactScalar& alpha, const Partition& lambda) {
    ExactScalar r(1);
    for (const Node& s : nodes(lambda))
        r *= ExactScalar::monomial(0, coleg(lambda, s)) - ExactScalar::monomial(coarm(lambda, s), 0) * alpha;
    return r;
}

Composition parse_composition(const std::string& text) {
    Composition c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("invalid composition '" + text + "'");
        c.push_back(std::stoi(item));
    }
    if (c.empty()) throw DomainError("empty composition");
    return c;
}

std::string composition_string(const Composition& eta) {
    std::string s;
    for (std::size_t i = 0; i < eta.size(); ++i) s += (i ? "," : "") + std::to_string(eta[i]);
    return s;
}

}  // namespace hecke
