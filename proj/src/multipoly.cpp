#include "hecke/multipoly.hpp"

#include <algorithm>

#include "hecke/composition.hpp"
#include "hecke/errors.hpp"

namespace hecke {

void ExponentVector::set(int i, int v) {
    if (v < 0 || v > 255) throw SizeError("exponent out of range: " + std::to_string(v));
    e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(v);
}

int ExponentVector::degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
}

ExponentVector ExponentVector::from(const std::vector<int>& parts) {
    if (parts.size() > static_cast<std::size_t>(kMaxVars)) throw SizeError("too many variables");
    ExponentVector v;
    for (std::size_t i = 0; i < parts.size(); ++i) v.set(static_cast<int>(i), parts[i]);
    return v;
}

std::vector<int> ExponentVector::to_vector(int n) const {
    return std::vector<int>(e.begin(), e.begin() + n);
}

MultiPoly::MultiPoly(int n) : n_(n) {
    if (n < 0 || n > kMaxVars) throw SizeError("unsupported variable count " + std::to_string(n));
}

MultiPoly MultiPoly::constant(int n, const ExactScalar& c) { return monomial(n, ExponentVector{}, c); }

MultiPoly MultiPoly::monomial(int n, const ExponentVector& exp, const ExactScalar& c) {
    MultiPoly p(n);
    p.add_term(exp, c);
    return p;
}

MultiPoly MultiPoly::monomial(int n, const std::vector<int>& exp, const ExactScalar& c) {
    if (static_cast<int>(exp.size()) != n) throw SizeError("exponent length differs from variable count");
    return monomial(n, ExponentVector::from(exp), c);
}

MultiPoly MultiPoly::variable(int n, int i) {
    ExponentVector e;
    e.set(i, 1);
    return monomial(n, e);
}

int MultiPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

ExactScalar MultiPoly::coefficient(const ExponentVector& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? ExactScalar() : it->second;
}

void MultiPoly::add_term(const ExponentVector& exp, const ExactScalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -v);
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, v);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    for (const auto& [k, v] : o.terms_) add_term(k, -v);
    return *this;
}

MultiPoly operator*(const MultiPoly& x, const MultiPoly& y) {
    MultiPoly r(std::max(x.n_, y.n_));
    for (const auto& [kx, vx] : x.terms_) {
        for (const auto& [ky, vy] : y.terms_) {
            ExponentVector k;
            for (int i = 0; i < kMaxVars; ++i) k.set(i, kx[i] + ky[i]);
            r.add_term(k, vx * vy);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const ExactScalar& c) const {
    if (c.is_zero()) return MultiPoly(n_);
    if (c.is_one()) return *this;
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * c);
    return r;
}

MultiPoly MultiPoly::mul_var(int i, int power) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) {
        ExponentVector k2 = k;
        k2.set(i, k[i] + power);
        r.terms_.emplace_hint(r.terms_.end(), k2, v);
    }
    return r;
}

MultiPoly MultiPoly::div_var(int i) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) {
        if (k[i] == 0)
            throw DivisibilityError("division by x" + std::to_string(i + 1) + " leaves remainder " + to_string());
        ExponentVector k2 = k;
        k2.set(i, k[i] - 1);
        r.terms_.emplace_hint(r.terms_.end(), k2, v);
    }
    return r;
}

MultiPoly MultiPoly::map_coefficients(const std::function<ExactScalar(const ExactScalar&)>& fn) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) {
        ExactScalar c = fn(v);
        if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), k, std::move(c));
    }
    return r;
}

MultiPoly MultiPoly::map_terms(
    const std::function<std::pair<ExponentVector, ExactScalar>(const ExponentVector&, const ExactScalar&)>& fn) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) {
        auto [k2, c] = fn(k, v);
        r.add_term(k2, c);
    }
    return r;
}

MultiPoly MultiPoly::permute_vars(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw SizeError("permutation length differs from variable count");
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) {
        ExponentVector k2;
        for (int i = 0; i < n_; ++i) k2.set(perm[i], k[i]);
        r.terms_.emplace(k2, v);
    }
    return r;
}

MultiPoly MultiPoly::reverse_vars() const {
    std::vector<int> perm(n_);
    for (int i = 0; i < n_; ++i) perm[i] = n_ - 1 - i;
    return permute_vars(perm);
}

MultiPoly MultiPoly::scale_var(int i, const ExactScalar& factor) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, v * factor.pow(k[i]));
    return r;
}

MultiPoly MultiPoly::tilde() const {
    return map_coefficients([](const ExactScalar& c) { return c.tilde(); });
}

MultiPoly MultiPoly::substitute_a(const ExactScalar& value) const {
    return map_coefficients([&](const ExactScalar& c) { return c.substitute_a(value); });
}

MultiPoly MultiPoly::homogeneous_part(int d) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_)
        if (k.degree() == d) r.terms_.emplace_hint(r.terms_.end(), k, v);
    return r;
}

MultiPoly MultiPoly::truncate(int max_degree) const {
    MultiPoly r(n_);
    for (const auto& [k, v] : terms_)
        if (k.degree() <= max_degree) r.terms_.emplace_hint(r.terms_.end(), k, v);
    return r;
}

bool MultiPoly::is_symmetric() const {
    for (int i = 0; i + 1 < n_; ++i) {
        std::vector<int> perm(n_);
        for (int j = 0; j < n_; ++j) perm[j] = j;
        std::swap(perm[i], perm[i + 1]);
        if (permute_vars(perm) != *this) return false;
    }
    return true;
}

ExactScalar MultiPoly::evaluate(const std::vector<ExactScalar>& point) const {
    if (static_cast<int>(point.size()) != n_) throw SizeError("evaluation point has wrong length");
    ExactScalar acc;
    for (const auto& [k, v] : terms_) {
        ExactScalar m = v;
        for (int i = 0; i < n_; ++i)
            if (k[i] != 0) m *= point[i].pow(k[i]);
        acc += m;
    }
    return acc;
}

ParamPoly MultiPoly::common_denominator() const {
    ParamPoly l(1);
    for (const auto& [k, v] : terms_) {
        const ParamPoly& d = v.den();
        if (d.is_one()) continue;
        ParamPoly g = ParamPoly::gcd(l, d);
        l = l * d.divide_exact(g);
    }
    return l.sign() < 0 ? -l : l;
}

std::string MultiPoly::to_string(const std::string& var) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [k, v] : terms_) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (int i = 0; i < n_; ++i) {
            if (k[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += var + std::to_string(i + 1);
            if (k[i] > 1) mono += "^" + std::to_string(k[i]);
        }
        out += v.to_string();
        if (!mono.empty()) out += "*" + mono;
    }
    return out;
}

MultiPoly exact_divide(const MultiPoly& f, const MultiPoly& g) {
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    const auto& [lk, lc] = *g.terms().begin();
    MultiPoly quotient(f.nvars()), rest = f, remainder(f.nvars());
    while (!rest.is_zero()) {
        auto [k, c] = *rest.terms().begin();
        bool divides = true;
        ExponentVector shift;
        for (int i = 0; i < kMaxVars && divides; ++i) {
            if (k[i] < lk[i]) divides = false;
            else shift.set(i, k[i] - lk[i]);
        }
        if (!divides) {
            remainder.add_term(k, c);
            rest.add_term(k, -c);
            continue;
        }
        ExactScalar factor = c / lc;
        quotient.add_term(shift, factor);
        rest -= MultiPoly::monomial(f.nvars(), shift, factor) * g;
    }
    if (!remainder.is_zero()) throw DivisibilityError("inexact division, remainder " + remainder.to_string());
    return quotient;
}

LeadingTerm leading_term(const MultiPoly& f, bool require_unique) {
    if (f.is_zero()) throw DomainError("leading term of the zero polynomial");
    int n = f.nvars(), d = f.degree();
    std::vector<Composition> top;
    for (const auto& [k, v] : f.terms())
        if (k.degree() == d) top.push_back(k.to_vector(n));
    std::vector<Composition> maximal;
    for (const auto& c : top) {
        bool dominated = std::any_of(top.begin(), top.end(), [&](const Composition& o) { return comp_less(c, o); });
        if (!dominated) maximal.push_back(c);
    }
    if (require_unique && maximal.size() > 1)
        throw DegeneracyError("no unique leading term: " + composition_string(maximal[0]) + " and " +
                              composition_string(maximal[1]) + " are incomparable");
    ExponentVector k = ExponentVector::from(maximal.front());
    return {k, f.coefficient(k)};
}

}  // namespace hecke
