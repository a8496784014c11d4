#include "hecke/param_poly.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr unsigned kFieldBits = 16;
constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;

int shift_of(int var) { return static_cast<int>(kFieldBits) * (2 - var); }

bool by_monomial_desc(const ParamPoly::Term& x, const ParamPoly::Term& y) { return x.mono > y.mono; }

// Merge two sorted term lists, b scaled by `sign` (+1 or -1).
std::vector<ParamPoly::Term> merge(const std::vector<ParamPoly::Term>& a,
                                   const std::vector<ParamPoly::Term>& b, int sign) {
    std::vector<ParamPoly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            out.push_back({b[j].mono, sign > 0 ? b[j].coeff : mpz_class(-b[j].coeff)});
            ++j;
        } else {
            mpz_class c = sign > 0 ? mpz_class(a[i].coeff + b[j].coeff) : mpz_class(a[i].coeff - b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

mpz_class zgcd(const mpz_class& x, const mpz_class& y) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
    return g;
}

mpz_class symmetric_mod(const mpz_class& x, const mpz_class& m) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    if (2 * r > m) r -= m;
    return r;
}

mpz_class isqrt(const mpz_class& x) {
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

ParamPoly normalize_sign(ParamPoly p) { return p.sign() < 0 ? -p : p; }

ParamPoly primitive_part(const ParamPoly& p) {
    if (p.is_zero()) return p;
    return normalize_sign(p.divided_by(p.content()));
}

std::vector<int> used_vars(const ParamPoly& f, const ParamPoly& g) {
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v)
        if (f.uses(v) || g.uses(v)) vars.push_back(v);
    return vars;
}

ParamPoly var_power(int var, unsigned k) { return ParamPoly::variable(static_cast<Param>(var), k); }

// Heuristic gcd: evaluate one variable at a large integer, recurse, and lift the
// result by xi-adic expansion.  The candidate is accepted only after trial
// division, so a wrong guess just costs a retry.
std::optional<ParamPoly> heuristic_gcd(const ParamPoly& f0, const ParamPoly& g0) {
    if (f0.is_zero()) return normalize_sign(g0);
    if (g0.is_zero()) return normalize_sign(f0);
    mpz_class cf = f0.content(), cg = g0.content();
    mpz_class c = zgcd(cf, cg);
    auto vars = used_vars(f0, g0);
    if (vars.empty()) return ParamPoly(c);
    ParamPoly f = f0.divided_by(cf), g = g0.divided_by(cg);
    if (f.is_constant() || g.is_constant()) return ParamPoly(c);
    int v = vars.front();

    mpz_class bound = 2 * std::min(f.max_norm(), g.max_norm()) + 29;
    mpz_class xi = std::max(std::min(bound, mpz_class(99 * isqrt(bound))), mpz_class(2));
    for (int attempt = 0; attempt < 6; ++attempt) {
        ParamPoly ff = f.substitute(v, xi), gg = g.substitute(v, xi);
        if (!ff.is_zero() && !gg.is_zero()) {
            auto hh = heuristic_gcd(ff, gg);
            if (hh) {
                ParamPoly h, rest = *hh;
                unsigned power = 0;
                while (!rest.is_zero()) {
                    std::vector<ParamPoly::Term> digit;
                    for (const auto& term : rest.terms()) {
                        mpz_class r = symmetric_mod(term.coeff, xi);
                        if (r != 0) digit.push_back({term.mono, r});
                    }
                    ParamPoly g_i = ParamPoly::from_terms(std::move(digit));
                    h += g_i * var_power(v, power);
                    rest = (rest - g_i).divided_by(xi);
                    ++power;
                }
                h = primitive_part(h);
                if (!h.is_zero() && f.try_divide(h) && g.try_divide(h)) return h.times(c);
            }
        }
        xi = 73794 * xi * isqrt(isqrt(xi)) / 27011;
    }
    return std::nullopt;
}

ParamPoly leading_coeff_in(const ParamPoly& p, int v) { return p.coefficient_of(v, p.degree_in(v)); }

ParamPoly content_in(const ParamPoly& p, int v) {
    ParamPoly c;
    for (unsigned k = 0; k <= p.degree_in(v); ++k) {
        ParamPoly coeff = p.coefficient_of(v, k);
        if (!coeff.is_zero()) c = ParamPoly::gcd(c, coeff);
        if (c.is_one()) break;
    }
    return c;
}

// Sparse pseudo-remainder of a by b as polynomials in v.
ParamPoly pseudo_remainder(ParamPoly a, const ParamPoly& b, int v) {
    unsigned db = b.degree_in(v);
    ParamPoly lb = leading_coeff_in(b, v);
    while (!a.is_zero()) {
        unsigned da = a.degree_in(v);
        if (da < db) break;
        ParamPoly la = leading_coeff_in(a, v);
        a = a * lb - la * var_power(v, da - db) * b;
    }
    return a;
}

// Primitive PRS gcd: slow but unconditional fallback.
ParamPoly prs_gcd(const ParamPoly& f, const ParamPoly& g) {
    auto vars = used_vars(f, g);
    if (vars.empty()) return ParamPoly(zgcd(f.content(), g.content()));
    int v = vars.back();
    if (!f.uses(v) || !g.uses(v)) {
        const ParamPoly& with = f.uses(v) ? f : g;
        const ParamPoly& without = f.uses(v) ? g : f;
        return ParamPoly::gcd(content_in(with, v), without);
    }
    ParamPoly cf = content_in(f, v), cg = content_in(g, v);
    ParamPoly c = ParamPoly::gcd(cf, cg);
    ParamPoly a = f.divide_exact(cf), b = g.divide_exact(cg);
    if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
    while (!b.is_zero() && b.uses(v)) {
        ParamPoly r = pseudo_remainder(a, b, v);
        a = b;
        if (r.is_zero()) {
            b = ParamPoly();
        } else {
            b = r.divide_exact(content_in(r, v));
        }
    }
    if (!b.is_zero()) return normalize_sign(c);  // b is v-free: the primitive parts are coprime
    return normalize_sign(c * a.divide_exact(content_in(a, v)));
}

}  // namespace

PackedMonomial pack_monomial(unsigned eq, unsigned et, unsigned ea) {
    unsigned deg = eq + et + ea;
    if (deg > kFieldMask) throw SizeError("parameter exponent exceeds 65535");
    return (static_cast<std::uint64_t>(deg) << 48) | (static_cast<std::uint64_t>(eq) << 32) |
           (static_cast<std::uint64_t>(et) << 16) | static_cast<std::uint64_t>(ea);
}

unsigned monomial_exponent(PackedMonomial m, int var) {
    return static_cast<unsigned>((m >> shift_of(var)) & kFieldMask);
}

bool monomial_divides(PackedMonomial d, PackedMonomial m) {
    for (int v = 0; v < 3; ++v)
        if (monomial_exponent(d, v) > monomial_exponent(m, v)) return false;
    return true;
}

ParamPoly::ParamPoly(long c) {
    if (c != 0) terms_.push_back({0, mpz_class(c)});
}

ParamPoly::ParamPoly(const mpz_class& c) {
    if (c != 0) terms_.push_back({0, c});
}

ParamPoly ParamPoly::monomial(unsigned eq, unsigned et, unsigned ea, const mpz_class& c) {
    ParamPoly p;
    if (c != 0) p.terms_.push_back({pack_monomial(eq, et, ea), c});
    return p;
}

ParamPoly ParamPoly::variable(Param p, unsigned power) {
    switch (p) {
        case Param::q: return monomial(power, 0, 0);
        case Param::t: return monomial(0, power, 0);
        case Param::a: return monomial(0, 0, power);
    }
    return ParamPoly();
}

ParamPoly ParamPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), by_monomial_desc);
    ParamPoly p;
    for (auto& term : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == term.mono) {
            p.terms_.back().coeff += term.coeff;
            if (p.terms_.back().coeff == 0) p.terms_.pop_back();
        } else if (term.coeff != 0) {
            p.terms_.push_back(std::move(term));
        }
    }
    return p;
}

bool ParamPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono == 0); }

bool ParamPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono == 0 && terms_[0].coeff == 1; }

int ParamPoly::sign() const { return terms_.empty() ? 0 : sgn(terms_.front().coeff); }

ParamPoly ParamPoly::operator-() const {
    ParamPoly p(*this);
    for (auto& term : p.terms_) term.coeff = -term.coeff;
    return p;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    terms_ = merge(terms_, o.terms_, +1);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    terms_ = merge(terms_, o.terms_, -1);
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    *this = *this * o;
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly();
    if (a.size() == 1) return b.times_monomial(a.terms_[0].mono, a.terms_[0].coeff);
    if (b.size() == 1) return a.times_monomial(b.terms_[0].mono, b.terms_[0].coeff);
    std::vector<ParamPoly::Term> prod;
    prod.reserve(a.size() * b.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) prod.push_back({x.mono + y.mono, x.coeff * y.coeff});
    return ParamPoly::from_terms(std::move(prod));
}

bool operator==(const ParamPoly& a, const ParamPoly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    return true;
}

ParamPoly ParamPoly::times_monomial(PackedMonomial m, const mpz_class& c) const {
    ParamPoly p;
    if (c == 0) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& term : terms_) p.terms_.push_back({term.mono + m, term.coeff * c});
    return p;
}

ParamPoly ParamPoly::times(const mpz_class& c) const { return times_monomial(0, c); }

ParamPoly ParamPoly::divided_by(const mpz_class& c) const {
    ParamPoly p(*this);
    for (auto& term : p.terms_) mpz_divexact(term.coeff.get_mpz_t(), term.coeff.get_mpz_t(), c.get_mpz_t());
    return p;
}

std::optional<ParamPoly> ParamPoly::try_divide(const ParamPoly& d) const {
    if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (is_zero()) return ParamPoly();
    if (d.is_monomial()) {
        const Term& dt = d.terms_[0];
        ParamPoly out;
        out.terms_.reserve(terms_.size());
        for (const auto& term : terms_) {
            if (!monomial_divides(dt.mono, term.mono) || !mpz_divisible_p(term.coeff.get_mpz_t(), dt.coeff.get_mpz_t()))
                return std::nullopt;
            mpz_class c;
            mpz_divexact(c.get_mpz_t(), term.coeff.get_mpz_t(), dt.coeff.get_mpz_t());
            out.terms_.push_back({term.mono - dt.mono, std::move(c)});
        }
        return out;
    }
    const Term& lead = d.terms_.front();
    if (lead.mono > leading_monomial()) return std::nullopt;
    std::vector<Term> quotient;
    ParamPoly rest(*this);
    while (!rest.is_zero()) {
        const Term& r = rest.terms_.front();
        if (!monomial_divides(lead.mono, r.mono) || !mpz_divisible_p(r.coeff.get_mpz_t(), lead.coeff.get_mpz_t()))
            return std::nullopt;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), r.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        PackedMonomial m = r.mono - lead.mono;
        rest -= d.times_monomial(m, c);
        quotient.push_back({m, std::move(c)});
    }
    ParamPoly out;
    out.terms_ = std::move(quotient);  // produced in decreasing order already
    return out;
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& d) const {
    auto r = try_divide(d);
    if (!r) throw DivisibilityError("(" + to_string() + ") is not divisible by (" + d.to_string() + ")");
    return *r;
}

mpz_class ParamPoly::content() const {
    mpz_class g = 0;
    for (const auto& term : terms_) {
        g = zgcd(g, term.coeff);
        if (g == 1) break;
    }
    return g;
}

PackedMonomial ParamPoly::monomial_content() const {
    if (terms_.empty()) return 0;
    unsigned e[3] = {~0u, ~0u, ~0u};
    for (const auto& term : terms_)
        for (int v = 0; v < 3; ++v) e[v] = std::min(e[v], monomial_exponent(term.mono, v));
    return pack_monomial(e[0], e[1], e[2]);
}

mpz_class ParamPoly::max_norm() const {
    mpz_class m = 0;
    for (const auto& term : terms_)
        if (abs(term.coeff) > m) m = abs(term.coeff);
    return m;
}

unsigned ParamPoly::degree_in(int var) const {
    unsigned d = 0;
    for (const auto& term : terms_) d = std::max(d, monomial_exponent(term.mono, var));
    return d;
}

bool ParamPoly::uses(int var) const { return degree_in(var) > 0; }

ParamPoly ParamPoly::coefficient_of(int var, unsigned power) const {
    std::vector<Term> out;
    PackedMonomial strip = pack_monomial(var == 0 ? power : 0, var == 1 ? power : 0, var == 2 ? power : 0);
    for (const auto& term : terms_)
        if (monomial_exponent(term.mono, var) == power) out.push_back({term.mono - strip, term.coeff});
    return from_terms(std::move(out));
}

ParamPoly ParamPoly::substitute(int var, const mpz_class& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) {
        unsigned e = monomial_exponent(term.mono, var);
        mpz_class c;
        mpz_pow_ui(c.get_mpz_t(), value.get_mpz_t(), e);
        PackedMonomial strip = pack_monomial(var == 0 ? e : 0, var == 1 ? e : 0, var == 2 ? e : 0);
        out.push_back({term.mono - strip, term.coeff * c});
    }
    return from_terms(std::move(out));
}

mpq_class ParamPoly::evaluate(const mpq_class& q, const mpq_class& t, const mpq_class& a) const {
    auto power = [](const mpq_class& base, unsigned e) {
        mpq_class r = 1;
        for (unsigned i = 0; i < e; ++i) r *= base;
        return r;
    };
    mpq_class sum = 0;
    for (const auto& term : terms_) {
        sum += mpq_class(term.coeff) * power(q, monomial_exponent(term.mono, 0)) *
               power(t, monomial_exponent(term.mono, 1)) * power(a, monomial_exponent(term.mono, 2));
    }
    return sum;
}

ParamPoly ParamPoly::reflect(bool q, bool t, PackedMonomial& shift) const {
    unsigned dq = q ? degree_in(0) : 0, dt = t ? degree_in(1) : 0;
    shift = pack_monomial(dq, dt, 0);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& term : terms_) {
        unsigned eq = monomial_exponent(term.mono, 0), et = monomial_exponent(term.mono, 1);
        out.push_back({pack_monomial(q ? dq - eq : eq, t ? dt - et : et, monomial_exponent(term.mono, 2)),
                       term.coeff});
    }
    return from_terms(std::move(out));
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    static const char* names[3] = {"q", "t", "a"};
    std::ostringstream out;
    bool first = true;
    for (const auto& term : terms_) {
        mpz_class c = term.coeff;
        if (c < 0) {
            out << '-';
            c = -c;
        } else if (!first) {
            out << '+';
        }
        first = false;
        bool wrote = false;
        if (c != 1 || term.mono == 0) {
            out << c.get_str();
            wrote = true;
        }
        for (int v = 0; v < 3; ++v) {
            unsigned e = monomial_exponent(term.mono, v);
            if (e == 0) continue;
            if (wrote) out << '*';
            out << names[v];
            if (e > 1) out << '^' << e;
            wrote = true;
        }
    }
    return out.str();
}

ParamPoly ParamPoly::gcd(const ParamPoly& f, const ParamPoly& g) {
    if (f.is_zero()) return normalize_sign(g);
    if (g.is_zero()) return normalize_sign(f);
    mpz_class c = zgcd(f.content(), g.content());
    if (f.is_constant() || g.is_constant()) return ParamPoly(c);

    // Split off the monomial part: gcd(x^m f1, x^n g1) = x^min(m,n) gcd(f1, g1).
    PackedMonomial mf = f.monomial_content(), mg = g.monomial_content();
    unsigned e[3];
    for (int v = 0; v < 3; ++v) e[v] = std::min(monomial_exponent(mf, v), monomial_exponent(mg, v));
    ParamPoly mono = ParamPoly::monomial(e[0], e[1], e[2], c);
    ParamPoly f1 = f.try_divide(ParamPoly::monomial(monomial_exponent(mf, 0), monomial_exponent(mf, 1),
                                                    monomial_exponent(mf, 2), f.content()))
                       .value();
    ParamPoly g1 = g.try_divide(ParamPoly::monomial(monomial_exponent(mg, 0), monomial_exponent(mg, 1),
                                                    monomial_exponent(mg, 2), g.content()))
                       .value();
    if (f1.is_constant() || g1.is_constant()) return mono;
    f1 = normalize_sign(f1);
    g1 = normalize_sign(g1);
    if (f1 == g1) return mono * f1;
    if (f1.size() >= g1.size()) {
        if (f1.try_divide(g1)) return mono * g1;
    } else if (g1.try_divide(f1)) {
        return mono * f1;
    }
    auto h = heuristic_gcd(f1, g1);
    ParamPoly core = h ? *h : prs_gcd(f1, g1);
    return mono * normalize_sign(core);
}

}  // namespace hecke
