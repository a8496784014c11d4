#include "hecke/scalar.hpp"

#include <algorithm>

#include "hecke/errors.hpp"

namespace hecke {

ExactScalar::ExactScalar(const mpq_class& c) : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {}

ExactScalar ExactScalar::fraction(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DivisionByZero("division by zero in the coefficient field");
    if (num.is_zero()) return ExactScalar();
    ParamPoly g = ParamPoly::gcd(num, den);
    ParamPoly n = num, d = den;
    if (!g.is_one()) {
        n = num.divide_exact(g);
        d = den.divide_exact(g);
    }
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    return ExactScalar(std::move(n), std::move(d), true);
}

ExactScalar ExactScalar::monomial(int eq, int et, int ea) {
    auto pos = [](int e) { return static_cast<unsigned>(std::max(e, 0)); };
    auto neg = [](int e) { return static_cast<unsigned>(std::max(-e, 0)); };
    return ExactScalar(ParamPoly::monomial(pos(eq), pos(et), pos(ea)),
                       ParamPoly::monomial(neg(eq), neg(et), neg(ea)), true);
}

ExactScalar ExactScalar::operator-() const { return ExactScalar(-num_, den_, true); }

ExactScalar& ExactScalar::operator+=(const ExactScalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        *this = fraction(num_ + o.num_, den_);
        return *this;
    }
    ParamPoly g = ParamPoly::gcd(den_, o.den_);
    if (g.is_one()) {
        ParamPoly n = num_ * o.den_ + o.num_ * den_;
        if (n.is_zero()) return *this = ExactScalar();
        // Coprime denominators: the sum is already reduced.
        *this = ExactScalar(std::move(n), den_ * o.den_, true);
        return *this;
    }
    ParamPoly d1 = den_.divide_exact(g), d2 = o.den_.divide_exact(g);
    ParamPoly n = num_ * d2 + o.num_ * d1;
    if (n.is_zero()) return *this = ExactScalar();
    ParamPoly g2 = ParamPoly::gcd(n, g);
    if (!g2.is_one()) {
        n = n.divide_exact(g2);
        d2 = o.den_.divide_exact(g2);
    } else {
        d2 = o.den_;
    }
    *this = ExactScalar(std::move(n), d1 * d2, true);
    return *this;
}

ExactScalar& ExactScalar::operator-=(const ExactScalar& o) { return *this += -o; }

ExactScalar& ExactScalar::operator*=(const ExactScalar& o) {
    if (is_zero() || o.is_zero()) return *this = ExactScalar();
    if (o.den_.is_one() && den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    ParamPoly g1 = ParamPoly::gcd(num_, o.den_), g2 = ParamPoly::gcd(o.num_, den_);
    ParamPoly n1 = g1.is_one() ? num_ : num_.divide_exact(g1);
    ParamPoly d2 = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
    ParamPoly n2 = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
    ParamPoly d1 = g2.is_one() ? den_ : den_.divide_exact(g2);
    *this = ExactScalar(n1 * n2, d1 * d2, true);
    return *this;
}

ExactScalar& ExactScalar::operator/=(const ExactScalar& o) { return *this *= o.inverse(); }

ExactScalar ExactScalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in the coefficient field");
    if (num_.sign() < 0) return ExactScalar(-den_, -num_, true);
    return ExactScalar(den_, num_, true);
}

ExactScalar ExactScalar::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    ExactScalar result(1), base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        base *= base;
        k >>= 1;
    }
    return result;
}

ExactScalar ExactScalar::invert_params(bool q, bool t) const {
    if (is_zero() || (!q && !t)) return *this;
    // Reflection is multiplicative, so coprime inputs stay coprime up to a
    // monomial; only that monomial needs cancelling.
    PackedMonomial sn, sd;
    ParamPoly n = num_.reflect(q, t, sn), d = den_.reflect(q, t, sd);
    unsigned up[3], down[3];
    for (int v = 0; v < 3; ++v) {
        int e = static_cast<int>(monomial_exponent(sd, v)) - static_cast<int>(monomial_exponent(sn, v));
        up[v] = e > 0 ? e : 0;
        down[v] = e < 0 ? -e : 0;
    }
    n = n.times_monomial(pack_monomial(up[0], up[1], up[2]));
    d = d.times_monomial(pack_monomial(down[0], down[1], down[2]));
    PackedMonomial mn = n.monomial_content(), md = d.monomial_content();
    unsigned common[3];
    for (int v = 0; v < 3; ++v) common[v] = std::min(monomial_exponent(mn, v), monomial_exponent(md, v));
    ParamPoly c = ParamPoly::monomial(common[0], common[1], common[2]);
    if (!c.is_one()) {
        n = n.divide_exact(c);
        d = d.divide_exact(c);
    }
    if (d.sign() < 0) {
        n = -n;
        d = -d;
    }
    return ExactScalar(std::move(n), std::move(d), true);
}

namespace {

ExactScalar substitute_a_poly(const ParamPoly& p, const ExactScalar& value) {
    unsigned deg = p.degree_in(2);
    ExactScalar acc;
    for (unsigned k = deg + 1; k-- > 0;) {
        acc *= value;
        acc += ExactScalar(p.coefficient_of(2, k));
    }
    return acc;
}

}  // namespace

ExactScalar ExactScalar::substitute_a(const ExactScalar& value) const {
    if (!num_.uses(2) && !den_.uses(2)) return *this;
    ExactScalar d = substitute_a_poly(den_, value);
    if (d.is_zero()) throw PoleError("denominator " + den_string() + " vanishes at a = " + value.to_string());
    return substitute_a_poly(num_, value) / d;
}

mpq_class ExactScalar::evaluate(const mpq_class& q0, const mpq_class& t0, const mpq_class& a0) const {
    mpq_class d = den_.evaluate(q0, t0, a0);
    if (d == 0)
        throw PoleError("denominator " + den_string() + " vanishes at q=" + q0.get_str() + ", t=" + t0.get_str() +
                        ", a=" + a0.get_str());
    mpq_class r = num_.evaluate(q0, t0, a0) / d;
    r.canonicalize();
    return r;
}

std::string ExactScalar::to_string() const {
    if (den_.is_one()) return num_string();
    return num_string() + "/" + den_string();
}

ExactScalar qpochhammer(const ExactScalar& x, int m) {
    ExactScalar r(1), qj(1);
    for (int j = 0; j < m; ++j) {
        r *= ExactScalar(1) - x * qj;
        qj *= ExactScalar::q();
    }
    return r;
}

SeriesTable euler_series(SeriesDirection direction, int degree) {
    SeriesTable table;
    for (int m = 0; m <= degree; ++m) {
        ExactScalar inv = qpochhammer(ExactScalar::q(), m).inverse();
        if (direction == SeriesDirection::product) {
            ExactScalar sign(m % 2 == 0 ? 1 : -1);
            table.coefficients.push_back(sign * ExactScalar::monomial(m * (m - 1) / 2, 0) * inv);
        } else {
            table.coefficients.push_back(inv);
        }
    }
    return table;
}

SeriesTable series_product(const SeriesTable& x, const SeriesTable& y) {
    int degree = std::min(x.degree(), y.degree());
    SeriesTable out;
    for (int m = 0; m <= degree; ++m) {
        ExactScalar c;
        for (int j = 0; j <= m; ++j) c += x[j] * y[m - j];
        out.coefficients.push_back(c);
    }
    return out;
}

SeriesTable rho_series(SeriesDirection direction, int degree) {
    if (degree < 0) throw DomainError("series degree must be non-negative");
    SeriesTable euler = euler_series(direction, degree);
    // (au;q)_inf has the same coefficients times a^m.
    SeriesTable scaled;
    for (int m = 0; m <= degree; ++m) scaled.coefficients.push_back(euler[m] * ExactScalar::monomial(0, 0, m));
    return series_product(euler, scaled);
}

}  // namespace hecke
