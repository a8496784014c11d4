#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/scalar.hpp"

using namespace hecke;

namespace {

const ExactScalar q = ExactScalar::q();
const ExactScalar t = ExactScalar::t();
const ExactScalar a = ExactScalar::a();
const ExactScalar one(1);

ParamPoly P(const ExactScalar& s) { return s.num(); }

ExactScalar random_scalar(std::mt19937_64& rng) {
    auto random_poly = [&](int terms) {
        ParamPoly p;
        for (int i = 0; i < terms; ++i)
            p += ParamPoly::monomial(rng() % 3, rng() % 3, rng() % 2, static_cast<long>(rng() % 7) - 3);
        return p;
    };
    ParamPoly d = random_poly(1 + rng() % 3);
    if (d.is_zero()) d = ParamPoly(1);
    return ExactScalar::fraction(random_poly(1 + rng() % 4), d);
}

}  // namespace

TEST_CASE("normalize removes common factors and fixes the sign") {
    // (q^2 - q t) / q = q - t
    ExactScalar s = ExactScalar::fraction(P(q * q - q * t), P(q));
    CHECK(s.num() == P(q - t));
    CHECK(s.den().is_one());

    CHECK(ExactScalar::fraction(ParamPoly(), P(t - one)).is_zero());
    CHECK(ExactScalar::fraction(ParamPoly(), P(t - one)).den().is_one());

    ExactScalar m = ExactScalar::fraction(P(one - q * t), P(q * t - one));
    CHECK(m == ExactScalar(-1));
    CHECK(m.to_string() == "(-1)");

    CHECK_THROWS_AS(ExactScalar::fraction(P(q), ParamPoly()), DivisionByZero);
}

TEST_CASE("normalize is idempotent and strips integer content") {
    ExactScalar s = ExactScalar::fraction(P(ExactScalar(6) * q + ExactScalar(4)), ParamPoly(8));
    CHECK(s.num() == P(ExactScalar(3) * q + ExactScalar(2)));
    CHECK(s.den() == ParamPoly(4));
    CHECK(ExactScalar::fraction(s.num(), s.den()) == s);
}

TEST_CASE("multivariate gcd cancels nontrivial factors") {
    ExactScalar f = (one - q * t) * (one - q * t * t) * (q - a);
    ExactScalar g = (one - q * t * t) * (one + t) * (q - a) * (q - a);
    ExactScalar r = f / g;
    CHECK(r == (one - q * t) / ((one + t) * (q - a)));
    CHECK(r * g == f);
}

TEST_CASE("canonical text rendering") {
    ExactScalar d = one - q * t;
    CHECK(d.to_string() == "(-q*t+1)");
    CHECK((q * (t - one) / (q * t - one)).to_string() == "(q*t-q)/(q*t-1)");
    CHECK(ExactScalar(0).to_string() == "(0)");
    CHECK((ExactScalar(2) * q * q * t - a).to_string() == "(2*q^2*t-a)");
}

TEST_CASE("parameter inversion") {
    CHECK(q.invert_params(true, true) == one / q);
    ExactScalar s = (one - t) / (one - q * t);
    ExactScalar s_tilde = s.tilde();
    CHECK(s_tilde == (one - one / t) / (one - one / (q * t)));
    CHECK(s_tilde.tilde() == s);
    CHECK(a.tilde() == a);
    CHECK((q / t).invert_params(true, false) == one / (q * t));
}

TEST_CASE("numeric evaluation") {
    mpq_class half(1, 2), quarter(1, 4), two(2);
    CHECK(((one - t) / (one - q * t)).evaluate(half, half, 0) == mpq_class(2, 3));
    CHECK_THROWS_AS((one / (one - q * t)).evaluate(two, half, 0), PoleError);
    CHECK((q * (t - one) / (q * t - one)).evaluate(half, quarter, 0) == mpq_class(3, 7));
}

TEST_CASE("specialising a") {
    ExactScalar s = (one + a) / (one - q * a) + a * t;
    CHECK(s.substitute_a(ExactScalar(0)) == one);
    CHECK_THROWS_AS((one / a).substitute_a(ExactScalar(0)), PoleError);
}

TEST_CASE("field axioms and inversion homomorphism on random samples") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        ExactScalar x = random_scalar(rng), y = random_scalar(rng), z = random_scalar(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == ExactScalar(0));
        if (!x.is_zero()) CHECK(x * x.inverse() == one);
        CHECK((x * y).tilde() == x.tilde() * y.tilde());
        CHECK((x + y).tilde() == x.tilde() + y.tilde());
        CHECK(x.tilde().tilde() == x);
        CHECK(ExactScalar::fraction(x.num(), x.den()) == x);
    }
}

TEST_CASE("rho series coefficients") {
    SeriesTable prod = rho_series(SeriesDirection::product, 4);
    SeriesTable recip = rho_series(SeriesDirection::reciprocal, 4);
    CHECK(prod[0] == one);
    CHECK(prod[1] == -(one + a) / (one - q));
    CHECK(recip[1] == (one + a) / (one - q));
    SeriesTable unit = series_product(prod, recip);
    CHECK(unit[0] == one);
    for (int m = 1; m <= 4; ++m) CHECK(unit[m].is_zero());
}

TEST_CASE("rho series agrees with the truncated product numerically") {
    // prod_{j<J} (1 - u q0^j)(1 - a0 u q0^j), expanded exactly up to u^4.
    const int degree = 4, J = 110;  // 2^-110 < 1e-30
    mpq_class q0(1, 2), a0(-1, 3);
    const mpq_class tol("1/100000000000000000000");
    std::vector<mpq_class> poly(degree + 1, 0);
    poly[0] = 1;
    mpq_class qj = 1;
    for (int j = 0; j < J; ++j) {
        for (mpq_class root : {qj, mpq_class(a0 * qj)}) {
            for (int m = degree; m >= 1; --m) poly[m] -= root * poly[m - 1];
        }
        qj *= q0;
    }
    SeriesTable prod = rho_series(SeriesDirection::product, degree);
    for (int m = 0; m <= degree; ++m) {
        mpq_class exact = prod[m].evaluate(q0, 0, a0);
        mpq_class diff = abs(exact - poly[m]);
        CHECK(diff <= tol * abs(exact));
    }
}
