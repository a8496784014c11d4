#include <doctest.h>

#include <random>

#include "hecke/composition.hpp"
#include "hecke/errors.hpp"
#include "hecke/operators.hpp"

using namespace hecke;

namespace {

const ExactScalar q = ExactScalar::q();
const ExactScalar t = ExactScalar::t();
const ExactScalar a = ExactScalar::a();
const ExactScalar one(1);

MultiPoly X(int n, std::vector<int> e, ExactScalar c = ExactScalar(1)) { return MultiPoly::monomial(n, e, c); }
MultiPoly C(int n, ExactScalar c) { return MultiPoly::constant(n, c); }
ExactScalar tpow(int k) { return ExactScalar::monomial(0, k); }

MultiPoly random_poly(std::mt19937_64& rng, int n, int max_deg) {
    MultiPoly f(n);
    for (int k = 0; k < 3; ++k) {
        std::vector<int> e(n);
        int budget = static_cast<int>(rng() % (max_deg + 1));
        for (int j = 0; j < n && budget > 0; ++j) {
            e[j] = static_cast<int>(rng() % (budget + 1));
            budget -= e[j];
        }
        f.add_term(ExponentVector::from(e), ExactScalar(static_cast<long>(rng() % 7) - 3));
    }
    return f;
}

}  // namespace

TEST_CASE("Demazure-Lustig generators") {
    CHECK(apply_T(1, 1, X(2, {1, 0})) == X(2, {0, 1}));
    CHECK(apply_T(1, 1, X(2, {0, 1})) == X(2, {1, 0}, t) + X(2, {0, 1}, t - one));
    CHECK(apply_T(1, 1, C(2, one)) == C(2, t));
    std::mt19937_64 rng(3);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            MultiPoly f = random_poly(rng, n, 4);
            for (int i = 0; i < n; ++i) {
                CHECK(apply_T(i, -1, apply_T(i, 1, f)) == f);
                MultiPoly tf = apply_T(i, 1, f);
                CHECK(apply_T(i, 1, tf) == tf.scaled(t - one) + f.scaled(t));
            }
        }
    }
    CHECK_THROWS_AS(apply_T(1, 1, C(1, one)), DomainError);
}

TEST_CASE("affine generator agrees with its divided-difference form") {
    for (int n = 2; n <= 3; ++n)
        for (const auto& eta : compositions_up_to(n, 4)) {
            MultiPoly m = MultiPoly::monomial(n, eta, one);
            CHECK(apply_T(0, 1, m) == apply_T0_divided(m));
        }
}

TEST_CASE("omega") {
    CHECK(apply_omega(1, X(2, {1, 0})) == X(2, {0, 1}, q));
    CHECK(apply_omega(1, X(2, {0, 1})) == X(2, {1, 0}));
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 8; ++trial) {
        MultiPoly f = random_poly(rng, 3, 4);
        CHECK(apply_omega(-1, apply_omega(1, f)) == f);
        CHECK(apply_omega(1, apply_omega(-1, f)) == f);
    }
}

TEST_CASE("Cherednik operators") {
    for (int n = 1; n <= 3; ++n)
        for (int i = 1; i <= n; ++i) CHECK(apply_Y(i, 1, C(n, one)) == C(n, tpow(1 - i)));
    CHECK(apply_Y(1, 1, X(2, {0, 1})) == X(2, {0, 1}, t.inverse()));
    CHECK(apply_Y(1, 1, X(2, {1, 0})) == X(2, {1, 0}, q) + X(2, {0, 1}, q * (one - t.inverse())));
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 6; ++trial) {
        MultiPoly f = random_poly(rng, 3, 3);
        for (int i = 1; i <= 3; ++i) CHECK(apply_Y(i, -1, apply_Y(i, 1, f)) == f);
    }
}

TEST_CASE("Dunkl operators") {
    for (int i = 1; i <= 2; ++i) {
        CHECK(apply_D(i, C(2, one)).is_zero());
        CHECK(apply_scriptD(i, C(2, one)).is_zero());
    }
    CHECK(apply_D(1, X(1, {1})) == C(1, one - q));
    std::mt19937_64 rng(8);
    for (int n = 1; n <= 3; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            MultiPoly f = random_poly(rng, n, 3);
            for (int i = 1; i <= n; ++i) {
                MultiPoly s = apply_scriptD(i, f);
                CHECK(s == apply_scriptD_hat_form(i, f));
                CHECK(s == apply_scriptD_product_form(i, f));
                if (!f.is_zero() && f.degree() > 0) CHECK(apply_D(i, f).degree() < f.degree());
            }
        }
    }
}

TEST_CASE("degree-raising operators") {
    CHECK(apply_e(1, C(2, one)) == X(2, {1, 0}, t) + X(2, {0, 1}, t - one));
    CHECK(apply_e(2, C(2, one)) == X(2, {0, 1}));
    ExactScalar ainv = a.inverse();
    CHECK(apply_bigE(2, C(2, one)) == C(2, one + ainv) - X(2, {0, 1}, ainv));
    CHECK(apply_bigE(1, C(2, one)) == C(2, (one + ainv) * t) - (X(2, {1, 0}, t) + X(2, {0, 1}, t - one)).scaled(ainv));
    CHECK(apply_raise(Raise::Phi1, C(2, one)) == X(2, {0, 1}));
    CHECK(apply_raise(Raise::Phi1, X(2, {0, 1})) == X(2, {1, 1}));
    CHECK(apply_lower(Lower::Psi1, C(2, one)).is_zero());
    CHECK(apply_lower(Lower::Psi2, C(2, one)).is_zero());
    CHECK(apply_lower_adjoint(C(2, one)) == (C(2, one + ainv) - X(2, {0, 1}, ainv)).scaled(-q * t));
}

TEST_CASE("commuting families") {
    std::mt19937_64 rng(9);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            MultiPoly f = random_poly(rng, n, 2);
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    CHECK(apply_Y(i, 1, apply_Y(j, 1, f)) == apply_Y(j, 1, apply_Y(i, 1, f)));
                    CHECK(apply_D(i, apply_D(j, f)) == apply_D(j, apply_D(i, f)));
                    CHECK(apply_e(i, apply_e(j, f)) == apply_e(j, apply_e(i, f)));
                    CHECK(apply_bigE(i, apply_bigE(j, f)) == apply_bigE(j, apply_bigE(i, f)));
                    CHECK(apply_h(i, apply_h(j, f)) == apply_h(j, apply_h(i, f)));
                }
        }
    }
}

TEST_CASE("symmetrizer") {
    for (int n = 1; n <= 4; ++n) CHECK(apply_uplus(C(n, one)) == C(n, t_factorial(n)));
    std::mt19937_64 rng(10);
    for (int n = 2; n <= 3; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            MultiPoly u = apply_uplus(random_poly(rng, n, 3));
            CHECK(u.is_symmetric());
            for (int i = 1; i < n; ++i) CHECK(apply_T(i, 1, u) == u.scaled(t));
        }
    }
    CHECK(bubble_sort_words(3).size() == 6);
    CHECK_THROWS_AS(apply_uplus(C(6, one)), SizeError);
}

TEST_CASE("Hamiltonians") {
    for (int i = 1; i <= 3; ++i) CHECK(apply_h(i, C(3, one)) == C(3, tpow(1 - i)));
    MultiPoly ev = X(2, {0, 1}) - C(2, one + a);
    CHECK(apply_h(2, ev) == ev.scaled(q));
}
