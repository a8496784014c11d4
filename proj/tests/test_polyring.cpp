#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/multipoly.hpp"

using namespace hecke;

namespace {

const ExactScalar q = ExactScalar::q();
const ExactScalar t = ExactScalar::t();

MultiPoly X(int n, std::vector<int> e, ExactScalar c = ExactScalar(1)) { return MultiPoly::monomial(n, e, c); }

MultiPoly random_poly(std::mt19937_64& rng, int n, int max_deg) {
    MultiPoly f(n);
    for (int k = 0; k < 4; ++k) {
        std::vector<int> e(n);
        for (auto& x : e) x = static_cast<int>(rng() % (max_deg + 1));
        ExactScalar c = ExactScalar(static_cast<long>(rng() % 5) - 2) + q * ExactScalar(static_cast<long>(rng() % 3)) /
                                                                          (ExactScalar(1) - t * ExactScalar(rng() % 2 ? 1 : 0) * q);
        f.add_term(ExponentVector::from(e), c);
    }
    return f;
}

}  // namespace

TEST_CASE("variable permutations") {
    CHECK(X(2, {2, 1}).permute_vars({1, 0}) == X(2, {1, 2}));
    CHECK(X(3, {1, 0, 2}).reverse_vars() == X(3, {2, 0, 1}));
    MultiPoly f = X(3, {1, 2, 0}) + X(3, {0, 0, 3}, q);
    CHECK(f.permute_vars({0, 1, 2}) == f);
}

TEST_CASE("scaling a single variable") {
    CHECK(X(2, {2, 0}).scale_var(0, q) == X(2, {2, 0}, q * q));
    CHECK(X(2, {1, 0}).scale_var(1, q) == X(2, {1, 0}));
    MultiPoly f = X(2, {3, 1}, t) + X(2, {0, 2});
    CHECK(f.scale_var(0, q.inverse()).scale_var(0, q) == f);
}

TEST_CASE("exact division") {
    MultiPoly x1 = MultiPoly::variable(2, 0), x2 = MultiPoly::variable(2, 1);
    CHECK(exact_divide(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2);
    CHECK(exact_divide(x1 * x2, x1) == x2);
    CHECK_THROWS_AS(exact_divide(x1 + x2, x1), DivisibilityError);
}

TEST_CASE("involutions") {
    ExactScalar c = (ExactScalar(1) - t) / (ExactScalar(1) - q * t);
    MultiPoly f = X(2, {0, 1}, c);
    CHECK(f.tilde().tilde() == f);
    CHECK(f.tilde() == X(2, {0, 1}, c.tilde()));
    CHECK(X(3, {1, 0, 0}).hat() == X(3, {0, 0, 1}));
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        MultiPoly g = random_poly(rng, 3, 3);
        CHECK(g.hat().hat() == g);
        CHECK(g.hat() == g.reverse_vars().tilde());
    }
}

TEST_CASE("leading term under the composition order") {
    ExactScalar c = q / (ExactScalar(1) + t);
    auto lt = leading_term(X(2, {1, 0}) + X(2, {0, 1}, c));
    CHECK(lt.exp.to_vector(2) == std::vector<int>{1, 0});
    CHECK(lt.coeff.is_one());
    auto lc = leading_term(MultiPoly::constant(2, ExactScalar(5)));
    CHECK(lc.exp.to_vector(2) == std::vector<int>{0, 0});
    CHECK(lc.coeff == ExactScalar(5));
    CHECK(leading_term(X(2, {1, 1})).exp.to_vector(2) == std::vector<int>{1, 1});
    CHECK_THROWS_AS(leading_term(MultiPoly(2)), DomainError);
}

TEST_CASE("ring axioms and homomorphism properties on random samples") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 15; ++trial) {
        MultiPoly f = random_poly(rng, 3, 2), g = random_poly(rng, 3, 2), h = random_poly(rng, 3, 2);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK(f - f == MultiPoly(3));
        if (!g.is_zero()) CHECK(exact_divide(f * g, g) == f);
        std::vector<int> perm{2, 0, 1};
        CHECK((f * g).permute_vars(perm) == f.permute_vars(perm) * g.permute_vars(perm));
        CHECK(f.scale_var(1, q).scale_var(1, q.inverse()) == f);
    }
}
