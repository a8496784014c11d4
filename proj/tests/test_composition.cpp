#include <doctest.h>

#include "hecke/composition.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

const ExactScalar q = ExactScalar::q();
const ExactScalar t = ExactScalar::t();
const ExactScalar one(1);

ExactScalar tpow(int k) { return ExactScalar::monomial(0, k); }

}  // namespace

TEST_CASE("composition order") {
    CHECK(comp_less({0, 1}, {1, 0}));
    CHECK(comp_less({1, 1}, {2, 0}));
    CHECK_FALSE(comp_less({1, 0}, {1, 0}));
    CHECK_FALSE(comp_less({1, 0}, {0, 1}));
    CHECK_FALSE(comp_less({1, 0}, {2, 0}));
}

TEST_CASE("composition order is a strict partial order") {
    for (int n = 1; n <= 3; ++n) {
        for (int d = 0; d <= 5; ++d) {
            auto shell = compositions(n, d);
            for (const auto& x : shell) {
                CHECK_FALSE(comp_less(x, x));
                for (const auto& y : shell) {
                    if (!comp_less(x, y)) continue;
                    CHECK_FALSE(comp_less(y, x));
                    for (const auto& z : shell)
                        if (comp_less(y, z)) CHECK(comp_less(x, z));
                }
            }
        }
    }
}

TEST_CASE("spectral vectors") {
    auto s = spectral_vector({0, 1});
    CHECK(s[0] == tpow(-1));
    CHECK(s[1] == q);
    auto z = spectral_vector({0, 0, 0});
    CHECK(z[0] == one);
    CHECK(z[1] == tpow(-1));
    CHECK(z[2] == tpow(-2));
    auto r = spectral_vector({1, 0});
    CHECK(r[0] == q);
    CHECK(r[1] == tpow(-1));
    for (const auto& eta : compositions_up_to(3, 3)) {
        ExactScalar prod(1);
        for (const auto& x : spectral_vector(eta)) prod *= x;
        CHECK(prod == ExactScalar::monomial(size_of(eta), -3));
    }
}

TEST_CASE("node constants") {
    auto c = composition_constants({1, 0});
    CHECK(c.d == one - q * t);
    CHECK(c.d_prime == one - q);
    CHECK(c.e == one - q * t * t);
    CHECK(c.a_stat == 0);
    CHECK(c.l_stat == 0);
    CHECK(c.lprime_stat == 0);
    auto c2 = composition_constants({0, 1});
    CHECK(c2.d == one - q * t * t);
    CHECK(c2.d_prime == one - q * t);
    CHECK(c2.e == one - q * t * t);
    CHECK(c2.l_stat == 1);
    CHECK(c2.lprime_stat == 0);
    auto c0 = composition_constants({0, 0, 0});
    CHECK(c0.d.is_one());
    CHECK(c0.d_prime.is_one());
    CHECK(c0.e.is_one());
}

TEST_CASE("alpha coefficients") {
    CHECK(alpha_coefficient({1, 0}) == t);
    CHECK(alpha_coefficient({0, 1}) == one);
    CHECK(alpha_coefficient({0, 0, 0}) == one);
    for (int n = 1; n <= 4; ++n)
        for (const auto& eta : compositions_up_to(n, 4)) CHECK(alpha_coefficient(eta) == alpha_coefficient_from_stats(eta));
}

TEST_CASE("index maps and minimal length") {
    CHECK(phi_map({0, 0}) == Composition{0, 1});
    CHECK(psi_map({0, 1}) == Composition{0, 0});
    CHECK(swap_map({2, 0, 1}, 1) == Composition{0, 2, 1});
    CHECK_THROWS_AS(psi_map({1, 0}), DomainError);
    CHECK(min_perm_length({1, 0}) == 0);
    CHECK(min_perm_length({0, 1}) == 1);
    CHECK(min_perm_length({0, 1, 1}) == 2);
}

TEST_CASE("Phi and swap recursions for the node constants") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& eta : compositions_up_to(n, 5)) {
            auto sv = spectral_vector(eta);
            auto c = composition_constants(eta);
            Composition p = phi_map(eta);
            auto cp = composition_constants(p);
            ExactScalar tb1 = sv[0];
            CHECK(cp.d / c.d == one - q * tpow(n) * tb1);
            CHECK(cp.e / c.e == one - q * tpow(n) * tb1);
            CHECK(cp.d_prime / c.d_prime == one - q * tpow(n - 1) * tb1);
            CHECK(cp.a_stat == eta[0] + c.a_stat);
            int count = 0;
            for (int k = 1; k < n; ++k) count += eta[k] <= eta[0];
            CHECK(cp.l_stat == c.l_stat + count);
            CHECK(cp.lprime_stat == c.lprime_stat + n - 1 - count);
            CHECK(c.lprime_stat == c.b_plus);
            CHECK(c.a_stat == c.b_conj);
            for (int i = 1; i < n; ++i) {
                if (eta[i - 1] <= eta[i]) continue;
                auto cs = composition_constants(swap_map(eta, i));
                ExactScalar td = sv[i - 1] / sv[i];
                CHECK(cs.e == c.e);
                CHECK(cs.d / c.d == (one - td * t) / (one - td));
                CHECK(cs.d_prime / c.d_prime == (one - td) / (one - td / t));
                CHECK(cs.a_stat == c.a_stat);
                CHECK(cs.lprime_stat == c.lprime_stat);
                CHECK(cs.l_stat == c.l_stat + 1);
            }
        }
    }
}

TEST_CASE("composition parsing") {
    CHECK(parse_composition("2,0,1") == Composition{2, 0, 1});
    CHECK_THROWS_AS(parse_composition("2,-1"), DomainError);
    CHECK_THROWS_AS(parse_composition("a"), DomainError);
    CHECK(composition_string({2, 0, 1}) == "2,0,1");
}
