#include <doctest.h>

#include "hecke/asc.hpp"
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

void require_green(const SuiteReport& s) {
    CHECK(!s.exact.empty());
    for (const auto& r : s.exact) {
        if (r.informational) continue;
        INFO(r.identity << " n=" << r.n << " " << r.instance << " defect " << r.defect.to_string());
        CHECK(r.pass());
    }
}

}  // namespace

TEST_CASE("V family from both pipelines") {
    Workspace ws;
    CHECK(asc_V({0, 0}, VPipeline::operator_form, ws).poly == C(2, one));
    CHECK(asc_V({0, 1}, VPipeline::series, ws).poly == X(2, {0, 1}) - C(2, one + a));
    MultiPoly expected = X(2, {1, 0}) + X(2, {0, 1}, q * (t - one) / (q * t - one)) -
                         C(2, (one + a) * (one - q * t * t) / (t * (one - q * t)));
    CHECK(asc_V({1, 0}, VPipeline::operator_form, ws).poly == expected);
}

TEST_CASE("U family from reflection and series") {
    Workspace ws;
    CHECK(asc_U({0, 0}, UPipeline::series, ws).poly == C(2, one));
    CHECK(asc_U({0, 1}, UPipeline::reflection, ws).poly == X(2, {1, 0}) - C(2, one + a));
    CHECK(asc_U({1, 0}, UPipeline::series, ws).poly == ws.EU({1, 0}));
    CHECK(EU_series_variant({1, 0}, ws) != ws.EU({1, 0}));
}

TEST_CASE("h eigen-equations") {
    Workspace ws;
    CHECK(apply_h(2, ws.EV({0, 1})) == ws.EV({0, 1}).scaled(q));
    CHECK(apply_h(2, C(2, one)) == C(2, t.inverse()));
    CHECK(eigen_replay_V({1, 0}, ws).pass());
    CHECK(eigen_replay_V({1, 0, 1}, ws).pass());
}

TEST_CASE("special evaluations") {
    Workspace ws;
    CHECK(eval_special({0, 1}, SpecialPoint::one, ws) == -a);
    CHECK(eval_special({0, 1}, SpecialPoint::a_point, ws) == ExactScalar(-1));
    CHECK(eval_special({0, 0}, SpecialPoint::one, ws) == one);
}

TEST_CASE("shifted polynomial and its evaluations") {
    Workspace ws;
    CHECK(shifted_G({0, 1}, ws) == X(2, {0, 1}) - C(2, t.inverse()));
    CHECK(shifted_G({0, 0}, ws) == C(2, one));
    const MultiPoly& g = ws.G({0, 1});
    CHECK(g.evaluate(spectral_vector({0, 0})).is_zero());
    CHECK(g.evaluate(spectral_vector({1, 0})).is_zero());
    CHECK(!g.evaluate(spectral_vector({0, 1})).is_zero());
    ExactScalar alpha = q * q + a;
    CHECK(sahi_evaluation({0, 1}, alpha, ws) == t.inverse() * (alpha - one));
    CHECK(sahi_evaluation({1, 1}, one, ws).is_zero());
}

TEST_CASE("generalized binomial coefficients") {
    Workspace ws;
    CHECK(qbinomial({1, 0}, {0, 1}, ws).is_zero());
    CHECK(qbinomial({2, 1}, {0, 0}, ws) == one);
    CHECK(qbinomial({1, 2}, {1, 2}, ws) == one);
    CHECK_THROWS_AS(qbinomial({0, 1}, {1, 1}, ws), DomainError);
    CHECK(sym_qbinomial({1, 0}, {0, 0}, ws) == one);
    for (const auto& r : binomial_sum_rules({2, 0}, {1, 0}, ws))
        if (!r.informational) CHECK(r.pass());
}

TEST_CASE("basis expansion recovers coefficients") {
    Workspace ws;
    MultiPoly f = ws.E({1, 1}).scaled(q) + ws.E({0, 1}).scaled(a) - C(2, one);
    auto c = expand_in_basis(f, [&ws](const Composition& k) -> const MultiPoly& { return ws.E(k); });
    CHECK(c.size() == 3);
    CHECK(c[{1, 1}] == q);
    CHECK(c[{0, 1}] == a);
    CHECK(c[{0, 0}] == -one);
}

TEST_CASE("kernels") {
    Workspace ws;
    CHECK(kernel(KernelKind::KA, 2, 0, ws).value == C(4, one));
    auto K = kernel(KernelKind::KA, 2, 1, ws);
    MultiPoly deg1(4);
    for (const auto& eta : compositions(2, 1)) {
        auto c = composition_constants(eta);
        deg1 += outer(ws.E(eta), ws.E_tilde(eta)).scaled(c.d / (c.d_prime * c.e));
    }
    CHECK(K.value - C(4, one) == deg1);
    CHECK(genfun_check(Family::V, 2, 0, ws).pass());
    CHECK(genfun_check(Family::V, 2, 1, ws).pass());
    CHECK(genfun_check(Family::U, 2, 2, ws).pass());
}

TEST_CASE("two-set helpers") {
    MultiPoly f = X(2, {1, 0}), g = X(2, {0, 2});
    MultiPoly k = outer(f, g);
    CHECK(k == X(4, {1, 0, 0, 2}));
    CHECK(swap_sets(k, 2) == X(4, {0, 2, 1, 0}));
    CHECK(act_x([](const MultiPoly& p) { return apply_T(1, 1, p); }, k, 2) == X(4, {0, 1, 0, 2}));
    CHECK(truncate_set(k + X(4, {0, 0, 0, 1}), 2, 1, 1) == X(4, {0, 0, 0, 1}));
}

TEST_CASE("symmetric V from U+") {
    Workspace ws;
    CHECK(symmetric_V({0, 1}, ws) == symmetric_V({1, 0}, ws));
    MultiPoly v = symmetric_V({1, 0}, ws);
    CHECK((v - ws.P({1, 0})).degree() <= 0);
    CHECK(symmetric_V({0, 0}, ws) == C(2, one));
    for (const auto& r : hamiltonian_comparison(2, 2)) CHECK(r.pass());
}

TEST_CASE("suites at small scale") {
    Workspace ws;
    require_green(asc_suite(2, 2, ws));
    require_green(kernel_suite(2, 2, ws));
    require_green(shifted_suite(2, 2, ws));
    require_green(symmetric_suite(2, 2, ws));
}
