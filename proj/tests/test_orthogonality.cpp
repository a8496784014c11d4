#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/orthogonality.hpp"

using namespace hecke;

namespace {

InnerProductConfig small(int M = 30) {
    InnerProductConfig c;
    c.lattice_cutoff = M;
    return c;
}

double as_double(const Real& x) { return x.convert_to<double>(); }

}  // namespace

TEST_CASE("Jackson integrals") {
    auto cfg = small();
    auto zero = jackson_integral([](const mpq_class&) { return Real(0); }, JacksonDomain::a_to_one, cfg);
    CHECK(zero.value == 0);
    auto lin = jackson_integral([](const mpq_class& x) { return to_real(x); }, JacksonDomain::a_to_one, cfg);
    CHECK(std::abs(as_double(lin.value)) < 1e-15);
    auto unit = jackson_integral([&cfg](const mpq_class& x) { return weight_eval(Family::V, x, cfg); },
                                 JacksonDomain::one_to_infinity, cfg);
    CHECK(std::abs(as_double(unit.value) - 0.5) < 1e-14);
    CHECK_FALSE(unit.tail_warning);
}

TEST_CASE("weights") {
    auto cfg = small();
    Real w = weight_eval(Family::U, mpq_class(1), cfg);
    Real expected = Real(1) / truncated_qpochhammer(cfg.a0, cfg.q0, cfg.product_cutoff, false);
    CHECK(as_double(boost::multiprecision::abs(w - expected)) < 1e-30);
    CHECK(weight_eval(Family::V, mpq_class(1), cfg) > 0);
    InnerProductConfig longer = cfg;
    longer.product_cutoff += 10;
    Real w1 = weight_eval(Family::V, mpq_class(8), cfg), w2 = weight_eval(Family::V, mpq_class(8), longer);
    CHECK(as_double(boost::multiprecision::abs((w1 - w2) / w2)) < 1e-15);
}

TEST_CASE("configuration is validated") {
    InnerProductConfig c;
    c.a0 = 1;
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = InnerProductConfig{};
    c.q0 = mpq_class(3, 2);
    CHECK_THROWS_AS(c.validate(), DomainError);
    c = InnerProductConfig{};
    c.k = 0;
    CHECK_THROWS_AS(c.validate(), DomainError);
}

TEST_CASE("normalization constants") {
    InnerProductConfig c;
    CHECK(norm_zero(Family::V, 1, c) == mpq_class(1, 2));
    CHECK(norm_zero(Family::V, 2, c) == mpq_class(-3, 8));
    CHECK(norm_zero(Family::U, 2, c) == mpq_class(3, 16));
    c.k = 2;
    CHECK(norm_zero(Family::U, 2, c) == mpq_class(105, 256));
}

TEST_CASE("inner products") {
    auto cfg = small(40);
    Workspace ws;
    MultiPoly one1 = MultiPoly::constant(1, ExactScalar(1));
    CHECK(std::abs(as_double(inner_product(one1, one1, Family::V, cfg)) - 0.5) < 1e-10);
    MultiPoly one2 = MultiPoly::constant(2, ExactScalar(1));
    CHECK(std::abs(as_double(inner_product(ws.EV({0, 1}), one2, Family::V, cfg))) < 1e-20);
    MultiPoly f = MultiPoly::variable(2, 0), g = MultiPoly::variable(2, 1) + one2;
    CHECK(inner_product(f, g, Family::V, cfg) == inner_product(g, f, Family::V, cfg));
}

TEST_CASE("Gram matrix at low degree") {
    auto cfg = small(40);
    Workspace ws;
    GramReport v = gram_and_norms(Family::V, 2, 2, cfg, ws);
    for (const auto& c : v.checks)
        if (!c.informational) {
            INFO(c.identity << " " << c.instance);
            CHECK(c.pass());
        }
    auto j = gram_json(v.gram, cfg);
    CHECK(j["labels"].size() == 6);
    CHECK(gram_csv(v.gram).rfind("row,col,value,tail\n", 0) == 0);
}

TEST_CASE("Delta inversion") {
    for (int k : {1, 2}) {
        auto r = delta_inversion(2, k);
        REQUIRE(r.size() == 2);
        CHECK(r[0].pass());
        CHECK_FALSE(r[1].pass());
    }
    CHECK(delta_polynomial(2, 1).size() == 3);
}
