#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/macdonald.hpp"
#include "hecke/operators.hpp"

using namespace hecke;

namespace {

const ExactScalar q = ExactScalar::q();
const ExactScalar t = ExactScalar::t();
const ExactScalar one(1);

MultiPoly X(int n, std::vector<int> e, ExactScalar c = ExactScalar(1)) { return MultiPoly::monomial(n, e, c); }

void require_green(const SuiteReport& s) {
    for (const auto& r : s.exact) {
        if (r.informational) continue;
        INFO(r.identity << " " << r.instance << " defect " << r.defect.to_string());
        CHECK(r.pass());
    }
}

}  // namespace

TEST_CASE("non-symmetric Macdonald polynomials in two variables") {
    Workspace ws;
    CHECK(ws.E({0, 0}) == MultiPoly::constant(2, one));
    CHECK(ws.E({0, 1}) == X(2, {0, 1}));
    CHECK(ws.E({1, 0}) == X(2, {1, 0}) + X(2, {0, 1}, q * (t - one) / (q * t - one)));
    auto r = nonsym_macdonald({1, 0}, Orientation::inverted, ws);
    CHECK(r.poly == ws.E({1, 0}).tilde());
    CHECK(r.spectral[0] == q.inverse());
}

TEST_CASE("principal specializations") {
    Workspace ws;
    CHECK(principal_specialization({0, 1}, ws) == t);
    CHECK(principal_specialization({0, 0, 0}, ws) == one);
    CHECK(principal_specialization({1, 0}, ws) == (one - q * t * t) / (one - q * t));
    CHECK(principal_value_check({2, 1, 0}, ws) == principal_value_P({2, 1, 0}));
}

TEST_CASE("symmetric Macdonald polynomials") {
    Workspace ws;
    CHECK(sym_macdonald({0, 0}, ws) == MultiPoly::constant(2, one));
    CHECK(sym_macdonald({1, 1}, ws) == X(2, {1, 1}));
    CHECK(sym_macdonald({1, 0}, ws) == X(2, {1, 0}) + X(2, {0, 1}));
    MultiPoly p = sym_macdonald({2, 1, 0}, ws);
    CHECK(p.is_symmetric());
    CHECK_THROWS_AS(ws.P({0, 1}), DomainError);
}

TEST_CASE("operator-polynomial replay at eta=(1,0)") {
    Workspace ws;
    auto r = thm11_replay({1, 0}, ws);
    CHECK(r.pass());
    CHECK(ws.e_word({1, 0}) == apply_e(1, MultiPoly::constant(2, one)));
    CHECK(ws.e_word({1, 1}) == apply_e(2, apply_e(1, MultiPoly::constant(2, one))));
}

TEST_CASE("raising and lowering constants") {
    Workspace ws;
    auto rs = raising_lowering_replay({0, 1}, ws);
    CHECK(rs.size() == 6);
    for (const auto& r : rs)
        if (!r.informational) CHECK(r.pass());
    CHECK(apply_raise(Raise::Phi1, ws.E({0, 1})) == X(2, {1, 1}));
}

TEST_CASE("macdonald suite at small scale") {
    Workspace ws;
    require_green(macdonald_suite(2, 3, ws));
    require_green(macdonald_suite(3, 2, ws));
}
