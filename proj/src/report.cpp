#include "hecke/report.hpp"

#include <algorithm>
#include <random>

namespace hecke {

bool SuiteReport::pass() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
    std::size_t bad = 0;
    for (const auto& r : exact) bad += !r.informational && !r.pass();
    for (const auto& c : numeric) bad += !c.informational && !c.pass();
    return bad;
}

void SuiteReport::append(SuiteReport other) {
    for (auto& r : other.exact) exact.push_back(std::move(r));
    for (auto& c : other.numeric) numeric.push_back(std::move(c));
}

nlohmann::json scalar_json(const ExactScalar& c) { return {{"num", c.num_string()}, {"den", c.den_string()}}; }

nlohmann::json poly_json(const MultiPoly& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, v] : f.terms()) terms.push_back({{"exp", k.to_vector(f.nvars())}, {"coeff", scalar_json(v)}});
    return {{"n", f.nvars()}, {"params", {"q", "t", "a"}}, {"terms", terms}};
}

nlohmann::json report_json(const OperatorReport& r) {
    nlohmann::json j = {{"identity", r.identity},
                        {"n", r.n},
                        {"instance", r.instance},
                        {"pass", r.pass()},
                        {"defect_terms", poly_json(r.defect)["terms"]}};
    if (r.informational) j["informational"] = true;
    return j;
}

nlohmann::json report_json(const NumericCheck& c) {
    nlohmann::json j = {{"identity", c.identity}, {"n", c.n},
                        {"instance", c.instance}, {"pass", c.pass()},
                        {"measured", c.measured}, {"expected", c.expected},
                        {"error", c.error},       {"tolerance", c.tolerance}};
    if (c.informational) j["informational"] = true;
    return j;
}

nlohmann::json suite_json(const SuiteReport& s) {
    nlohmann::json exact = nlohmann::json::array(), numeric = nlohmann::json::array();
    for (const auto& r : s.exact) exact.push_back(report_json(r));
    for (const auto& c : s.numeric) numeric.push_back(report_json(c));
    nlohmann::json j = {{"suite", s.suite}, {"pass", s.pass()}, {"failures", s.failures()}, {"exact", exact}};
    if (!s.numeric.empty()) j["numeric"] = numeric;
    return j;
}

OperatorReport compare(std::string identity, int n, std::string instance, const MultiPoly& lhs, const MultiPoly& rhs) {
    return {std::move(identity), n, std::move(instance), lhs - rhs};
}

OperatorReport compare_scalar(std::string identity, int n, std::string instance, const ExactScalar& lhs,
                              const ExactScalar& rhs) {
    return {std::move(identity), n, std::move(instance), MultiPoly::constant(std::max(n, 1), lhs - rhs)};
}

Span monomial_span(int n, int max_degree, unsigned long long seed, int extra) {
    Span s{n, max_degree, {}, {}};
    for (const auto& eta : compositions_up_to(n, max_degree)) {
        s.inputs.push_back(MultiPoly::monomial(n, eta));
        s.labels.push_back("x^(" + composition_string(eta) + ")");
    }
    std::mt19937_64 rng(seed);
    const auto& monos = s.inputs;
    std::size_t count = monos.size();
    for (int r = 0; r < extra; ++r) {
        MultiPoly f(n);
        for (int k = 0; k < 4; ++k) {
            long c = static_cast<long>(rng() % 7) - 3;
            f += monos[rng() % count].scaled(ExactScalar(c == 0 ? 1 : c));
        }
        s.inputs.push_back(f);
        s.labels.push_back("random#" + std::to_string(r) + " seed " + std::to_string(seed));
    }
    return s;
}

OperatorReport check_on_span(std::string identity, const Span& span, const Operator& lhs, const Operator& rhs) {
    for (std::size_t k = 0; k < span.inputs.size(); ++k) {
        MultiPoly d = lhs(span.inputs[k]) - rhs(span.inputs[k]);
        if (!d.is_zero()) return {std::move(identity), span.n, "on " + span.labels[k], d};
    }
    return {std::move(identity), span.n, "all inputs of degree <= " + std::to_string(span.max_degree),
            MultiPoly(span.n)};
}

}  // namespace hecke
