#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hecke/composition.hpp"
#include "hecke/multipoly.hpp"
#include "hecke/operators.hpp"

namespace hecke {

// One exact identity check; it passes iff the defect is the zero polynomial.
// Informational reports record alternative readings of a formula and never
// affect a suite verdict.
struct OperatorReport {
    std::string identity;
    int n = 0;
    std::string instance;
    MultiPoly defect;
    bool informational = false;
    bool pass() const { return defect.is_zero(); }
};

struct NumericCheck {
    std::string identity;
    int n = 0;
    std::string instance;
    std::string measured;
    std::string expected;
    double error = 0;
    double tolerance = 0;
    bool informational = false;
    bool pass() const { return error <= tolerance; }
};

struct SuiteReport {
    std::string suite;
    std::vector<OperatorReport> exact;
    std::vector<NumericCheck> numeric;

    bool pass() const;
    std::size_t failures() const;
    void append(SuiteReport other);
    void add(OperatorReport r) { exact.push_back(std::move(r)); }
    void add(NumericCheck c) { numeric.push_back(std::move(c)); }
};

nlohmann::json scalar_json(const ExactScalar& c);
nlohmann::json poly_json(const MultiPoly& f);
nlohmann::json report_json(const OperatorReport& r);
nlohmann::json report_json(const NumericCheck& c);
nlohmann::json suite_json(const SuiteReport& s);

OperatorReport compare(std::string identity, int n, std::string instance, const MultiPoly& lhs, const MultiPoly& rhs);
OperatorReport compare_scalar(std::string identity, int n, std::string instance, const ExactScalar& lhs,
                              const ExactScalar& rhs);

// Inputs for operator identities: every monomial of degree <= max_degree,
// followed by `extra` reproducible random combinations drawn from `seed`.
struct Span {
    int n = 0;
    int max_degree = 0;
    std::vector<MultiPoly> inputs;
    std::vector<std::string> labels;
};
Span monomial_span(int n, int max_degree, unsigned long long seed = 0, int extra = 0);

// Compares lhs(f) and rhs(f) over the span; the report carries the first
// failing input, or the span description when everything agrees.
OperatorReport check_on_span(std::string identity, const Span& span, const Operator& lhs, const Operator& rhs);

}  // namespace hecke
