// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>

#include "hecke/asc.hpp"
#include "hecke/orthogonality.hpp"
#include "hecke/relations.hpp"

using namespace hecke;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::function<std::vector<SuiteReport>()> run;
};

// identity -> (informational checks that hold, that fail)
std::map<std::string, std::pair<int, int>> informational;

void collect_informational(const SuiteReport& s) {
    for (const auto& r : s.exact)
        if (r.informational) ++(r.pass() ? informational[r.identity].first : informational[r.identity].second);
    for (const auto& c : s.numeric)
        if (c.informational) ++(c.pass() ? informational[c.identity].first : informational[c.identity].second);
}

std::string first_failure(const SuiteReport& s) {
    for (const auto& r : s.exact)
        if (!r.informational && !r.pass()) return r.identity + " n=" + std::to_string(r.n) + " " + r.instance;
    for (const auto& c : s.numeric)
        if (!c.informational && !c.pass())
            return c.identity + " n=" + std::to_string(c.n) + " " + c.instance + " error " + std::to_string(c.error);
    return "";
}

InnerProductConfig numeric_config(int k) {
    InnerProductConfig c;
    c.k = k;
    return c;
}

std::vector<SuiteReport> all_suites() {
    std::vector<SuiteReport> out;
    for (int n : {2, 3}) out.push_back(relation_suite(n, 4));
    for (int n : {1, 2, 3}) {
        Workspace ws;
        out.push_back(macdonald_suite(n, 4, ws));
    }
    for (auto [n, d] : {std::pair{2, 3}, std::pair{3, 2}}) {
        Workspace ws;
        out.push_back(asc_suite(n, d, ws));
        out.push_back(kernel_suite(n, d, ws));
    }
    for (int n : {2, 3}) {
        out.push_back(isomorphism_suite(Isomorphism::phi, n, 3));
        out.push_back(isomorphism_suite(Isomorphism::psi_a, n, 3));
        Workspace ws;
        out.push_back(shifted_suite(n, 3, ws));
        out.push_back(symmetric_suite(n, 3, ws));
    }
    for (int k : {1, 2}) {
        Workspace ws;
        out.push_back(orthogonality_suite(numeric_config(k), ws, 3));
    }
    return out;
}

std::string dump_all(const std::vector<SuiteReport>& reports) {
    std::string s;
    for (const auto& r : reports) s += suite_json(r).dump() + "\n";
    return s;
}

}  // namespace

int main() {
    std::vector<Criterion> criteria = {
        {1, "relation suite, degree <= 4, n = 2,3",
         [] { return std::vector{relation_suite(2, 4), relation_suite(3, 4)}; }},
        {2, "Macdonald suite, |eta| <= 4, n <= 3",
         [] {
             std::vector<SuiteReport> out;
             Workspace ws;
             for (int n : {1, 2, 3}) out.push_back(macdonald_suite(n, 4, ws));
             return out;
         }},
        {3, "ASC suite, |eta| <= 3 at n = 2 and <= 2 at n = 3",
         [] {
             Workspace ws;
             return std::vector{asc_suite(2, 3, ws), asc_suite(3, 2, ws)};
         }},
        {4, "kernel suite, degree 3 at n = 2 and 2 at n = 3",
         [] {
             Workspace ws;
             return std::vector{kernel_suite(2, 3, ws), kernel_suite(3, 2, ws)};
         }},
        {5, "isomorphism suite, degree <= 3, n = 2,3",
         [] {
             std::vector<SuiteReport> out;
             for (int n : {2, 3}) {
                 out.push_back(isomorphism_suite(Isomorphism::phi, n, 3));
                 out.push_back(isomorphism_suite(Isomorphism::psi_a, n, 3));
             }
             return out;
         }},
        {6, "shifted and binomial suite, |eta| <= 3, n <= 3",
         [] {
             std::vector<SuiteReport> out;
             Workspace ws;
             for (int n : {1, 2, 3}) out.push_back(shifted_suite(n, 3, ws));
             return out;
         }},
        {7, "symmetric reduction suite, degree <= 3, n = 2,3",
         [] {
             Workspace ws;
             return std::vector{symmetric_suite(2, 3, ws), symmetric_suite(3, 3, ws)};
         }},
        {8, "numeric orthogonality, n = 2, q0 = 1/2, k = 1,2, a0 = -1, M = 60, J = 120",
         [] {
             std::vector<SuiteReport> out;
             for (int k : {1, 2}) {
                 Workspace ws;
                 out.push_back(orthogonality_suite(numeric_config(k), ws, 3));
             }
             return out;
         }},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        std::string why;
        std::size_t checks = 0;
        try {
            for (const auto& r : c.run()) {
                checks += r.exact.size() + r.numeric.size();
                collect_informational(r);
                if (why.empty()) why = first_failure(r);
            }
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = why.empty();
        all_pass = all_pass && ok;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << checks
                  << " checks, " << std::fixed << std::setprecision(1) << secs << "s)";
        if (!ok) std::cout << " first failure: " << why;
        std::cout << '\n';
    }

    {
        std::string why;
        try {
            std::string first = dump_all(all_suites()), second = dump_all(all_suites());
            if (first != second) why = "reports differ between runs";
        } catch (const std::exception& e) {
            why = std::string("exception: ") + e.what();
        }
        all_pass = all_pass && why.empty();
        std::cout << (why.empty() ? "PASS" : "FAIL") << " criterion 9: byte-identical JSON reports on repeated runs";
        if (!why.empty()) std::cout << " (" << why << ")";
        std::cout << '\n';
    }

    for (const auto& [identity, counts] : informational)
        std::cout << "INFO " << identity << ": " << counts.first << " hold, " << counts.second << " fail\n";
    return all_pass ? 0 : 1;
}
