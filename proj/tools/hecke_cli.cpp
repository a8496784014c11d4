#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hecke/asc.hpp"
#include "hecke/errors.hpp"
#include "hecke/orthogonality.hpp"
#include "hecke/relations.hpp"

using namespace hecke;
using nlohmann::json;

namespace {

struct RunConfig {
    std::string command;
    std::string family = "E";
    int n = 2;
    std::string eta, nu, lambda;
    std::string map;
    int max_degree = 2;
    std::string suite = "all";
    std::string q = "1/2", a = "-1";
    int k = 1, M = 60, J = 120;
    double tol = 1e-8;
    std::string format = "json";
    unsigned long long seed = 0;
    bool cross_check = false;
    std::string out;
};

[[noreturn]] void usage(const std::string& why) { throw DomainError(why); }

mpq_class parse_rational(const std::string& s, const char* flag) {
    mpq_class r;
    if (s.empty() || r.set_str(s, 10) != 0) usage(std::string("invalid rational for ") + flag + ": '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) usage(std::string("zero denominator in ") + flag);
    return r;
}

Composition parse_label(const std::string& text, int n, const char* flag) {
    if (text.empty()) usage(std::string("missing ") + flag);
    Composition c = parse_composition(text);
    if (static_cast<int>(c.size()) != n)
        usage(std::string(flag) + " has " + std::to_string(c.size()) + " parts but n = " + std::to_string(n));
    return c;
}

InnerProductConfig numeric_config(const RunConfig& rc) {
    InnerProductConfig c;
    c.q0 = parse_rational(rc.q, "--q");
    c.a0 = parse_rational(rc.a, "--a");
    c.k = rc.k;
    c.lattice_cutoff = rc.M;
    c.product_cutoff = rc.J;
    c.tolerance = rc.tol;
    c.validate();
    return c;
}

// Clears coefficient denominators: f = numerator / denominator.
std::pair<MultiPoly, ParamPoly> cleared(const MultiPoly& f) {
    ParamPoly D = f.common_denominator();
    ExactScalar d(D);
    return {f.scaled(d), D};
}

std::string scalar_text(const ExactScalar& c) {
    if (c.den().is_one()) return c.num().to_string();
    return c.to_string();
}

MultiPoly family_poly(const std::string& fam, const Composition& eta, const RunConfig& rc, Workspace& ws) {
    if (fam == "E") {
        if (rc.cross_check) principal_specialization(eta, ws);
        return ws.E(eta);
    }
    if (fam == "EV") return rc.cross_check ? asc_V(eta, VPipeline::operator_form, ws).poly : ws.EV(eta);
    if (fam == "EU") return rc.cross_check ? asc_U(eta, UPipeline::reflection, ws).poly : ws.EU(eta);
    if (fam == "G") return rc.cross_check ? shifted_G(eta, ws) : ws.G(eta);
    if (fam == "P") {
        if (!is_partition(eta)) usage("P needs a weakly decreasing label");
        if (rc.cross_check) principal_value_check(eta, ws);
        return ws.P(eta);
    }
    usage("family '" + fam + "' has no polynomial");
}

std::string poly_csv(const MultiPoly& f) {
    std::ostringstream out;
    out << "exp,num,den\n";
    for (const auto& [e, c] : f.terms()) {
        out << '"' << composition_string(e.to_vector(f.nvars())) << "\"," << c.num_string() << ','
            << c.den_string() << '\n';
    }
    return out.str();
}

std::string cmd_compute(const RunConfig& rc) {
    Workspace ws;
    const std::string& fam = rc.family;
    if (fam == "binom") {
        Composition eta = parse_label(rc.eta, rc.n, "--eta"), nu = parse_label(rc.nu, rc.n, "--nu");
        ExactScalar v = qbinomial(eta, nu, ws);
        if (rc.format == "text") return scalar_text(v) + "\n";
        if (rc.format == "csv") return "num,den\n" + v.num_string() + "," + v.den_string() + "\n";
        json j = {{"family", "binom"}, {"n", rc.n}, {"eta", eta}, {"nu", nu}, {"value", scalar_text(v)},
                  {"coeff", scalar_json(v)}};
        return j.dump() + "\n";
    }
    std::string text = fam == "P" ? (rc.lambda.empty() ? rc.eta : rc.lambda) : rc.eta;
    Composition eta = parse_label(text, rc.n, fam == "P" ? "--lambda" : "--eta");
    if (rc.map == "phi") eta = phi_map(eta);
    else if (rc.map == "psi") eta = psi_map(eta);
    else if (!rc.map.empty()) usage("--map must be phi or psi");
    MultiPoly f = family_poly(fam, eta, rc, ws);
    if (rc.format == "text") return f.to_string() + "\n";
    if (rc.format == "csv") return poly_csv(f);
    json j = poly_json(f);
    j["family"] = fam;
    j["eta"] = eta;
    return j.dump() + "\n";
}

std::string cmd_table(const RunConfig& rc) {
    static const std::vector<std::string> known = {"E", "EV", "EU", "G", "P", "const"};
    if (std::find(known.begin(), known.end(), rc.family) == known.end())
        usage("table supports E, EV, EU, G, P, const; got '" + rc.family + "'");
    Workspace ws;
    std::vector<Composition> labels;
    if (rc.family == "P") {
        for (int d = 0; d <= rc.max_degree; ++d)
            for (const auto& p : partitions(rc.n, d)) labels.push_back(p);
    } else {
        labels = compositions_up_to(rc.n, rc.max_degree);
    }
    json rows = json::array();
    std::ostringstream csv;
    csv << "eta,alpha,d,d_prime,e,norm_V,norm_U,denominator,numerator\n";
    std::ostringstream text;
    for (const auto& eta : labels) {
        auto c = composition_constants(eta);
        ExactScalar alpha = alpha_coefficient(eta);
        ExactScalar nv = norm_ratio(Family::V, eta), nu = norm_ratio(Family::U, eta);
        json row = {{"eta", eta},
                    {"alpha", alpha.to_string()},
                    {"d", c.d.to_string()},
                    {"d_prime", c.d_prime.to_string()},
                    {"e", c.e.to_string()},
                    {"norm_V", nv.to_string()},
                    {"norm_U", nu.to_string()}};
        std::string num_text, den_text;
        if (rc.family != "const") {
            auto [num, den] = cleared(family_poly(rc.family, eta, rc, ws));
            row["numerator"] = poly_json(num);
            row["denominator"] = "(" + den.to_string() + ")";
            num_text = num.to_string();
            den_text = "(" + den.to_string() + ")";
        }
        rows.push_back(row);
        csv << '"' << composition_string(eta) << "\"," << alpha.to_string() << ',' << c.d.to_string() << ','
            << c.d_prime.to_string() << ',' << c.e.to_string() << ',' << nv.to_string() << ',' << nu.to_string()
            << ',' << den_text << ",\"" << num_text << "\"\n";
        text << "(" << composition_string(eta) << ")  d=" << c.d.to_string() << "  d'=" << c.d_prime.to_string()
             << "  e=" << c.e.to_string();
        if (!num_text.empty()) text << "  " << num_text << " / " << den_text;
        text << '\n';
    }
    if (rc.format == "csv") return csv.str();
    if (rc.format == "text") return text.str();
    json j = {{"family", rc.family}, {"n", rc.n}, {"maxdeg", rc.max_degree}, {"rows", rows}};
    return j.dump() + "\n";
}

std::pair<std::string, bool> cmd_verify(const RunConfig& rc) {
    static const std::vector<std::string> known = {"relations", "isomorphisms", "macdonald", "asc",  "kernels",
                                                   "binomials", "symmetric",    "orthogonality", "all"};
    if (std::find(known.begin(), known.end(), rc.suite) == known.end()) usage("unknown suite '" + rc.suite + "'");
    bool all = rc.suite == "all";
    auto want = [&](const char* s) { return all || rc.suite == s; };
    InnerProductConfig cfg;
    if (want("orthogonality")) {
        cfg = numeric_config(rc);
        if (!all && rc.n != 2) usage("the orthogonality suite runs at n = 2");
    }
    if (rc.n > 4 && (want("kernels"))) usage("kernels need n <= 4");
    Workspace ws;
    std::vector<SuiteReport> reports;
    if (want("relations")) reports.push_back(relation_suite(rc.n, rc.max_degree, rc.seed));
    if (want("isomorphisms")) {
        SuiteReport r = isomorphism_suite(Isomorphism::phi, rc.n, rc.max_degree, rc.seed);
        r.append(isomorphism_suite(Isomorphism::psi_a, rc.n, rc.max_degree, rc.seed));
        r.suite = "isomorphisms";
        reports.push_back(std::move(r));
    }
    if (want("macdonald")) reports.push_back(macdonald_suite(rc.n, rc.max_degree, ws));
    if (want("asc")) reports.push_back(asc_suite(rc.n, rc.max_degree, ws));
    if (want("kernels")) reports.push_back(kernel_suite(rc.n, rc.max_degree, ws));
    if (want("binomials")) reports.push_back(shifted_suite(rc.n, rc.max_degree, ws));
    if (want("symmetric")) reports.push_back(symmetric_suite(rc.n, rc.max_degree, ws));
    if (want("orthogonality")) reports.push_back(orthogonality_suite(cfg, ws, rc.max_degree));

    bool ok = true;
    std::ostringstream out;
    for (const auto& r : reports) {
        ok = ok && r.pass();
        if (rc.format == "text") {
            out << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " (" << r.exact.size() + r.numeric.size()
                << " checks, " << r.failures() << " failures)\n";
            for (const auto& e : r.exact)
                if (!e.pass() && !e.informational) out << "  FAIL " << e.identity << " n=" << e.n << " " << e.instance << '\n';
            for (const auto& c : r.numeric)
                if (!c.pass() && !c.informational) out << "  FAIL " << c.identity << " n=" << c.n << " " << c.instance << '\n';
        } else {
            out << suite_json(r).dump() << '\n';
        }
    }
    return {out.str(), ok};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonsymmetric Macdonald and Al-Salam-Carlitz polynomials"};
    app.require_subcommand(1);
    RunConfig rc;

    auto common = [&rc](CLI::App* sub) {
        sub->add_option("--n", rc.n, "number of variables")->check(CLI::Range(1, kMaxVars))->capture_default_str();
        sub->add_option("--format", rc.format, "json, csv or text")
            ->check(CLI::IsMember({"json", "csv", "text"}))
            ->capture_default_str();
        sub->add_option("--out", rc.out, "write to this path instead of stdout");
        sub->add_flag("--cross-check", rc.cross_check, "recompute through the second pipeline and compare");
    };

    auto* compute = app.add_subcommand("compute", "emit one polynomial or scalar");
    common(compute);
    compute->add_option("--family", rc.family, "E, EV, EU, G, P or binom")
        ->check(CLI::IsMember({"E", "EV", "EU", "G", "P", "binom"}))
        ->capture_default_str();
    compute->add_option("--eta", rc.eta, "comma-separated composition");
    compute->add_option("--nu", rc.nu, "second composition for binom");
    compute->add_option("--lambda", rc.lambda, "partition for P");
    compute->add_option("--map", rc.map, "relabel eta by phi or psi first");

    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("--suite", rc.suite,
                       "relations, isomorphisms, macdonald, asc, kernels, binomials, symmetric, orthogonality, all")
        ->capture_default_str();
    verify->add_option("--maxdeg,--deg", rc.max_degree, "degree cap")->check(CLI::Range(0, 8))->capture_default_str();
    verify->add_option("--q", rc.q, "q0 as p/q")->capture_default_str();
    verify->add_option("--k", rc.k, "t = q^k")->capture_default_str();
    verify->add_option("--a", rc.a, "a0 as p/q")->capture_default_str();
    verify->add_option("--M", rc.M, "lattice terms per variable")->capture_default_str();
    verify->add_option("--J", rc.J, "factors per infinite product")->capture_default_str();
    verify->add_option("--tol", rc.tol, "numeric tolerance")->capture_default_str();
    verify->add_option("--seed", rc.seed, "seed for random relation inputs")->capture_default_str();

    auto* table = app.add_subcommand("table", "tabulate a family up to a degree cap");
    common(table);
    table->add_option("--family", rc.family, "E, EV, EU, G, P or const")->capture_default_str();
    table->add_option("--maxdeg,--deg", rc.max_degree, "degree cap")->check(CLI::Range(0, 8))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        std::string output;
        int code = 0;
        if (compute->parsed()) {
            output = cmd_compute(rc);
        } else if (table->parsed()) {
            output = cmd_table(rc);
        } else {
            auto [text, ok] = cmd_verify(rc);
            output = std::move(text);
            code = ok ? 0 : 1;
        }
        if (rc.out.empty()) {
            std::cout << output;
        } else {
            std::ofstream file(rc.out, std::ios::binary);
            if (!file) usage("cannot open '" + rc.out + "'");
            file << output;
        }
        return code;
    } catch (const std::exception& e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        std::cerr << "error: " << msg << '\n';
        return 2;
    }
}
