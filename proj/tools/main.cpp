// Command-line front end: JSON in, JSON or text out, one subcommand per
// computation. Exit codes: 0 success, 1 failed verification suite, 2 usage,
// 3 malformed JSON, 4 invalid input data, 5 solver failure.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "conflap/conflap.hpp"

namespace {

using namespace conflap;

nlohmann::json parse_json_text(const std::string& text) {
    return nlohmann::json::parse(text); // throws nlohmann::json::parse_error
}

nlohmann::json load_json(const std::string& path, const std::string& inline_text) {
    if (!inline_text.empty()) return parse_json_text(inline_text);
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json_text(buf.str());
}

void print_line(const std::string& s) { std::fputs((s + "\n").c_str(), stdout); }

struct CommonOutput {
    std::string format = "json";
};

int run_constant(int n, int epsilon, double alpha, const CommonOutput& out) {
    const BbgConstant c = bbg_constant(Dim(n), Hypothesis{epsilon, alpha});
    if (out.format == "text") {
        std::printf("a(%d, %d, %.17g) = %.17g\n", n, epsilon, alpha, c.value);
        if (c.c_alpha) std::printf("c(alpha) = %.17g\n", *c.c_alpha);
        return 0;
    }
    jsonio::Object o;
    o.number("n", n).number("epsilon", epsilon).number("alpha", alpha).number("a", c.value);
    if (c.c_alpha) o.number("cAlpha", *c.c_alpha);
    print_line(o.str());
    return 0;
}

ManifoldSummary resolve_summary(const std::string& catalog_name, const std::string& input_path,
                                const std::string& inline_json) {
    if (!catalog_name.empty()) {
        const CatalogEntry* e = find_catalog_entry(catalog_name);
        if (!e) throw validation_error("unknown catalog entry '" + catalog_name + "'");
        return e->summary;
    }
    return parse_manifold_summary(load_json(input_path, inline_json));
}

void print_report_text(const BoundsReport& r) {
    std::printf("manifold: n=%d diameter=%.17g volume=%.17g ricciLowerBound=%.17g\n", r.summary.n.n,
                r.summary.diameter, r.summary.volume, r.summary.ricci_lower);
    std::printf("hypothesis: epsilon=%d alpha=%.17g\n", r.hypothesis.epsilon, r.hypothesis.alpha);
    std::printf("a = %.17g   (a/d)^2 = %.17g   beta = %.17g\n", r.a, r.a_over_d_sq, r.beta);
    std::printf("cap radii: r1 = %.17g   r2 = %.17g\n", r.r1, r.r2);
    std::printf("rho1(S^n) = %.17g   =>   mu1(M) >= %.17g\n", r.rho1, r.mu1_lower_bound);
    std::printf("rho(S^n)  = %.17g   =>   lambda(M) >= %.17g%s\n", r.rho,
                r.lambda_lower_bound, r.rho_converged ? "" : "   [not converged]");
    std::printf("lambda(S^n) = %.17g\n", r.lambda_sphere);
    for (const std::string& c : r.caveats) std::printf("caveat: %s\n", c.c_str());
    std::printf("verdict: %s\n", std::string(to_string(r.rigidity)).c_str());
}

int run_bound(const ManifoldSummary& summary, const BoundsOptions& opts, const CommonOutput& out) {
    const BoundsReport report = compute_bounds(summary, opts);
    if (out.format == "text")
        print_report_text(report);
    else
        print_line(to_json(report));
    return 0;
}

int run_profile(int n, int points, const CommonOutput& out) {
    if (out.format == "text")
        std::printf("%-22s %s\n", "s", "Is(s)");
    std::vector<std::string> rows;
    for (int i = 0; i < points; ++i) {
        const double s = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
        const double is = iso_profile(Dim(n), s);
        if (out.format == "text") {
            std::printf("%-22.17g %.17g\n", s, is);
        } else {
            jsonio::Object row;
            row.number("s", s).number("profile", is);
            rows.push_back(row.str());
        }
    }
    if (out.format != "text") {
        jsonio::Object o;
        o.number("n", n).field("points", jsonio::array_of(rows));
        print_line(o.str());
    }
    return 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int count, const CommonOutput& out) {
    const SuiteResult r = run_verify_suite(suite, seed, count);
    if (out.format == "text") {
        std::printf("%s: %s (%d instances, %d failures)\n", r.suite.c_str(),
                    r.passed() ? "PASS" : "FAIL", r.count, r.failures);
        for (const std::string& m : r.messages) std::printf("  %s\n", m.c_str());
    } else {
        std::vector<std::string> msgs;
        for (const std::string& m : r.messages) msgs.push_back(jsonio::quote(m));
        jsonio::Object o;
        o.text("suite", r.suite)
            .number("count", r.count)
            .number("failures", r.failures)
            .field("messages", jsonio::array_of(msgs));
        print_line(o.str());
    }
    return r.passed() ? 0 : 1;
}

int run_catalog(const CommonOutput& out) {
    if (out.format == "text") {
        for (const CatalogEntry& e : catalog()) {
            std::printf("%-12s n=%d", e.name.c_str(), e.summary.n.n);
            if (e.known_lambda)
                std::printf("  knownLambda=%.17g", *e.known_lambda);
            std::printf("  %s\n", e.note.c_str());
        }
        return 0;
    }
    std::vector<std::string> rows;
    for (const CatalogEntry& e : catalog()) {
        jsonio::Object row;
        row.text("name", e.name).field("summary", to_json(e.summary));
        if (e.known_lambda) row.number("knownLambda", *e.known_lambda);
        row.text("note", e.note);
        rows.push_back(row.str());
    }
    print_line(jsonio::array_of(rows));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"lower bounds for the conformal Laplacian spectrum and the Yamabe invariant "
                 "from summary curvature data"};
    app.require_subcommand(1);
    std::string format = "json";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "text"}));

    // constant
    auto* cmd_constant = app.add_subcommand("constant", "isoperimetric comparison constant a(n, epsilon, alpha)");
    int c_n = 3, c_eps = 0;
    double c_alpha = 0.0;
    cmd_constant->add_option("--n", c_n, "dimension")->required()->check(CLI::Range(2, 64));
    cmd_constant->add_option("--epsilon", c_eps, "curvature sign")->required()->check(CLI::Range(-1, 1));
    cmd_constant->add_option("--alpha", c_alpha, "hypothesis scale");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "full bounds report for a manifold summary");
    std::string b_catalog, b_input, b_json;
    int b_grid = 1000, b_max_iter = 10000;
    double b_decision_tol = 1e-3;
    cmd_bound->add_option("--catalog", b_catalog, "built-in summary by name");
    cmd_bound->add_option("--input", b_input, "summary JSON file")->check(CLI::ExistingFile);
    cmd_bound->add_option("--json", b_json, "summary JSON inline");
    cmd_bound->add_option("--m", b_grid, "grid size")->check(CLI::Range(16, 1000000));
    cmd_bound->add_option("--max-iter", b_max_iter, "minimization budget")->check(CLI::Range(1, 100000000));
    cmd_bound->add_option("--decision-tol", b_decision_tol, "rigidity decision tolerance (relative)");

    // spectrum
    auto* cmd_spectrum = app.add_subcommand("spectrum", "least eigenvalue or low spectrum of c_n*Lap + h");
    std::string s_potential, s_json;
    int s_grid = 1000, s_count = 1;
    bool s_with_fn = false;
    cmd_spectrum->add_option("--potential", s_potential, "potential JSON file")->check(CLI::ExistingFile);
    cmd_spectrum->add_option("--json", s_json, "potential JSON inline");
    cmd_spectrum->add_option("--m", s_grid, "grid size")->check(CLI::Range(16, 1000000));
    cmd_spectrum->add_option("--count", s_count, "how many eigenvalues")->check(CLI::Range(1, 10000));
    cmd_spectrum->add_flag("--with-eigenfunction", s_with_fn, "include the ground state values");

    // yamabe
    auto* cmd_yamabe = app.add_subcommand("yamabe", "least quotient of the curved-exponent problem");
    std::string y_potential, y_json;
    YamabeOptions yopts;
    bool y_with_min = false;
    std::uint64_t y_seed = 0;
    cmd_yamabe->add_option("--potential", y_potential, "potential JSON file")->check(CLI::ExistingFile);
    cmd_yamabe->add_option("--json", y_json, "potential JSON inline");
    cmd_yamabe->add_option("--m", yopts.grid_size, "grid size")->check(CLI::Range(16, 1000000));
    cmd_yamabe->add_option("--max-iter", yopts.max_iterations, "iteration budget")->check(CLI::Range(1, 100000000));
    cmd_yamabe->add_option("--random-starts", yopts.random_starts, "extra seeded starts")->check(CLI::Range(0, 64));
    cmd_yamabe->add_option("--seed", y_seed, "seed for extra starts");
    cmd_yamabe->add_flag("--with-minimizer", y_with_min, "include the minimizing profile");

    // profile
    auto* cmd_profile = app.add_subcommand("profile", "model isoperimetric profile table");
    int p_n = 2, p_points = 11;
    cmd_profile->add_option("--n", p_n, "dimension")->required()->check(CLI::Range(2, 64));
    cmd_profile->add_option("--points", p_points, "number of sample points")->check(CLI::Range(1, 100000));

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "seeded randomized verification suites");
    std::string v_suite;
    std::uint64_t v_seed = 0;
    int v_count = 1000;
    cmd_verify->add_option("--suite", v_suite, "one of steffensen|hlp|equimeasurability|gamma-link|shift-identity")
        ->required();
    cmd_verify->add_option("--seed", v_seed, "random seed");
    cmd_verify->add_option("--count", v_count, "instance count")->check(CLI::Range(1, 10000000));

    // catalog
    app.add_subcommand("catalog", "list built-in manifold summaries");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const CommonOutput out{format};
    try {
        if (cmd_constant->parsed()) return run_constant(c_n, c_eps, c_alpha, out);
        if (cmd_bound->parsed()) {
            if (b_catalog.empty() && b_input.empty() && b_json.empty()) {
                std::fprintf(stderr, "bound: provide --catalog, --input or --json\n");
                return 2;
            }
            BoundsOptions opts;
            opts.grid_size = b_grid;
            opts.decision_rel_tol = b_decision_tol;
            opts.yamabe.max_iterations = b_max_iter;
            return run_bound(resolve_summary(b_catalog, b_input, b_json), opts, out);
        }
        if (cmd_spectrum->parsed()) {
            if (s_potential.empty() && s_json.empty()) {
                std::fprintf(stderr, "spectrum: provide --potential or --json\n");
                return 2;
            }
            const StepPotential h = parse_step_potential(load_json(s_potential, s_json));
            if (s_count > 1) {
                const std::vector<double> values = radial_spectrum(h, s_count, s_grid);
                jsonio::Object o;
                o.number("m", s_grid).field("eigenvalues", jsonio::number_array(values));
                print_line(o.str());
                return 0;
            }
            const SpectralResult r = least_eigenvalue(h, s_grid);
            jsonio::Object o;
            o.number("m", s_grid).number("rho1", r.rho1).number("residualNorm", r.residual_norm);
            if (s_with_fn) o.field("eigenfunction", jsonio::number_array(r.eigenfunction));
            print_line(o.str());
            return 0;
        }
        if (cmd_yamabe->parsed()) {
            if (y_potential.empty() && y_json.empty()) {
                std::fprintf(stderr, "yamabe: provide --potential or --json\n");
                return 2;
            }
            const StepPotential h = parse_step_potential(load_json(y_potential, y_json));
            yopts.seed = y_seed;
            const YamabeResult r = minimize_quotient(h, yopts);
            print_line(to_json(r, y_with_min));
            return 0;
        }
        if (cmd_profile->parsed()) return run_profile(p_n, p_points, out);
        if (cmd_verify->parsed()) return run_verify(v_suite, v_seed, v_count, out);
        return run_catalog(out);
    } catch (const nlohmann::json::parse_error& e) {
        std::fprintf(stderr, "JSON parse error: %s\n", e.what());
        return 3;
    } catch (const validation_error& e) {
        std::fprintf(stderr, "invalid input: %s\n", e.what());
        return 4;
    } catch (const solver_error& e) {
        std::fprintf(stderr, "solver failure: %s\n", e.what());
        return 5;
    }
}
