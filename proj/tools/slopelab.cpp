// Command-line front end: single-shot computations over genus profiles,
// singularity-index vectors and forests, exact LP verification of the slope
// bound, reconstruction of the sharp example families, and sweep campaigns
// with CSV/JSON reporting.
//
// Exit codes: 0 success, 1 input/validation error, 2 mathematical-expectation
// failure (bound mismatch, path disagreement). CI relies on the distinction.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "slopelab/cone_optimizer.hpp"
#include "slopelab/errors.hpp"
#include "slopelab/example_factory.hpp"
#include "slopelab/invariant_core.hpp"
#include "slopelab/io.hpp"
#include "slopelab/resolution_engine.hpp"

namespace {

using slopelab::Rational;
using slopelab::to_string;
using json = nlohmann::json;

constexpr int kExitValidation = 1;
constexpr int kExitMathFailure = 2;

struct GlobalFlags {
    bool json = false;
    bool strict = false;
    bool certificate = false;
};

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

// Durations stay on the diagnostics stream so stdout is byte-identical
// across runs.
void report_duration(const Stopwatch& watch) {
    std::cerr << "# duration_ms = " << watch.elapsed_ms() << "\n";
}

void emit(const GlobalFlags& flags, const json& report,
          const std::vector<std::pair<std::string, std::string>>& lines) {
    if (flags.json) {
        std::cout << report.dump(2) << "\n";
    } else {
        for (const auto& [key, value] : lines) {
            std::cout << key << " = " << value << "\n";
        }
    }
}

int cmd_bound(long g, long qf, const GlobalFlags& flags) {
    Stopwatch watch;
    const auto profile = slopelab::validate_profile(g, qf);
    const Rational lambda = slopelab::lambda_bound(profile);
    const Rational conjecture = slopelab::conjecture_bound(profile);
    const Rational gap = lambda - conjecture;

    json report;
    report["command"] = "bound";
    report["inputs"] = {{"g", g}, {"qf", qf}};
    json outputs;
    outputs["lambda"] = to_string(lambda);
    outputs["conjecture"] = to_string(conjecture);
    outputs["gap"] = to_string(gap);

    std::vector<std::pair<std::string, std::string>> lines{
        {"g", std::to_string(g)},
        {"qf", std::to_string(qf)},
        {"lambda", to_string(lambda)},
        {"conjecture", to_string(conjecture)},
        {"gap", to_string(gap)},
    };
    if (qf >= 1) {
        const auto coefficients = slopelab::proof_coefficients(profile);
        outputs["coefficients"] = slopelab::io::coefficients_to_json(coefficients);
        lines.emplace_back("alpha", to_string(coefficients.alpha));
        for (const auto& [k, c] : coefficients.alpha_k)
            lines.emplace_back("alpha_" + std::to_string(k), to_string(c));
        for (const auto& [k, c] : coefficients.beta_k)
            lines.emplace_back("beta_" + std::to_string(k), to_string(c));
        for (const auto& [k, c] : coefficients.gamma_k)
            lines.emplace_back("gamma_" + std::to_string(k), to_string(c));
        for (const auto& [k, c] : coefficients.delta_k)
            lines.emplace_back("delta_" + std::to_string(k), to_string(c));
    }
    report["outputs"] = outputs;
    report["pass"] = true;
    emit(flags, report, lines);
    report_duration(watch);
    return 0;
}

int cmd_invariants(const std::string& path, const GlobalFlags& flags) {
    Stopwatch watch;
    const auto vector = slopelab::io::load_index_vector(path);
    slopelab::validate_index_vector(vector, flags.strict);
    const auto invariants = slopelab::relative_invariants(vector);
    if (!invariants.integral()) {
        std::cerr << "advisory: non-integral invariants (K_f^2 = "
                  << to_string(invariants.k2) << ", chi_f = "
                  << to_string(invariants.chi)
                  << "); geometric fibrations have integral invariants\n";
    }
    const Rational slope_value = slopelab::slope(vector);  // throws when chi <= 0
    const Rational n = slopelab::n_from_indices(vector);
    const long minus_one = slopelab::minus_one_count(vector);

    json report;
    report["command"] = "invariants";
    report["inputs"] = {{"file", path}};
    report["outputs"] = {{"invariants", slopelab::io::invariants_to_json(invariants)},
                         {"slope", to_string(slope_value)},
                         {"n", to_string(n)},
                         {"minus_one_curves", minus_one}};
    report["pass"] = true;
    emit(flags, report,
         {{"k2", to_string(invariants.k2)},
          {"chi", to_string(invariants.chi)},
          {"e", to_string(invariants.e)},
          {"slope", to_string(slope_value)},
          {"n", to_string(n)},
          {"minus_one_curves", std::to_string(minus_one)}});
    report_duration(watch);
    return 0;
}

int cmd_optimize(long g, long qf, const GlobalFlags& flags) {
    Stopwatch watch;
    const auto profile = slopelab::validate_profile(g, qf);
    const auto program = slopelab::build_program(profile);
    const auto result = slopelab::minimize(program);
    const Rational bound = slopelab::lambda_bound(profile);
    const bool equal = (result.minimum == bound);
    const bool certificate_valid =
        slopelab::verify_certificate(program, result.minimum, result.certificate);

    json report;
    report["command"] = "optimize";
    report["inputs"] = {{"g", g}, {"qf", qf}};
    json outputs;
    outputs["lp_minimum"] = to_string(result.minimum);
    outputs["lambda"] = to_string(bound);
    outputs["equal"] = equal;
    outputs["vertex"] = slopelab::io::rational_vector_to_json(result.optimal_point);
    outputs["tight_constraints"] = result.tight_constraints;
    outputs["certificate_valid"] = certificate_valid;
    if (flags.certificate) {
        outputs["certificate"] = slopelab::io::certificate_to_json(result.certificate);
    }
    report["outputs"] = outputs;
    report["pass"] = equal && certificate_valid;

    std::vector<std::pair<std::string, std::string>> lines{
        {"lp_minimum", to_string(result.minimum)},
        {"lambda", to_string(bound)},
        {"equal", equal ? "true" : "false"},
    };
    for (long i = 2; i <= g + 2; ++i) {
        if (result.optimal_point.at(i) != 0) {
            lines.emplace_back("vertex_s" + std::to_string(i),
                               to_string(result.optimal_point.at(i)));
        }
    }
    {
        std::string tight;
        for (const auto& id : result.tight_constraints) {
            if (!tight.empty()) tight += ", ";
            tight += id;
        }
        lines.emplace_back("tight", tight);
    }
    lines.emplace_back("certificate_valid", certificate_valid ? "true" : "false");
    if (flags.certificate) {
        for (const auto& [id, multiplier] : result.certificate) {
            lines.emplace_back("certificate_" + id, to_string(multiplier));
        }
    }
    emit(flags, report, lines);
    report_duration(watch);
    return (equal && certificate_valid) ? 0 : kExitMathFailure;
}

int cmd_resolve(const std::string& path, const GlobalFlags& flags) {
    Stopwatch watch;
    const auto forest = slopelab::io::load_forest(path);
    slopelab::validate_forest(forest, flags.strict);
    const auto classified = slopelab::classify_indices(forest);
    const Rational s2 = slopelab::s2_from_n(forest, classified.total);
    auto vector = to_rational(classified.total);
    vector.at(2) = s2;

    const auto direct = slopelab::resolve_invariants(forest);
    const auto via_indices = slopelab::relative_invariants(vector);
    const bool agree = direct.invariants.k2 == via_indices.k2 &&
                       direct.invariants.chi == via_indices.chi &&
                       direct.invariants.e == via_indices.e;

    json report;
    report["command"] = "resolve";
    report["inputs"] = {{"file", path}};
    json indices = json::object();
    for (long i = 3; i <= forest.g + 2; ++i) {
        if (classified.total.at(i) != 0) {
            indices["s" + std::to_string(i)] = classified.total.at(i);
        }
    }
    json per_fiber = json::array();
    for (const auto& fiber : classified.per_fiber) {
        json entry = json::object();
        for (long i = 3; i <= forest.g + 2; ++i) {
            if (fiber.at(i) != 0) entry["s" + std::to_string(i)] = fiber.at(i);
        }
        per_fiber.push_back(std::move(entry));
    }
    report["outputs"] = {
        {"indices", indices},
        {"per_fiber", per_fiber},
        {"s2", to_string(s2)},
        {"direct", slopelab::io::invariants_to_json(direct.invariants)},
        {"via_indices", slopelab::io::invariants_to_json(via_indices)},
        {"blowups", direct.trace.blowup_count},
        {"minus_one_curves", direct.trace.minus_one_curve_count},
        {"agree", agree}};
    report["pass"] = agree;

    std::vector<std::pair<std::string, std::string>> lines;
    lines.emplace_back("s2", to_string(s2));
    for (long i = 3; i <= forest.g + 2; ++i) {
        if (classified.total.at(i) != 0) {
            lines.emplace_back("s" + std::to_string(i),
                               std::to_string(classified.total.at(i)));
        }
    }
    lines.emplace_back("direct_k2", to_string(direct.invariants.k2));
    lines.emplace_back("direct_chi", to_string(direct.invariants.chi));
    lines.emplace_back("direct_e", to_string(direct.invariants.e));
    lines.emplace_back("via_indices_k2", to_string(via_indices.k2));
    lines.emplace_back("via_indices_chi", to_string(via_indices.chi));
    lines.emplace_back("via_indices_e", to_string(via_indices.e));
    lines.emplace_back("blowups", std::to_string(direct.trace.blowup_count));
    lines.emplace_back("minus_one_curves",
                       std::to_string(direct.trace.minus_one_curve_count));
    lines.emplace_back("agree", agree ? "true" : "false");
    emit(flags, report, lines);
    report_duration(watch);
    if (!agree) {
        std::cerr << "error: the direct resolution and the index-vector formulas "
                     "disagree on this forest\n";
        return kExitMathFailure;
    }
    return 0;
}

int emit_example(const slopelab::ExampleReport& example, const json& inputs,
                 const GlobalFlags& flags, const Stopwatch& watch) {
    json report;
    report["command"] = "example";
    report["inputs"] = inputs;
    report["outputs"] = slopelab::io::example_to_json(example);
    report["pass"] = example.attains_bound;

    std::vector<std::pair<std::string, std::string>> lines{
        {"g", std::to_string(example.g)},
        {"qf", std::to_string(example.qf)},
        {"k2", to_string(example.invariants.k2)},
        {"chi", to_string(example.invariants.chi)},
        {"e", to_string(example.invariants.e)},
        {"slope", to_string(example.slope)},
        {"bound", to_string(example.bound)},
        {"attains_bound", example.attains_bound ? "true" : "false"},
    };
    if (example.n) lines.emplace_back("n", to_string(*example.n));
    if (example.index_vector) {
        lines.emplace_back("s2", std::to_string(example.index_vector->s2));
        for (long i = 3; i <= example.g + 2; ++i) {
            if (example.index_vector->at(i) != 0) {
                lines.emplace_back("s" + std::to_string(i),
                                   std::to_string(example.index_vector->at(i)));
            }
        }
    }
    emit(flags, report, lines);
    report_duration(watch);
    if (!example.attains_bound) {
        std::cerr << "error: example misses the bound\n";
        return kExitMathFailure;
    }
    return 0;
}

// One sweep cell; lp_min doubles as the witnessed slope in examples mode.
struct SweepRow {
    long g = 0;
    long qf = 0;
    std::string lambda;
    std::string lp_min;
    std::optional<bool> equal;
    long long runtime_ms = 0;
    std::string error;
    bool skipped = false;
};

void run_sweep_cell(const std::string& mode, SweepRow& row) {
    Stopwatch watch;
    try {
        const auto profile = slopelab::validate_profile(row.g, row.qf);
        if (mode == "bounds") {
            row.lambda = to_string(slopelab::lambda_bound(profile));
        } else if (mode == "lp_verify") {
            const auto report = slopelab::verify_sharpness(profile);
            row.lambda = to_string(report.bound);
            row.lp_min = to_string(report.lp_minimum);
            row.equal = report.ok();
        } else {  // examples
            row.lambda = to_string(slopelab::lambda_bound(profile));
            if ((row.g + 1) % (row.qf + 1) == 0 && (row.g + 1) / (row.qf + 1) >= 2) {
                const long m = (row.g + 1) / (row.qf + 1);
                const auto example = slopelab::build_ruled_cover(
                    slopelab::RuledCoverParams{m, 1, m + 1, row.qf});
                row.lp_min = to_string(example.slope);
                row.equal = example.attains_bound;
            } else if (row.qf == slopelab::max_irregularity(row.g)) {
                const auto example = slopelab::build_product_quotient(
                    slopelab::ProductQuotientParams{row.g, 2});
                row.lp_min = to_string(example.slope);
                row.equal = example.attains_bound;
            } else {
                row.skipped = true;  // no construction covers this cell
            }
        }
    } catch (const std::exception& err) {
        row.error = err.what();
        row.equal = false;
    }
    row.runtime_ms = watch.elapsed_ms();
}

unsigned sweep_workers(unsigned jobs_flag) {
    if (const char* env = std::getenv("SLOPELAB_THREADS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed >= 1) return static_cast<unsigned>(parsed);
    }
    if (jobs_flag >= 1) return jobs_flag;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

int cmd_sweep(long g_min, long g_max, const std::vector<long>& qf_list,
              const std::string& mode, const std::string& out_path,
              const std::string& format, unsigned jobs, const GlobalFlags& flags) {
    Stopwatch watch;
    if (g_min < 2) {
        throw slopelab::ValidationError("sweep requires g_min >= 2");
    }
    if (g_min > g_max) {
        throw slopelab::ValidationError("empty sweep range: g_min = " +
                                        std::to_string(g_min) + " > g_max = " +
                                        std::to_string(g_max));
    }

    std::vector<SweepRow> rows;
    for (long g = g_min; g <= g_max; ++g) {
        const long qf_floor = (mode == "bounds") ? 0 : 1;
        for (long qf = qf_floor; qf <= slopelab::max_irregularity(g); ++qf) {
            if (!qf_list.empty() &&
                std::find(qf_list.begin(), qf_list.end(), qf) == qf_list.end()) {
                continue;
            }
            SweepRow row;
            row.g = g;
            row.qf = qf;
            rows.push_back(row);
        }
    }

    const unsigned workers =
        std::min<unsigned>(sweep_workers(jobs), std::max<std::size_t>(rows.size(), 1));
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= rows.size()) return;
                run_sweep_cell(mode, rows[i]);
            }
        });
    }
    for (auto& worker : pool) worker.join();

    std::ostringstream body;
    long emitted = 0;
    if (format == "csv") {
        body << "g,q_f,lambda,lp_min,equal,runtime_ms\n";
        for (const auto& row : rows) {
            if (row.skipped) continue;
            body << row.g << ',' << row.qf << ',' << row.lambda << ',' << row.lp_min
                 << ',' << (row.equal ? (*row.equal ? "true" : "false") : "") << ','
                 << row.runtime_ms << "\n";
            ++emitted;
        }
    } else {  // json
        json j;
        j["schema"] = 1;
        j["mode"] = mode;
        j["rows"] = json::array();
        for (const auto& row : rows) {
            if (row.skipped) continue;
            json r{{"g", row.g}, {"qf", row.qf}, {"lambda", row.lambda},
                   {"runtime_ms", row.runtime_ms}};
            if (!row.lp_min.empty()) r["lp_min"] = row.lp_min;
            if (row.equal) r["equal"] = *row.equal;
            if (!row.error.empty()) r["error"] = row.error;
            j["rows"].push_back(std::move(r));
            ++emitted;
        }
        body << j.dump(2) << "\n";
    }

    // Rows computed so far always reach the output, pass or fail.
    if (out_path.empty() || out_path == "-") {
        std::cout << body.str();
        std::cout.flush();
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw slopelab::ValidationError("cannot open output file \"" + out_path +
                                            "\"");
        }
        out << body.str();
        out.flush();
    }

    bool failed = false;
    for (const auto& row : rows) {
        if (row.skipped) continue;
        if (!row.error.empty() || (row.equal && !*row.equal)) failed = true;
        if (!row.error.empty()) {
            std::cerr << "error: cell g=" << row.g << " qf=" << row.qf << ": "
                      << row.error << "\n";
        }
    }
    if (!(out_path.empty() || out_path == "-")) {
        json summary;
        summary["command"] = "sweep";
        summary["inputs"] = {{"g_min", g_min}, {"g_max", g_max}, {"mode", mode},
                             {"format", format}, {"out", out_path}};
        summary["outputs"] = {{"rows", emitted}, {"failed", failed}};
        summary["pass"] = !failed;
        emit(flags, summary,
             {{"rows", std::to_string(emitted)}, {"failed", failed ? "true" : "false"}});
    }
    report_duration(watch);
    return failed ? kExitMathFailure : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact relative invariants, slope bounds, and cone verification "
                 "for hyperelliptic fibrations"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags flags;
    app.add_flag("--json", flags.json, "machine-readable JSON on stdout");
    app.add_flag("--strict", flags.strict,
                 "for even g, reject inputs with s_{g+2} != 0");
    app.add_flag("--certificate", flags.certificate,
                 "include the dual certificate in optimize output");

    long g = 0, qf = 0;
    auto* bound = app.add_subcommand("bound", "evaluate the slope bounds at (g, q_f)");
    bound->add_option("--g", g, "fiber genus")->required();
    bound->add_option("--qf", qf, "relative irregularity")->required();

    std::string invariants_path;
    auto* invariants =
        app.add_subcommand("invariants", "relative invariants of an index vector");
    invariants->add_option("file", invariants_path, "index-vector JSON file")
        ->required();

    long opt_g = 0, opt_qf = 0;
    auto* optimize =
        app.add_subcommand("optimize", "minimize the slope over the index cone");
    optimize->add_option("--g", opt_g, "fiber genus")->required();
    optimize->add_option("--qf", opt_qf, "relative irregularity")->required();

    std::string resolve_path;
    auto* resolve =
        app.add_subcommand("resolve", "classify a singularity forest and compute "
                                      "invariants along both paths");
    resolve->add_option("file", resolve_path, "forest JSON file")->required();

    auto* example = app.add_subcommand("example", "reconstruct a sharp family");
    example->require_subcommand(1);
    slopelab::RuledCoverParams ruled_params;
    auto* ruled = example->add_subcommand("ruled", "double cover of a Hirzebruch surface");
    ruled->add_option("--m", ruled_params.m, "cover parameter m >= 2")->required();
    ruled->add_option("--e", ruled_params.e, "Hirzebruch invariant e >= 1")->required();
    ruled->add_option("--b0", ruled_params.b0, "twist b_0 > m e")->required();
    ruled->add_option("--qf", ruled_params.qf, "relative irregularity >= 1")->required();
    slopelab::ProductQuotientParams product_params;
    auto* product = example->add_subcommand("product", "product-quotient family");
    product->add_option("--g", product_params.g, "fiber genus")->required();
    product->add_option("--branch", product_params.branch_count,
                        "number of branch points |Sigma| (even, >= 2)")
        ->required();

    long sweep_g_min = 2, sweep_g_max = 2;
    std::vector<long> sweep_qf;
    std::string sweep_mode = "bounds";
    std::string sweep_out;
    std::string sweep_format = "csv";
    unsigned sweep_jobs = 0;
    auto* sweep = app.add_subcommand("sweep", "run a mode over a (g, q_f) grid");
    sweep->add_option("--g-min", sweep_g_min, "smallest genus")->required();
    sweep->add_option("--g-max", sweep_g_max, "largest genus")->required();
    sweep->add_option("--qf", sweep_qf,
                      "restrict to these q_f values (default: all admissible)")
        ->delimiter(',');
    sweep->add_option("--mode", sweep_mode, "bounds | lp_verify | examples")
        ->check(CLI::IsMember({"bounds", "lp_verify", "examples"}));
    sweep->add_option("--out", sweep_out, "output path (default: stdout)");
    sweep->add_option("--format", sweep_format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--jobs", sweep_jobs,
                      "worker count (SLOPELAB_THREADS overrides; default: "
                      "available parallelism)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }

    try {
        if (bound->parsed()) return cmd_bound(g, qf, flags);
        if (invariants->parsed()) return cmd_invariants(invariants_path, flags);
        if (optimize->parsed()) return cmd_optimize(opt_g, opt_qf, flags);
        if (resolve->parsed()) return cmd_resolve(resolve_path, flags);
        if (example->parsed()) {
            Stopwatch watch;
            if (ruled->parsed()) {
                const auto report = slopelab::build_ruled_cover(ruled_params);
                return emit_example(report,
                                    json{{"family", "ruled"},
                                         {"m", ruled_params.m},
                                         {"e", ruled_params.e},
                                         {"b0", ruled_params.b0},
                                         {"qf", ruled_params.qf}},
                                    flags, watch);
            }
            const auto report = slopelab::build_product_quotient(product_params);
            return emit_example(report,
                                json{{"family", "product"},
                                     {"g", product_params.g},
                                     {"branch", product_params.branch_count}},
                                flags, watch);
        }
        if (sweep->parsed()) {
            return cmd_sweep(sweep_g_min, sweep_g_max, sweep_qf, sweep_mode, sweep_out,
                             sweep_format, sweep_jobs, flags);
        }
    } catch (const slopelab::MathExpectationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const slopelab::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return 0;
}
