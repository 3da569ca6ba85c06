// Command-line front end: seeded single runs, the replicate benchmark suite,
// the constrained pressure-vessel experiment, and landscape sampling.
//
// Exit codes: 0 success, 2 configuration error (bad flags or values),
// 3 unknown name lookups.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffa/experiment.hpp"

namespace {

using ffa::ExperimentConfig;
using ffa::ExperimentReport;
using ffa::FaParams;
using ffa::RealVector;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::fputs(content.c_str(), stdout);
    } else {
        ffa::write_text_file(out_path, content);
    }
}

std::string run_report_json(const std::string& function, int dim, bool resample,
                            const FaParams& params, const ffa::RunResult& result) {
    using ffa::format_double;
    std::string out = "{\n  \"config\": {";
    out += "\"function\": \"" + function + "\"";
    out += ", \"dim\": " + std::to_string(dim);
    out += ", \"n\": " + std::to_string(params.population);
    out += ", \"iters\": " + std::to_string(params.max_iterations);
    out += ", \"alpha\": " + format_double(params.alpha);
    out += ", \"beta0\": " + format_double(params.beta0);
    out += ", \"gamma\": " + format_double(params.gamma);
    out += ", \"m_exp\": " + format_double(params.m_exp);
    out += ", \"alpha_decay\": " + format_double(params.alpha_decay);
    out += ", \"seed\": " + std::to_string(params.seed);
    out += ", \"resample\": " + std::string(resample ? "true" : "false");
    out += "},\n  \"best_value\": " + format_double(result.best_value);
    out += ",\n  \"best_position\": [";
    for (std::size_t k = 0; k < result.best_position.size(); ++k) {
        if (k > 0) out += ", ";
        out += format_double(result.best_position[k]);
    }
    out += "],\n  \"evaluations\": " + std::to_string(result.evaluations);
    // Nominal budget (population x iterations) alongside the exact call count:
    // the two differ because the pairwise sweep re-evaluates per move.
    out += ",\n  \"nominal_evaluations\": " +
           std::to_string(static_cast<long long>(params.population) * params.max_iterations);
    out += ",\n  \"trace\": [\n";
    for (std::size_t i = 0; i < result.trace.size(); ++i) {
        const ffa::TraceRecord& r = result.trace[i];
        out += "    {\"iteration\": " + std::to_string(r.iteration);
        out += ", \"best_so_far\": " + format_double(r.best_so_far);
        out += ", \"current_best\": " + format_double(r.current_best);
        out += ", \"alpha_used\": " + format_double(r.alpha_used) + "}";
        if (i + 1 < result.trace.size()) out += ',';
        out += '\n';
    }
    out += "  ]\n}\n";
    return out;
}

std::string run_report_csv(const ffa::RunResult& result) {
    std::string out = "iteration,best_so_far,current_best,alpha_used\n";
    for (const ffa::TraceRecord& r : result.trace) {
        out += std::to_string(r.iteration);
        out += ',' + ffa::format_double(r.best_so_far);
        out += ',' + ffa::format_double(r.current_best);
        out += ',' + ffa::format_double(r.alpha_used);
        out += '\n';
    }
    return out;
}

struct RunOptions {
    std::string function;
    int dim = 2;
    FaParams params;
    bool resample = false;
    std::vector<double> scales;
    std::string out_path;
    std::string format = "json";
};

int do_run(const RunOptions& opt) {
    const ffa::TestFunction tf = ffa::registry(opt.function, opt.dim);
    FaParams params = opt.params;
    params.sense = tf.sense;
    params.scales = RealVector(opt.scales.begin(), opt.scales.end());

    ffa::RunResult result;
    if (tf.stochastic) {
        ffa::RandomSource realization_stream = ffa::RandomSource(params.seed).child(1);
        auto realization = std::make_shared<ffa::Realization>(
            opt.resample
                ? ffa::Realization::resampling(realization_stream, tf.realization_size)
                : ffa::Realization::frozen(realization_stream, tf.realization_size));
        result = ffa::run(tf.objective(realization), params);
    } else {
        result = ffa::run(tf.objective(), params);
    }

    emit(opt.out_path, opt.format == "csv"
                           ? run_report_csv(result)
                           : run_report_json(opt.function, opt.dim, opt.resample, params, result));
    return 0;
}

struct BenchOptions {
    std::string suite = "paper";
    int replicates = 0;       // 0 = per-experiment defaults
    std::uint64_t base_seed = 0;
    bool seed_given = false;
    std::string out_dir = "bench_out";
};

int do_bench(const BenchOptions& opt) {
    if (opt.suite != "paper") {
        throw ffa::ConfigError("bench: unknown suite '" + opt.suite + "' (valid: paper)");
    }
    std::filesystem::create_directories(opt.out_dir);
    const auto path = [&](const std::string& name) {
        return (std::filesystem::path(opt.out_dir) / name).string();
    };
    const auto reps = [&](int fallback) {
        return opt.replicates > 0 ? opt.replicates : fallback;
    };
    const auto seed = [&](std::uint64_t fallback, std::uint64_t index) {
        return opt.seed_given ? opt.base_seed + index : fallback;
    };

    const ExperimentConfig four_peak = ffa::suite_four_peak(reps(50), seed(20250801, 0));
    const ExperimentConfig standing_wave =
        ffa::suite_standing_wave(reps(50), seed(20250802, 1));
    const ExperimentConfig grid = ffa::suite_stochastic_grid(reps(50), seed(20250803, 2));
    const ExperimentConfig baseline = ffa::suite_grid_baseline(reps(50), seed(20250804, 3));
    const ExperimentConfig sphere = ffa::suite_sphere(reps(50), seed(20250805, 4));
    ffa::VesselExperimentConfig vessel = ffa::suite_vessel(reps(30), seed(20250806, 5));

    const auto write_experiment = [&](const std::string& name, const ExperimentReport& report) {
        ffa::write_text_file(path(name + ".json"), ffa::to_json(report));
        ffa::write_text_file(path(name + ".csv"), ffa::to_csv(report));
        std::printf("%-24s success_rate=%.3f best=%.6g median=%.6g\n", name.c_str(),
                    report.aggregates.success_rate, report.aggregates.best_value,
                    report.aggregates.median_value);
    };

    write_experiment("four_peak", ffa::run_experiment(four_peak));
    {
        const double c = 1.0 / 2.0;  // peak coordinate 1/sqrt(2d) at d = 2
        const std::vector<RealVector> peaks = {{c, c}, {c, -c}, {-c, c}, {-c, -c}};
        const ffa::CaptureReport capture = ffa::multimodal_capture(four_peak, peaks, 0.2);
        ffa::write_text_file(path("four_peak_capture.json"), ffa::to_json(capture));
        std::printf("%-24s all_occupied_fraction=%.3f\n", "four_peak_capture",
                    capture.all_occupied_fraction);
    }
    write_experiment("standing_wave", ffa::run_experiment(standing_wave));
    write_experiment("stochastic_grid", ffa::run_experiment(grid));
    write_experiment("stochastic_grid_baseline", ffa::hill_climb_experiment(baseline));
    write_experiment("sphere", ffa::run_experiment(sphere));
    {
        const ffa::VesselReport report = ffa::run_vessel_experiment(vessel);
        ffa::write_text_file(path("vessel.json"), ffa::to_json(report));
        ffa::write_text_file(path("vessel.csv"), ffa::to_csv(report));
        std::printf("%-24s feasible=%d/%d best_feasible_cost=%.6g\n", "vessel",
                    report.feasible_count, report.config.replicates,
                    report.best_feasible_cost);
    }
    return 0;
}

struct VesselOptions {
    int n = 40;
    int iters = 20;
    double lambda = 1e7;
    double p = 2.0;
    int replicates = 30;
    std::uint64_t base_seed = 20250806;
    double tol = 1e-3;
    bool snap = false;
    std::string out_path;
};

int do_vessel(const VesselOptions& opt) {
    ffa::VesselExperimentConfig config = ffa::suite_vessel(opt.replicates, opt.base_seed);
    config.fa.population = opt.n;
    config.fa.max_iterations = opt.iters;
    config.penalty.lambda = opt.lambda;
    config.penalty.p = opt.p;
    config.tol = opt.tol;
    config.snap = opt.snap;

    const ffa::VesselReport report = ffa::run_vessel_experiment(config);
    emit(opt.out_path, ffa::to_json(report));
    if (!opt.out_path.empty()) {
        std::printf("vessel: feasible=%d/%d best_feasible_cost=%.6g\n", report.feasible_count,
                    config.replicates, report.best_feasible_cost);
    }
    return 0;
}

struct LandscapeOptions {
    std::string function;
    int resolution = 101;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string format = "csv";
};

int do_landscape(const LandscapeOptions& opt) {
    const ffa::LandscapeGrid grid = ffa::landscape_grid(opt.function, opt.resolution, opt.seed);
    emit(opt.out_path, opt.format == "json" ? ffa::to_json(grid) : ffa::to_csv(grid));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Firefly optimization toolkit"};
    app.require_subcommand(1);

    RunOptions run_opt;
    CLI::App* run_cmd = app.add_subcommand("run", "One seeded optimization run");
    run_cmd->add_option("--function", run_opt.function, "Test function name")->required();
    run_cmd->add_option("--dim", run_opt.dim, "Problem dimension");
    run_cmd->add_option("--n", run_opt.params.population, "Population size");
    run_cmd->add_option("--iters", run_opt.params.max_iterations, "Iteration count");
    run_cmd->add_option("--alpha", run_opt.params.alpha, "Walk weight");
    run_cmd->add_option("--beta0", run_opt.params.beta0, "Attractiveness at distance 0");
    run_cmd->add_option("--gamma", run_opt.params.gamma, "Absorption coefficient");
    run_cmd->add_option("--m-exp", run_opt.params.m_exp, "Distance exponent");
    run_cmd->add_option("--seed", run_opt.params.seed, "Run seed");
    run_cmd->add_option("--alpha-decay", run_opt.params.alpha_decay,
                        "Geometric per-iteration alpha decay");
    run_cmd->add_option("--scales", run_opt.scales, "Per-axis walk scales")->delimiter(',');
    run_cmd->add_flag("--resample", run_opt.resample,
                      "Resample stochastic draws on every evaluation");
    run_cmd->add_option("--out", run_opt.out_path, "Output file (default stdout)");
    run_cmd->add_option("--format", run_opt.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    BenchOptions bench_opt;
    CLI::App* bench_cmd = app.add_subcommand("bench", "Replicate benchmark suite");
    bench_cmd->add_option("--suite", bench_opt.suite, "Suite name (paper)");
    bench_cmd->add_option("--replicates", bench_opt.replicates,
                          "Replicates per experiment (0 = per-experiment default)");
    CLI::Option* seed_opt =
        bench_cmd->add_option("--base-seed", bench_opt.base_seed,
                              "Base seed (experiment i uses base + i; default: frozen seeds)");
    bench_cmd->add_option("--out", bench_opt.out_dir, "Output directory");

    VesselOptions vessel_opt;
    CLI::App* vessel_cmd = app.add_subcommand("vessel", "Constrained pressure-vessel design");
    vessel_cmd->add_option("--n", vessel_opt.n, "Population size");
    vessel_cmd->add_option("--iters", vessel_opt.iters, "Iteration count");
    vessel_cmd->add_option("--lambda", vessel_opt.lambda, "Penalty weight");
    vessel_cmd->add_option("--p", vessel_opt.p, "Penalty exponent");
    vessel_cmd->add_option("--replicates", vessel_opt.replicates, "Replicate count");
    vessel_cmd->add_option("--base-seed", vessel_opt.base_seed, "Base seed");
    vessel_cmd->add_option("--tol", vessel_opt.tol, "Feasibility tolerance (scaled per constraint)");
    vessel_cmd->add_flag("--snap-thickness", vessel_opt.snap,
                         "Round thickness variables up to 1/16 inch stock");
    vessel_cmd->add_option("--out", vessel_opt.out_path, "Output file (default stdout)");

    LandscapeOptions landscape_opt;
    CLI::App* landscape_cmd = app.add_subcommand("landscape", "Sample a 2-d landscape grid");
    landscape_cmd->add_option("--function", landscape_opt.function, "Test function name")
        ->required();
    landscape_cmd->add_option("--resolution", landscape_opt.resolution,
                              "Grid points per axis (>= 2)");
    landscape_cmd->add_option("--seed", landscape_opt.seed, "Realization seed");
    landscape_cmd->add_option("--out", landscape_opt.out_path, "Output file (default stdout)");
    landscape_cmd->add_option("--format", landscape_opt.format, "csv or json")
        ->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help and friends
        }
        app.exit(e);
        return 2;
    }

    try {
        bench_opt.seed_given = seed_opt->count() > 0;
        if (run_cmd->parsed()) return do_run(run_opt);
        if (bench_cmd->parsed()) return do_bench(bench_opt);
        if (vessel_cmd->parsed()) return do_vessel(vessel_opt);
        if (landscape_cmd->parsed()) return do_landscape(landscape_opt);
    } catch (const ffa::LookupError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ffa::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ffa::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
