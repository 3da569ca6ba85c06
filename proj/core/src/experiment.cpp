#include "ffa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <memory>
#include <mutex>
#include <thread>

namespace ffa {
namespace {

int resolve_jobs(int jobs, int tasks) {
    if (jobs < 0) throw ConfigError("jobs must be non-negative");
    if (jobs == 0) {
        const unsigned hw = std::thread::hardware_concurrency();
        jobs = hw == 0 ? 1 : static_cast<int>(hw);
    }
    return std::min(jobs, std::max(1, tasks));
}

/// Runs fn(0..tasks-1), possibly in parallel. Task order never affects the
/// caller because each task writes only its own slot.
template <typename Fn>
void parallel_for(int tasks, int jobs, Fn&& fn) {
    jobs = resolve_jobs(jobs, tasks);
    if (jobs <= 1) {
        for (int k = 0; k < tasks; ++k) fn(k);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&] {
            for (int k = next.fetch_add(1); k < tasks; k = next.fetch_add(1)) {
                try {
                    fn(k);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

void validate_experiment(const ExperimentConfig& config, const TestFunction& tf) {
    if (config.replicates < 1) {
        throw ConfigError("experiment: replicates must be at least 1");
    }
    validate(config.fa, config.dimension);
    if (tf.optimum && !config.success.value_threshold && !config.success.position_tolerance) {
        throw ConfigError("experiment: '" + config.target +
                          "' has documented optimum metadata; define a success predicate");
    }
    if (config.success.position_tolerance) {
        if (!(*config.success.position_tolerance > 0.0)) {
            throw ConfigError("experiment: position_tolerance must be positive");
        }
        if (!tf.optimum) {
            throw ConfigError("experiment: '" + config.target +
                              "' has no documented optimum for a position-based predicate");
        }
    }
    if (config.success.value_threshold && !std::isfinite(*config.success.value_threshold)) {
        throw ConfigError("experiment: value_threshold must be finite");
    }
}

bool replicate_success(const ExperimentConfig& config, const TestFunction& tf,
                       double best_value, const RealVector& best_position) {
    bool any = false;
    bool ok = true;
    if (config.success.value_threshold) {
        any = true;
        ok = ok && (tf.sense == Sense::Maximize ? best_value >= *config.success.value_threshold
                                                : best_value <= *config.success.value_threshold);
    }
    if (config.success.position_tolerance) {
        any = true;
        ok = ok && distance(best_position, tf.optimum->position) <=
                       *config.success.position_tolerance;
    }
    return any && ok;
}

struct ReplicateOutcome {
    std::uint64_t seed = 0;
    RunResult result;
};

/// One replicate: stream child(base_seed, k) drives the run; stochastic
/// targets draw their realization from that stream's own child(1).
ReplicateOutcome run_replicate(const ExperimentConfig& config, const TestFunction& tf, int k) {
    RandomSource stream =
        RandomSource(config.base_seed).child(static_cast<std::uint64_t>(k));
    ReplicateOutcome out;
    out.seed = stream.seed();

    FaParams params = config.fa;
    params.sense = tf.sense;
    params.seed = stream.seed();

    if (tf.stochastic) {
        RandomSource realization_stream = stream.child(1);
        auto realization = std::make_shared<Realization>(
            config.realization_policy == RealizationPolicy::Frozen
                ? Realization::frozen(realization_stream, tf.realization_size)
                : Realization::resampling(realization_stream, tf.realization_size));
        out.result = run(tf.objective(realization), params, stream);
    } else {
        out.result = run(tf.objective(), params, stream);
    }
    return out;
}

Aggregates aggregate_rows(const std::vector<ReplicateRow>& rows, Sense sense) {
    Aggregates agg;
    std::vector<double> values;
    values.reserve(rows.size());
    long long successes = 0;
    double eval_sum = 0.0;
    for (const ReplicateRow& row : rows) {
        values.push_back(row.best_value);
        if (row.success) ++successes;
        eval_sum += static_cast<double>(row.evaluations);
    }
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    agg.success_rate = static_cast<double>(successes) / static_cast<double>(n);
    agg.best_value = sense == Sense::Maximize ? values.back() : values.front();
    agg.worst_value = sense == Sense::Maximize ? values.front() : values.back();
    agg.median_value = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    agg.mean_evaluations = eval_sum / static_cast<double>(n);
    return agg;
}

}  // namespace

ExperimentReport run_experiment(const ExperimentConfig& config, int jobs) {
    const TestFunction tf = registry(config.target, config.dimension);
    validate_experiment(config, tf);

    ExperimentReport report;
    report.config = config;
    report.rows.resize(static_cast<std::size_t>(config.replicates));
    parallel_for(config.replicates, jobs, [&](int k) {
        ReplicateOutcome out = run_replicate(config, tf, k);
        ReplicateRow& row = report.rows[static_cast<std::size_t>(k)];
        row.replicate = k;
        row.seed = out.seed;
        row.best_value = out.result.best_value;
        row.best_position = std::move(out.result.best_position);
        row.evaluations = out.result.evaluations;
        row.success = replicate_success(config, tf, row.best_value, row.best_position);
    });
    report.aggregates = aggregate_rows(report.rows, tf.sense);
    return report;
}

CaptureReport multimodal_capture(const ExperimentConfig& config,
                                 const std::vector<RealVector>& peaks, double radius,
                                 int jobs) {
    const TestFunction tf = registry(config.target, config.dimension);
    validate_experiment(config, tf);
    if (peaks.empty()) {
        throw ConfigError("multimodal_capture: need at least one peak");
    }
    for (const RealVector& peak : peaks) {
        if (static_cast<int>(peak.size()) != config.dimension) {
            throw DimensionError("multimodal_capture: peak dimension " +
                                 std::to_string(peak.size()) + " does not match experiment");
        }
    }
    if (!(radius > 0.0)) {
        throw ConfigError("multimodal_capture: radius must be positive");
    }

    CaptureReport report;
    report.peaks = peaks;
    report.radius = radius;
    report.replicates = config.replicates;
    report.per_peak_runs.assign(peaks.size(), 0);
    report.per_peak_members.assign(peaks.size(), 0);

    std::vector<std::vector<int>> members(static_cast<std::size_t>(config.replicates));
    parallel_for(config.replicates, jobs, [&](int k) {
        ReplicateOutcome out = run_replicate(config, tf, k);
        std::vector<int>& counts = members[static_cast<std::size_t>(k)];
        counts.assign(peaks.size(), 0);
        for (const FireflyState& firefly : out.result.final_population) {
            for (std::size_t p = 0; p < peaks.size(); ++p) {
                if (distance(firefly.position, peaks[p]) <= radius) ++counts[p];
            }
        }
    });

    for (const std::vector<int>& counts : members) {
        bool all = true;
        for (std::size_t p = 0; p < peaks.size(); ++p) {
            report.per_peak_members[p] += counts[p];
            if (counts[p] > 0) {
                ++report.per_peak_runs[p];
            } else {
                all = false;
            }
        }
        if (all) ++report.all_occupied_runs;
    }
    report.all_occupied_fraction =
        static_cast<double>(report.all_occupied_runs) / static_cast<double>(config.replicates);
    return report;
}

ExperimentReport hill_climb_experiment(const ExperimentConfig& config,
                                       const HillClimbParams& climb, int jobs) {
    const TestFunction tf = registry(config.target, config.dimension);
    if (config.replicates < 1) {
        throw ConfigError("experiment: replicates must be at least 1");
    }
    if (config.success.position_tolerance && !tf.optimum) {
        throw ConfigError("experiment: '" + config.target +
                          "' has no documented optimum for a position-based predicate");
    }
    if (!(climb.initial_step > 0.0) || !(climb.min_step > 0.0) ||
        climb.min_step > climb.initial_step) {
        throw ConfigError("hill_climb: steps must satisfy 0 < min_step <= initial_step");
    }
    if (!(climb.shrink > 0.0) || climb.shrink >= 1.0) {
        throw ConfigError("hill_climb: shrink must lie in (0, 1)");
    }
    if (climb.max_evaluations < 1) {
        throw ConfigError("hill_climb: max_evaluations must be at least 1");
    }

    ExperimentReport report;
    report.config = config;
    report.rows.resize(static_cast<std::size_t>(config.replicates));
    const int d = config.dimension;

    parallel_for(config.replicates, jobs, [&](int k) {
        RandomSource stream =
            RandomSource(config.base_seed).child(static_cast<std::uint64_t>(k));
        ReplicateRow& row = report.rows[static_cast<std::size_t>(k)];
        row.replicate = k;
        row.seed = stream.seed();

        Objective obj;
        if (tf.stochastic) {
            RandomSource realization_stream = stream.child(1);
            auto realization = std::make_shared<Realization>(
                config.realization_policy == RealizationPolicy::Frozen
                    ? Realization::frozen(realization_stream, tf.realization_size)
                    : Realization::resampling(realization_stream, tf.realization_size));
            obj = tf.objective(realization);
        } else {
            obj = tf.objective();
        }

        RealVector center(static_cast<std::size_t>(d));
        for (std::size_t a = 0; a < center.size(); ++a) {
            center[a] = stream.uniform(obj.bounds.lower[a], obj.bounds.upper[a]);
        }

        double h = climb.initial_step;
        long long evals = 0;
        double final_value = 0.0;
        bool evaluated = false;
        // Each pass costs 1 + 2d evaluations: the center (re-sampled fresh,
        // which matters under per-evaluation noise) plus both neighbors on
        // every axis.
        while (h >= climb.min_step &&
               evals + 1 + 2 * static_cast<long long>(d) <= climb.max_evaluations) {
            const double fc = obj(center);
            ++evals;
            double best_v = std::numeric_limits<double>::infinity();
            RealVector best_x;
            for (int axis = 0; axis < d; ++axis) {
                for (double sign : {+1.0, -1.0}) {
                    RealVector x = center;
                    x[static_cast<std::size_t>(axis)] += sign * h;
                    x = clamp(std::move(x), obj.bounds);
                    const double v = obj(x);
                    ++evals;
                    if (v < best_v) {
                        best_v = v;
                        best_x = std::move(x);
                    }
                }
            }
            if (best_v < fc) {
                center = std::move(best_x);
                final_value = best_v;
            } else {
                h *= climb.shrink;
                final_value = fc;
            }
            evaluated = true;
        }
        if (!evaluated) {
            final_value = obj(center);
            evals = 1;
        }

        row.best_value = final_value;
        row.best_position = center;
        row.evaluations = evals;
        row.success = replicate_success(config, tf, row.best_value, row.best_position);
    });
    report.aggregates = aggregate_rows(report.rows, tf.sense);
    return report;
}

namespace {

LandscapeGrid landscape_grid_impl(const std::string& target, int resolution,
                                  std::uint64_t seed, const Bounds* window) {
    if (resolution < 2) {
        throw ConfigError("landscape_grid: resolution must be at least 2");
    }
    const TestFunction tf = registry(target, 2);
    if (window != nullptr && window->dimension() != 2) {
        throw DimensionError("landscape_grid: window must be 2-dimensional");
    }

    LandscapeGrid grid;
    grid.target = target;
    grid.resolution = resolution;
    grid.seed = seed;

    Objective obj;
    if (tf.stochastic) {
        auto realization = std::make_shared<Realization>(
            Realization::frozen(RandomSource(seed), tf.realization_size));
        obj = tf.objective(realization);
    } else {
        obj = tf.objective();
    }
    const Bounds& box = window != nullptr ? *window : obj.bounds;

    const std::size_t n = static_cast<std::size_t>(resolution);
    grid.xs.resize(n);
    grid.ys.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(resolution - 1);
        grid.xs[i] = box.lower[0] + t * (box.upper[0] - box.lower[0]);
        grid.ys[i] = box.lower[1] + t * (box.upper[1] - box.lower[1]);
    }
    grid.values.resize(n * n);
    RealVector point(2);
    for (std::size_t ix = 0; ix < n; ++ix) {
        for (std::size_t iy = 0; iy < n; ++iy) {
            point[0] = grid.xs[ix];
            point[1] = grid.ys[iy];
            grid.values[ix * n + iy] = obj(point);
        }
    }
    return grid;
}

}  // namespace

LandscapeGrid landscape_grid(const std::string& target, int resolution, std::uint64_t seed) {
    return landscape_grid_impl(target, resolution, seed, nullptr);
}

LandscapeGrid landscape_grid(const std::string& target, int resolution, std::uint64_t seed,
                             const Bounds& window) {
    return landscape_grid_impl(target, resolution, seed, &window);
}

VesselReport run_vessel_experiment(const VesselExperimentConfig& config, int jobs) {
    if (config.replicates < 1) {
        throw ConfigError("vessel experiment: replicates must be at least 1");
    }
    if (!(config.tol >= 0.0)) {
        throw ConfigError("vessel experiment: tol must be non-negative");
    }
    validate(config.fa, 4);
    const ConstrainedProblem problem = vessel_problem();
    const PenaltyParams penalty = config.penalty;  // validated inside penalized()

    VesselReport report;
    report.config = config;
    report.rows.resize(static_cast<std::size_t>(config.replicates));
    parallel_for(config.replicates, jobs, [&](int k) {
        RandomSource stream =
            RandomSource(config.base_seed).child(static_cast<std::uint64_t>(k));
        VesselRow& row = report.rows[static_cast<std::size_t>(k)];
        row.replicate = k;
        row.seed = stream.seed();

        FaParams params = config.fa;
        params.seed = stream.seed();
        VesselSolution solution = solve_vessel(params, penalty, config.tol, stream);

        RealVector position = solution.result.best_position;
        if (config.snap) {
            position = snap_thickness(std::move(position));
        }
        const FeasibilityReport feasibility = is_feasible(problem, position, config.tol);
        row.position = std::move(position);
        row.cost = problem.objective(row.position);
        row.penalized_value = penalized_value(problem, penalty, row.position);
        row.feasible = feasibility.feasible;
        row.max_violation = feasibility.max_violation;
        row.worst_index = feasibility.worst_index;
    });

    report.best_feasible_cost = std::numeric_limits<double>::infinity();
    report.best_penalized = std::numeric_limits<double>::infinity();
    for (const VesselRow& row : report.rows) {
        if (row.feasible) {
            ++report.feasible_count;
            if (row.cost < report.best_feasible_cost) {
                report.best_feasible_cost = row.cost;
                report.best_feasible_position = row.position;
            }
        }
        report.best_penalized = std::min(report.best_penalized, row.penalized_value);
    }
    return report;
}

// --- Frozen suite configurations -------------------------------------------

namespace {

ExperimentConfig suite_base(const std::string& target, int population, int iterations,
                            double gamma, RealVector scales, double decay) {
    ExperimentConfig c;
    c.target = target;
    c.dimension = 2;
    c.fa.alpha = 0.2;
    c.fa.beta0 = 1.0;
    c.fa.gamma = gamma;
    c.fa.m_exp = 2.0;
    c.fa.population = population;
    c.fa.max_iterations = iterations;
    c.fa.scales = std::move(scales);
    c.fa.alpha_decay = decay;
    return c;
}

}  // namespace

ExperimentConfig suite_four_peak(int replicates, std::uint64_t base_seed) {
    ExperimentConfig c = suite_base("four_peak", 25, 20, 1.0, RealVector{20.0, 20.0}, 0.8);
    c.fa.sense = Sense::Maximize;
    c.replicates = replicates;
    c.base_seed = base_seed;
    c.success.value_threshold = 0.6;
    return c;
}

ExperimentConfig suite_standing_wave(int replicates, std::uint64_t base_seed) {
    // Soft long-range attraction (m = 1) keeps the swarm coherent while the
    // bounded uniform kicks sweep the plateau; harder decay then locks onto
    // the well once it is found. Selected by a wide parameter scan.
    ExperimentConfig c =
        suite_base("standing_wave", 20, 15, 0.1, RealVector{10.0, 10.0}, 0.5);
    c.fa.m_exp = 1.0;
    c.fa.noise = NoiseKind::UniformCentered;
    c.replicates = replicates;
    c.base_seed = base_seed;
    c.success.value_threshold = -0.95;
    return c;
}

ExperimentConfig suite_stochastic_grid(int replicates, std::uint64_t base_seed) {
    ExperimentConfig c =
        suite_base("stochastic_grid", 20, 15, 1.0, RealVector{10.0, 10.0}, 0.8);
    c.replicates = replicates;
    c.base_seed = base_seed;
    c.success.position_tolerance = 0.3;
    c.realization_policy = RealizationPolicy::Frozen;
    return c;
}

ExperimentConfig suite_grid_baseline(int replicates, std::uint64_t base_seed) {
    ExperimentConfig c = suite_stochastic_grid(replicates, base_seed);
    c.realization_policy = RealizationPolicy::ResamplePerEvaluation;
    return c;
}

ExperimentConfig suite_sphere(int replicates, std::uint64_t base_seed) {
    ExperimentConfig c = suite_base("sphere", 25, 20, 1.0, RealVector{20.0, 20.0}, 0.75);
    c.replicates = replicates;
    c.base_seed = base_seed;
    c.success.value_threshold = 1e-2;
    return c;
}

VesselExperimentConfig suite_vessel(int replicates, std::uint64_t base_seed) {
    VesselExperimentConfig c;
    c.fa.alpha = 0.2;
    c.fa.beta0 = 1.0;
    c.fa.gamma = 3e-4;
    c.fa.m_exp = 2.0;
    c.fa.population = 40;
    c.fa.max_iterations = 20;
    c.fa.scales = RealVector{6.125, 6.125, 190.0, 190.0};
    c.fa.alpha_decay = 0.65;
    c.fa.sense = Sense::Minimize;
    c.penalty.lambda = 1e7;
    c.penalty.p = 2.0;
    c.replicates = replicates;
    c.base_seed = base_seed;
    c.tol = 1e-3;
    return c;
}

// --- Serialization ----------------------------------------------------------

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::string json_double(double v) {
    return std::isfinite(v) ? format_double(v) : std::string("null");
}

std::string json_string(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
    out += '"';
    return out;
}

std::string json_vector(const RealVector& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += json_double(v[i]);
    }
    out += ']';
    return out;
}

std::string json_optional(const std::optional<double>& v) {
    return v ? json_double(*v) : std::string("null");
}

const char* sense_name(Sense sense) {
    return sense == Sense::Maximize ? "maximize" : "minimize";
}

const char* policy_name(RealizationPolicy policy) {
    return policy == RealizationPolicy::Frozen ? "frozen" : "resample_per_evaluation";
}

const char* noise_name(NoiseKind noise) {
    return noise == NoiseKind::Gaussian ? "gaussian" : "uniform_centered";
}

std::string json_fa(const FaParams& fa) {
    std::string out = "{";
    out += "\"alpha\": " + json_double(fa.alpha);
    out += ", \"beta0\": " + json_double(fa.beta0);
    out += ", \"gamma\": " + json_double(fa.gamma);
    out += ", \"m_exp\": " + json_double(fa.m_exp);
    out += ", \"population\": " + std::to_string(fa.population);
    out += ", \"max_iterations\": " + std::to_string(fa.max_iterations);
    out += ", \"scales\": " + json_vector(fa.scales);
    out += ", \"alpha_decay\": " + json_double(fa.alpha_decay);
    out += ", \"sense\": " + json_string(sense_name(fa.sense));
    out += ", \"noise\": " + json_string(noise_name(fa.noise));
    out += ", \"pso_limit\": " + std::string(fa.pso_limit ? "true" : "false");
    out += '}';
    return out;
}

}  // namespace

std::string to_csv(const ExperimentReport& report) {
    std::string out = "replicate,seed,best_value,evaluations,success";
    const std::size_t d = report.rows.empty() ? 0 : report.rows.front().best_position.size();
    for (std::size_t k = 0; k < d; ++k) out += ",pos_" + std::to_string(k);
    out += '\n';
    for (const ReplicateRow& row : report.rows) {
        out += std::to_string(row.replicate);
        out += ',' + std::to_string(row.seed);
        out += ',' + format_double(row.best_value);
        out += ',' + std::to_string(row.evaluations);
        out += row.success ? ",1" : ",0";
        for (double p : row.best_position) out += ',' + format_double(p);
        out += '\n';
    }
    return out;
}

std::string to_json(const ExperimentReport& report) {
    std::string out = "{\n  \"config\": {";
    out += "\"target\": " + json_string(report.config.target);
    out += ", \"dimension\": " + std::to_string(report.config.dimension);
    out += ", \"replicates\": " + std::to_string(report.config.replicates);
    out += ", \"base_seed\": " + std::to_string(report.config.base_seed);
    out += ", \"realization_policy\": " +
           json_string(policy_name(report.config.realization_policy));
    out += ", \"fa\": " + json_fa(report.config.fa);
    out += ", \"success\": {\"value_threshold\": " +
           json_optional(report.config.success.value_threshold);
    out += ", \"position_tolerance\": " +
           json_optional(report.config.success.position_tolerance) + "}";
    out += "},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ReplicateRow& row = report.rows[i];
        out += "    {\"replicate\": " + std::to_string(row.replicate);
        out += ", \"seed\": " + std::to_string(row.seed);
        out += ", \"best_value\": " + json_double(row.best_value);
        out += ", \"best_position\": " + json_vector(row.best_position);
        out += ", \"evaluations\": " + std::to_string(row.evaluations);
        out += ", \"success\": " + std::string(row.success ? "true" : "false") + "}";
        if (i + 1 < report.rows.size()) out += ',';
        out += '\n';
    }
    out += "  ],\n  \"aggregates\": {";
    out += "\"success_rate\": " + json_double(report.aggregates.success_rate);
    out += ", \"best_value\": " + json_double(report.aggregates.best_value);
    out += ", \"median_value\": " + json_double(report.aggregates.median_value);
    out += ", \"worst_value\": " + json_double(report.aggregates.worst_value);
    out += ", \"mean_evaluations\": " + json_double(report.aggregates.mean_evaluations);
    out += "}\n}\n";
    return out;
}

std::string to_csv(const VesselReport& report) {
    std::string out =
        "replicate,seed,penalized_value,cost,feasible,max_violation,worst_index,d1,d2,r,L\n";
    for (const VesselRow& row : report.rows) {
        out += std::to_string(row.replicate);
        out += ',' + std::to_string(row.seed);
        out += ',' + format_double(row.penalized_value);
        out += ',' + format_double(row.cost);
        out += row.feasible ? ",1" : ",0";
        out += ',' + format_double(row.max_violation);
        out += ',' + std::to_string(row.worst_index);
        for (double p : row.position) out += ',' + format_double(p);
        out += '\n';
    }
    return out;
}

std::string to_json(const VesselReport& report) {
    std::string out = "{\n  \"config\": {";
    out += "\"replicates\": " + std::to_string(report.config.replicates);
    out += ", \"base_seed\": " + std::to_string(report.config.base_seed);
    out += ", \"tol\": " + json_double(report.config.tol);
    out += ", \"snap\": " + std::string(report.config.snap ? "true" : "false");
    out += ", \"penalty\": {\"lambda\": " + json_double(report.config.penalty.lambda);
    out += ", \"p\": " + json_double(report.config.penalty.p) + "}";
    out += ", \"fa\": " + json_fa(report.config.fa);
    out += "},\n  \"rows\": [\n";
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const VesselRow& row = report.rows[i];
        out += "    {\"replicate\": " + std::to_string(row.replicate);
        out += ", \"seed\": " + std::to_string(row.seed);
        out += ", \"penalized_value\": " + json_double(row.penalized_value);
        out += ", \"cost\": " + json_double(row.cost);
        out += ", \"feasible\": " + std::string(row.feasible ? "true" : "false");
        out += ", \"max_violation\": " + json_double(row.max_violation);
        out += ", \"worst_index\": " + std::to_string(row.worst_index);
        out += ", \"position\": " + json_vector(row.position) + "}";
        if (i + 1 < report.rows.size()) out += ',';
        out += '\n';
    }
    out += "  ],\n  \"summary\": {";
    out += "\"feasible_count\": " + std::to_string(report.feasible_count);
    out += ", \"best_feasible_cost\": " + json_double(report.best_feasible_cost);
    out += ", \"best_feasible_position\": ";
    out += report.best_feasible_position.empty() ? std::string("null")
                                                 : json_vector(report.best_feasible_position);
    out += ", \"best_penalized\": " + json_double(report.best_penalized);
    out += "}\n}\n";
    return out;
}

std::string to_csv(const LandscapeGrid& grid) {
    std::string out = "x,y,value\n";
    const std::size_t n = static_cast<std::size_t>(grid.resolution);
    for (std::size_t ix = 0; ix < n; ++ix) {
        for (std::size_t iy = 0; iy < n; ++iy) {
            out += format_double(grid.xs[ix]);
            out += ',' + format_double(grid.ys[iy]);
            out += ',' + format_double(grid.values[ix * n + iy]);
            out += '\n';
        }
    }
    return out;
}

std::string to_json(const LandscapeGrid& grid) {
    std::string out = "{\n  \"target\": " + json_string(grid.target);
    out += ",\n  \"resolution\": " + std::to_string(grid.resolution);
    out += ",\n  \"seed\": " + std::to_string(grid.seed);
    out += ",\n  \"xs\": " + json_vector(grid.xs);
    out += ",\n  \"ys\": " + json_vector(grid.ys);
    out += ",\n  \"values\": " + json_vector(grid.values);
    out += "\n}\n";
    return out;
}

std::string to_json(const CaptureReport& report) {
    std::string out = "{\n  \"radius\": " + json_double(report.radius);
    out += ",\n  \"replicates\": " + std::to_string(report.replicates);
    out += ",\n  \"peaks\": [";
    for (std::size_t p = 0; p < report.peaks.size(); ++p) {
        if (p > 0) out += ", ";
        out += json_vector(report.peaks[p]);
    }
    out += "],\n  \"per_peak_runs\": [";
    for (std::size_t p = 0; p < report.per_peak_runs.size(); ++p) {
        if (p > 0) out += ", ";
        out += std::to_string(report.per_peak_runs[p]);
    }
    out += "],\n  \"per_peak_members\": [";
    for (std::size_t p = 0; p < report.per_peak_members.size(); ++p) {
        if (p > 0) out += ", ";
        out += std::to_string(report.per_peak_members[p]);
    }
    out += "],\n  \"all_occupied_runs\": " + std::to_string(report.all_occupied_runs);
    out += ",\n  \"all_occupied_fraction\": " + json_double(report.all_occupied_fraction);
    out += "\n}\n";
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw ConfigError("failed while writing '" + path + "'");
    }
}

}  // namespace ffa
