#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffa/constrained.hpp"
#include "ffa/engine.hpp"
#include "ffa/test_functions.hpp"
#include "ffa/types.hpp"

namespace ffa {

/// Success of one replicate. When both parts are present, both must hold.
/// Targets with documented optimum metadata require at least one part.
struct SuccessPredicate {
    std::optional<double> value_threshold;     // best <= thr (Min) / best >= thr (Max)
    std::optional<double> position_tolerance;  // ||best - optimum.position|| <= tol
};

enum class OutputFormat { Json, Csv };

struct ExperimentConfig {
    std::string target;  // registry name
    int dimension = 2;
    FaParams fa;  // fa.seed is ignored; replicate k uses the stream child(base_seed, k)
    int replicates = 50;
    std::uint64_t base_seed = 0;
    SuccessPredicate success;
    RealizationPolicy realization_policy = RealizationPolicy::Frozen;
    OutputFormat format = OutputFormat::Json;
};

struct ReplicateRow {
    int replicate = 0;
    std::uint64_t seed = 0;  // seed of the replicate's derived stream
    double best_value = 0.0;
    RealVector best_position;
    long long evaluations = 0;
    bool success = false;
};

struct Aggregates {
    double success_rate = 0.0;
    double best_value = 0.0;    // best across replicates, per optimization sense
    double median_value = 0.0;  // even count: mean of the two middle values
    double worst_value = 0.0;
    double mean_evaluations = 0.0;
};

struct ExperimentReport {
    ExperimentConfig config;
    std::vector<ReplicateRow> rows;  // ordered by replicate index
    Aggregates aggregates;
};

/// Runs `replicates` independent seeded runs. Replicate k consumes the stream
/// child(base_seed, k); stochastic targets draw their realization from the
/// further-derived stream child(1) of that replicate stream, so run noise and
/// realization noise never alias. `jobs` = 0 picks the hardware concurrency;
/// results are identical for any jobs value.
ExperimentReport run_experiment(const ExperimentConfig& config, int jobs = 0);

/// Peak-occupation statistics over the final populations of the same
/// replicate runs run_experiment would perform.
struct CaptureReport {
    std::vector<RealVector> peaks;
    double radius = 0.0;
    int replicates = 0;
    std::vector<int> per_peak_runs;           // runs with >= 1 member near the peak
    std::vector<long long> per_peak_members;  // members near the peak, all runs
    int all_occupied_runs = 0;                // runs with every peak occupied
    double all_occupied_fraction = 0.0;
};

CaptureReport multimodal_capture(const ExperimentConfig& config,
                                 const std::vector<RealVector>& peaks, double radius,
                                 int jobs = 0);

/// Deterministic compass-search baseline: per iteration it evaluates the
/// center and its four axis neighbors at step h, moves to the best improving
/// neighbor or halves h, and stops below min_step or at the evaluation
/// budget. Start point and (for stochastic targets) realization draws come
/// from the same replicate streams as run_experiment.
struct HillClimbParams {
    double initial_step = 0.2;  // in coordinate units
    double shrink = 0.5;
    double min_step = 1e-4;
    int max_evaluations = 300;
};

ExperimentReport hill_climb_experiment(const ExperimentConfig& config,
                                       const HillClimbParams& climb = {}, int jobs = 0);

/// Full 2-d landscape sample on an inclusive (resolution x resolution) grid;
/// row-major with the first coordinate as the row axis. Stochastic targets
/// use one frozen realization derived from `seed`.
struct LandscapeGrid {
    std::string target;
    int resolution = 0;
    std::uint64_t seed = 0;
    RealVector xs;      // size resolution
    RealVector ys;      // size resolution
    RealVector values;  // size resolution^2, values[ix * resolution + iy]
};

/// Samples the target over its registry domain, or over `window` when given
/// (e.g. a zoomed view around the peaks).
LandscapeGrid landscape_grid(const std::string& target, int resolution, std::uint64_t seed);
LandscapeGrid landscape_grid(const std::string& target, int resolution, std::uint64_t seed,
                             const Bounds& window);

/// Pressure-vessel replicate experiment (constrained layer on top of the
/// engine). Snap, when enabled, rounds thickness variables up to the stock
/// grid before costing and feasibility-checking each row.
struct VesselExperimentConfig {
    FaParams fa;
    PenaltyParams penalty;
    int replicates = 30;
    std::uint64_t base_seed = 0;
    double tol = 1e-3;
    bool snap = false;
};

struct VesselRow {
    int replicate = 0;
    std::uint64_t seed = 0;
    double penalized_value = 0.0;
    double cost = 0.0;
    bool feasible = false;
    double max_violation = 0.0;
    int worst_index = -1;
    RealVector position;
};

struct VesselReport {
    VesselExperimentConfig config;
    std::vector<VesselRow> rows;
    int feasible_count = 0;
    double best_feasible_cost = 0.0;  // +inf when no replicate is feasible
    RealVector best_feasible_position;
    double best_penalized = 0.0;
};

VesselReport run_vessel_experiment(const VesselExperimentConfig& config, int jobs = 0);

// --- Frozen suite configurations -------------------------------------------
// Hyper-parameters chosen and validated for this library; replicate counts
// and seeds default to the values the acceptance experiments use.

ExperimentConfig suite_four_peak(int replicates = 50, std::uint64_t base_seed = 20250801);
ExperimentConfig suite_standing_wave(int replicates = 50, std::uint64_t base_seed = 20250802);
ExperimentConfig suite_stochastic_grid(int replicates = 50, std::uint64_t base_seed = 20250803);
ExperimentConfig suite_grid_baseline(int replicates = 50, std::uint64_t base_seed = 20250804);
ExperimentConfig suite_sphere(int replicates = 50, std::uint64_t base_seed = 20250805);
VesselExperimentConfig suite_vessel(int replicates = 30, std::uint64_t base_seed = 20250806);

// --- Serialization ----------------------------------------------------------
// Byte-deterministic emitters: fixed key order, '\n' newlines, floats with 17
// significant digits (round-trip exact), non-finite floats as null in JSON.

std::string format_double(double v);

std::string to_csv(const ExperimentReport& report);
std::string to_json(const ExperimentReport& report);
std::string to_csv(const VesselReport& report);
std::string to_json(const VesselReport& report);
std::string to_csv(const LandscapeGrid& grid);
std::string to_json(const LandscapeGrid& grid);
std::string to_json(const CaptureReport& report);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace ffa
