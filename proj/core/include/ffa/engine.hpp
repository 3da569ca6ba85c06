#pragma once

#include <cstdint>
#include <vector>

#include "ffa/objective.hpp"
#include "ffa/random.hpp"
#include "ffa/types.hpp"

namespace ffa {

enum class NoiseKind { Gaussian, UniformCentered };

/// Hyper-parameters of one firefly run. `scales` holds the per-axis walk
/// scale S; empty means all ones. `sense` is authoritative for the run and is
/// normally copied from the objective's metadata. `pso_limit` switches the
/// pairwise sweep to moves toward the current global best only (the
/// accelerated-PSO limit of the algorithm, reached as gamma -> 0).
struct FaParams {
    double alpha = 0.2;
    double beta0 = 1.0;
    double gamma = 1.0;
    double m_exp = 2.0;
    int population = 25;
    int max_iterations = 20;
    RealVector scales;
    double alpha_decay = 1.0;
    Sense sense = Sense::Minimize;
    std::uint64_t seed = 0;
    NoiseKind noise = NoiseKind::Gaussian;
    bool pso_limit = false;
};

/// Throws ConfigError on invalid parameters; called by run() before any
/// objective evaluation.
void validate(const FaParams& params, int dimension);

struct FireflyState {
    RealVector position;
    double intensity = 0.0;  // brightness, the quantity being maximized
};

struct TraceRecord {
    int iteration = 0;          // 0 = initialization, then 1..max_iterations
    double best_so_far = 0.0;   // objective-scale value of the best point seen
    double current_best = 0.0;  // objective-scale value of the brightest member
    double alpha_used = 0.0;    // effective alpha of the move phase (0 at init)
};

struct RunResult {
    RealVector best_position;
    double best_value = 0.0;
    long long evaluations = 0;
    std::vector<TraceRecord> trace;
    std::vector<FireflyState> final_population;  // ranked brightest-first
};

/// Counting evaluation wrapper; tracks the best point ever evaluated
/// (elitism lives here, not in the population).
class Evaluator {
public:
    Evaluator(const Objective& objective, Sense sense);

    /// Evaluates the objective, updates the running best, returns brightness.
    double operator()(const RealVector& x);

    long long evaluations() const { return count_; }
    const RealVector& best_position() const { return best_position_; }
    double best_value() const { return best_value_; }
    const Objective& objective() const { return *objective_; }
    Sense sense() const { return sense_; }

private:
    const Objective* objective_;
    Sense sense_;
    long long count_ = 0;
    double best_brightness_;
    double best_value_;
    RealVector best_position_;
};

/// beta(r) = beta0 * exp(-gamma * r^m_exp).
double attractiveness(double r, const FaParams& params);

/// One attracted move of xi toward the brighter xj:
/// xi + beta(r) * (xj - xi) + alpha * S o eps, unclamped.
/// Noise is drawn even when alpha is zero, so draw counts do not depend on
/// parameter values. `params.alpha` is the effective alpha for this move.
RealVector move_towards(const RealVector& xi, const RealVector& xj,
                        const FaParams& params, RandomSource& rng);

/// Pure random walk xi + alpha * S o eps, unclamped.
RealVector random_walk(const RealVector& xi, const FaParams& params, RandomSource& rng);

/// Stable sort, brightest first; ties keep their current relative order.
void rank_brightest_first(std::vector<FireflyState>& population);

/// One generation: asynchronous pairwise sweep (i over the population, j over
/// 0..i, dimmer moves toward brighter with immediate re-evaluation), then a
/// random walk for every firefly that made no move during the sweep and has
/// no strictly brighter firefly anywhere (i.e. the current top, including
/// ties), then re-ranking. `iteration_index` is 0-based and sets the
/// effective alpha alpha * alpha_decay^iteration_index.
void step(std::vector<FireflyState>& population, Evaluator& eval,
          const FaParams& params, RandomSource& rng, int iteration_index);

/// Full run: initialize uniformly in bounds from the stream seeded with
/// params.seed, evaluate, rank, then max_iterations steps. The reported best
/// is the best point ever evaluated.
RunResult run(const Objective& objective, const FaParams& params);

/// As above but consuming draws from a caller-provided stream (the stream's
/// prior consumption is the caller's business; params.seed is ignored).
RunResult run(const Objective& objective, const FaParams& params, RandomSource& rng);

/// As above with explicit initial positions (testing hook). Positions are
/// clamped into bounds; their count must equal params.population.
RunResult run(const Objective& objective, const FaParams& params,
              const std::vector<RealVector>& initial_positions);

RunResult run(const Objective& objective, const FaParams& params,
              const std::vector<RealVector>& initial_positions, RandomSource& rng);

/// Copy of params with the PSO-limit move rule enabled.
FaParams pso_limit_equivalence_mode(FaParams params);

}  // namespace ffa
