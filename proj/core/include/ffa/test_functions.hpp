#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ffa/objective.hpp"
#include "ffa/random.hpp"
#include "ffa/types.hpp"

namespace ffa {

enum class RealizationPolicy { Frozen, ResamplePerEvaluation };

/// The random draws consumed by a stochastic test function. A frozen
/// realization fixes its draws once and returns the same values forever; a
/// resampling realization refreshes every draw on each access, turning the
/// objective into a genuinely noisy one.
class Realization {
public:
    /// Draws `count` uniform [0,1) values now; fixed afterwards.
    static Realization frozen(RandomSource rng, std::size_t count);

    /// Frozen realization with explicitly given values.
    static Realization frozen(RealVector draws);

    /// Redraws all `count` values from its own stream on every access.
    static Realization resampling(RandomSource rng, std::size_t count);

    RealizationPolicy policy() const { return policy_; }
    std::size_t size() const { return draws_.size(); }

    /// The draw vector for one evaluation. Stable for Frozen; refreshed for
    /// ResamplePerEvaluation (hence non-const).
    const RealVector& values();

private:
    Realization() = default;
    RealizationPolicy policy_ = RealizationPolicy::Frozen;
    RealVector draws_;
    std::optional<RandomSource> source_;
};

// --- The suite, as free functions ------------------------------------------

/// Ackley's function (any dimension, minimum 0 at the origin).
double ackley(const RealVector& x);

/// Four-peak function (sum |x_i|) * exp(-sum x_i^2); maximization target with
/// 2^d equal peaks at (+-1/sqrt(2d), ...).
double four_peak(const RealVector& x);

/// Standing-wave function
/// [exp(-sum (x_i/beta)^(2m)) - 2 exp(-sum (x_i - pi)^2)] * prod cos^2(x_i);
/// minimization target with its global minimum at (pi, ..., pi).
double standing_wave(const RealVector& x, double beta = 15.0, int m = 5);

/// Forest-like landscape (sum |x_i|) * exp(-sum sin(x_i^2)); minimum 0 at the
/// origin, non-smooth there.
double forest(const RealVector& x);

/// Stochastic 2-d grid landscape
/// -5 exp(-beta ((x-pi)^2 + (y-pi)^2)) - sum_{i,j=1..K} eps_ij exp(-alpha ((x-i)^2 + (y-j)^2))
/// with eps ~ Uniform[0,1) supplied by the realization (row-major, K*K values).
/// The deterministic -5 peak keeps the global minimum at (pi, pi).
double stochastic_grid(double x, double y, Realization& realization,
                       double alpha = 1.0, double beta = 1.0, int K = 10);

/// Vector convenience form of the grid landscape; xy must have dimension 2.
double stochastic_grid(const RealVector& xy, Realization& realization,
                       double alpha = 1.0, double beta = 1.0, int K = 10);

/// Stochastic powers function sum eps_i * |x_i|^i (1-based exponents), with
/// eps ~ Uniform[0,1) from the realization (d values). Non-negative; minimum 0
/// at the origin for every realization.
double stochastic_powers(const RealVector& x, Realization& realization);

/// Plain sphere sum x_i^2 (smooth sanity baseline).
double sphere(const RealVector& x);

// --- Registry ---------------------------------------------------------------

/// Registry entry: a test function resolved to a concrete dimension.
struct TestFunction {
    std::string name;
    int dimension = 0;
    Bounds bounds;
    Sense sense = Sense::Minimize;
    bool stochastic = false;
    std::size_t realization_size = 0;  // 0 for deterministic entries
    std::optional<KnownOptimum> optimum;
    std::function<double(const RealVector&, Realization*)> raw;

    /// Objective for a deterministic entry. Throws ConfigError on stochastic
    /// entries (those need a realization).
    Objective objective() const;

    /// Objective for a stochastic entry bound to the given realization. The
    /// realization is shared, mutable state; one concurrent run may use it.
    Objective objective(std::shared_ptr<Realization> realization) const;
};

/// Looks up a function by name at the given dimension. Unknown names throw
/// LookupError (listing the valid names); dimensions the function does not
/// support throw ConfigError.
TestFunction registry(const std::string& name, int dimension);

/// All registered names, sorted.
std::vector<std::string> registry_names();

}  // namespace ffa
