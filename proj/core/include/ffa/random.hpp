#pragma once

#include <cstdint>
#include <random>

namespace ffa {

/// Seeded stream of pseudo-random draws. Two sources built with the same seed
/// produce identical draw sequences; child streams are derived from the
/// construction seed and an index, independent of how many draws the parent
/// has already made.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed);

    std::uint64_t seed() const { return seed_; }

    /// Uniform draw in [0, 1).
    double uniform01();

    /// Uniform draw in [lo, hi). Throws ConfigError if lo > hi.
    double uniform(double lo, double hi);

    /// Standard normal draw (Box-Muller, one spare value cached).
    double gaussian();

    /// Independent stream keyed by (construction seed, index).
    RandomSource child(std::uint64_t index) const;

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double cached_gaussian_ = 0.0;
    bool has_cached_gaussian_ = false;
};

}  // namespace ffa
