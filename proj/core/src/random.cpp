#include "ffa/random.hpp"

#include <cmath>

#include "ffa/types.hpp"

namespace ffa {
namespace {

// splitmix64 finalizer; decorrelates child seeds even for adjacent indices.
std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

double RandomSource::uniform01() {
    // Top 53 bits of the engine output scaled into [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
    if (lo > hi) {
        throw ConfigError("RandomSource::uniform: lo must not exceed hi");
    }
    return lo + (hi - lo) * uniform01();
}

double RandomSource::gaussian() {
    if (has_cached_gaussian_) {
        has_cached_gaussian_ = false;
        return cached_gaussian_;
    }
    const double u1 = 1.0 - uniform01();  // (0, 1]; keeps log() finite
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * 3.14159265358979323846 * u2;
    cached_gaussian_ = radius * std::sin(angle);
    has_cached_gaussian_ = true;
    return radius * std::cos(angle);
}

RandomSource RandomSource::child(std::uint64_t index) const {
    const std::uint64_t stream = seed_ + 0x9E3779B97F4A7C15ULL * (index + 1);
    return RandomSource(mix64(stream));
}

}  // namespace ffa
