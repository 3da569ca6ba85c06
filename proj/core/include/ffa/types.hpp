#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ffa {

using RealVector = std::vector<double>;

/// Thrown when two vectors (or a vector and a bounds box) disagree in dimension.
class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a configuration value is invalid (non-positive population,
/// malformed bounds, bad hyper-parameters, ...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Thrown when a name is not present in a registry.
class LookupError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Axis-aligned box constraint. Every coordinate satisfies lower[k] < upper[k].
struct Bounds {
    RealVector lower;
    RealVector upper;

    Bounds() = default;

    Bounds(RealVector lo, RealVector hi) : lower(std::move(lo)), upper(std::move(hi)) {
        if (lower.size() != upper.size()) {
            throw DimensionError("Bounds: lower and upper differ in dimension (" +
                                 std::to_string(lower.size()) + " vs " +
                                 std::to_string(upper.size()) + ")");
        }
        if (lower.empty()) {
            throw ConfigError("Bounds: dimension must be at least 1");
        }
        for (std::size_t k = 0; k < lower.size(); ++k) {
            if (!(lower[k] < upper[k])) {
                throw ConfigError("Bounds: lower[" + std::to_string(k) +
                                  "] must be strictly below upper[" + std::to_string(k) + "]");
            }
        }
    }

    /// Uniform box [lo, hi]^d.
    static Bounds uniform(int dimension, double lo, double hi) {
        if (dimension < 1) {
            throw ConfigError("Bounds: dimension must be at least 1");
        }
        return Bounds(RealVector(static_cast<std::size_t>(dimension), lo),
                      RealVector(static_cast<std::size_t>(dimension), hi));
    }

    std::size_t dimension() const { return lower.size(); }

    /// Per-axis widths upper[k] - lower[k].
    RealVector widths() const {
        RealVector w(lower.size());
        for (std::size_t k = 0; k < w.size(); ++k) w[k] = upper[k] - lower[k];
        return w;
    }

    bool contains(const RealVector& x) const {
        if (x.size() != lower.size()) {
            throw DimensionError("Bounds::contains: point has dimension " +
                                 std::to_string(x.size()) + ", bounds have " +
                                 std::to_string(lower.size()));
        }
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] < lower[k] || x[k] > upper[k]) return false;
        }
        return true;
    }
};

/// Euclidean distance. Throws DimensionError on mismatched inputs.
inline double distance(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) {
        throw DimensionError("distance: vectors have dimensions " +
                             std::to_string(a.size()) + " and " + std::to_string(b.size()));
    }
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double d = a[k] - b[k];
        s += d * d;
    }
    return std::sqrt(s);
}

/// Coordinate-wise projection onto the box. Idempotent; in-bounds points pass
/// through unchanged.
inline RealVector clamp(RealVector x, const Bounds& bounds) {
    if (x.size() != bounds.dimension()) {
        throw DimensionError("clamp: point has dimension " + std::to_string(x.size()) +
                             ", bounds have " + std::to_string(bounds.dimension()));
    }
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < bounds.lower[k]) x[k] = bounds.lower[k];
        else if (x[k] > bounds.upper[k]) x[k] = bounds.upper[k];
    }
    return x;
}

}  // namespace ffa
