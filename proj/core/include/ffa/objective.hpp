#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>

#include "ffa/types.hpp"

namespace ffa {

enum class Sense { Minimize, Maximize };

/// Documented optimum of a test problem. `value` is absent when the optimal
/// value depends on a random realization even though the location does not.
struct KnownOptimum {
    RealVector position;
    std::optional<double> value;
    Sense kind = Sense::Minimize;
    int multiplicity = 1;
};

/// A black-box objective over a box domain. `fn` may capture mutable state
/// (e.g. a per-evaluation resampling realization); a single run evaluates it
/// from one thread only.
struct Objective {
    std::string name;
    int dimension = 0;
    Bounds bounds;
    Sense sense = Sense::Minimize;
    std::function<double(const RealVector&)> fn;
    std::optional<KnownOptimum> optimum;

    double operator()(const RealVector& x) const { return fn(x); }
};

/// Brightness is the quantity fireflies maximize: the raw value for
/// maximization problems, its negation for minimization.
inline double brightness(double value, Sense sense) {
    return sense == Sense::Maximize ? value : -value;
}

/// Back-conversion from brightness to objective value.
inline double value_from_brightness(double bright, Sense sense) {
    return sense == Sense::Maximize ? bright : -bright;
}

}  // namespace ffa
