#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ffa/engine.hpp"
#include "ffa/objective.hpp"
#include "ffa/types.hpp"

namespace ffa {

/// Inequality-constrained minimization problem: minimize objective(x) subject
/// to g_i(x) <= 0 over a box. `constraint_scales` gives the natural magnitude
/// of each g_i so feasibility tolerances can be scaled per constraint.
struct ConstrainedProblem {
    std::string name;
    int dimension = 0;
    Bounds bounds;
    std::function<double(const RealVector&)> objective;
    std::vector<std::function<double(const RealVector&)>> constraints;
    RealVector constraint_scales;
};

/// Static penalty F(x) = objective(x) + lambda * sum_i max(0, g_i(x))^p, with
/// the raw (unscaled) constraint values. lambda = 0 disables the penalty (a
/// documented sanity configuration). The default weight is high enough that
/// the penalized vessel optimum sits inside the 1e-3 scaled feasibility band:
/// with a quadratic penalty the optimal constraint violation scales like
/// (objective gradient) / (2 lambda), which for the vessel's ~8e3 cost slope
/// needs lambda well above 4e6.
struct PenaltyParams {
    double lambda = 1e7;
    double p = 2.0;
};

/// Feasibility verdict at scaled tolerances tol_i = tol * max(1, scale_i),
/// including the box bounds (tolerance applied per axis). `g` holds the raw
/// constraint values; `max_violation` the largest scale-normalized violation
/// max(0, g_i) / max(1, scale_i); `worst_index` its constraint index, or -1
/// when no constraint is violated at all.
struct FeasibilityReport {
    bool feasible = false;
    RealVector g;
    double max_violation = 0.0;
    int worst_index = -1;
};

/// Cost of the cylindrical pressure vessel design x = (d1 shell thickness,
/// d2 head thickness, r inner radius, L cylinder length), in dollars.
double vessel_objective(const RealVector& x);

/// The four vessel constraints g1..g4 (all must be <= 0): minimum shell
/// thickness, minimum head thickness, minimum enclosed volume, maximum length.
RealVector vessel_constraints(const RealVector& x);

/// The pressure-vessel problem over its standard box
/// [0.0625, 6.1875]^2 x [10, 200]^2, with the volume constraint's tolerance
/// scale. Thicknesses are treated as continuous.
ConstrainedProblem vessel_problem();

/// The penalized problem as a minimization objective for the engine.
Objective penalized(const ConstrainedProblem& problem, const PenaltyParams& penalty);

/// Penalized value at a single point.
double penalized_value(const ConstrainedProblem& problem, const PenaltyParams& penalty,
                       const RealVector& x);

FeasibilityReport is_feasible(const ConstrainedProblem& problem, const RealVector& x,
                              double tol = 1e-3);

struct VesselSolution {
    RunResult result;            // best_value is the penalized value
    double cost = 0.0;           // raw objective at the best point
    FeasibilityReport feasibility;
};

/// Runs the engine on the penalized pressure vessel; params.sense is forced
/// to Minimize. The returned report re-evaluates raw cost and constraints at
/// the best point.
VesselSolution solve_vessel(const FaParams& params, const PenaltyParams& penalty,
                            double tol = 1e-3);
VesselSolution solve_vessel(const FaParams& params, const PenaltyParams& penalty,
                            double tol, RandomSource& rng);

/// Rounds the two thickness variables up to the next multiple of 0.0625
/// (plate stock comes in sixteenth-inch increments; rounding up can only
/// deepen g1/g2 feasibility). Values already on the grid are kept.
RealVector snap_thickness(RealVector x);

}  // namespace ffa
