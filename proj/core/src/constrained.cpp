#include "ffa/constrained.hpp"

#include <algorithm>
#include <cmath>

namespace ffa {
namespace {

constexpr double kPi = 3.14159265358979323846;

void require_vessel_dim(const RealVector& x, const char* who) {
    if (x.size() != 4) {
        throw DimensionError(std::string(who) + ": vessel design has 4 variables, got " +
                             std::to_string(x.size()));
    }
}

void validate_penalty(const PenaltyParams& penalty) {
    if (!(penalty.lambda >= 0.0)) {
        throw ConfigError("PenaltyParams: lambda must be non-negative");
    }
    if (!(penalty.p >= 1.0)) {
        throw ConfigError("PenaltyParams: p must be at least 1");
    }
}

}  // namespace

double vessel_objective(const RealVector& x) {
    require_vessel_dim(x, "vessel_objective");
    const double d1 = x[0], d2 = x[1], r = x[2], L = x[3];
    return 0.6224 * d1 * r * L + 1.7781 * d2 * r * r + 3.1661 * d1 * d1 * L +
           19.84 * d1 * d1 * r;
}

RealVector vessel_constraints(const RealVector& x) {
    require_vessel_dim(x, "vessel_constraints");
    const double d1 = x[0], d2 = x[1], r = x[2], L = x[3];
    return RealVector{
        -d1 + 0.0193 * r,
        -d2 + 0.00954 * r,
        -kPi * r * r * L - (4.0 * kPi / 3.0) * r * r * r + 1296000.0,
        L - 240.0,
    };
}

ConstrainedProblem vessel_problem() {
    ConstrainedProblem problem;
    problem.name = "pressure_vessel";
    problem.dimension = 4;
    problem.bounds = Bounds(RealVector{0.0625, 0.0625, 10.0, 10.0},
                            RealVector{6.1875, 6.1875, 200.0, 200.0});
    problem.objective = vessel_objective;
    for (std::size_t i = 0; i < 4; ++i) {
        problem.constraints.push_back(
            [i](const RealVector& x) { return vessel_constraints(x)[i]; });
    }
    problem.constraint_scales = RealVector{1.0, 1.0, 1296000.0, 1.0};
    return problem;
}

Objective penalized(const ConstrainedProblem& problem, const PenaltyParams& penalty) {
    validate_penalty(penalty);
    if (static_cast<int>(problem.bounds.dimension()) != problem.dimension) {
        throw DimensionError("penalized: bounds dimension does not match problem");
    }
    Objective obj;
    obj.name = problem.name + "_penalized";
    obj.dimension = problem.dimension;
    obj.bounds = problem.bounds;
    obj.sense = Sense::Minimize;
    // Copy the problem pieces so the objective owns its state.
    auto objective = problem.objective;
    auto constraints = problem.constraints;
    obj.fn = [objective, constraints, penalty](const RealVector& x) {
        double value = objective(x);
        for (const auto& g : constraints) {
            const double v = std::max(0.0, g(x));
            if (v > 0.0) value += penalty.lambda * std::pow(v, penalty.p);
        }
        return value;
    };
    return obj;
}

double penalized_value(const ConstrainedProblem& problem, const PenaltyParams& penalty,
                       const RealVector& x) {
    validate_penalty(penalty);
    double value = problem.objective(x);
    for (const auto& g : problem.constraints) {
        const double v = std::max(0.0, g(x));
        if (v > 0.0) value += penalty.lambda * std::pow(v, penalty.p);
    }
    return value;
}

FeasibilityReport is_feasible(const ConstrainedProblem& problem, const RealVector& x,
                              double tol) {
    if (std::isnan(tol) || tol < 0.0) {
        throw ConfigError("is_feasible: tol must be non-negative");
    }
    if (x.size() != problem.bounds.dimension()) {
        throw DimensionError("is_feasible: point has dimension " + std::to_string(x.size()) +
                             ", problem has " + std::to_string(problem.bounds.dimension()));
    }
    FeasibilityReport report;
    report.feasible = true;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] < problem.bounds.lower[k] - tol || x[k] > problem.bounds.upper[k] + tol) {
            report.feasible = false;
        }
    }
    report.g.reserve(problem.constraints.size());
    for (std::size_t i = 0; i < problem.constraints.size(); ++i) {
        const double gi = problem.constraints[i](x);
        report.g.push_back(gi);
        const double scale =
            i < problem.constraint_scales.size() ? std::max(1.0, problem.constraint_scales[i]) : 1.0;
        const double violation = std::max(0.0, gi) / scale;
        if (gi > tol * scale) report.feasible = false;
        if (violation > report.max_violation) {
            report.max_violation = violation;
            report.worst_index = static_cast<int>(i);
        }
    }
    return report;
}

namespace {

VesselSolution solve_vessel_impl(const FaParams& params, const PenaltyParams& penalty,
                                 double tol, RandomSource* rng) {
    const ConstrainedProblem problem = vessel_problem();
    const Objective obj = penalized(problem, penalty);
    FaParams p = params;
    p.sense = Sense::Minimize;

    VesselSolution solution;
    solution.result = rng != nullptr ? run(obj, p, *rng) : run(obj, p);
    solution.cost = problem.objective(solution.result.best_position);
    solution.feasibility = is_feasible(problem, solution.result.best_position, tol);
    return solution;
}

}  // namespace

VesselSolution solve_vessel(const FaParams& params, const PenaltyParams& penalty, double tol) {
    return solve_vessel_impl(params, penalty, tol, nullptr);
}

VesselSolution solve_vessel(const FaParams& params, const PenaltyParams& penalty, double tol,
                            RandomSource& rng) {
    return solve_vessel_impl(params, penalty, tol, &rng);
}

RealVector snap_thickness(RealVector x) {
    require_vessel_dim(x, "snap_thickness");
    constexpr double kIncrement = 0.0625;
    for (std::size_t k = 0; k < 2; ++k) {
        const double steps = x[k] / kIncrement;
        const double rounded = std::nearbyint(steps);
        if (std::fabs(steps - rounded) < 1e-9) {
            x[k] = rounded * kIncrement;  // already on the grid (up to noise)
        } else {
            x[k] = std::ceil(steps) * kIncrement;
        }
    }
    return x;
}

}  // namespace ffa
