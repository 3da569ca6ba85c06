#include "ffa/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ffa {

void validate(const FaParams& params, int dimension) {
    if (dimension < 1) {
        throw ConfigError("FaParams: objective dimension must be at least 1");
    }
    if (params.population < 2) {
        throw ConfigError("FaParams: population must be at least 2, got " +
                          std::to_string(params.population));
    }
    if (params.max_iterations < 0) {
        throw ConfigError("FaParams: max_iterations must be non-negative");
    }
    if (!(params.alpha >= 0.0)) {
        throw ConfigError("FaParams: alpha must be non-negative");
    }
    if (!(params.beta0 > 0.0)) {
        throw ConfigError("FaParams: beta0 must be positive");
    }
    if (!(params.gamma >= 0.0)) {
        throw ConfigError("FaParams: gamma must be non-negative");
    }
    if (!(params.m_exp > 0.0)) {
        throw ConfigError("FaParams: m_exp must be positive");
    }
    if (!(params.alpha_decay > 0.0) || params.alpha_decay > 1.0) {
        throw ConfigError("FaParams: alpha_decay must lie in (0, 1]");
    }
    if (!params.scales.empty()) {
        if (static_cast<int>(params.scales.size()) != dimension) {
            throw DimensionError("FaParams: scales has dimension " +
                                 std::to_string(params.scales.size()) + ", objective has " +
                                 std::to_string(dimension));
        }
        for (double s : params.scales) {
            if (!(s > 0.0)) {
                throw ConfigError("FaParams: every walk scale must be positive");
            }
        }
    }
}

Evaluator::Evaluator(const Objective& objective, Sense sense)
    : objective_(&objective),
      sense_(sense),
      best_brightness_(-std::numeric_limits<double>::infinity()),
      best_value_(std::numeric_limits<double>::quiet_NaN()) {}

double Evaluator::operator()(const RealVector& x) {
    const double value = (*objective_)(x);
    ++count_;
    const double bright = brightness(value, sense_);
    if (bright > best_brightness_) {
        best_brightness_ = bright;
        best_value_ = value;
        best_position_ = x;
    }
    return bright;
}

double attractiveness(double r, const FaParams& params) {
    return params.beta0 * std::exp(-params.gamma * std::pow(r, params.m_exp));
}

namespace {

double draw_noise(const FaParams& params, RandomSource& rng) {
    return params.noise == NoiseKind::Gaussian ? rng.gaussian() : rng.uniform01() - 0.5;
}

double scale_at(const FaParams& params, std::size_t k) {
    return params.scales.empty() ? 1.0 : params.scales[k];
}

}  // namespace

RealVector move_towards(const RealVector& xi, const RealVector& xj,
                        const FaParams& params, RandomSource& rng) {
    const double beta = attractiveness(distance(xi, xj), params);
    RealVector out(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        out[k] = xi[k] + beta * (xj[k] - xi[k]) +
                 params.alpha * scale_at(params, k) * draw_noise(params, rng);
    }
    return out;
}

RealVector random_walk(const RealVector& xi, const FaParams& params, RandomSource& rng) {
    RealVector out(xi.size());
    for (std::size_t k = 0; k < xi.size(); ++k) {
        out[k] = xi[k] + params.alpha * scale_at(params, k) * draw_noise(params, rng);
    }
    return out;
}

void rank_brightest_first(std::vector<FireflyState>& population) {
    std::stable_sort(population.begin(), population.end(),
                     [](const FireflyState& a, const FireflyState& b) {
                         return a.intensity > b.intensity;
                     });
}

void step(std::vector<FireflyState>& population, Evaluator& eval,
          const FaParams& params, RandomSource& rng, int iteration_index) {
    const Bounds& bounds = eval.objective().bounds;
    FaParams eff = params;
    eff.alpha = params.alpha * std::pow(params.alpha_decay, iteration_index);

    const int n = static_cast<int>(population.size());
    std::vector<char> moved(population.size(), 0);

    if (!params.pso_limit) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j <= i; ++j) {
                if (population[j].intensity > population[i].intensity) {
                    population[i].position = clamp(
                        move_towards(population[i].position, population[j].position, eff, rng),
                        bounds);
                    population[i].intensity = eval(population[i].position);
                    moved[static_cast<std::size_t>(i)] = 1;
                }
            }
        }
    } else {
        for (int i = 0; i < n; ++i) {
            int best = 0;
            for (int k = 1; k < n; ++k) {
                if (population[k].intensity > population[best].intensity) best = k;
            }
            if (population[best].intensity > population[i].intensity) {
                population[i].position = clamp(
                    move_towards(population[i].position, population[best].position, eff, rng),
                    bounds);
                population[i].intensity = eval(population[i].position);
                moved[static_cast<std::size_t>(i)] = 1;
            }
        }
    }

    // A firefly that made no move and has no brighter firefly anywhere takes a
    // pure random walk instead of standing still. The walker set is decided on
    // the post-sweep state, then walks execute (and re-evaluate) in order.
    double top = population.empty() ? 0.0 : population.front().intensity;
    for (const FireflyState& firefly : population) top = std::max(top, firefly.intensity);
    std::vector<char> walks(population.size(), 0);
    for (int i = 0; i < n; ++i) {
        const std::size_t s = static_cast<std::size_t>(i);
        walks[s] = !moved[s] && !(population[s].intensity < top);
    }
    for (int i = 0; i < n; ++i) {
        if (walks[static_cast<std::size_t>(i)]) {
            population[i].position =
                clamp(random_walk(population[i].position, eff, rng), bounds);
            population[i].intensity = eval(population[i].position);
        }
    }

    rank_brightest_first(population);
}

namespace {

RunResult run_impl(const Objective& objective, const FaParams& params,
                   const std::vector<RealVector>* initial_positions, RandomSource& rng) {
    validate(params, objective.dimension);
    if (static_cast<int>(objective.bounds.dimension()) != objective.dimension) {
        throw DimensionError("run: objective bounds dimension " +
                             std::to_string(objective.bounds.dimension()) +
                             " does not match objective dimension " +
                             std::to_string(objective.dimension));
    }
    if (!objective.fn) {
        throw ConfigError("run: objective has no evaluation function");
    }
    if (initial_positions != nullptr &&
        static_cast<int>(initial_positions->size()) != params.population) {
        throw ConfigError("run: got " + std::to_string(initial_positions->size()) +
                          " initial positions for a population of " +
                          std::to_string(params.population));
    }

    Evaluator eval(objective, params.sense);
    std::vector<FireflyState> population(static_cast<std::size_t>(params.population));
    const std::size_t d = static_cast<std::size_t>(objective.dimension);

    for (std::size_t i = 0; i < population.size(); ++i) {
        if (initial_positions != nullptr) {
            const RealVector& given = (*initial_positions)[i];
            if (given.size() != d) {
                throw DimensionError("run: initial position " + std::to_string(i) +
                                     " has dimension " + std::to_string(given.size()));
            }
            population[i].position = clamp(given, objective.bounds);
        } else {
            RealVector x(d);
            for (std::size_t k = 0; k < d; ++k) {
                x[k] = rng.uniform(objective.bounds.lower[k], objective.bounds.upper[k]);
            }
            population[i].position = std::move(x);
        }
        population[i].intensity = eval(population[i].position);
    }
    rank_brightest_first(population);

    RunResult result;
    result.trace.push_back(TraceRecord{
        0, eval.best_value(),
        value_from_brightness(population.front().intensity, params.sense), 0.0});

    for (int t = 0; t < params.max_iterations; ++t) {
        step(population, eval, params, rng, t);
        result.trace.push_back(TraceRecord{
            t + 1, eval.best_value(),
            value_from_brightness(population.front().intensity, params.sense),
            params.alpha * std::pow(params.alpha_decay, t)});
    }

    result.best_position = eval.best_position();
    result.best_value = eval.best_value();
    result.evaluations = eval.evaluations();
    result.final_population = std::move(population);
    return result;
}

}  // namespace

RunResult run(const Objective& objective, const FaParams& params) {
    RandomSource rng(params.seed);
    return run_impl(objective, params, nullptr, rng);
}

RunResult run(const Objective& objective, const FaParams& params, RandomSource& rng) {
    return run_impl(objective, params, nullptr, rng);
}

RunResult run(const Objective& objective, const FaParams& params,
              const std::vector<RealVector>& initial_positions) {
    RandomSource rng(params.seed);
    return run_impl(objective, params, &initial_positions, rng);
}

RunResult run(const Objective& objective, const FaParams& params,
              const std::vector<RealVector>& initial_positions, RandomSource& rng) {
    return run_impl(objective, params, &initial_positions, rng);
}

FaParams pso_limit_equivalence_mode(FaParams params) {
    params.pso_limit = true;
    return params;
}

}  // namespace ffa
