#include "ffa/test_functions.hpp"

#include <cmath>
#include <utility>

namespace ffa {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

void require_nonempty(const RealVector& x, const char* who) {
    if (x.empty()) {
        throw DimensionError(std::string(who) + ": input must have dimension at least 1");
    }
}

}  // namespace

Realization Realization::frozen(RandomSource rng, std::size_t count) {
    Realization r;
    r.policy_ = RealizationPolicy::Frozen;
    r.draws_.resize(count);
    for (double& v : r.draws_) v = rng.uniform01();
    return r;
}

Realization Realization::frozen(RealVector draws) {
    Realization r;
    r.policy_ = RealizationPolicy::Frozen;
    r.draws_ = std::move(draws);
    return r;
}

Realization Realization::resampling(RandomSource rng, std::size_t count) {
    Realization r;
    r.policy_ = RealizationPolicy::ResamplePerEvaluation;
    r.draws_.resize(count);
    r.source_ = rng;
    return r;
}

const RealVector& Realization::values() {
    if (policy_ == RealizationPolicy::ResamplePerEvaluation) {
        for (double& v : draws_) v = source_->uniform01();
    }
    return draws_;
}

double ackley(const RealVector& x) {
    require_nonempty(x, "ackley");
    const double d = static_cast<double>(x.size());
    double sq = 0.0;
    double cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-std::sqrt(sq / d) / 5.0) - std::exp(cs / d) + 20.0 + kE;
}

double four_peak(const RealVector& x) {
    require_nonempty(x, "four_peak");
    double abs_sum = 0.0;
    double sq = 0.0;
    for (double v : x) {
        abs_sum += std::fabs(v);
        sq += v * v;
    }
    return abs_sum * std::exp(-sq);
}

double standing_wave(const RealVector& x, double beta, int m) {
    require_nonempty(x, "standing_wave");
    if (!(beta > 0.0)) {
        throw ConfigError("standing_wave: beta must be positive");
    }
    if (m < 1) {
        throw ConfigError("standing_wave: m must be at least 1");
    }
    double deca = 0.0;   // sum (x_i / beta)^(2m)
    double gauss = 0.0;  // sum (x_i - pi)^2
    double prod = 1.0;   // prod cos^2(x_i)
    for (double v : x) {
        const double u = v / beta;
        deca += std::pow(u * u, m);
        gauss += (v - kPi) * (v - kPi);
        const double c = std::cos(v);
        prod *= c * c;
    }
    return (std::exp(-deca) - 2.0 * std::exp(-gauss)) * prod;
}

double forest(const RealVector& x) {
    require_nonempty(x, "forest");
    double abs_sum = 0.0;
    double sins = 0.0;
    for (double v : x) {
        abs_sum += std::fabs(v);
        sins += std::sin(v * v);
    }
    return abs_sum * std::exp(-sins);
}

double stochastic_grid(double x, double y, Realization& realization,
                       double alpha, double beta, int K) {
    if (K < 1) {
        throw ConfigError("stochastic_grid: K must be at least 1");
    }
    const std::size_t need = static_cast<std::size_t>(K) * static_cast<std::size_t>(K);
    if (realization.size() != need) {
        throw ConfigError("stochastic_grid: realization has " +
                          std::to_string(realization.size()) + " draws, needs " +
                          std::to_string(need));
    }
    const RealVector& eps = realization.values();

    // The kernel is separable: eps_ij e^{-a(x-i)^2} e^{-a(y-j)^2}.
    std::vector<double> ex(static_cast<std::size_t>(K));
    std::vector<double> ey(static_cast<std::size_t>(K));
    for (int i = 1; i <= K; ++i) {
        ex[static_cast<std::size_t>(i - 1)] = std::exp(-alpha * (x - i) * (x - i));
        ey[static_cast<std::size_t>(i - 1)] = std::exp(-alpha * (y - i) * (y - i));
    }
    double noise = 0.0;
    for (int i = 0; i < K; ++i) {
        double row = 0.0;
        const std::size_t base = static_cast<std::size_t>(i) * static_cast<std::size_t>(K);
        for (int j = 0; j < K; ++j) {
            row += eps[base + static_cast<std::size_t>(j)] * ey[static_cast<std::size_t>(j)];
        }
        noise += ex[static_cast<std::size_t>(i)] * row;
    }
    const double dx = x - kPi;
    const double dy = y - kPi;
    return -5.0 * std::exp(-beta * (dx * dx + dy * dy)) - noise;
}

double stochastic_grid(const RealVector& xy, Realization& realization,
                       double alpha, double beta, int K) {
    if (xy.size() != 2) {
        throw DimensionError("stochastic_grid: input must be 2-dimensional, got " +
                             std::to_string(xy.size()));
    }
    return stochastic_grid(xy[0], xy[1], realization, alpha, beta, K);
}

double stochastic_powers(const RealVector& x, Realization& realization) {
    require_nonempty(x, "stochastic_powers");
    if (realization.size() != x.size()) {
        throw ConfigError("stochastic_powers: realization has " +
                          std::to_string(realization.size()) + " draws, needs " +
                          std::to_string(x.size()));
    }
    const RealVector& eps = realization.values();
    double s = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        s += eps[k] * std::pow(std::fabs(x[k]), static_cast<double>(k + 1));
    }
    return s;
}

double sphere(const RealVector& x) {
    require_nonempty(x, "sphere");
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

// --- Registry ---------------------------------------------------------------

Objective TestFunction::objective() const {
    if (stochastic) {
        throw ConfigError("TestFunction: '" + name + "' is stochastic and needs a realization");
    }
    Objective obj;
    obj.name = name;
    obj.dimension = dimension;
    obj.bounds = bounds;
    obj.sense = sense;
    obj.optimum = optimum;
    auto f = raw;
    obj.fn = [f](const RealVector& x) { return f(x, nullptr); };
    return obj;
}

Objective TestFunction::objective(std::shared_ptr<Realization> realization) const {
    if (!stochastic) {
        throw ConfigError("TestFunction: '" + name + "' is deterministic; no realization applies");
    }
    if (!realization) {
        throw ConfigError("TestFunction: null realization");
    }
    if (realization->size() != realization_size) {
        throw ConfigError("TestFunction: '" + name + "' needs " +
                          std::to_string(realization_size) + " realization draws, got " +
                          std::to_string(realization->size()));
    }
    Objective obj;
    obj.name = name;
    obj.dimension = dimension;
    obj.bounds = bounds;
    obj.sense = sense;
    obj.optimum = optimum;
    auto f = raw;
    obj.fn = [f, realization](const RealVector& x) { return f(x, realization.get()); };
    return obj;
}

namespace {

int peaks_multiplicity(int dimension) {
    return dimension < 31 ? (1 << dimension) : 0x7FFFFFFF;
}

void require_dimension_at_least_one(const std::string& name, int dimension) {
    if (dimension < 1) {
        throw ConfigError("registry: '" + name + "' needs dimension at least 1");
    }
}

}  // namespace

TestFunction registry(const std::string& name, int dimension) {
    TestFunction tf;
    tf.name = name;
    tf.dimension = dimension;

    if (name == "ackley") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -32.768, 32.768);
        tf.sense = Sense::Minimize;
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), 0.0), 0.0,
                                  Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization*) { return ackley(x); };
        return tf;
    }
    if (name == "four_peak") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -10.0, 10.0);
        tf.sense = Sense::Maximize;
        const double d = static_cast<double>(dimension);
        const double coord = 1.0 / std::sqrt(2.0 * d);
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), coord),
                                  std::sqrt(d / 2.0) * std::exp(-0.5), Sense::Maximize,
                                  peaks_multiplicity(dimension)};
        tf.raw = [](const RealVector& x, Realization*) { return four_peak(x); };
        return tf;
    }
    if (name == "standing_wave") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -20.0, 20.0);
        tf.sense = Sense::Minimize;
        const double d = static_cast<double>(dimension);
        const double value = std::exp(-d * std::pow(kPi / 15.0, 10.0)) - 2.0;
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), kPi), value,
                                  Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization*) { return standing_wave(x); };
        return tf;
    }
    if (name == "forest") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -2.0 * kPi, 2.0 * kPi);
        tf.sense = Sense::Minimize;
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), 0.0), 0.0,
                                  Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization*) { return forest(x); };
        return tf;
    }
    if (name == "stochastic_grid") {
        if (dimension != 2) {
            throw ConfigError("registry: 'stochastic_grid' is only defined for dimension 2");
        }
        tf.bounds = Bounds::uniform(2, 0.0, 10.0);
        tf.sense = Sense::Minimize;
        tf.stochastic = true;
        tf.realization_size = 100;  // K = 10
        tf.optimum = KnownOptimum{RealVector{kPi, kPi}, std::nullopt, Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization* r) {
            if (r == nullptr) throw ConfigError("stochastic_grid: missing realization");
            return stochastic_grid(x, *r);
        };
        return tf;
    }
    if (name == "stochastic_powers") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -5.0, 5.0);
        tf.sense = Sense::Minimize;
        tf.stochastic = true;
        tf.realization_size = static_cast<std::size_t>(dimension);
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), 0.0), 0.0,
                                  Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization* r) {
            if (r == nullptr) throw ConfigError("stochastic_powers: missing realization");
            return stochastic_powers(x, *r);
        };
        return tf;
    }
    if (name == "sphere") {
        require_dimension_at_least_one(name, dimension);
        tf.bounds = Bounds::uniform(dimension, -10.0, 10.0);
        tf.sense = Sense::Minimize;
        tf.optimum = KnownOptimum{RealVector(static_cast<std::size_t>(dimension), 0.0), 0.0,
                                  Sense::Minimize, 1};
        tf.raw = [](const RealVector& x, Realization*) { return sphere(x); };
        return tf;
    }

    std::string names;
    for (const std::string& n : registry_names()) {
        if (!names.empty()) names += ", ";
        names += n;
    }
    throw LookupError("registry: unknown function '" + name + "' (valid: " + names + ")");
}

std::vector<std::string> registry_names() {
    return {"ackley",          "forest", "four_peak",        "sphere",
            "standing_wave",   "stochastic_grid", "stochastic_powers"};
}

}  // namespace ffa
