#include <benchmark/benchmark.h>

#include <ffa/engine.hpp>
#include <ffa/experiment.hpp>
#include <ffa/test_functions.hpp>

#include <memory>

namespace {

using namespace ffa;

void BM_Ackley2d(benchmark::State& state) {
    RealVector x{1.3, -2.7};
    for (auto _ : state) {
        benchmark::DoNotOptimize(ackley(x));
    }
}
BENCHMARK(BM_Ackley2d);

void BM_FourPeak2d(benchmark::State& state) {
    RealVector x{0.4, -0.6};
    for (auto _ : state) {
        benchmark::DoNotOptimize(four_peak(x));
    }
}
BENCHMARK(BM_FourPeak2d);

void BM_StandingWave2d(benchmark::State& state) {
    RealVector x{2.9, 3.3};
    for (auto _ : state) {
        benchmark::DoNotOptimize(standing_wave(x));
    }
}
BENCHMARK(BM_StandingWave2d);

void BM_StochasticGridFrozen(benchmark::State& state) {
    Realization r = Realization::frozen(RandomSource(1), 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(stochastic_grid(2.9, 3.3, r));
    }
}
BENCHMARK(BM_StochasticGridFrozen);

void BM_VesselPenalized(benchmark::State& state) {
    ConstrainedProblem problem = vessel_problem();
    PenaltyParams penalty;
    RealVector x{0.8, 0.43, 42.0, 176.0};
    for (auto _ : state) {
        benchmark::DoNotOptimize(penalized_value(problem, penalty, x));
    }
}
BENCHMARK(BM_VesselPenalized);

void BM_Attractiveness(benchmark::State& state) {
    FaParams p;
    double r = 0.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(attractiveness(r, p));
        r += 1e-6;
    }
}
BENCHMARK(BM_Attractiveness);

void BM_GaussianDraw(benchmark::State& state) {
    RandomSource rng(7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rng.gaussian());
    }
}
BENCHMARK(BM_GaussianDraw);

void BM_RealizationRefresh(benchmark::State& state) {
    Realization r = Realization::resampling(RandomSource(7), 100);
    for (auto _ : state) {
        benchmark::DoNotOptimize(r.values());
    }
}
BENCHMARK(BM_RealizationRefresh);

void BM_StepSphere(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Objective obj{"sphere", 2, Bounds::uniform(2, -10.0, 10.0), Sense::Minimize,
                  [](const RealVector& x) { return sphere(x); }, std::nullopt};
    FaParams params;
    params.population = n;
    for (auto _ : state) {
        state.PauseTiming();
        Evaluator eval(obj, Sense::Minimize);
        RandomSource rng(11);
        std::vector<FireflyState> pop(static_cast<std::size_t>(n));
        for (auto& f : pop) {
            f.position = {rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
            f.intensity = eval(f.position);
        }
        rank_brightest_first(pop);
        state.ResumeTiming();
        step(pop, eval, params, rng, 0);
        benchmark::DoNotOptimize(pop.data());
    }
}
BENCHMARK(BM_StepSphere)->Arg(10)->Arg(25)->Arg(50);

void BM_RunSphereSmall(benchmark::State& state) {
    Objective obj{"sphere", 2, Bounds::uniform(2, -10.0, 10.0), Sense::Minimize,
                  [](const RealVector& x) { return sphere(x); }, std::nullopt};
    FaParams params;
    params.population = 10;
    params.max_iterations = 5;
    params.seed = 13;
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(obj, params));
    }
}
BENCHMARK(BM_RunSphereSmall);

void BM_SerializeReport(benchmark::State& state) {
    ExperimentConfig c;
    c.target = "sphere";
    c.dimension = 2;
    c.fa.population = 10;
    c.fa.max_iterations = 5;
    c.replicates = 10;
    c.base_seed = 3;
    c.success.value_threshold = 1e-2;
    ExperimentReport report = run_experiment(c, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(to_json(report));
    }
}
BENCHMARK(BM_SerializeReport);

}  // namespace

BENCHMARK_MAIN();
