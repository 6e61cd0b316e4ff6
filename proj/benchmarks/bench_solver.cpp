#include "stabjgl/fgl.hpp"
#include "stabjgl/synthetic.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace stabjgl;

namespace {

CovarianceSet table1_covariance(Index p) {
    SimulationSpec spec;
    spec.p = p;
    spec.seed = 3;
    return compute_sample_covariance(generate_instance(spec).data);
}

void BM_FusedProx(benchmark::State& state) {
    const auto k = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::vector<double>> inputs(256, std::vector<double>(k));
    for (auto& v : inputs) {
        for (auto& x : v) x = u(rng);
    }
    std::vector<double> out(k);
    std::size_t i = 0;
    for (auto _ : state) {
        fused_prox(inputs[i++ & 255], 0.2, out);
        benchmark::DoNotOptimize(out.data());
    }
}
BENCHMARK(BM_FusedProx)->DenseRange(2, 6);

void BM_ThetaUpdate(benchmark::State& state) {
    const auto cov = table1_covariance(state.range(0));
    const Matrix a = Matrix::Identity(cov.dimension(), cov.dimension());
    for (auto _ : state) benchmark::DoNotOptimize(theta_update(cov.matrices[0], a, 1.0, 1.0));
}
BENCHMARK(BM_ThetaUpdate)->Arg(50)->Arg(100)->Unit(benchmark::kMicrosecond);

void BM_SolveFgl(benchmark::State& state) {
    const auto cov = table1_covariance(state.range(0));
    const double lambda1 = static_cast<double>(state.range(1)) / 100.0;
    int iterations = 0;
    for (auto _ : state) {
        const auto fit = solve_fgl(cov, PenaltyPair{lambda1, 0.05});
        iterations = fit.report.iterations;
    }
    state.counters["admm_iterations"] = iterations;
}
BENCHMARK(BM_SolveFgl)->Args({50, 17})->Args({100, 17})->Args({100, 5})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
