// Serial reference kernels against their OpenMP counterparts, plus a full
// optimizer step. Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include <vector>

#include "geoadaler/kernels.hpp"
#include "geoadaler/optim.hpp"
#include "geoadaler/rng.hpp"

namespace {

using namespace geoadaler;

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    SplitMix64 g(seed);
    std::vector<double> v(n);
    for (double& x : v) x = g.normal();
    return v;
}

template <double (*Dot)(std::span<const double>, std::span<const double>)>
void BM_dot(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_vector(n, 1), b = random_vector(n, 2);
    for (auto _ : state) benchmark::DoNotOptimize(Dot(a, b));
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * n * 2 * sizeof(double)));
}
BENCHMARK(BM_dot<kernels::serial::dot>)->Name("dot/serial")->RangeMultiplier(100)->Range(1000, 10000000);
BENCHMARK(BM_dot<kernels::parallel::dot>)->Name("dot/parallel")->RangeMultiplier(100)->Range(1000, 10000000);

template <void (*Axpy)(double, std::span<const double>, std::span<double>)>
void BM_axpy(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto x = random_vector(n, 3);
    auto y = random_vector(n, 4);
    for (auto _ : state) {
        Axpy(1e-9, x, y);
        benchmark::ClobberMemory();
    }
    state.SetBytesProcessed(static_cast<int64_t>(state.iterations() * n * 3 * sizeof(double)));
}
BENCHMARK(BM_axpy<kernels::serial::axpy>)->Name("axpy/serial")->RangeMultiplier(100)->Range(1000, 10000000);
BENCHMARK(BM_axpy<kernels::parallel::axpy>)->Name("axpy/parallel")->RangeMultiplier(100)->Range(1000, 10000000);

using Matmul = void (*)(std::span<const double>, std::span<const double>, std::span<double>,
                        std::size_t, std::size_t, std::size_t);

// Shapes of the first MLP layer: batch x 784 times 784 x 128.
template <Matmul Mm>
void BM_matmul_nn(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0)), k = 784, n = 128;
    const auto a = random_vector(m * k, 5), b = random_vector(k * n, 6);
    std::vector<double> c(m * n);
    for (auto _ : state) {
        Mm(a, b, c, m, k, n);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * m * k * n));
}
BENCHMARK(BM_matmul_nn<kernels::serial::matmul_nn>)->Name("matmul_nn/serial")->Arg(64)->Arg(1000);
BENCHMARK(BM_matmul_nn<kernels::parallel::matmul_nn>)->Name("matmul_nn/parallel")->Arg(64)->Arg(1000);

template <Matmul Mm>
void BM_matmul_tn(benchmark::State& state) {
    const std::size_t m = static_cast<std::size_t>(state.range(0)), k = 784, n = 128;
    const auto a = random_vector(m * k, 7), b = random_vector(m * n, 8);
    std::vector<double> c(k * n);
    for (auto _ : state) {
        Mm(a, b, c, m, k, n);
        benchmark::ClobberMemory();
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * m * k * n));
}
BENCHMARK(BM_matmul_tn<kernels::serial::matmul_tn>)->Name("matmul_tn/serial")->Arg(64);
BENCHMARK(BM_matmul_tn<kernels::parallel::matmul_tn>)->Name("matmul_tn/parallel")->Arg(64);

void BM_optimizer_step(benchmark::State& state) {
    const auto method = static_cast<optim::Method>(state.range(0));
    const auto n = static_cast<std::size_t>(state.range(1));
    const auto g = random_vector(n, 9);
    std::vector<double> delta(n);
    optim::Optimizer opt(method, optim::default_hyperparams(method), n);
    for (auto _ : state) {
        opt.step(g, delta);
        benchmark::ClobberMemory();
    }
    state.SetLabel(std::string(optim::method_name(method)));
}
BENCHMARK(BM_optimizer_step)
    ->Name("optimizer_step")
    ->ArgsProduct({{static_cast<long>(optim::Method::geoadaler), static_cast<long>(optim::Method::geoadamax),
                    static_cast<long>(optim::Method::adam)},
                   {1000, 100000, 1000000}});

}  // namespace

BENCHMARK_MAIN();
