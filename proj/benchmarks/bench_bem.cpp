#include <benchmark/benchmark.h>

#include "ioncoupler/bem.hpp"
#include "ioncoupler/constants.hpp"

using namespace ioncoupler;

namespace {

void bm_elliptic_k(benchmark::State& state) {
    double kc = 1e-6;
    for (auto _ : state) {
        benchmark::DoNotOptimize(elliptic_k_complement(kc));
        kc = kc < 0.5 ? kc * 1.0000001 : 1e-6; // wander without leaving (0, 1]
    }
}
BENCHMARK(bm_elliptic_k);

void bm_annulus_coefficient(benchmark::State& state) {
    // in-band evaluation: the kernel's log endpoint is inside the interval,
    // which is the expensive case for the adaptive quadrature
    for (auto _ : state)
        benchmark::DoNotOptimize(annulus_potential_coefficient(1.0e-4, 1.2e-4, 1.1e-4));
}
BENCHMARK(bm_annulus_coefficient);

void bm_disk_solve(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const double q = constants::elementary_charge;
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_grounded_disk(q, 1.0e-4, 5.0e-3, n));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(bm_disk_solve)->Arg(32)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond)->Complexity();

} // namespace
