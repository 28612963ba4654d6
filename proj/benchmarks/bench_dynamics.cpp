#include <benchmark/benchmark.h>

#include "ioncoupler/constants.hpp"
#include "ioncoupler/oscillators.hpp"

using namespace ioncoupler;

namespace {

oscillator_pair bench_pair() {
    const double m = 6.64e-26;
    const double omega = 2.0 * constants::pi * 1.0e6;
    const double k = m * omega * omega;
    return {m, m, k, k, 1e-3 * k};
}

void bm_verlet_steps(benchmark::State& state) {
    const auto sys = bench_pair();
    const double dt = fast_period(sys) / 1000.0;
    phase_state s{1e-9, 0.0, 0.0, 0.0};
    for (auto _ : state)
        advance(sys, s, dt, 1000, integrator_scheme::velocity_verlet);
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_verlet_steps);

void bm_composed_steps(benchmark::State& state) {
    const auto sys = bench_pair();
    const double dt = fast_period(sys) / 1000.0;
    phase_state s{1e-9, 0.0, 0.0, 0.0};
    for (auto _ : state)
        advance(sys, s, dt, 1000, integrator_scheme::composed_4th);
    state.SetItemsProcessed(state.iterations() * 1000);
}
BENCHMARK(bm_composed_steps);

void bm_exchange_measurement(benchmark::State& state) {
    const auto sys = bench_pair();
    const double dt = fast_period(sys) / 200.0;
    // one full beat of the 1e-3-coupled pair, sampled coarsely
    const auto traj = simulate(sys, {1e-9, 0, 0, 0}, 6.0e-4, dt, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(exchange_time(traj, fast_period(sys)));
}
BENCHMARK(bm_exchange_measurement)->Unit(benchmark::kMillisecond);

} // namespace
