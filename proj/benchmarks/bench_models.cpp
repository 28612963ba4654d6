#include <benchmark/benchmark.h>

#include "ioncoupler/causal.hpp"
#include "ioncoupler/config.hpp"
#include "ioncoupler/linear.hpp"
#include "ioncoupler/report.hpp"

using namespace ioncoupler;

namespace {

system_config bench_config() {
    system_config c;
    c.ion1.mass_kg = 6.64e-26;
    c.ion1.charge_multiple = 1;
    c.ion2 = c.ion1;
    c.trap1.frequency_hz = 1.0e6;
    c.trap2 = c.trap1;
    c.geometry = {2.5e-4, 2.5e-4, 5.0e-5, 5.0e-5, 1.0e-2, 2.5e-5};
    return c;
}

void bm_linear_chain(benchmark::State& state) {
    const auto config = bench_config();
    const auto caps = compute_self_capacitances(config.geometry);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_linear_elements(config, caps));
}
BENCHMARK(bm_linear_chain);

void bm_full_report(benchmark::State& state) {
    const auto config = bench_config();
    report_options options;
    options.include_timestamp = false;
    for (auto _ : state) {
        const auto report = build_report(config, options);
        benchmark::DoNotOptimize(to_json(report));
    }
}
BENCHMARK(bm_full_report);

void bm_causal_roundtrip(benchmark::State& state) {
    for (auto _ : state) {
        const auto r = causal::parse_relation("y_12 <->= f_3");
        benchmark::DoNotOptimize(causal::serialize(r));
    }
}
BENCHMARK(bm_causal_roundtrip);

void bm_causal_closure(benchmark::State& state) {
    const auto script = causal::parse_script("given V ->= z\n"
                                             "given z ->= Q\n"
                                             "given V ->= Q/C_eff\n"
                                             "claim V ->= Q\n"
                                             "claim V <->= Q/C_eff\n");
    for (auto _ : state)
        benchmark::DoNotOptimize(causal::check_derivation(script));
}
BENCHMARK(bm_causal_closure);

} // namespace
