#include <benchmark/benchmark.h>

// The packaged benchmark_main archive does not link against this toolchain,
// so the entry point lives here instead.
BENCHMARK_MAIN();
