#include <benchmark/benchmark.h>

// the distro's benchmark_main archive is LTO bytecode tied to one compiler build
BENCHMARK_MAIN();
