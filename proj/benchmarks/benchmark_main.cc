// The packaged libbenchmark_main.a ships LTO bytecode tied to one compiler
// release, so main is provided here against the shared library.
#include <benchmark/benchmark.h>

BENCHMARK_MAIN();
