// Micro benchmarks for the left-nested chains of every suite, naive and
// through the Cayley representation.

#include <benchmark/benchmark.h>

#include "cayley/bench.hpp"

namespace {

using cayley::bench::Suite;
using cayley::bench::Variant;

template <Suite S, Variant V>
void chain(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::uint64_t ops = 0;
  for (auto _ : state) {
    auto outcome = cayley::bench::run_once(S, V, n, 0);
    ops = outcome.ops;
    benchmark::DoNotOptimize(outcome);
  }
  state.counters["ops"] = static_cast<double>(ops);
}

BENCHMARK(chain<Suite::dlist, Variant::naive>)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(chain<Suite::dlist, Variant::cayley>)->RangeMultiplier(2)->Range(256, 2048);
BENCHMARK(chain<Suite::codensity, Variant::naive>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(chain<Suite::codensity, Variant::cayley>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(chain<Suite::freeap, Variant::naive>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(chain<Suite::freeap, Variant::cayley>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(chain<Suite::prearrow, Variant::naive>)->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(chain<Suite::prearrow, Variant::cayley>)->RangeMultiplier(2)->Range(32, 256);

}  // namespace

BENCHMARK_MAIN();
