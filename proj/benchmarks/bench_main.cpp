#include <benchmark/benchmark.h>

#include "pdc/pqseq.hpp"
#include "pdc/primitivity.hpp"
#include "pdc/replacement.hpp"
#include "pdc/words.hpp"

namespace {

void BM_sequence_descent(benchmark::State& state) {
  const pdc::LensParams params = pdc::make_params(static_cast<int>(state.range(0)),
                                                  static_cast<int>(state.range(1)));
  const pdc::PqSequence seq = pdc::make_sequence(params, 0);
  for (auto _ : state) {
    int primitive = 0;
    for (const pdc::Word& w : seq.words) {
      if (pdc::is_primitive(w)) ++primitive;
    }
    benchmark::DoNotOptimize(primitive);
  }
}
BENCHMARK(BM_sequence_descent)->Args({8, 3})->Args({20, 7})->Args({40, 17});

void BM_build_sequence(benchmark::State& state) {
  const pdc::LensParams params = pdc::make_params(static_cast<int>(state.range(0)),
                                                  static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdc::make_sequence(params, 0));
  }
}
BENCHMARK(BM_build_sequence)->Args({8, 3})->Args({40, 17})->Args({101, 30});

void BM_witness(benchmark::State& state) {
  const pdc::LensParams params = pdc::make_params(static_cast<int>(state.range(0)),
                                                  static_cast<int>(state.range(1)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdc::witness(params));
  }
}
BENCHMARK(BM_witness)->Args({12, 5})->Args({17, 7})->Args({59, 25});

void BM_canonical_primitive(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdc::canonical_primitive(m, n));
  }
}
BENCHMARK(BM_canonical_primitive)->Args({13, 21})->Args({89, 144});

void BM_substitute_and_cyclic_reduce(benchmark::State& state) {
  const pdc::Word w = pdc::canonical_primitive(89, 144);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pdc::cyclic_reduce(pdc::substitute_z_to_xy(w)));
  }
}
BENCHMARK(BM_substitute_and_cyclic_reduce);

}  // namespace

BENCHMARK_MAIN();
