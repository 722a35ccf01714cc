// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "skein/adams.hpp"
#include "skein/chords.hpp"
#include "skein/hecke.hpp"
#include "skein/partition.hpp"

using namespace skein;

namespace {

HeckeElement operand(int n) { return e_lambda(Partition::hook(n - 1, 2)); }

template <HeckeElement (*Kernel)(const HeckeElement&, const HeckeElement&)>
void product(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeckeElement a = operand(n), b = a_element(n);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

void word_parallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeckeElement a = operand(n);
  const BraidWord w = torus_braid(n, 1).power(3);
  for (auto _ : state) benchmark::DoNotOptimize(a.times_word(w));
}

void word_serial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const HeckeElement a = operand(n);
  const BraidWord w = torus_braid(n, 1).power(3);
  for (auto _ : state) benchmark::DoNotOptimize(a.times_word_serial(w));
}

const ChordDiagram kChords = ChordDiagram::parse("1-4,2-6,3-5");

void chords_parallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi_chords(kChords, static_cast<int>(state.range(0))));
}

void chords_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(psi_chords_reference(kChords, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(product<mul>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(product<mul_serial>)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(product<mul_reference>)->DenseRange(4, 5)->Unit(benchmark::kMillisecond);
BENCHMARK(word_parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(word_serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(chords_parallel)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(chords_serial)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
