#include <benchmark/benchmark.h>

#include "medial/decomposition.hpp"
#include "medial/free_group.hpp"
#include "medial/io.hpp"
#include "medial/reports.hpp"
#include "medial/smith.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace medial;

static void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  testgen::Rng rng(1);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = testgen::uniform(rng, -9, 9);
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_Folding(benchmark::State& state) {
  const int rank = static_cast<int>(state.range(0));
  testgen::Rng rng(2);
  std::vector<Word> words;
  for (int k = 0; k < rank + 2; ++k) {
    Word w;
    for (int i = 0; i < 6; ++i) {
      int x = testgen::uniform(rng, 1, rank) * (testgen::chance(rng, 0.5) ? 1 : -1);
      w.push_back(x);
    }
    words.push_back(free_reduce(w));
  }
  for (auto _ : state) benchmark::DoNotOptimize(generates_full_group(words, rank));
}
BENCHMARK(BM_Folding)->Arg(2)->Arg(8)->Arg(32);

static void BM_Decompose(benchmark::State& state) {
  testgen::Rng rng(3);
  testgen::GermSpec spec;
  spec.junctions = 4;
  spec.fin_points = static_cast<int>(state.range(0));
  MedialComplex c = testgen::germ_complex(rng, spec);
  for (auto _ : state) benchmark::DoNotOptimize(decompose(c));
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(10)->Arg(20);

static void BM_PipelineFixture(benchmark::State& state, const char* name) {
  MedialComplex c = testfix::fixture(name);
  for (auto _ : state) benchmark::DoNotOptimize(analyze(c));
}
BENCHMARK_CAPTURE(BM_PipelineFixture, fig13, "fig13");
BENCHMARK_CAPTURE(BM_PipelineFixture, fig8c, "fig8c");
BENCHMARK_CAPTURE(BM_PipelineFixture, fig7a, "fig7a");

BENCHMARK_MAIN();
