#include <benchmark/benchmark.h>

#include "bcfw/ampl.hpp"
#include "bcfw/chords.hpp"
#include "bcfw/domino.hpp"
#include "bcfw/inverse.hpp"
#include "bcfw/separation.hpp"

using namespace bcfw;

static void bm_enumerate(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto d = enumerate_diagrams(n, (n - 4) / 2);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(bm_enumerate)->Arg(8)->Arg(10)->Arg(12);

static void bm_construct_matrix(benchmark::State& state) {
  ChordDiagram d = ChordDiagram::standard(
      18, {{1, 6}, {2, 4}, {4, 6}, {6, 10}, {7, 9}, {10, 16}, {11, 16}, {13, 16}});
  ConstructionParams p = sample_params(d, 1);
  for (auto _ : state) {
    RationalMatrix m = construct_matrix(d, p);
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(bm_construct_matrix);

static void bm_pluecker_pattern(benchmark::State& state) {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 6}, {4, 6}});
  RationalMatrix m = sample_cell(d, 1);
  for (auto _ : state) {
    auto pat = m.nonzero_pluecker_pattern();
    benchmark::DoNotOptimize(pat);
  }
}
BENCHMARK(bm_pluecker_pattern);

static void bm_separator(benchmark::State& state) {
  ChordDiagram a = ChordDiagram::standard(8, {{1, 6}, {2, 6}, {4, 6}});
  ChordDiagram b = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  for (auto _ : state) {
    Separator s = separator(a, b);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(bm_separator);

static void bm_separator_eval(benchmark::State& state) {
  ChordDiagram a = ChordDiagram::standard(8, {{1, 6}, {2, 6}, {4, 6}});
  ChordDiagram b = ChordDiagram::standard(8, {{1, 6}, {2, 4}, {4, 6}});
  Separator s = separator(a, b);
  PositiveZ z = z_panel(8, 3, 1, 0).front();
  RationalMatrix y = amap(sample_cell(a, 0), z);
  for (auto _ : state) {
    Rat v = eval_functionary(s.functionary, y, z);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(bm_separator_eval);

static void bm_invert_point(benchmark::State& state) {
  ChordDiagram d = ChordDiagram::standard(8, {{1, 6}, {2, 6}, {4, 6}});
  PositiveZ z = z_panel(8, 3, 1, 0).front();
  RationalMatrix y = amap(sample_cell(d, 0), z);
  for (auto _ : state) {
    RationalMatrix c = invert_point(d, y, z);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_invert_point);

static void bm_identify_cell(benchmark::State& state) {
  PositiveZ z = z_panel(7, 2, 1, 0).front();
  RationalMatrix c = sample_positive_point(IndexSet::interval(1, 7), 2, 3);
  RationalMatrix y = amap(c, z);
  for (auto _ : state) {
    auto hit = identify_cell(y, z, 7, 2);
    benchmark::DoNotOptimize(hit);
  }
}
BENCHMARK(bm_identify_cell);

BENCHMARK_MAIN();
