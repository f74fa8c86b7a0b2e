#include <benchmark/benchmark.h>

#include "knotcolor/alexander.hpp"
#include "knotcolor/cnf.hpp"
#include "knotcolor/coloring.hpp"
#include "knotcolor/library.hpp"
#include "knotcolor/recognize.hpp"

using namespace knotcolor;

namespace {

// Args: (strands, twist count, dihedral order)
void torus_args(benchmark::internal::Benchmark *b) {
  for (int n : {5, 7, 11, 15})
    for (int p : {3, 5, 7})
      b->Args({2, n, p});
  for (int n : {4, 5, 7})
    for (int p : {3, 5})
      b->Args({3, n, p});
}

KnotDiagram torus(const benchmark::State &state) {
  return braid_to_diagram(torus_braid(state.range(0), state.range(1)));
}

void BM_Backtrack(benchmark::State &state) {
  KnotDiagram d = torus(state);
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(color_backtrack(d, q, Mode::decide).nontrivial);
}
BENCHMARK(BM_Backtrack)->Apply(torus_args);

void BM_BacktrackCount(benchmark::State &state) {
  KnotDiagram d = torus(state);
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(count_colorings(d, q));
}
BENCHMARK(BM_BacktrackCount)->Apply(torus_args);

void BM_Braid(benchmark::State &state) {
  BraidWord b = torus_braid(state.range(0), state.range(1));
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(color_braid(b, q, Mode::decide).nontrivial);
}
BENCHMARK(BM_Braid)->Apply(torus_args);

void BM_Sat(benchmark::State &state) {
  KnotDiagram d = torus(state);
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(colorable(d, q));
}
BENCHMARK(BM_Sat)->Apply(torus_args);

void BM_Fox(benchmark::State &state) {
  KnotDiagram d = torus(state);
  int p = state.range(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(fox_colorable(d, p));
}
BENCHMARK(BM_Fox)->Apply(torus_args);

// Brute force grows as q^arcs, so only the smallest knots.
void BM_Brute(benchmark::State &state) {
  KnotDiagram d = torus(state);
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(color_brute(d, q, Mode::decide).nontrivial);
}
BENCHMARK(BM_Brute)->Args({2, 3, 3})->Args({2, 5, 3})->Args({2, 5, 5})->Args({3, 4, 3});

void BM_Encode(benchmark::State &state) {
  KnotDiagram d = torus(state);
  Quandle q = dihedral(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(encode_cnf(d, q).clauses.size());
}
BENCHMARK(BM_Encode)->Apply(torus_args);

void BM_CertifyDefaultLibrary(benchmark::State &state) {
  KnotDiagram d = torus(state);
  auto library = library_generate(kDefaultLibrarySpec);
  CertifyOptions options;
  options.jobs = static_cast<int>(state.range(2));
  for (auto _ : state)
    benchmark::DoNotOptimize(certify_knotted(d, library, options).trace.size());
}
BENCHMARK(BM_CertifyDefaultLibrary)->Args({2, 9, 1})->Args({2, 9, 4})->Args({3, 5, 1})->Args({3, 5, 4});

void BM_Alexander(benchmark::State &state) {
  KnotDiagram d = torus(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(alexander_polynomial(d));
}
BENCHMARK(BM_Alexander)->Args({2, 7, 0})->Args({2, 15, 0})->Args({3, 7, 0});

} // namespace

BENCHMARK_MAIN();
