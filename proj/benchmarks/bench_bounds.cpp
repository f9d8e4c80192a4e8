#include "schur/bigraph.hpp"
#include "schur/bounds.hpp"
#include "schur/enumerate.hpp"
#include "schur/path_witness.hpp"

#include <benchmark/benchmark.h>

using namespace schur;
using Tag = GraphName::Tag;

namespace {

void BM_NormBoundsCatalog(benchmark::State& state) {
  const GraphName names[] = {{Tag::SigmaSquare, 2}, {Tag::E, 4},
                             {Tag::Trie, 0},        {Tag::Gee7, 0},
                             {Tag::Obstruction53, 0}};
  const Matrix a =
      catalog(names[static_cast<std::size_t>(state.range(0))]).to_matrix();
  for (auto _ : state) {
    NormBounds nb = norm_bounds(a);
    benchmark::DoNotOptimize(nb.lower);
  }
}
BENCHMARK(BM_NormBoundsCatalog)->DenseRange(0, 4);

void BM_NormBoundsPath(benchmark::State& state) {
  const Matrix a =
      catalog(Tag::SigmaSquare, static_cast<int>(state.range(0))).to_matrix();
  for (auto _ : state) {
    NormBounds nb = norm_bounds(a);
    benchmark::DoNotOptimize(nb.upper);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_NormBoundsPath)->DenseRange(2, 10, 2)->Complexity();

void BM_CompletionProgram(benchmark::State& state) {
  Matrix a(3, 4);
  a << 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0;  // slack-vertex block
  for (auto _ : state) {
    auto f = completion_upper_bound(a);
    benchmark::DoNotOptimize(f->product());
  }
}
BENCHMARK(BM_CompletionProgram);

void BM_PathWitness(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PathWitness w = build_path_witness(n);
    benchmark::DoNotOptimize(w.attained());
  }
}
BENCHMARK(BM_PathWitness)->Arg(4)->Arg(8)->Arg(12);

void BM_CanonicalKey(benchmark::State& state) {
  const BiGraph g = catalog(Tag::SigmaSquare, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(canonical_key(g));
  }
}
BENCHMARK(BM_CanonicalKey);

void BM_EnumerateClasses(benchmark::State& state) {
  for (auto _ : state) {
    auto classes = enumerate_classes(3, 3);
    benchmark::DoNotOptimize(classes.size());
  }
}
BENCHMARK(BM_EnumerateClasses);

}  // namespace

BENCHMARK_MAIN();
