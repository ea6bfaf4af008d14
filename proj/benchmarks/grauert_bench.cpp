#include <benchmark/benchmark.h>

#include <random>

#include "grauert/domain.hpp"
#include "grauert/hermitian.hpp"
#include "grauert/psh.hpp"

using namespace grauert;

namespace {

const Catalog& cat() { return Catalog::instance(); }

const char* const kVertexSpaces[] = {"BDI:p=2,q=1", "AI:n=3", "CI:n=3", "AI:n=5", "CI:n=4", "FI"};

void BM_OmegaVertices(benchmark::State& state) {
  const auto d = cat().restricted_datum(kVertexSpaces[state.range(0)]);
  state.SetLabel(kVertexSpaces[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(omega_polytope(d));
}
BENCHMARK(BM_OmegaVertices)->DenseRange(0, 5)->Unit(benchmark::kMicrosecond);

void BM_ClassifyGrid(benchmark::State& state) {
  const auto spaces = cat().all_spaces();
  for (auto _ : state)
    for (const auto& s : spaces) benchmark::DoNotOptimize(classify(cat(), s));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(spaces.size()));
}
BENCHMARK(BM_ClassifyGrid)->Unit(benchmark::kMillisecond);

void BM_VertexCheck(benchmark::State& state) {
  const auto e = embedding_map(cat(), cat().lookup("CII:p=2,q=2"), cat().lookup("AIII:p=4,q=4"));
  for (auto _ : state) benchmark::DoNotOptimize(theorem7_check(cat(), e));
}
BENCHMARK(BM_VertexCheck)->Unit(benchmark::kMicrosecond);

const char* const kLeviSpaces[] = {"BDI:p=2,q=1", "AI:n=3", "CI:n=2", "AIII:p=2,q=2", "AI:n=6", "AIII:p=4,q=4"};

void BM_LeviMatrix(benchmark::State& state) {
  const auto a = realize(cat(), cat().lookup(kLeviSpaces[state.range(0)]));
  std::mt19937_64 rng(0);
  const auto xi = interior_point(a.datum, rng, 0.9, false);
  state.SetLabel(kLeviSpaces[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(levi_matrix(a, xi));
}
BENCHMARK(BM_LeviMatrix)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_HessianU(benchmark::State& state) {
  const auto d = cat().restricted_datum("EVIII");
  std::mt19937_64 rng(0);
  const auto xi = interior_point(d, rng, 0.9, false);
  for (auto _ : state) benchmark::DoNotOptimize(hessian_u(d, xi));
}
BENCHMARK(BM_HessianU)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
