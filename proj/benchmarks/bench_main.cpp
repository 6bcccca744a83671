#include <benchmark/benchmark.h>

#include "qaq/corpus.hpp"
#include "qaq/homset.hpp"
#include "qaq/quiver.hpp"
#include "qaq/reference.hpp"

using namespace qaq;

namespace {

void BM_EnumerateTrefoil(benchmark::State& state) {
  Diagram d = load_corpus("3_1");
  Quandle q = Quandle::dihedral(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(d, q).size());
}
BENCHMARK(BM_EnumerateTrefoil)->Arg(3)->Arg(9)->Arg(27);

void BM_EnumerateBorromean(benchmark::State& state) {
  Diagram d = load_corpus("L6a4");
  Quandle q = reference_quandle("five-element");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_colorings(d, q).size());
}
BENCHMARK(BM_EnumerateBorromean);

void BM_BruteForceBorromean(benchmark::State& state) {
  Diagram d = load_corpus("L6a4");
  Quandle q = reference_quandle("five-element");
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_colorings(d, q).size());
}
BENCHMARK(BM_BruteForceBorromean);

void BM_AllPolynomials(benchmark::State& state) {
  Homset h = enumerate_colorings(load_corpus("L7a4"), reference_quandle("six-element"));
  for (auto _ : state) benchmark::DoNotOptimize(polynomial_for_all_elements(h).size());
}
BENCHMARK(BM_AllPolynomials);

void BM_ActionQuiver(benchmark::State& state) {
  Homset h = enumerate_colorings(load_corpus("L6a4"), Quandle::dihedral(4));
  for (auto _ : state) benchmark::DoNotOptimize(action_quiver(h).edges().size());
}
BENCHMARK(BM_ActionQuiver);

void BM_Endomorphisms(benchmark::State& state) {
  Quandle q = reference_quandle("six-element");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_endomorphisms(q).size());
}
BENCHMARK(BM_Endomorphisms);

}  // namespace

BENCHMARK_MAIN();
