#include <benchmark/benchmark.h>

#include <random>

#include <hstrace/group_ring.hpp>
#include <hstrace/qcalc.hpp>
#include <hstrace/smith.hpp>

using namespace hstrace;

namespace {

GroupPtr symmetric_group(std::uint32_t n) {
  std::vector<std::uint32_t> swap01(n), cycle(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    swap01[k] = k;
    cycle[k] = (k + 1) % n;
  }
  swap01[0] = 1;
  swap01[1] = 0;
  return Group::from_permutations(n, {swap01, cycle});
}

GroupRingMatrix random_matrix(const GroupPtr& g, std::size_t n, std::mt19937_64& rng) {
  const std::size_t order = g->enumerable_order();
  std::uniform_int_distribution<std::size_t> elem(0, order - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  GroupRingMatrix m(g, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (int t = 0; t < 3; ++t) m.at(i, j).add_term(g->element(elem(rng)), coeff(rng));
  return m;
}

void BM_ConjugacyClasses(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    // rebuild so the class cache is cold
    GroupPtr g = symmetric_group(static_cast<std::uint32_t>(state.range(0)));
    state.ResumeTiming();
    benchmark::DoNotOptimize(g->conjugacy_classes().size());
  }
}
BENCHMARK(BM_ConjugacyClasses)->Arg(5)->Arg(6);

void BM_HsTraceProduct(benchmark::State& state) {
  GroupPtr g = symmetric_group(4);
  std::mt19937_64 rng(7);
  GroupRingMatrix a = random_matrix(g, state.range(0), rng);
  GroupRingMatrix b = random_matrix(g, state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hs_trace(a * b).augmentation());
}
BENCHMARK(BM_HsTraceProduct)->Arg(3)->Arg(6);

void BM_QStructureCached(benchmark::State& state) {
  GroupPtr g = symmetric_group(static_cast<std::uint32_t>(state.range(0)));
  g->conjugacy_classes();
  q_structure(g, 1, true);
  for (auto _ : state) benchmark::DoNotOptimize(q_structure(g, 1, true)->free_rank());
}
BENCHMARK(BM_QStructureCached)->Arg(6);

void BM_QStructureOrbit(benchmark::State& state) {
  for (auto _ : state) {
    state.PauseTiming();
    // a fresh group defeats the pointer-keyed cache; classes precomputed
    GroupPtr g = symmetric_group(static_cast<std::uint32_t>(state.range(0)));
    g->conjugacy_classes();
    state.ResumeTiming();
    benchmark::DoNotOptimize(q_structure(g, 1, true)->free_rank());
  }
}
BENCHMARK(BM_QStructureOrbit)->Arg(6);

void BM_QStructureSnfOracle(benchmark::State& state) {
  GroupPtr g = symmetric_group(static_cast<std::uint32_t>(state.range(0)));
  g->conjugacy_classes();
  for (auto _ : state)
    benchmark::DoNotOptimize(q_structure_snf_oracle(g, 1, true).free_rank);
}
BENCHMARK(BM_QStructureSnfOracle)->Arg(6);

void BM_SmithNormalForm(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> entry(-9, 9);
  const std::size_t n = state.range(0);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = entry(rng);
  for (auto _ : state) {
    IntMatrix copy = m;
    benchmark::DoNotOptimize(smith_normal_form(std::move(copy)).invariants.size());
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
