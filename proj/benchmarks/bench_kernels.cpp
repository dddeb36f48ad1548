#include <benchmark/benchmark.h>

#include "pbzl/catalog.hpp"
#include "pbzl/congruence.hpp"
#include "pbzl/enumerate.hpp"
#include "pbzl/ideal.hpp"
#include "pbzl/term.hpp"

using namespace pbzl;

static void BM_PrincipalCongruence(benchmark::State& state) {
  const FiniteAlgebra h = build_catalog_algebra("H16");
  for (auto _ : state) {
    auto cg = principal_congruence(h, 1, 7);
    benchmark::DoNotOptimize(cg);
  }
}
BENCHMARK(BM_PrincipalCongruence);

static void BM_CongruenceLattice(benchmark::State& state) {
  const FiniteAlgebra a = build_catalog_algebra("D4xD2");
  for (auto _ : state) {
    auto con = all_congruences(a);
    benchmark::DoNotOptimize(con);
  }
}
BENCHMARK(BM_CongruenceLattice);

static void BM_IdentityCheck(benchmark::State& state) {
  const FiniteAlgebra h = build_catalog_algebra("H16");
  const NamedIdentity& id = find_identity(state.range(0) == 0 ? "SK" : "AOL1");
  for (auto _ : state) {
    auto result = check_identity(h, id);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_IdentityCheck)->Arg(0)->Arg(1);

static void BM_ModalRelation(benchmark::State& state) {
  const FiniteAlgebra h = build_catalog_algebra("H16");
  for (auto _ : state) {
    auto rel = rho(h, Mask{1});
    benchmark::DoNotOptimize(rel);
  }
}
BENCHMARK(BM_ModalRelation);

static void BM_EnumerateLattices(benchmark::State& state) {
  for (auto _ : state) {
    auto lats = enumerate_lattices(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(lats);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EnumerateLattices)->DenseRange(4, 7)->Complexity();

static void BM_EnumerateExpansions(benchmark::State& state) {
  const auto lattices = enumerate_lattices(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    int total = 0;
    for (const auto& lat : lattices)
      total += static_cast<int>(enumerate_expansions(lat, ClassLabel::PBZSTAR).size());
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(BM_EnumerateExpansions)->DenseRange(4, 6);

BENCHMARK_MAIN();
