#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "fglocus/frobenius.hpp"
#include "fglocus/locus.hpp"
#include "fglocus/simplicial_complex.hpp"

namespace bm = benchmark;
using namespace fglocus;

namespace {

SimplicialComplex random_complex(std::size_t n, std::size_t facet_count, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<Face::Bits> pick(1, Face::full(n).bits());
  std::vector<Face> facets;
  for (std::size_t i = 0; i < facet_count; ++i)
    facets.emplace_back(pick(rng));
  return SimplicialComplex(n, std::move(facets));
}

} // namespace

static void BM_AlgebraicLocus(bm::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto ring = RingContext::indexed(n);
  auto ideal = to_ideal(random_complex(n, 4, 7), ring);
  for (auto _ : state) {
    auto result = igl_algebraic(ideal);
    bm::DoNotOptimize(result);
  }
}
BENCHMARK(BM_AlgebraicLocus)->DenseRange(5, 10, 1);

static void BM_CombinatorialLocus(bm::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto complex = random_complex(n, 4, 7);
  auto ring = RingContext::indexed(n);
  for (auto _ : state) {
    auto result = igl_combinatorial(complex, ring);
    bm::DoNotOptimize(result);
  }
}
BENCHMARK(BM_CombinatorialLocus)->DenseRange(5, 10, 1);

static void BM_AlgebraicLocusNoPrune(bm::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto ring = RingContext::indexed(n);
  auto ideal = to_ideal(random_complex(n, 4, 7), ring);
  for (auto _ : state) {
    auto result = igl_algebraic(ideal, LocusOptions{.prune = false});
    bm::DoNotOptimize(result);
  }
}
BENCHMARK(BM_AlgebraicLocusNoPrune)->DenseRange(5, 10, 1);

static void BM_Oracle(bm::State& state) {
  auto ring = RingContext::indexed(6);
  auto ideal = to_ideal(random_complex(6, 3, 11), ring);
  OracleParams params{static_cast<unsigned>(state.range(0)), 3, 1};
  for (auto _ : state) {
    auto report = check_k_generation(ideal, params);
    bm::DoNotOptimize(report);
  }
}
BENCHMARK(BM_Oracle)->Arg(2)->Arg(3);
BENCHMARK_MAIN();
