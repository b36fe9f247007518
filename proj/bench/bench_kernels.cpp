// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "axkatz/kernels.hpp"

using namespace axkatz;

namespace {

const AbelianShape kDomain({4, 2});
const AbelianShape kCodomain({4});
constexpr std::uint64_t kTables = 65536;  // 4^8

std::vector<ZeroSetFamily> random_families(std::size_t count) {
  std::mt19937_64 rng(1);
  std::vector<ZeroSetFamily> fams(2);
  for (auto& f : fams) {
    f.words = 1;
    f.count = count;
    f.bits.resize(count);
    for (auto& w : f.bits) w = rng() & rng() & 0xffffffffu;
  }
  return fams;
}

std::vector<PolySystem> random_systems(std::size_t count) {
  std::mt19937_64 rng(2);
  std::vector<PolySystem> out;
  for (std::size_t i = 0; i < count; ++i) {
    PolySystem s;
    s.modulus = 5;
    s.vars = 4;
    Polynomial p;
    p.degree = 3;
    for (int k = 0; k < 4; ++k) {
      Monomial m{1 + rng() % 4, std::vector<std::uint64_t>(4, 0)};
      for (int e = 0; e < 3; ++e) ++m.exps[rng() % 4];
      p.terms.push_back(m);
    }
    s.polys.push_back(p);
    out.push_back(s);
  }
  return out;
}

std::vector<std::vector<std::uint64_t>> random_costs() {
  std::mt19937_64 rng(3);
  std::vector<std::vector<std::uint64_t>> costs(4, std::vector<std::uint64_t>(512));
  for (auto& c : costs)
    for (auto& v : c) v = rng() % 16;
  return costs;
}

ExtendedDegree slow_value(std::uint64_t i) {
  std::uint64_t x = i;
  for (int k = 0; k < 200; ++k) x = x * 6364136223846793005ULL + 1442695040888963407ULL;
  return ExtendedDegree::finite(x % 1000);
}

}  // namespace

static void BM_TableDegrees(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(table_degrees(kDomain, kCodomain, 0, kTables, exec));
  state.SetItemsProcessed(state.iterations() * kTables);
}
BENCHMARK(BM_TableDegrees)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_Tuples(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto fams = random_families(2000);
  for (auto _ : state) benchmark::DoNotOptimize(min_ord_over_tuples(fams, 2, exec));
  state.SetItemsProcessed(state.iterations() * 2000 * 2000);
}
BENCHMARK(BM_Tuples)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_PolyCounts(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto systems = random_systems(200);
  for (auto _ : state) benchmark::DoNotOptimize(poly_zero_counts(systems, exec));
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_PolyCounts)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_MinPlus(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  const auto costs = random_costs();
  for (auto _ : state) benchmark::DoNotOptimize(min_plus_convolution(costs, exec));
}
BENCHMARK(BM_MinPlus)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_IndexedMin(benchmark::State& state) {
  const auto exec = state.range(0) ? Execution::parallel : Execution::serial;
  for (auto _ : state) benchmark::DoNotOptimize(indexed_min(100000, slow_value, exec));
}
BENCHMARK(BM_IndexedMin)->ArgName("omp")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
