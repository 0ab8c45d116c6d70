// Serial reference vs OpenMP kernels.  Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include <random>

#include "schreier/abelian.hpp"
#include "schreier/catalog.hpp"
#include "schreier/derived.hpp"
#include "schreier/rewriting.hpp"
#include "schreier/snf.hpp"
#include "schreier/tietze.hpp"

using namespace schreier;

namespace {

Execution mode(const benchmark::State& s) {
  return s.range(0) ? Execution::parallel : Execution::serial;
}

IntegerMatrix random_matrix(std::size_t n) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> v(-9, 9);
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v(rng);
  return m;
}

const RelationMatrix& window_matrix() {
  static const RelationMatrix m = relation_matrix(TruncatedPresentation::truncate(
      simplified_relators(GroupFamily::SG, 5), simplified_alphabet(GroupFamily::SG, 5), 5));
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  IntegerMatrix m = random_matrix(static_cast<std::size_t>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m, mode(state)));
}
BENCHMARK(BM_SmithNormalForm)->ArgsProduct({{0, 1}, {20, 40}})->Unit(benchmark::kMillisecond);

void BM_LatticeReducer(benchmark::State& state) {
  const RelationMatrix& m = window_matrix();
  for (auto _ : state)
    benchmark::DoNotOptimize(LatticeReducer(m.columns.size(), m.rows, mode(state)).invariants());
  state.counters["rows"] = static_cast<double>(m.rows.size());
  state.counters["cols"] = static_cast<double>(m.columns.size());
}
BENCHMARK(BM_LatticeReducer)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExpansionCheck(benchmark::State& state) {
  PresentationSchema p = catalog(GroupFamily::GVB, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_expansion_identity(p, 3, mode(state)));
}
BENCHMARK(BM_ExpansionCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
