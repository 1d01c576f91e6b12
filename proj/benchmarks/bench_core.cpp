#include <benchmark/benchmark.h>

#include <vector>

#include "gfl/dynamics.hpp"
#include "gfl/echelon.hpp"
#include "gfl/exterior.hpp"
#include "gfl/hilbert.hpp"
#include "gfl/random.hpp"
#include "gfl/semigroup.hpp"

namespace {

void BM_EchelonInsert(benchmark::State& state) {
  const auto width = static_cast<std::size_t>(state.range(0));
  const gfl::PrimeField F(gfl::kDefaultPrime);
  std::vector<gfl::Row> rows(width, gfl::Row(width));
  gfl::ResidueStream stream(1);
  for (auto& r : rows)
    for (auto& c : r) c = stream.next(F.modulus());
  for (auto _ : state) benchmark::DoNotOptimize(gfl::matrix_rank(F, width, rows));
}
BENCHMARK(BM_EchelonInsert)->Arg(64)->Arg(128)->Arg(256);

void BM_GenericHilbertFunction(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const gfl::hilbert::IdealSpec spec{n, gfl::hilbert::GenericForms{std::vector<int>(n + 1, 2)}, 3};
  const int dmax = gfl::hilbert::default_dmax(n, std::vector<int>(n + 1, 2));
  for (auto _ : state) benchmark::DoNotOptimize(gfl::hilbert::hilbert_function(spec, dmax));
}
BENCHMARK(BM_GenericHilbertFunction)->DenseRange(3, 6);

void BM_PsiOrder(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gfl::dynamics::psi_order(p));
}
BENCHMARK(BM_PsiOrder)->Arg(5)->Arg(7);

void BM_PhiSeventyOne(benchmark::State& state) {
  const auto f = gfl::dynamics::parse_func_poly("1 + x^63", 71, 1);
  for (auto _ : state) benchmark::DoNotOptimize(gfl::dynamics::phi(f));
}
BENCHMARK(BM_PhiSeventyOne);

void BM_ExteriorAnnihilator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto f = gfl::exterior::random_ext_form(n, 3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(gfl::exterior::annihilator_dims(f, n - 3));
}
BENCHMARK(BM_ExteriorAnnihilator)->Arg(9)->Arg(11);

void BM_SemigroupSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gfl::semigroup::sweep(static_cast<int>(state.range(0)), 3));
}
BENCHMARK(BM_SemigroupSweep)->Arg(8)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
