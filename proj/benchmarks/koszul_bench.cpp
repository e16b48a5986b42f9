#include <benchmark/benchmark.h>

#include <string>

#include "koszul/catalog.hpp"
#include "koszul/cw_cohomology.hpp"
#include "koszul/dual_algebra.hpp"

using namespace koszul;

namespace {

const FieldSpec kQ = FieldSpec::rationals();
const FieldSpec kF2 = FieldSpec::prime(2);

// Argument n selects simplex<n>.
void BM_DecideBarSimplex(benchmark::State& state) {
  auto g = face_poset_bar(catalog::make("simplex" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_decide(g, kQ).koszul);
  state.counters["vertices"] = static_cast<double>(g.size());
}
BENCHMARK(BM_DecideBarSimplex)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_DecideHatSphere(benchmark::State& state) {
  auto g = face_poset_hat(catalog::make("sphere" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_decide(g, kF2).koszul);
}
BENCHMARK(BM_DecideHatSphere)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_DecideSingularExample(benchmark::State& state) {
  auto g = face_poset_hat(catalog::make("example_singular"));
  for (auto _ : state) benchmark::DoNotOptimize(koszul_decide(g, kQ).koszul);
}
BENCHMARK(BM_DecideSingularExample)->Unit(benchmark::kMillisecond);

void BM_HXTableRational(benchmark::State& state) {
  auto x = catalog::make("simplex" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hx_table(x, kQ).dims.size());
}
BENCHMARK(BM_HXTableRational)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_HXTableIntegral(benchmark::State& state) {
  auto x = catalog::make("simplex" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hx_table_integral(x).groups.size());
}
BENCHMARK(BM_HXTableIntegral)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_Obstructions(benchmark::State& state) {
  auto x = catalog::make("rp2_six");
  for (auto _ : state) benchmark::DoNotOptimize(koszul_obstructions(x, kF2).koszul());
}
BENCHMARK(BM_Obstructions)->Unit(benchmark::kMillisecond);

void BM_AnnihilatorAll(benchmark::State& state) {
  auto g = face_poset_bar(catalog::make("simplex" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(annihilator_check_all(g, kQ).size());
}
BENCHMARK(BM_AnnihilatorAll)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_PhiIsoCheck(benchmark::State& state) {
  auto x = catalog::make("sphere" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(phi_iso_check(x, kF2).iso);
}
BENCHMARK(BM_PhiIsoCheck)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

void BM_GradedDims(benchmark::State& state) {
  auto g = face_poset_hat(catalog::make("sphere" + std::to_string(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(graded_dims(g, kQ).size());
}
BENCHMARK(BM_GradedDims)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
