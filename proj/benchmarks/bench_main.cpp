#include <benchmark/benchmark.h>

#include "wproj/a_model.hpp"
#include "wproj/b_model.hpp"
#include "wproj/limits.hpp"
#include "wproj/report.hpp"
#include "wproj/unfolding.hpp"

using namespace wproj;

namespace {

std::vector<std::int64_t> ones(std::int64_t mu) { return std::vector<std::int64_t>(static_cast<std::size_t>(mu), 1); }

std::vector<std::int64_t> mixed(std::int64_t mu) {
  // (1, 2, ..., ) padded with ones up to mu.
  std::vector<std::int64_t> w{1};
  std::int64_t sum = 1;
  for (std::int64_t k = 2; sum + k <= mu; ++k) {
    w.push_back(k);
    sum += k;
  }
  while (sum < mu) {
    w.insert(w.begin() + 1, 1);
    ++sum;
  }
  return w;
}

void BM_BuildPackages(benchmark::State& state) {
  const WeightData wd = build_weight_data(mixed(state.range(0)));
  const SpectrumData sd = compute_spectrum(wd);
  for (auto _ : state) {
    auto a = build_a_model(wd, sd);
    auto b = build_b_model(wd, sd);
    auto lim = build_limits(wd, sd);
    auto unf = build_unfolding(wd, sd, lim);
    benchmark::DoNotOptimize(unf.potential.data());
  }
}
BENCHMARK(BM_BuildPackages)->DenseRange(4, 16, 4);

void BM_FlatnessPhi(benchmark::State& state) {
  const WeightData wd = build_weight_data(mixed(state.range(0)));
  const SpectrumData sd = compute_spectrum(wd);
  const Connection conn = b_connection(wd, sd);
  for (auto _ : state) benchmark::DoNotOptimize(verify_flatness(conn).passed());
}
BENCHMARK(BM_FlatnessPhi)->DenseRange(4, 16, 4);

void BM_FlatnessUnfolded(benchmark::State& state) {
  const WeightData wd = build_weight_data(ones(state.range(0)));
  const SpectrumData sd = compute_spectrum(wd);
  const LimitPackage lim = build_limits(wd, sd);
  const UnfoldingPackage pkg = build_unfolding(wd, sd, lim);
  const Connection conn = unfolded_connection(sd, pkg.C, pkg.A_tilde);
  for (auto _ : state) benchmark::DoNotOptimize(verify_flatness(conn).passed());
}
BENCHMARK(BM_FlatnessUnfolded)->DenseRange(3, 9, 2);

void BM_Report(benchmark::State& state) {
  const auto w = mixed(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(emit_json(run_report(w)).size());
}
BENCHMARK(BM_Report)->Arg(6)->Arg(12);

void BM_Sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(static_cast<std::size_t>(state.range(0))).checks);
}
BENCHMARK(BM_Sweep)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
