#include <benchmark/benchmark.h>

#include "lensknot/report.hpp"

using namespace lensknot;

namespace {

const std::vector<KnotRecord>& records() {
  static const auto r = load_table_file(default_table_path());
  return r;
}

void BM_TableSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_table_serial(records()));
}

void BM_TableParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compute_table(records()));
}

void BM_AuditSerial(benchmark::State& state) {
  auto cases = congruence_cases(5, 40, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_congruence(cases, false));
}

void BM_AuditParallel(benchmark::State& state) {
  auto cases = congruence_cases(5, 40, 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_congruence(cases, true));
}

}  // namespace

BENCHMARK(BM_TableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TableParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AuditParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
