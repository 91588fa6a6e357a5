// Copyright 2026 The collatz_stop Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "collatz/bounds_cycles.hpp"
#include "collatz/core_process.hpp"
#include "collatz/residue_classes.hpp"
#include "collatz/scan_engine.hpp"
#include "collatz/sequence_algebra.hpp"

namespace {

using namespace collatz;

void BM_StoppingRecordWord(benchmark::State& state) {
  std::uint64_t n = 1'000'001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stopping_record(BigInt(n)));
    n += 2;
  }
}
BENCHMARK(BM_StoppingRecordWord);

void BM_StoppingRecordBig(benchmark::State& state) {
  // Starts beyond 64 bits take the arbitrary-precision path.
  BigInt n = pow2(static_cast<std::size_t>(state.range(0))) + 27;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stopping_record(n));
    n += 2;
  }
}
BENCHMARK(BM_StoppingRecordBig)->Arg(80)->Arg(256)->Arg(1024);

void BM_ClosedForm(benchmark::State& state) {
  const auto rec = stopping_record(BigInt(63728127));
  for (auto _ : state) benchmark::DoNotOptimize(apply_closed_form(rec.q, rec.n));
}
BENCHMARK(BM_ClosedForm);

void BM_EnumerateMinimal(benchmark::State& state) {
  const auto s = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_minimal(s));
}
BENCHMARK(BM_EnumerateMinimal)->Arg(13)->Arg(18)->Arg(21)->Unit(benchmark::kMillisecond);

void BM_RatioRecords(benchmark::State& state) {
  const auto s_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ratio_records(485, s_max, 50));
}
BENCHMARK(BM_RatioRecords)->Arg(25'000)->Arg(302'000)->Unit(benchmark::kMillisecond);

void BM_CycleCandidates(benchmark::State& state) {
  const auto s_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_cycle_candidates(s_max));
}
BENCHMARK(BM_CycleCandidates)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

class NullSink : public RecordSink {
 public:
  void write(const ScanRow& row) override { benchmark::DoNotOptimize(row.n); }
};

void BM_Scan(benchmark::State& state) {
  ScanConfig cfg;
  cfg.start = 2;
  cfg.end = 200'000;
  cfg.workers = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    NullSink sink;
    benchmark::DoNotOptimize(scan_range(cfg, sink));
  }
  state.SetItemsProcessed(state.iterations() * 199'999);
}
BENCHMARK(BM_Scan)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
