// Copyright 2026 The hhcoset Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference vs OpenMP batch kernels. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "hhcoset/batch.hpp"

namespace {

using hhcoset::FactorizationKind;

void BM_HaarBatchSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhcoset::haar_batch_serial(n, 2048, 7));
    }
    state.SetItemsProcessed(state.iterations() * 2048);
}

void BM_HaarBatchParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhcoset::haar_batch(n, 2048, 7));
    }
    state.SetItemsProcessed(state.iterations() * 2048);
}

void BM_RoundTripSerial(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto batch = hhcoset::oracle_batch(n, 512, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhcoset::roundtrip_errors_serial(batch, FactorizationKind::coset));
    }
    state.SetItemsProcessed(state.iterations() * 512);
}

void BM_RoundTripParallel(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto batch = hhcoset::oracle_batch(n, 512, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(hhcoset::roundtrip_errors(batch, FactorizationKind::coset));
    }
    state.SetItemsProcessed(state.iterations() * 512);
}

}  // namespace

BENCHMARK(BM_HaarBatchSerial)->Arg(3)->Arg(8)->Arg(16);
BENCHMARK(BM_HaarBatchParallel)->Arg(3)->Arg(8)->Arg(16);
BENCHMARK(BM_RoundTripSerial)->Arg(4)->Arg(16);
BENCHMARK(BM_RoundTripParallel)->Arg(4)->Arg(16);

BENCHMARK_MAIN();
