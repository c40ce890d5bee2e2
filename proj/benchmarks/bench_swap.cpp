// Copyright 2026 The vbsswap Authors
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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "vbsswap/vbsswap.hpp"

namespace {

using vbsswap::BasisMode;

std::vector<vbsswap::FilterOp> random_filters(std::size_t bonds, std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<vbsswap::FilterOp> out;
  for (std::size_t k = 0; k < bonds; ++k) out.push_back(vbsswap::random_filter(dim, rng));
  return out;
}

void BM_TransferMap(benchmark::State& state) {
  const auto chain = vbsswap::SwapChain(random_filters(static_cast<std::size_t>(state.range(0)) + 1, 2, 7),
                                        BasisMode::kVbs);
  for (auto _ : state) benchmark::DoNotOptimize(vbsswap::log_p_sum_transfer(chain));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_TransferMap)->RangeMultiplier(10)->Range(10, 100000)->Complexity(benchmark::oN);

void BM_EnumerateVbs(benchmark::State& state) {
  const auto chain = vbsswap::SwapChain(random_filters(static_cast<std::size_t>(state.range(0)) + 1, 2, 11),
                                        BasisMode::kVbs);
  for (auto _ : state) benchmark::DoNotOptimize(vbsswap::enumerate_outcomes(chain));
}
BENCHMARK(BM_EnumerateVbs)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateQudit(benchmark::State& state) {
  const std::size_t dim = static_cast<std::size_t>(state.range(0));
  const vbsswap::QuditChain chain(dim, random_filters(3, dim, 13));
  for (auto _ : state) benchmark::DoNotOptimize(vbsswap::enumerate_qudit_outcomes(chain));
}
BENCHMARK(BM_EnumerateQudit)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_OracleCrossCheck(benchmark::State& state) {
  const auto filters = random_filters(static_cast<std::size_t>(state.range(0)) + 1, 2, 17);
  for (auto _ : state) benchmark::DoNotOptimize(vbsswap::cross_check(filters));
}
BENCHMARK(BM_OracleCrossCheck)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Sampling(benchmark::State& state) {
  const auto chain = vbsswap::SwapChain(random_filters(static_cast<std::size_t>(state.range(0)) + 1, 2, 19),
                                        BasisMode::kVbs);
  vbsswap::OutcomeSampler sampler(chain, 42);
  for (auto _ : state) benchmark::DoNotOptimize(sampler.draw());
}
BENCHMARK(BM_Sampling)->Arg(1)->Arg(8)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
