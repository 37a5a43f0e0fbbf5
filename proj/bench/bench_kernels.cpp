// Copyright 2026 The qromc Authors
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

#include <cmath>
#include <random>
#include <vector>

#include "qromc/kernels.hpp"

namespace {

using qromc::kernels::Amplitude;
using qromc::kernels::Mat2;

std::vector<Amplitude> random_state(int qubits) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist;
    std::vector<Amplitude> amps(std::size_t{1} << qubits);
    double norm = 0.0;
    for (auto &a : amps) {
        a = {dist(rng), dist(rng)};
        norm += std::norm(a);
    }
    for (auto &a : amps) {
        a /= std::sqrt(norm);
    }
    return amps;
}

const Mat2 kRy{{0.8, 0.0}, {-0.6, 0.0}, {0.6, 0.0}, {0.8, 0.0}};

template <bool Parallel>
void BM_ApplyControlled(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    auto amps = random_state(q);
    const std::uint64_t target = std::uint64_t{1} << (q / 2);
    const std::uint64_t control = 1;
    for (auto _ : state) {
        if constexpr (Parallel) {
            qromc::kernels::apply_controlled(amps, target, control, control, kRy);
        } else {
            qromc::kernels::serial::apply_controlled(amps, target, control, control, kRy);
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_SplitNorm(benchmark::State &state) {
    const int q = static_cast<int>(state.range(0));
    auto amps = random_state(q);
    for (auto _ : state) {
        auto r = Parallel ? qromc::kernels::split_norm(amps, 2) : qromc::kernels::serial::split_norm(amps, 2);
        benchmark::DoNotOptimize(r);
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(amps.size()));
}

template <bool Parallel>
void BM_WalshHadamard(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<double> values(std::size_t{1} << n);
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.0, 6.28);
    for (auto &v : values) {
        v = dist(rng);
    }
    for (auto _ : state) {
        if constexpr (Parallel) {
            qromc::kernels::walsh_hadamard(values);
        } else {
            qromc::kernels::serial::walsh_hadamard(values);
        }
        benchmark::DoNotOptimize(values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(values.size()));
}

template <bool Parallel>
void BM_ReedMuller(benchmark::State &state) {
    const int n = static_cast<int>(state.range(0));
    std::vector<std::uint8_t> values(std::size_t{1} << n);
    std::mt19937_64 rng(13);
    for (auto &v : values) {
        v = static_cast<std::uint8_t>(rng() & 1);
    }
    for (auto _ : state) {
        if constexpr (Parallel) {
            qromc::kernels::reed_muller(values);
        } else {
            qromc::kernels::serial::reed_muller(values);
        }
        benchmark::DoNotOptimize(values.data());
    }
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(values.size()));
}

}  // namespace

BENCHMARK_TEMPLATE(BM_ApplyControlled, false)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_ApplyControlled, true)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_SplitNorm, false)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_SplitNorm, true)->DenseRange(12, 22, 5);
BENCHMARK_TEMPLATE(BM_WalshHadamard, false)->DenseRange(10, 20, 5);
BENCHMARK_TEMPLATE(BM_WalshHadamard, true)->DenseRange(10, 20, 5);
BENCHMARK_TEMPLATE(BM_ReedMuller, false)->DenseRange(10, 20, 5);
BENCHMARK_TEMPLATE(BM_ReedMuller, true)->DenseRange(10, 20, 5);

BENCHMARK_MAIN();
