// Copyright 2026 The dpdfa Authors.
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

// Serial reference loops against the blocked kernels, serial and OpenMP.

#include <benchmark/benchmark.h>

#include <vector>

#include "dpdfa/feedback.hpp"
#include "dpdfa/kernels.hpp"
#include "dpdfa/network.hpp"
#include "dpdfa/rng.hpp"
#include "dpdfa/trainers.hpp"

namespace {

using namespace dpdfa;

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = Rng::uniform_at(seed, i) - 0.5;
  return v;
}

void set_flops(benchmark::State& state, std::size_t m, std::size_t n, std::size_t k) {
  state.counters["GFLOP/s"] = benchmark::Counter(
      2.0 * m * n * k * static_cast<double>(state.iterations()), benchmark::Counter::kIsRate,
      benchmark::Counter::kIs1000);
}

// Shapes of the Fashion-MNIST MLP forward pass: batch 128, 784 -> 128.
constexpr std::size_t kM = 128, kN = 128, kK = 784;

void BM_GemmNtReference(benchmark::State& state) {
  const auto a = random_vector(kM * kK, 1), b = random_vector(kN * kK, 2);
  std::vector<double> c(kM * kN);
  for (auto _ : state) {
    kernels::reference::gemm_nt(kM, kN, kK, a.data(), b.data(), c.data(), false);
    benchmark::DoNotOptimize(c.data());
  }
  set_flops(state, kM, kN, kK);
}

template <Exec E>
void BM_GemmNt(benchmark::State& state) {
  const auto a = random_vector(kM * kK, 1), b = random_vector(kN * kK, 2);
  std::vector<double> c(kM * kN);
  for (auto _ : state) {
    kernels::gemm_nt(kM, kN, kK, a.data(), b.data(), c.data(), false, E);
    benchmark::DoNotOptimize(c.data());
  }
  set_flops(state, kM, kN, kK);
}

// Weight-gradient shape: delta^T x over the batch, 128 x 784 from k = 128.
void BM_GemmTnReference(benchmark::State& state) {
  const auto a = random_vector(kM * kN, 3), b = random_vector(kM * kK, 4);
  std::vector<double> c(kN * kK);
  for (auto _ : state) {
    kernels::reference::gemm_tn(kN, kK, kM, a.data(), b.data(), c.data(), false);
    benchmark::DoNotOptimize(c.data());
  }
  set_flops(state, kN, kK, kM);
}

template <Exec E>
void BM_GemmTn(benchmark::State& state) {
  const auto a = random_vector(kM * kN, 3), b = random_vector(kM * kK, 4);
  std::vector<double> c(kN * kK);
  for (auto _ : state) {
    kernels::gemm_tn(kN, kK, kM, a.data(), b.data(), c.data(), false, E);
    benchmark::DoNotOptimize(c.data());
  }
  set_flops(state, kN, kK, kM);
}

struct ConvSetup {
  NetworkSpec spec = NetworkSpec::parse(
      {1, 28, 28}, "conv:16:5x5:s1:p0:tanh,pool:2x2,flatten,dense:64:sigmoid,dense:10");
  Parameters params;
  Tensor x;
  Tensor y;
  FeedbackSet feedback;

  ConvSetup() {
    Rng rng(7);
    params = init_params(spec, rng);
    x = Tensor({32, 784});
    y = Tensor({32, 10});
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform();
    for (std::size_t i = 0; i < 32; ++i) y.at(i, i % 10) = 1.0;
    feedback = FeedbackSet::build(spec, std::vector<double>{0.9}, 3);
  }
};

template <Exec E>
void BM_HybridUpdate(benchmark::State& state) {
  static const ConvSetup s;
  const ForwardTrace trace = forward(s.params, s.spec, s.x, E);
  const ClipParams clip{0.1, 5.0, 0.5};
  Rng rng(1);
  for (auto _ : state) {
    auto d = hybrid_update(trace, s.y, s.params, s.feedback, clip, 0.01, rng, s.spec, 1, E);
    benchmark::DoNotOptimize(d.layers.data());
  }
}

template <Exec E>
void BM_DpBpUpdate(benchmark::State& state) {
  static const ConvSetup s;
  const ForwardTrace trace = forward(s.params, s.spec, s.x, E);
  Rng rng(1);
  for (auto _ : state) {
    auto d = dp_bp_update(trace, s.y, s.params, 1.0, 0.01, rng, s.spec, E);
    benchmark::DoNotOptimize(d.layers.data());
  }
}

BENCHMARK(BM_GemmNtReference);
BENCHMARK(BM_GemmNt<Exec::kSerial>);
BENCHMARK(BM_GemmNt<Exec::kParallel>);
BENCHMARK(BM_GemmTnReference);
BENCHMARK(BM_GemmTn<Exec::kSerial>);
BENCHMARK(BM_GemmTn<Exec::kParallel>);
BENCHMARK(BM_HybridUpdate<Exec::kSerial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HybridUpdate<Exec::kParallel>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpBpUpdate<Exec::kSerial>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DpBpUpdate<Exec::kParallel>)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
