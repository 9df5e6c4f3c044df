// Copyright 2026 The qeuler Authors
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

#include <random>
#include <vector>

#include "qeuler/euler.hpp"
#include "qeuler/identities.hpp"
#include "qeuler/qpoly.hpp"
#include "qeuler/zeta.hpp"

namespace {

using namespace qeuler;

QPoly dense_poly(std::mt19937_64& rng, long degree) {
  std::uniform_int_distribution<long> co(-50, 50);
  std::vector<QPoly::Term> terms;
  for (long e = 0; e <= degree; ++e) terms.push_back({e, make_rat(co(rng), 1)});
  terms.push_back({degree, make_rat(1, 1)});
  return QPoly::from_terms(std::move(terms));
}

void BM_QPolyMultiply(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const QPoly a = dense_poly(rng, state.range(0));
  const QPoly b = dense_poly(rng, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_QPolyMultiply)->RangeMultiplier(4)->Range(16, 1024);

// gcd of two products sharing a common factor, the shape hit by canonicalization.
void BM_QPolyGcd(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const QPoly g = dense_poly(rng, state.range(0) / 2);
  const QPoly a = g * dense_poly(rng, state.range(0) / 2);
  const QPoly b = g * dense_poly(rng, state.range(0) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_QPolyGcd)->RangeMultiplier(2)->Range(16, 256);

void BM_QPolyGcdEuclid(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const QPoly g = dense_poly(rng, state.range(0) / 2);
  const QPoly a = g * dense_poly(rng, state.range(0) / 2);
  const QPoly b = g * dense_poly(rng, state.range(0) / 2);
  for (auto _ : state) benchmark::DoNotOptimize(gcd_euclid(a, b));
}
BENCHMARK(BM_QPolyGcdEuclid)->RangeMultiplier(2)->Range(16, 64);

void BM_EulerExact(benchmark::State& state) {
  const long n = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(euler_exact({n, 2, 3, 1, 1}));
}
BENCHMARK(BM_EulerExact)->DenseRange(2, 10, 4);

void BM_Thm22Side(benchmark::State& state) {
  const SymCheckParams p{3, 5, state.range(0), 1, 2, 1};
  for (auto _ : state) {
    benchmark::DoNotOptimize(thm22_side(Side::kLeft, p));
    benchmark::DoNotOptimize(thm22_side(Side::kRight, p));
  }
}
BENCHMARK(BM_Thm22Side)->DenseRange(1, 5, 2);

void BM_ZetaSingleSum(benchmark::State& state) {
  const ZetaQuery z{{2.0, 1.0}, 1.5, 3, 2, static_cast<double>(state.range(0)) / 10.0, 1e-12};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_single_sum(z));
}
BENCHMARK(BM_ZetaSingleSum)->DenseRange(3, 9, 3);

void BM_ZetaMultiSum(benchmark::State& state) {
  const ZetaQuery z{{2.0, 1.0}, 1.5, 3, 2, 0.5, 1e-12};
  for (auto _ : state) benchmark::DoNotOptimize(zeta_multi_sum(z, state.range(0)));
}
BENCHMARK(BM_ZetaMultiSum)->RangeMultiplier(4)->Range(64, 1024);

}  // namespace

BENCHMARK_MAIN();
