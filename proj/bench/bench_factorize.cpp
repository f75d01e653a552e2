// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Galois factorization/rotation against the Duval/least-rotation baseline.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "galois/galois.hpp"
#include "galois/lyndon.hpp"

namespace {

std::vector<galois::Symbol> random_text(std::size_t n, int sigma, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(0, sigma - 1);
  std::vector<galois::Symbol> t(n);
  for (auto& c : t) c = static_cast<galois::Symbol>('a' + pick(rng));
  return t;
}

// Periodic input with a perturbed tail: long repeated extraction runs.
std::vector<galois::Symbol> periodic_text(std::size_t n) {
  static constexpr char kUnit[] = "abaab";
  std::vector<galois::Symbol> t(n);
  for (std::size_t i = 0; i < n; ++i) t[i] = static_cast<galois::Symbol>(kUnit[i % 5]);
  if (n > 0) t[n - 1] = 'c';
  return t;
}

void BM_GaloisFactorize(benchmark::State& state) {
  const auto t = random_text(static_cast<std::size_t>(state.range(0)), 26, 1);
  for (auto _ : state) {
    std::size_t count = 0;
    galois::factorize_each(galois::Word{t}, [&count](galois::FactorSpan) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_LyndonFactorize(benchmark::State& state) {
  const auto t = random_text(static_cast<std::size_t>(state.range(0)), 26, 1);
  for (auto _ : state) benchmark::DoNotOptimize(galois::lyndon::duval_count(galois::Word{t}));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_GaloisFactorizePeriodic(benchmark::State& state) {
  const auto t = periodic_text(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t count = 0;
    galois::factorize_each(galois::Word{t}, [&count](galois::FactorSpan) { ++count; });
    benchmark::DoNotOptimize(count);
  }
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_GaloisRotation(benchmark::State& state) {
  const auto t = random_text(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        galois::galois_rotation(galois::Word{t}, galois::RotationMode::Unchecked));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

void BM_LyndonRotation(benchmark::State& state) {
  const auto t = random_text(static_cast<std::size_t>(state.range(0)), 4, 2);
  for (auto _ : state) benchmark::DoNotOptimize(galois::lyndon::lyndon_rotation(galois::Word{t}));
  state.SetBytesProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_GaloisFactorize)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_LyndonFactorize)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_GaloisFactorizePeriodic)->Range(1 << 10, 1 << 22);
BENCHMARK(BM_GaloisRotation)->Range(1 << 10, 1 << 20);
BENCHMARK(BM_LyndonRotation)->Range(1 << 10, 1 << 20);

BENCHMARK_MAIN();
