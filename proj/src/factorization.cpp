// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include "galois/galois.hpp"

namespace galois {
namespace {

template <class Counter>
Factorization factorize_with(Word t, Counter& counter) {
  detail::FactorEngine<Counter> engine;
  Factorization out;
  out.total = t.size();
  const std::size_t n = t.size();
  engine.run([t, n](std::size_t k) { return k <= n ? int{t[k - 1]} : detail::kSentinel; },
             n, n + 1,
             [&](std::size_t start, std::size_t len) { out.factors.push_back({start, len}); });
  counter = engine.counter();
  return out;
}

}  // namespace

Factorization factorize(Word t, ScanStats* stats) {
  if (stats == nullptr) {
    detail::NoCount none;
    return factorize_with(t, none);
  }
  detail::CountComparisons counter;
  Factorization f = factorize_with(t, counter);
  stats->comparisons += counter.comparisons;
  return f;
}

std::size_t spref(Word t) {
  if (t.empty()) throw EmptyInput("spref: input word is empty");
  // The first cut is found by the same scan as the factorization; stop there.
  const std::size_t n = t.size();
  const auto at = [t, n](std::size_t k) { return k <= n ? int{t[k - 1]} : detail::kSentinel; };
  detail::Periods per{};
  detail::NoCount none;
  for (std::size_t j = 2; j <= n + 1; ++j) {
    const std::size_t cut =
        detail::extend(per, j, at(j), [&](std::size_t d) { return at(j - d); }, none);
    if (cut != 0) return cut;
  }
  // Unreachable: the sentinel always forces a cut.
  throw Error("spref: scan ended without a cut");
}

std::vector<FactorSpan> Factorizer::push(Symbol z) {
  if (finished_) throw UseAfterFinish();
  tail_.push_back(z);
  std::vector<FactorSpan> out;
  drain(false, out);
  return out;
}

std::vector<FactorSpan> Factorizer::finish() {
  if (finished_) throw UseAfterFinish();
  std::vector<FactorSpan> out;
  drain(true, out);
  finished_ = true;
  return out;
}

void Factorizer::drain(bool flush, std::vector<FactorSpan>& out) {
  // tail_[0] holds the symbol at absolute position base+1.
  const std::size_t base = engine_.base();
  const std::size_t end = base + tail_.size();
  const auto at = [this, base, end](std::size_t k) {
    return k <= end ? int{tail_[k - base - 1]} : detail::kSentinel;
  };
  const std::uint64_t before = engine_.counter().comparisons;
  engine_.run(at, end, flush ? end + 1 : end,
              [&out](std::size_t start, std::size_t len) { out.push_back({start, len}); });
  stats_.comparisons += engine_.counter().comparisons - before;
  const std::size_t eaten = engine_.base() - base;
  tail_.erase(tail_.begin(), tail_.begin() + static_cast<std::ptrdiff_t>(eaten));
}

PreGaloisState Factorizer::state() const noexcept {
  return {engine_.base(), engine_.base() + engine_.frontier(), engine_.periods().odd,
          engine_.periods().even};
}

}  // namespace galois
