// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include "galois/lyndon.hpp"

namespace galois::lyndon {
namespace {

template <class Emit>
void duval(Word s, Emit&& emit) {
  const std::size_t n = s.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1, k = i;
    while (j < n && s[k] <= s[j]) {
      k = s[k] < s[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      emit(i + 1, j - k);
      i += j - k;
    }
  }
}

}  // namespace

LyndonFactorization duval_factorize(Word t) {
  LyndonFactorization out;
  out.total = t.size();
  duval(t, [&out](std::size_t start, std::size_t len) { out.factors.push_back({start, len}); });
  return out;
}

std::size_t duval_count(Word t) {
  std::size_t count = 0;
  duval(t, [&count](std::size_t, std::size_t) { ++count; });
  return count;
}

std::size_t lyndon_rotation(Word t) {
  if (t.empty()) throw EmptyInput("lyndon_rotation: input word is empty");
  if (!is_primitive(t)) throw NotPrimitive();
  // Duval over tt, read modulo n; the last factor start below n is the answer.
  const std::size_t n = t.size();
  const auto at = [t, n](std::size_t k) { return t[k % n]; };
  std::size_t i = 0, ans = 0;
  while (i < n) {
    ans = i;
    std::size_t j = i + 1, k = i;
    while (j < 2 * n && at(k) <= at(j)) {
      k = at(k) < at(j) ? i : k + 1;
      ++j;
    }
    while (i <= k) i += j - k;
  }
  return ans + 1;
}

}  // namespace galois::lyndon
