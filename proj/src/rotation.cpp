// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Galois rotation. The factorization scanner runs over TTT without storing
// it ((TTT)[k] = T[(k-1) mod n + 1]) and discards factors. The first window
// whose odd and even periods both reach n starts the first factor of
// GF(TTT) of length at least n, and that factor begins with the rotation.

#include <vector>

#include "galois/galois.hpp"

namespace galois {

std::size_t smallest_period(Word t) {
  if (t.empty()) throw EmptyInput("smallest_period: input word is empty");
  const std::size_t n = t.size();
  std::vector<std::size_t> border(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && t[i] != t[k]) k = border[k - 1];
    if (t[i] == t[k]) ++k;
    border[i] = k;
  }
  return n - border[n - 1];
}

bool is_primitive(Word t) {
  const std::size_t p = smallest_period(t);
  return !(t.size() % p == 0 && t.size() / p >= 2);
}

std::size_t galois_rotation(Word t, RotationMode mode, ScanStats* stats) {
  if (t.empty()) throw EmptyInput("galois_rotation: input word is empty");
  if (mode == RotationMode::Validated && !is_primitive(t)) throw NotPrimitive();
  const std::size_t n = t.size();
  const auto at = [t, n](std::size_t k) { return int{t[(k - 1) % n]}; };

  std::size_t r = 0;
  if (stats != nullptr) {
    detail::CountComparisons counter;
    r = detail::rotation_scan(at, n, counter);
    stats->comparisons += counter.comparisons;
  } else {
    detail::NoCount none;
    r = detail::rotation_scan(at, n, none);
  }
  if (r == 0) {
    if (mode == RotationMode::Validated)
      throw Error("galois_rotation: scan exhausted on primitive input");
    return 1;
  }
  return r;
}

}  // namespace galois
