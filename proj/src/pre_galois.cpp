// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Detection: a single scan that keeps the shortest odd and even period of
// the prefix read so far and stops at the first extension that is no longer
// pre-Galois. A pre-Galois word is Galois iff it is primitive, which the
// final periods decide: p_o = |T|, or p_e = |T| unless T[1..p_e] = G_o².

#include "galois/galois.hpp"

namespace galois {
namespace {

template <class Counter>
std::optional<detail::Periods> scan(Word t, Counter& counter) {
  detail::Periods per{};
  for (std::size_t i = 2; i <= t.size(); ++i) {
    const int x = t[i - 1];
    const std::size_t cut =
        detail::extend(per, i, x, [&](std::size_t d) { return int{t[i - 1 - d]}; }, counter);
    if (cut != 0) return std::nullopt;
  }
  return per;
}

}  // namespace

std::optional<detail::Periods> pre_galois_periods(Word t) {
  detail::NoCount none;
  auto per = scan(t, none);
  // The scanner starts from the periods of a one-symbol window.
  if (per && t.empty()) per = detail::Periods{1, 1};
  return per;
}

bool is_pre_galois(Word t) { return pre_galois_periods(t).has_value(); }

bool is_galois(Word t, ScanStats* stats) {
  if (t.size() <= 1) return t.size() == 1;
  std::optional<detail::Periods> per;
  if (stats != nullptr) {
    detail::CountComparisons counter;
    per = scan(t, counter);
    stats->comparisons += counter.comparisons;
  } else {
    detail::NoCount none;
    per = scan(t, none);
  }
  if (!per) return false;
  const std::size_t n = t.size();
  if (per->odd == n) return true;
  return per->even == n && per->even != 2 * per->odd;
}

GaloisRoots galois_roots(Word t) {
  if (t.empty()) throw EmptyInput("galois_roots: input word is empty");
  const auto per = pre_galois_periods(t);
  if (!per) throw PreconditionViolated("galois_roots: input word is not pre-Galois");
  GaloisRoots roots;
  const std::size_t n = t.size();
  if (per->odd <= n) roots.odd_root_len = per->odd;
  if (per->even <= n && per->even != 2 * per->odd) roots.even_root_len = per->even;
  return roots;
}

}  // namespace galois
