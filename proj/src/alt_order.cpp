// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include "galois/alt_order.hpp"

#include <algorithm>

#include "galois/error.hpp"

namespace galois {

AltOrdering alt_compare(Word s, Word t) noexcept {
  return detail::alt_compare_seq(s, t);
}

StrictAltOrdering alt_compare_strict(Word s, Word t) noexcept {
  const AltOrdering o = alt_compare(s, t);
  if (o == AltOrdering::Equal) return StrictAltOrdering::Equal;
  const std::size_t common = std::min(s.size(), t.size());
  const bool prefix = std::equal(s.begin(), s.begin() + common, t.begin());
  if (o == AltOrdering::Less)
    return prefix ? StrictAltOrdering::LessByPrefix : StrictAltOrdering::StrictlyLess;
  return prefix ? StrictAltOrdering::GreaterByPrefix : StrictAltOrdering::StrictlyGreater;
}

std::vector<Symbol> rotate_word(Word t, std::size_t start) {
  if (t.empty()) return {};
  if (start < 1 || start > t.size())
    throw PreconditionViolated("rotation start out of range");
  std::vector<Symbol> out;
  out.reserve(t.size());
  out.insert(out.end(), t.begin() + (start - 1), t.end());
  out.insert(out.end(), t.begin(), t.begin() + (start - 1));
  return out;
}

}  // namespace galois
