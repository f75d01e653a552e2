// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_ALT_ORDER_HPP
#define GALOIS_ALT_ORDER_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace galois {

/// Symbols are raw bytes ordered by numeric value.
using Symbol = std::uint8_t;

/// Read-only view of a word. Contracts that talk about positions use
/// 1-based indices; the view itself is indexed from 0 as usual.
using Word = std::span<const Symbol>;

inline Word as_word(std::string_view s) noexcept {
  return {reinterpret_cast<const Symbol*>(s.data()), s.size()};
}

inline std::string_view as_chars(Word w) noexcept {
  return {reinterpret_cast<const char*>(w.data()), w.size()};
}

/// Alternating order of the infinite repetitions S^ω and T^ω.
enum class AltOrdering { Less, Equal, Greater };

/// Alternating order refined by whether one word is a prefix of the other.
/// StrictlyLess is the relation that survives appending a common suffix.
enum class StrictAltOrdering {
  StrictlyLess,
  LessByPrefix,
  Equal,
  GreaterByPrefix,
  StrictlyGreater,
};

constexpr AltOrdering collapse(StrictAltOrdering o) noexcept {
  switch (o) {
    case StrictAltOrdering::StrictlyLess:
    case StrictAltOrdering::LessByPrefix:
      return AltOrdering::Less;
    case StrictAltOrdering::Equal:
      return AltOrdering::Equal;
    default:
      return AltOrdering::Greater;
  }
}

constexpr AltOrdering reverse(AltOrdering o) noexcept {
  return o == AltOrdering::Less      ? AltOrdering::Greater
         : o == AltOrdering::Greater ? AltOrdering::Less
                                     : AltOrdering::Equal;
}

namespace detail {

// Shared by the byte API and by test/oracle code that needs symbols outside
// the byte range (the virtual sentinel is represented as -1).
//
// The empty word is greater than every non-empty word. Otherwise the first
// mismatch of S^ω and T^ω, if any, lies within the first |S|+|T| positions:
// with no mismatch there, gcd(|S|,|T|) is a common period of both.
template <class S, class T>
constexpr AltOrdering alt_compare_seq(const S& s, const T& t) {
  const std::size_t m = std::size(s);
  const std::size_t n = std::size(t);
  if (m == 0 || n == 0) {
    if (m == n) return AltOrdering::Equal;
    return m == 0 ? AltOrdering::Greater : AltOrdering::Less;
  }
  std::size_t a = 0, b = 0;
  for (std::size_t j = 0; j < m + n; ++j) {
    const auto x = s[a];
    const auto y = t[b];
    if (x != y) {
      // j is 0-based here, so even j is an odd position.
      const bool ascending = (j % 2 == 0);
      return (x < y) == ascending ? AltOrdering::Less : AltOrdering::Greater;
    }
    if (++a == m) a = 0;
    if (++b == n) b = 0;
  }
  return AltOrdering::Equal;
}

}  // namespace detail

AltOrdering alt_compare(Word s, Word t) noexcept;
StrictAltOrdering alt_compare_strict(Word s, Word t) noexcept;

inline AltOrdering alt_compare(std::string_view s, std::string_view t) noexcept {
  return alt_compare(as_word(s), as_word(t));
}
inline StrictAltOrdering alt_compare_strict(std::string_view s,
                                            std::string_view t) noexcept {
  return alt_compare_strict(as_word(s), as_word(t));
}

/// t[start..] · t[..start-1] for a 1-based start.
std::vector<Symbol> rotate_word(Word t, std::size_t start);

}  // namespace galois

#endif  // GALOIS_ALT_ORDER_HPP
