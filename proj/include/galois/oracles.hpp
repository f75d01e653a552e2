// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Brute-force reference implementations taken straight from the
// definitions. Quadratic or exponential; they depend only on alt_compare
// and never on the scanner.

#ifndef GALOIS_ORACLES_HPP
#define GALOIS_ORACLES_HPP

#include <cstddef>
#include <string_view>

#include "galois/alt_order.hpp"
#include "galois/galois.hpp"

namespace galois::oracle {

/// Longest input accepted by oracle_factorize.
inline constexpr std::size_t kMaxFactorizeLength = 16;

struct PeriodPair {
  std::size_t per_o = 0;  // shortest odd period, or |w|+1
  std::size_t per_e = 0;  // shortest even period, or |w|+1

  friend bool operator==(const PeriodPair&, const PeriodPair&) = default;
};

/// Strictly alt-smaller than each of its other rotations.
bool oracle_is_galois(Word t);
/// Every proper suffix is a prefix of t or alt-greater than t.
bool oracle_is_pre_galois(Word t);
/// Throws EmptyInput.
PeriodPair oracle_periods(Word t);
/// Shortest non-empty prefix P with P ⪰_alt t (|P| even) or P ⪯_alt t
/// (|P| odd). With `with_sentinel` the scan runs on t followed by a symbol
/// smaller than every byte. Throws EmptyInput.
std::size_t oracle_spref(Word t, bool with_sentinel = false);
/// Exhaustive search over compositions of t; throws InputTooLong above
/// kMaxFactorizeLength and OracleInconsistency unless exactly one
/// composition is a non-increasing sequence of Galois words.
Factorization oracle_factorize(Word t);
/// 1-based start of the only Galois rotation. Throws EmptyInput,
/// NotPrimitive, or OracleInconsistency.
std::size_t oracle_rotation(Word t);
/// Smallest period by definition. Throws EmptyInput.
bool is_primitive(Word t);
/// Strictly lex-smaller than each of its other rotations.
bool oracle_is_lyndon(Word t);

inline bool oracle_is_galois(std::string_view t) { return oracle_is_galois(as_word(t)); }
inline bool oracle_is_pre_galois(std::string_view t) { return oracle_is_pre_galois(as_word(t)); }
inline PeriodPair oracle_periods(std::string_view t) { return oracle_periods(as_word(t)); }
inline std::size_t oracle_spref(std::string_view t, bool with_sentinel = false) {
  return oracle_spref(as_word(t), with_sentinel);
}
inline Factorization oracle_factorize(std::string_view t) { return oracle_factorize(as_word(t)); }
inline std::size_t oracle_rotation(std::string_view t) { return oracle_rotation(as_word(t)); }
inline bool is_primitive(std::string_view t) { return is_primitive(as_word(t)); }

}  // namespace galois::oracle

#endif  // GALOIS_ORACLES_HPP
