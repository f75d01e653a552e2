// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Lyndon baseline: Duval's factorization and the least rotation, both in
// linear time and constant extra space.

#ifndef GALOIS_LYNDON_HPP
#define GALOIS_LYNDON_HPP

#include <cstddef>
#include <string_view>

#include "galois/galois.hpp"

namespace galois::lyndon {

using LyndonFactorization = Factorization;

LyndonFactorization duval_factorize(Word t);
inline LyndonFactorization duval_factorize(std::string_view t) {
  return duval_factorize(as_word(t));
}

/// Number of Lyndon factors without materializing them.
std::size_t duval_count(Word t);

/// 1-based start of the lexicographically least rotation.
/// Throws EmptyInput or NotPrimitive.
std::size_t lyndon_rotation(Word t);
inline std::size_t lyndon_rotation(std::string_view t) { return lyndon_rotation(as_word(t)); }

}  // namespace galois::lyndon

#endif  // GALOIS_LYNDON_HPP
