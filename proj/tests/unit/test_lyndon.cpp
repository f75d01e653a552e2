// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <algorithm>
#include <string>

#include "galois/lyndon.hpp"
#include "galois/oracles.hpp"
#include "support.hpp"

using galois::lyndon::duval_factorize;
using galois::lyndon::lyndon_rotation;
using galois::testing::for_each_word;
using galois::testing::spans;

TEST_CASE("duval_factorize examples") {
  CHECK(duval_factorize("aab") == spans({{1, 3}}, 3));
  CHECK(duval_factorize("bba") == spans({{1, 1}, {2, 1}, {3, 1}}, 3));
  CHECK(duval_factorize("").empty());
  CHECK(galois::lyndon::duval_count(galois::as_word("bba")) == 3);
}

TEST_CASE("Lyndon factors are Lyndon and lexicographically non-increasing") {
  for_each_word("ab", 1, 12, [](std::string_view w) {
    const auto f = duval_factorize(w);
    REQUIRE(galois::lyndon::duval_count(galois::as_word(w)) == f.size());
    std::size_t next = 1;
    std::string_view prev;
    for (const auto& s : f.factors) {
      REQUIRE(s.start == next);
      const std::string_view g = w.substr(s.start - 1, s.length);
      REQUIRE(galois::oracle::oracle_is_lyndon(galois::as_word(g)));
      if (!prev.empty()) REQUIRE(g <= prev);
      prev = g;
      next += s.length;
    }
    REQUIRE(next == w.size() + 1);
  });
}

TEST_CASE("lyndon_rotation examples") {
  CHECK(lyndon_rotation("aba") == 3);  // aab
  CHECK(lyndon_rotation("aab") == 1);
  CHECK(lyndon_rotation("b") == 1);
  CHECK_THROWS_AS(lyndon_rotation("abab"), galois::NotPrimitive);
  CHECK_THROWS_AS(lyndon_rotation(""), galois::EmptyInput);
}

TEST_CASE("lyndon_rotation is the least rotation") {
  for_each_word("abc", 1, 8, [](std::string_view w) {
    if (!galois::oracle::is_primitive(w)) return;
    std::string best(w);
    for (std::size_t k = 1; k < w.size(); ++k)
      best = std::min(best, std::string(w.substr(k)) + std::string(w.substr(0, k)));
    const auto rot = galois::rotate_word(galois::as_word(w), lyndon_rotation(w));
    REQUIRE(galois::as_chars(galois::Word{rot}) == best);
  });
}

TEST_CASE("Lyndon and Galois rotations differ on aab") {
  CHECK(lyndon_rotation("aab") == 1);
  CHECK(galois::galois_rotation("aab") == 2);
}
