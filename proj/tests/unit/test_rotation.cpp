// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>

#include "galois/galois.hpp"
#include "galois/oracles.hpp"
#include "support.hpp"

using galois::RotationMode;
using galois::galois_rotation;
using galois::testing::for_each_word;

TEST_CASE("galois_rotation worked examples") {
  CHECK(galois_rotation("aab") == 2);
  CHECK(galois_rotation("aba") == 1);
  CHECK(galois_rotation("bba") == 3);
  CHECK(galois_rotation("b") == 1);
  const auto r = galois::rotate_word(galois::as_word("aab"), galois_rotation("aab"));
  CHECK(galois::as_chars(galois::Word{r}) == "aba");
}

TEST_CASE("galois_rotation errors") {
  CHECK_THROWS_AS(galois_rotation(""), galois::EmptyInput);
  CHECK_THROWS_AS(galois_rotation("aa"), galois::NotPrimitive);
  CHECK_THROWS_AS(galois_rotation("abab"), galois::NotPrimitive);
  CHECK_THROWS_AS(galois_rotation("", RotationMode::Unchecked), galois::EmptyInput);
}

TEST_CASE("unchecked mode terminates on non-primitive input") {
  for_each_word("ab", 1, 10, [](std::string_view w) {
    if (galois::is_primitive(galois::as_word(w))) return;
    const std::size_t r = galois_rotation(w, RotationMode::Unchecked);
    REQUIRE(r >= 1);
    REQUIRE(r <= w.size());
  });
}

TEST_CASE("galois_rotation matches the oracle and the rotation is unique") {
  for_each_word("ab", 1, 11, [](std::string_view w) {
    if (!galois::oracle::is_primitive(w)) return;
    INFO(w);
    const std::size_t r = galois_rotation(w);
    REQUIRE(r == galois::oracle::oracle_rotation(w));
    REQUIRE(galois_rotation(w, RotationMode::Unchecked) == r);
    for (std::size_t k = 1; k <= w.size(); ++k) {
      const auto rot = galois::rotate_word(galois::as_word(w), k);
      REQUIRE(galois::is_galois(galois::Word{rot}) == (k == r));
    }
  });
}

TEST_CASE("smallest_period and is_primitive agree with the definitional oracle") {
  for_each_word("abc", 1, 8, [](std::string_view w) {
    REQUIRE(galois::is_primitive(galois::as_word(w)) == galois::oracle::is_primitive(w));
  });
  CHECK(galois::smallest_period(galois::as_word("abaab")) == 3);
  CHECK_THROWS_AS(galois::smallest_period(galois::Word{}), galois::EmptyInput);
}

TEST_CASE("rotation comparison count stays linear") {
  galois::testing::WordGen gen(5);
  for (int round = 0; round < 500; ++round) {
    const std::string w = gen.exactly(1 + round, 2 + round % 3);
    if (!galois::is_primitive(galois::as_word(w))) continue;
    galois::ScanStats stats;
    const std::size_t r = galois_rotation(galois::as_word(w), RotationMode::Validated, &stats);
    REQUIRE(stats.comparisons <= 30 * w.size());
    const auto rot = galois::rotate_word(galois::as_word(w), r);
    REQUIRE(galois::is_galois(galois::Word{rot}));
  }
}
