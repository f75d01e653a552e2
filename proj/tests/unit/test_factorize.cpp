// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <string>
#include <vector>

#include "galois/galois.hpp"
#include "galois/oracles.hpp"
#include "support.hpp"

using galois::Factorization;
using galois::factorize;
using galois::testing::for_each_word;
using galois::testing::spans;

namespace {

void require_well_formed(galois::Word w, const Factorization& f) {
  REQUIRE(f.total == w.size());
  std::size_t next = 1;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto& s = f.factors[i];
    REQUIRE(s.start == next);
    REQUIRE(s.length >= 1);
    const galois::Word g = w.subspan(s.start - 1, s.length);
    REQUIRE(galois::is_galois(g));
    if (i > 0) {
      const auto& p = f.factors[i - 1];
      REQUIRE(galois::alt_compare(w.subspan(p.start - 1, p.length), g) !=
              galois::AltOrdering::Less);
    }
    next += s.length;
  }
  REQUIRE(next == w.size() + 1);
}

}  // namespace

TEST_CASE("factorize worked examples") {
  CHECK(factorize("aab") == spans({{1, 1}, {2, 2}}, 3));
  CHECK(factorize("abaab") == spans({{1, 3}, {4, 2}}, 5));
  CHECK(factorize("bba") == spans({{1, 1}, {2, 1}, {3, 1}}, 3));
  CHECK(factorize("aba") == spans({{1, 3}}, 3));
  CHECK(factorize("").empty());
  CHECK(factorize("").total == 0);
}

TEST_CASE("unary words split into single symbols") {
  for (std::size_t k = 1; k <= 40; ++k) {
    const Factorization f = factorize(std::string(k, 'a'));
    REQUIRE(f.size() == k);
    for (std::size_t i = 0; i < k; ++i) REQUIRE(f.factors[i] == galois::FactorSpan{i + 1, 1});
  }
}

TEST_CASE("factorize equals the exhaustive oracle on short words") {
  for_each_word("ab", 0, 11, [](std::string_view w) {
    INFO(w);
    REQUIRE(factorize(w) == galois::oracle::oracle_factorize(w));
  });
  for_each_word("abc", 0, 7, [](std::string_view w) {
    INFO(w);
    REQUIRE(factorize(w) == galois::oracle::oracle_factorize(w));
  });
}

TEST_CASE("zero bytes and 0xFF are ordinary symbols") {
  const std::vector<galois::Symbol> w{0x00, 0x00, 0xFF, 0x00, 0x01, 0xFF, 0x00};
  const Factorization f = factorize(galois::Word{w});
  require_well_formed(galois::Word{w}, f);
  CHECK(f == galois::oracle::oracle_factorize(galois::Word{w}));
  const std::vector<galois::Symbol> zeros(5, 0x00);
  CHECK(factorize(galois::Word{zeros}).size() == 5);
}

TEST_CASE("factorizations of random words are well formed") {
  galois::testing::WordGen gen(7);
  for (int round = 0; round < 2000; ++round) {
    const std::string w = gen.next(200, 2 + round % 7);
    require_well_formed(galois::as_word(w), factorize(w));
  }
  // Periodic words with a perturbed tail stress the repeated extraction.
  for (const char* unit : {"ab", "aba", "abaab", "abba", "abaa", "aab", "abc"}) {
    for (std::size_t reps = 1; reps <= 12; ++reps) {
      std::string w;
      for (std::size_t r = 0; r < reps; ++r) w += unit;
      for (const std::string& tail : {std::string(), std::string("a"), std::string("b"),
                                      std::string("c"), std::string(unit).substr(1)}) {
        const std::string x = w + tail;
        require_well_formed(galois::as_word(x), factorize(x));
        if (x.size() <= 14) REQUIRE(factorize(x) == galois::oracle::oracle_factorize(x));
      }
    }
  }
}

TEST_CASE("spref") {
  CHECK(galois::spref("abaab") == 3);
  CHECK(galois::spref("bba") == 2);
  CHECK(galois::spref("a") == 1);
  CHECK(galois::spref("aba") == 3);
  CHECK(galois::spref("aa") == 2);
  CHECK_THROWS_AS(galois::spref(""), galois::EmptyInput);
  for_each_word("abc", 1, 8, [](std::string_view w) {
    INFO(w);
    REQUIRE(galois::spref(w) == galois::oracle::oracle_spref(w, true));
  });
}

TEST_CASE("Galois words are their own single factor and get spref |t|") {
  for_each_word("ab", 1, 12, [](std::string_view w) {
    if (!galois::is_galois(w)) return;
    REQUIRE(factorize(w) == spans({{1, w.size()}}, w.size()));
    REQUIRE(galois::spref(w) == w.size());
  });
}

TEST_CASE("comparison count stays linear") {
  galois::testing::WordGen gen(11);
  for (int round = 0; round < 500; ++round) {
    const std::string w = gen.next(1000, 2 + round % 4);
    galois::ScanStats stats;
    factorize(galois::as_word(w), &stats);
    REQUIRE(stats.comparisons <= 10 * w.size());
  }
}
