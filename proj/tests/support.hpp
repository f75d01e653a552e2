// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Word generators shared by the unit and acceptance suites.

#ifndef GALOIS_TESTS_SUPPORT_HPP
#define GALOIS_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "galois/galois.hpp"

namespace galois::testing {

// Calls f(word) for every word over `alphabet` with min_len <= |word| <= max_len,
// shorter words first.
template <class F>
void for_each_word(std::string_view alphabet, std::size_t min_len, std::size_t max_len, F&& f) {
  std::string w;
  for (std::size_t len = min_len; len <= max_len; ++len) {
    std::vector<std::size_t> digit(len, 0);
    w.assign(len, alphabet[0]);
    bool more = true;
    while (more) {
      f(std::string_view{w});
      more = false;
      for (std::size_t k = len; k-- > 0;) {
        if (++digit[k] < alphabet.size()) {
          w[k] = alphabet[digit[k]];
          more = true;
          break;
        }
        digit[k] = 0;
        w[k] = alphabet[0];
      }
    }
  }
}

class WordGen {
 public:
  explicit WordGen(std::uint64_t seed) : rng_(seed) {}

  // Uniform length in [0, max_len], symbols 'a' .. 'a'+sigma-1.
  std::string next(std::size_t max_len, int sigma) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    return exactly(len(rng_), sigma);
  }

  std::string exactly(std::size_t n, int sigma) {
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    std::string w(n, 'a');
    for (char& c : w) c = static_cast<char>('a' + pick(rng_));
    return w;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::string render(const Factorization& f, std::string_view w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < f.factors.size(); ++i) {
    if (i) os << ", ";
    os << w.substr(f.factors[i].start - 1, f.factors[i].length);
  }
  os << ')';
  return os.str();
}

inline Factorization spans(std::initializer_list<FactorSpan> list, std::size_t total) {
  return Factorization{std::vector<FactorSpan>(list), total};
}

}  // namespace galois::testing

#endif  // GALOIS_TESTS_SUPPORT_HPP
