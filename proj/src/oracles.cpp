// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#include "galois/oracles.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "galois/error.hpp"

namespace galois::oracle {
namespace {

bool is_prefix(Word p, Word t) {
  return p.size() <= t.size() && std::equal(p.begin(), p.end(), t.begin());
}

bool has_period(Word t, std::size_t p) {
  for (std::size_t i = 0; i + p < t.size(); ++i)
    if (t[i] != t[i + p]) return false;
  return true;
}

}  // namespace

bool oracle_is_galois(Word t) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  for (std::size_t r = 1; r < n; ++r) {
    const std::vector<Symbol> rot = rotate_word(t, r + 1);
    if (alt_compare(t, Word{rot}) != AltOrdering::Less) return false;
  }
  return true;
}

bool oracle_is_pre_galois(Word t) {
  for (std::size_t k = 1; k < t.size(); ++k) {
    const Word suffix = t.subspan(k);
    if (is_prefix(suffix, t)) continue;
    if (alt_compare(suffix, t) == AltOrdering::Greater) continue;
    return false;
  }
  return true;
}

PeriodPair oracle_periods(Word t) {
  if (t.empty()) throw EmptyInput("oracle_periods: input word is empty");
  const std::size_t n = t.size();
  PeriodPair out{n + 1, n + 1};
  for (std::size_t p = n; p >= 1; --p) {
    if (!has_period(t, p)) continue;
    (p % 2 == 1 ? out.per_o : out.per_e) = p;
  }
  return out;
}

std::size_t oracle_spref(Word t, bool with_sentinel) {
  if (t.empty()) throw EmptyInput("oracle_spref: input word is empty");
  std::vector<int> w(t.begin(), t.end());
  if (with_sentinel) w.push_back(-1);
  for (std::size_t len = 1; len <= w.size(); ++len) {
    const std::vector<int> p(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(len));
    const AltOrdering o = detail::alt_compare_seq(p, w);
    if (len % 2 == 0 ? o != AltOrdering::Less : o != AltOrdering::Greater) return len;
  }
  // P = t itself always qualifies (P =_alt t).
  return w.size();
}

Factorization oracle_factorize(Word t) {
  const std::size_t n = t.size();
  if (n > kMaxFactorizeLength)
    throw InputTooLong("oracle_factorize: input longer than " +
                       std::to_string(kMaxFactorizeLength));
  // galois[s][len] for the factor t[s .. s+len-1] (0-based s).
  std::vector<std::vector<char>> galois(n, std::vector<char>(n + 1, 0));
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t len = 1; s + len <= n; ++len)
      galois[s][len] = oracle_is_galois(t.subspan(s, len)) ? 1 : 0;

  std::vector<std::vector<FactorSpan>> found;
  std::vector<FactorSpan> current;
  // Depth-first over all compositions. A prefix that already breaks the
  // conditions cannot be completed, so its extensions are skipped.
  const auto search = [&](auto&& self, std::size_t s) -> void {
    if (s == n) {
      found.push_back(current);
      return;
    }
    for (std::size_t len = 1; s + len <= n; ++len) {
      if (!galois[s][len]) continue;
      if (!current.empty()) {
        const FactorSpan& prev = current.back();
        if (alt_compare(t.subspan(prev.start - 1, prev.length), t.subspan(s, len)) ==
            AltOrdering::Less)
          continue;
      }
      current.push_back({s + 1, len});
      self(self, s + len);
      current.pop_back();
    }
  };
  search(search, 0);

  if (found.size() != 1)
    throw OracleInconsistency("oracle_factorize: found " + std::to_string(found.size()) +
                              " Galois factorizations");
  return Factorization{std::move(found.front()), n};
}

std::size_t oracle_rotation(Word t) {
  if (t.empty()) throw EmptyInput("oracle_rotation: input word is empty");
  std::vector<std::size_t> hits;
  for (std::size_t r = 1; r <= t.size(); ++r) {
    const std::vector<Symbol> rot = rotate_word(t, r);
    if (oracle_is_galois(Word{rot})) hits.push_back(r);
  }
  if (hits.empty()) throw NotPrimitive();
  if (hits.size() > 1)
    throw OracleInconsistency("oracle_rotation: several Galois rotations");
  return hits.front();
}

bool is_primitive(Word t) {
  if (t.empty()) throw EmptyInput("is_primitive: input word is empty");
  const std::size_t n = t.size();
  std::size_t p = 1;
  while (!has_period(t, p)) ++p;
  return !(n % p == 0 && n / p >= 2);
}

bool oracle_is_lyndon(Word t) {
  const std::size_t n = t.size();
  if (n == 0) return false;
  for (std::size_t r = 2; r <= n; ++r) {
    const std::vector<Symbol> rot = rotate_word(t, r);
    if (!std::lexicographical_compare(t.begin(), t.end(), rot.begin(), rot.end())) return false;
  }
  return true;
}

}  // namespace galois::oracle
