// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef GALOIS_GALOIS_HPP
#define GALOIS_GALOIS_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string_view>
#include <vector>

#include "galois/alt_order.hpp"
#include "galois/detail/scanner.hpp"
#include "galois/error.hpp"

namespace galois {

/// A factor T[start .. start+length-1]; start is 1-based.
struct FactorSpan {
  std::size_t start = 1;
  std::size_t length = 0;

  friend constexpr auto operator<=>(const FactorSpan&, const FactorSpan&) = default;
};

/// Ordered spans tiling a word of length `total`.
struct Factorization {
  std::vector<FactorSpan> factors;
  std::size_t total = 0;

  std::size_t size() const noexcept { return factors.size(); }
  bool empty() const noexcept { return factors.empty(); }
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Instrumentation for the linear-time bounds: symbol comparisons performed
/// by the scanner (each three-way comparison counts once).
struct ScanStats {
  std::uint64_t comparisons = 0;
};

/// Scanner state after reading a pre-Galois window: symbols up to
/// `base_offset` are consumed, the window is T[base_offset+1 .. frontier-1].
struct PreGaloisState {
  std::size_t base_offset = 0;
  std::size_t frontier = 2;
  std::size_t odd_period = 1;
  std::size_t even_period = 2;
};

/// Up to two Galois roots of a pre-Galois word, of different parity.
struct GaloisRoots {
  std::optional<std::size_t> odd_root_len;
  std::optional<std::size_t> even_root_len;

  friend bool operator==(const GaloisRoots&, const GaloisRoots&) = default;
};

/// Galois test in one left-to-right pass with two period registers.
bool is_galois(Word t, ScanStats* stats = nullptr);
inline bool is_galois(std::string_view t) { return is_galois(as_word(t)); }

/// No proper suffix S of t satisfies S ⊏_alt t. The empty word qualifies.
bool is_pre_galois(Word t);
inline bool is_pre_galois(std::string_view t) { return is_pre_galois(as_word(t)); }

/// Shortest odd/even periods of a pre-Galois word as tracked by the
/// scanner, or nullopt if t is not pre-Galois.
std::optional<detail::Periods> pre_galois_periods(Word t);

/// Throws PreconditionViolated unless t is non-empty and pre-Galois.
GaloisRoots galois_roots(Word t);
inline GaloisRoots galois_roots(std::string_view t) { return galois_roots(as_word(t)); }

/// Length of the first factor cut (the shortest prefix P with P ⪰_alt t$
/// for even |P| and P ⪯_alt t$ for odd |P|). Throws EmptyInput.
std::size_t spref(Word t);
inline std::size_t spref(std::string_view t) { return spref(as_word(t)); }

/// Unique Galois factorization, G_1 ⪰_alt G_2 ⪰_alt ... ⪰_alt G_k.
Factorization factorize(Word t, ScanStats* stats = nullptr);
inline Factorization factorize(std::string_view t) { return factorize(as_word(t)); }

/// Batch factorization with spans handed to a callback instead of stored.
template <class Sink>
void factorize_each(Word t, Sink&& sink) {
  detail::FactorEngine<> engine;
  const std::size_t n = t.size();
  engine.run([t, n](std::size_t k) { return k <= n ? int{t[k - 1]} : detail::kSentinel; },
             n, n + 1, [&](std::size_t start, std::size_t len) { sink(FactorSpan{start, len}); });
}

/// Push-based Galois factorization. Spans are returned as soon as they are
/// determined; only the unfactorized tail is buffered.
///
///   Factorizer f;
///   for (Symbol z : input) emit(f.push(z));
///   emit(f.finish());
///
/// Single owner. push() or finish() after finish() throws UseAfterFinish.
class Factorizer {
 public:
  std::vector<FactorSpan> push(Symbol z);
  std::vector<FactorSpan> finish();

  bool finished() const noexcept { return finished_; }
  /// Symbols received so far.
  std::size_t received() const noexcept { return engine_.base() + tail_.size(); }
  /// Symbols already emitted as factors.
  std::size_t consumed() const noexcept { return engine_.base(); }
  /// Length of the buffered, not yet factorized tail.
  std::size_t pending() const noexcept { return tail_.size(); }
  PreGaloisState state() const noexcept;
  const ScanStats& stats() const noexcept { return stats_; }

 private:
  void drain(bool flush, std::vector<FactorSpan>& out);

  detail::FactorEngine<detail::CountComparisons> engine_;
  std::deque<Symbol> tail_;
  ScanStats stats_;
  bool finished_ = false;
};

enum class RotationMode {
  /// Rejects non-primitive input with NotPrimitive (one linear-space
  /// failure-function pass).
  Validated,
  /// Constant extra space; the result on non-primitive input is unspecified.
  Unchecked,
};

/// 1-based r such that t[r..] · t[..r-1] is Galois. Throws EmptyInput, and
/// NotPrimitive in validated mode.
std::size_t galois_rotation(Word t, RotationMode mode = RotationMode::Validated,
                            ScanStats* stats = nullptr);
inline std::size_t galois_rotation(std::string_view t,
                                   RotationMode mode = RotationMode::Validated) {
  return galois_rotation(as_word(t), mode);
}

/// Smallest period via the KMP failure function. Throws EmptyInput.
std::size_t smallest_period(Word t);
/// True iff t is not u^k for k >= 2. Throws EmptyInput.
bool is_primitive(Word t);

}  // namespace galois

#endif  // GALOIS_GALOIS_HPP
