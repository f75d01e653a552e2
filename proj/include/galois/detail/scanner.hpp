// Copyright 2026 The galois-words Authors
// SPDX-License-Identifier: Apache-2.0

// Period-tracking scanner shared by detection, factorization and rotation.
//
// A window W = T[base+1 .. base+j-1] that is pre-Galois is summarized by its
// shortest odd and even periods. Extending W by x = T[base+j] needs at most
// two symbol comparisons: x against the symbols one odd period and one even
// period back. Each comparison either leaves the period unchanged (equal),
// resets it to the window length (|W·x| or |W·x|+1, by parity), or shows
// that W·x is not pre-Galois. In the last case the shortest such violated
// period is the length of the next factor cut.

#ifndef GALOIS_DETAIL_SCANNER_HPP
#define GALOIS_DETAIL_SCANNER_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>

namespace galois::detail {

/// Compares below every byte. Never stored; produced by accessors only.
inline constexpr int kSentinel = -1;

struct Periods {
  std::size_t odd = 1;   // Per_o of the window, or |window|+1
  std::size_t even = 2;  // Per_e of the window, or |window|+1
};

struct NoCount {
  constexpr void tick() noexcept {}
};

struct CountComparisons {
  std::uint64_t comparisons = 0;
  constexpr void tick() noexcept { ++comparisons; }
};

struct NoObserver {
  constexpr void operator()(std::size_t, std::size_t, const Periods&) const noexcept {}
};

// Examines x at window offset j (so the current window has length j-1).
// back(d) yields the symbol d positions before x. Returns 0 and updates
// `per` when the extension stays pre-Galois; otherwise returns the cut
// length and leaves `per` untouched (the caller still needs the old values).
template <class Back, class Counter>
constexpr std::size_t extend(Periods& per, std::size_t j, int x, Back&& back,
                             Counter& counter) {
  std::size_t cut = 0;
  Periods next = per;
  const auto take = [&cut](std::size_t p) { cut = cut == 0 ? p : std::min(cut, p); };
  const bool odd_position = (j % 2 == 1);

  if (per.even < j) {
    const int y = back(per.even);
    counter.tick();
    if (x < y) {
      if (odd_position) take(per.even); else next.even = j;
    } else if (x > y) {
      if (odd_position) next.even = j + 1; else take(per.even);
    }
  }
  if (per.odd < j) {
    const int y = back(per.odd);
    counter.tick();
    if (x < y) {
      if (odd_position) next.odd = j; else take(per.odd);
    } else if (x > y) {
      if (odd_position) take(per.odd); else next.odd = j + 1;
    }
  }
  if (cut == 0) per = next;
  return cut;
}

// Repeated extraction after a cut at offset j with length `cut`. Emits
// (offset from base, length) pairs and returns the number of consumed
// symbols. After the first factor the repeat length is the even period:
// an even cut repeats itself, an odd cut p continues as the square of p,
// which is emitted as two factors of length p.
template <class Emit>
constexpr std::size_t extract(std::size_t j, std::size_t cut, const Periods& per,
                              Emit&& emit) {
  std::size_t consumed = 0;
  while (j > cut) {
    if (cut == per.even && per.even == 2 * per.odd) {
      emit(consumed, per.odd);
      emit(consumed + per.odd, per.odd);
    } else {
      emit(consumed, cut);
    }
    consumed += cut;
    j -= cut;
    cut = per.even;
  }
  return consumed;
}

// Online factorization state: base offset, frontier and the two periods.
// Positions handed to the accessor are absolute and 1-based.
template <class Counter = NoCount, class Observer = NoObserver>
class FactorEngine {
 public:
  FactorEngine() = default;
  explicit FactorEngine(Observer observer) : observer_(std::move(observer)) {}

  // Processes frontier positions while base+frontier <= limit and fewer
  // than `end` symbols are consumed. `at(k)` must be valid for k <= limit;
  // pass limit = end + 1 with at(end + 1) == kSentinel to flush.
  // emit(start, length) receives 1-based absolute spans.
  template <class At, class Emit>
  void run(At&& at, std::size_t end, std::size_t limit, Emit&& emit) {
    while (base_ < end && base_ + frontier_ <= limit) {
      const std::size_t pos = base_ + frontier_;
      const std::size_t cut = extend(
          periods_, frontier_, at(pos), [&](std::size_t d) { return at(pos - d); },
          counter_);
      if (cut == 0) {
        observer_(base_, frontier_, periods_);
        ++frontier_;
        continue;
      }
      const std::size_t base = base_;
      base_ += extract(frontier_, cut, periods_, [&](std::size_t off, std::size_t len) {
        emit(base + off + 1, len);
      });
      frontier_ = 2;
      periods_ = {};
    }
  }

  std::size_t base() const noexcept { return base_; }
  std::size_t frontier() const noexcept { return frontier_; }
  const Periods& periods() const noexcept { return periods_; }
  Counter& counter() noexcept { return counter_; }
  const Counter& counter() const noexcept { return counter_; }
  Observer& observer() noexcept { return observer_; }

 private:
  std::size_t base_ = 0;
  std::size_t frontier_ = 2;
  Periods periods_{};
  Counter counter_{};
  Observer observer_{};
};

// Galois rotation of a word of length n > 0 read as TTT through `at`
// (absolute 1-based positions in 1..3n). Returns the 1-based rotation start,
// or 0 if the scan runs out, which only happens for non-primitive input.
template <class At, class Counter, class Observer = NoObserver>
constexpr std::size_t rotation_scan(At&& at, std::size_t n, Counter& counter,
                                    Observer&& observer = {}) {
  const std::size_t total = 3 * n;
  std::size_t base = 0;
  while (base + 2 <= total) {
    Periods per{};
    bool cut_found = false;
    for (std::size_t j = 2; base + j <= total; ++j) {
      const std::size_t pos = base + j;
      const std::size_t cut =
          extend(per, j, at(pos), [&](std::size_t d) { return at(pos - d); }, counter);
      if (cut != 0) {
        base += extract(j, cut, per, [](std::size_t, std::size_t) {});
        cut_found = true;
        break;
      }
      observer(base, j, per);
      if (per.odd >= n && per.even >= n) return base % n + 1;
    }
    if (!cut_found) break;
  }
  return 0;
}

}  // namespace galois::detail

#endif  // GALOIS_DETAIL_SCANNER_HPP
