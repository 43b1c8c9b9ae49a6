#pragma once

// Partition enumeration (the brute-force oracle behind every identity check)
// and the two partition statistics: sums of f over all parts and over
// distinct parts, in slow (enumerative) and fast (convolution) forms.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbracket/arith.hpp"
#include "qbracket/bigint.hpp"
#include "qbracket/series.hpp"

namespace qbracket {

// Nonincreasing positive parts; the empty list is the unique partition of 0.
struct Partition {
  std::vector<std::uint32_t> parts;

  std::uint64_t sum() const {
    return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0});
  }

  bool valid_for(std::uint64_t n) const {
    std::uint32_t prev = UINT32_MAX;
    for (const std::uint32_t part : parts) {
      if (part < 1 || part > prev) return false;
      prev = part;
    }
    return sum() == n;
  }
};

// Streams the partitions of n in reverse-lexicographic order: [n] first,
// [1,1,...,1] last; n = 0 yields the empty partition once. Memory stays
// bounded by the current partition; each stream is single-consumer.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(std::uint32_t n) : n_(n) {}

  // Advances to the next partition; false once the stream is exhausted.
  bool next() {
    if (state_ == State::kDone) return false;
    if (state_ == State::kFresh) {
      state_ = State::kRunning;
      current_.parts.clear();
      if (n_ > 0) current_.parts.push_back(n_);
      return true;
    }
    auto& a = current_.parts;
    // Rightmost part > 1; everything after it is a run of 1s.
    std::size_t i = a.size();
    while (i > 0 && a[i - 1] == 1) --i;
    if (i == 0) {
      state_ = State::kDone;
      return false;
    }
    --i;
    std::uint64_t rem = a[i] + (a.size() - 1 - i);  // value at i plus the trailing 1s
    const std::uint32_t m = a[i] - 1;
    a.resize(i);
    while (rem >= m) {
      a.push_back(m);
      rem -= m;
    }
    if (rem > 0) a.push_back(static_cast<std::uint32_t>(rem));
    return true;
  }

  const Partition& current() const { return current_; }

 private:
  enum class State { kFresh, kRunning, kDone };
  std::uint32_t n_;
  Partition current_;
  State state_ = State::kFresh;
};

inline PartitionEnumerator enumerate_partitions(std::uint32_t n) {
  return PartitionEnumerator(n);
}

template <typename Fn>
void for_each_partition(std::uint32_t n, Fn&& fn) {
  PartitionEnumerator e(n);
  while (e.next()) fn(e.current());
}

enum class StatMode { kAllParts, kDistinctParts };

inline std::string_view to_string(StatMode mode) {
  return mode == StatMode::kAllParts ? "all-parts" : "distinct-parts";
}

inline std::optional<StatMode> stat_mode_from_string(std::string_view s) {
  if (s == "all-parts") return StatMode::kAllParts;
  if (s == "distinct-parts") return StatMode::kDistinctParts;
  return std::nullopt;
}

// values[n] = sum over partitions of n of (sum of f over all / distinct
// parts). The empty partition has no parts, so values[0] = 0 in both modes.
struct StatisticVector {
  std::vector<BigInt> values;
  StatMode mode;
  std::string f_name;
};

// Brute-force statistic: enumerate every partition of n and sum f over its
// parts (distinct mode counts each part value once, however often it occurs).
inline BigInt stat_oracle(const FunctionTable& f, StatMode mode, std::uint32_t n) {
  f.require(n);
  BigInt acc = 0;
  for_each_partition(n, [&](const Partition& p) {
    std::uint32_t prev = 0;
    for (const std::uint32_t part : p.parts) {
      if (mode == StatMode::kDistinctParts && part == prev) continue;
      acc += f(part);
      prev = part;
    }
  });
  return acc;
}

namespace detail {

// entry n = sum_{k=1..n} p(n-k) g(k), with p from the pentagonal recurrence.
inline std::vector<BigInt> convolve_with_partition_counts(const FunctionTable& g,
                                                          std::size_t n_max) {
  const auto p = partition_count_table(n_max);
  std::vector<BigInt> out(n_max + 1, BigInt(0));
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k <= n; ++k) {
      const BigInt& gk = g(k);
      if (gk == 0) continue;
      acc += p[n - k] * gk;
    }
    out[n] = std::move(acc);
  }
  return out;
}

}  // namespace detail

// Sum of f over all parts of all partitions of n, for every n <= n_max,
// via the convolution sum_{k=1..n} p(n-k) F(k) with F the divisor-sum
// transform of f.
inline StatisticVector stat_all_parts_fast(const FunctionTable& f, std::size_t n_max) {
  f.require(n_max);
  const FunctionTable F = divisor_sum_transform(f);
  return {detail::convolve_with_partition_counts(F, n_max), StatMode::kAllParts, f.name()};
}

// Sum of f over the distinct parts of all partitions of n, for every
// n <= n_max, via sum_{k=1..n} p(n-k) f(k). The summand is f(k), not f(n):
// the f(n) reading disagrees with direct enumeration for nonconstant f.
inline StatisticVector stat_distinct_parts_fast(const FunctionTable& f, std::size_t n_max) {
  f.require(n_max);
  return {detail::convolve_with_partition_counts(f, n_max), StatMode::kDistinctParts, f.name()};
}

}  // namespace qbracket
