#pragma once

// Exact truncated formal power series over arbitrary-precision integers:
// the Euler product (q;q)_inf, the partition generating function, Lambert
// series, and plain power series of an arithmetic function.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qbracket/arith.hpp"
#include "qbracket/bigint.hpp"
#include "qbracket/errors.hpp"

namespace qbracket {

// A formal power series mod q^{order+1}: coefficient n of q^n is coeffs[n].
// Truncation is inclusive at index `order` and uniform across operands;
// combining series of different order is an error, never an implicit
// re-truncation. Values are immutable after construction and every operation
// below is a pure function, so series are safe to share across threads.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
      throw std::invalid_argument("a truncated series needs at least its constant coefficient");
    }
  }

  static TruncatedSeries zero(std::size_t order) {
    return TruncatedSeries(std::vector<BigInt>(order + 1, BigInt(0)));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

inline TruncatedSeries series_from_coeffs(std::vector<BigInt> coeffs) {
  return TruncatedSeries(std::move(coeffs));
}

namespace detail {

inline void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order()) {
    throw order_mismatch_error("series orders differ: " + std::to_string(a.order()) + " vs " +
                               std::to_string(b.order()));
  }
}

}  // namespace detail

// Cauchy product truncated to the common order.
inline TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::check_same_order(a, b);
  const std::size_t n = a.order();
  std::vector<BigInt> c(n + 1, BigInt(0));
  for (std::size_t i = 0; i <= n; ++i) {
    const BigInt& ai = a[i];
    if (ai == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const BigInt& bj = b[j];
      if (bj == 0) continue;
      c[i + j] += ai * bj;
    }
  }
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::check_same_order(a, b);
  std::vector<BigInt> c = a.coeffs();
  for (std::size_t i = 0; i <= b.order(); ++i) c[i] += b[i];
  return TruncatedSeries(std::move(c));
}

inline TruncatedSeries series_scale(const BigInt& scalar, const TruncatedSeries& a) {
  std::vector<BigInt> c = a.coeffs();
  for (auto& x : c) x *= scalar;
  return TruncatedSeries(std::move(c));
}

// (q;q)_inf mod q^{order+1} by the pentagonal number theorem: the coefficient
// is (-1)^k at the generalized pentagonal indices k(3k-1)/2 and k(3k+1)/2,
// and 0 everywhere else.
inline TruncatedSeries euler_product_series(std::size_t order) {
  std::vector<BigInt> c(order + 1, BigInt(0));
  c[0] = 1;
  for (std::size_t k = 1;; ++k) {
    const std::size_t g = k * (3 * k - 1) / 2;
    if (g > order) break;
    const int sign = (k % 2 == 1) ? -1 : 1;
    c[g] += sign;
    const std::size_t g2 = g + k;  // k(3k+1)/2
    if (g2 <= order) c[g2] += sign;
  }
  return TruncatedSeries(std::move(c));
}

// p(0..n_max) by Euler's pentagonal recurrence
//   p(n) = sum_k (-1)^{k+1} [ p(n - k(3k-1)/2) + p(n - k(3k+1)/2) ],
// O(n sqrt n) big-integer additions in total.
inline std::vector<BigInt> partition_count_table(std::size_t n_max) {
  std::vector<BigInt> p(n_max + 1, BigInt(0));
  p[0] = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1;; ++k) {
      const std::size_t g = k * (3 * k - 1) / 2;
      if (g > n) break;
      const bool plus = (k % 2 == 1);
      if (plus) {
        acc += p[n - g];
      } else {
        acc -= p[n - g];
      }
      const std::size_t g2 = g + k;
      if (g2 <= n) {
        if (plus) {
          acc += p[n - g2];
        } else {
          acc -= p[n - g2];
        }
      }
    }
    p[n] = std::move(acc);
  }
  return p;
}

// sum_n p(n) q^n = 1 / (q;q)_inf, with p(0) = 1.
inline TruncatedSeries partition_gf_series(std::size_t order) {
  return TruncatedSeries(partition_count_table(order));
}

// sum_{k=1..order} f(k) q^k / (1 - q^k); coefficient m is the divisor sum
// sum_{d|m} f(d). Sieve-style divisor iteration, O(order log order) adds.
inline TruncatedSeries lambert_series(const FunctionTable& f, std::size_t order) {
  f.require(order);
  std::vector<BigInt> c(order + 1, BigInt(0));
  for (std::size_t d = 1; d <= order; ++d) {
    const BigInt& fd = f(d);
    if (fd == 0) continue;
    for (std::size_t m = d; m <= order; m += d) c[m] += fd;
  }
  return TruncatedSeries(std::move(c));
}

// The plain power series sum_{k=1..order} f(k) q^k.
inline TruncatedSeries power_series(const FunctionTable& f, std::size_t order) {
  f.require(order);
  std::vector<BigInt> c(order + 1, BigInt(0));
  for (std::size_t k = 1; k <= order; ++k) c[k] = f(k);
  return TruncatedSeries(std::move(c));
}

}  // namespace qbracket
