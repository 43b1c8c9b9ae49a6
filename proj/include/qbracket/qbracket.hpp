#pragma once

// The q-bracket operator: <f>_q = (q;q)_inf * sum_n q^n sum_{lambda |- n} f(lambda).

#include <cstddef>
#include <utility>
#include <vector>

#include "qbracket/errors.hpp"
#include "qbracket/partitions.hpp"
#include "qbracket/series.hpp"

namespace qbracket {

// q-bracket of a partition statistic, truncated at q^n_max: the Euler product
// times the series whose coefficient of q^n is stat.values[n]. Linear in the
// statistic.
inline TruncatedSeries q_bracket(const StatisticVector& stat, std::size_t n_max) {
  if (stat.values.size() < n_max + 1) {
    throw table_too_short_error("statistic vector covers 0.." +
                                std::to_string(stat.values.empty() ? 0 : stat.values.size() - 1) +
                                " but order " + std::to_string(n_max) + " was requested");
  }
  std::vector<BigInt> c(stat.values.begin(), stat.values.begin() + static_cast<std::ptrdiff_t>(n_max) + 1);
  return series_mul(euler_product_series(n_max), TruncatedSeries(std::move(c)));
}

}  // namespace qbracket
