// Applies the q-bracket to the sum-of-parts statistic and prints the result
// next to the Lambert series it must equal: the sigma_1 divisor sums.

#include <cstdio>

#include "qbracket/qbracket.hpp"

int main() {
  using namespace qbracket;
  const std::size_t order = 16;
  const FunctionTable f = identity_table(order);
  const TruncatedSeries bracket = q_bracket(stat_all_parts_fast(f, order), order);
  const TruncatedSeries lambert = lambert_series(f, order);
  std::printf("%4s %16s %16s\n", "n", "qbracket", "sigma_1");
  for (std::size_t n = 0; n <= order; ++n) {
    std::printf("%4zu %16s %16s\n", n, bracket[n].str().c_str(), lambert[n].str().c_str());
  }
  return bracket == lambert ? 0 : 1;
}
