// Runs one identity case through the verification engine and prints its
// summary plus the first few witness rows.

#include <cstdio>

#include "qbracket/verify.hpp"

int main() {
  using namespace qbracket;
  const IdentityCase c{IdentityId::kSquarefreeParity, "moebius_sq", std::nullopt, 60, 15};
  const VerificationReport r = verify_corollary(c);
  std::printf("%s f=%s: %s (%zu checks, %.1f ms)\n", std::string(to_string(c.id)).c_str(),
              c.f_name.c_str(), r.overall ? "PASS" : "FAIL", r.per_n.size(),
              static_cast<double>(r.elapsed.count()) / 1000.0);
  std::size_t shown = 0;
  for (const auto& row : r.per_n) {
    if (row.check != "Q_oracle=conv") continue;
    std::printf("  n=%-3zu Q(n)=%s  conv=%s\n", row.n, row.lhs.c_str(), row.rhs.c_str());
    if (++shown == 8) break;
  }
  return r.overall ? 0 : 1;
}
