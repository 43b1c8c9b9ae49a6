#pragma once

// Verification engine: checks each identity in the catalog to exact equality
// and produces per-n witness records. Comparisons are over integers,
// prime-exponent vectors, or big-integer products -- never tolerances.
//
// Identity ids:
//   theorem1          q-bracket of the all-parts statistic = Lambert series of f
//   theorem3          q-bracket of the distinct-parts statistic = plain series of f
//   multcor           three-way: all-parts of f = distinct-parts of F = convolution
//   stanley           count of 1s = total distinct-part count = sum p(n-k)
//   containing_one    partitions of n containing 1 = p(n-1)
//   euler_moment      sum of alpha-th part powers = sum sigma_alpha(k) p(n-k)
//   jordan_dual       Jordan totient over parts = distinct alpha-th moments
//   squarefree_parity Q(n) = sum p(n-k) 2^omega(k), Q(n) = p(n-1) mod 2
//   distinct_squares  distinct squares in partitions = sum p(n-k^2)
//   mangoldt_product  Lambda over parts = log over distinct parts, exactly
//   eisenstein_moment q-bracket of (2k-1)-th moments has sigma_{2k-1} coefficients

#include <chrono>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbracket/arith.hpp"
#include "qbracket/errors.hpp"
#include "qbracket/partitions.hpp"
#include "qbracket/qbracket.hpp"
#include "qbracket/series.hpp"

namespace qbracket {

enum class IdentityId {
  kTheorem1,
  kTheorem3,
  kMultCor,
  kStanley,
  kContainingOne,
  kEulerMoment,
  kJordanDual,
  kSquarefreeParity,
  kDistinctSquares,
  kMangoldtProduct,
  kEisensteinMoment,
};

inline std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::kTheorem1: return "theorem1";
    case IdentityId::kTheorem3: return "theorem3";
    case IdentityId::kMultCor: return "multcor";
    case IdentityId::kStanley: return "stanley";
    case IdentityId::kContainingOne: return "containing_one";
    case IdentityId::kEulerMoment: return "euler_moment";
    case IdentityId::kJordanDual: return "jordan_dual";
    case IdentityId::kSquarefreeParity: return "squarefree_parity";
    case IdentityId::kDistinctSquares: return "distinct_squares";
    case IdentityId::kMangoldtProduct: return "mangoldt_product";
    case IdentityId::kEisensteinMoment: return "eisenstein_moment";
  }
  return "unknown";
}

inline std::optional<IdentityId> identity_from_string(std::string_view s) {
  using Id = IdentityId;
  if (s == "theorem1") return Id::kTheorem1;
  if (s == "theorem3") return Id::kTheorem3;
  if (s == "multcor") return Id::kMultCor;
  if (s == "stanley") return Id::kStanley;
  if (s == "containing_one") return Id::kContainingOne;
  if (s == "euler_moment") return Id::kEulerMoment;
  if (s == "jordan_dual") return Id::kJordanDual;
  if (s == "squarefree_parity") return Id::kSquarefreeParity;
  if (s == "distinct_squares") return Id::kDistinctSquares;
  if (s == "mangoldt_product") return Id::kMangoldtProduct;
  if (s == "eisenstein_moment") return Id::kEisensteinMoment;
  return std::nullopt;
}

// One identity to check: which, for which catalog function, with which
// parameter, and how far (fast/algebraic bound and enumeration bound).
struct IdentityCase {
  IdentityId id;
  std::string f_name;  // catalog spec, e.g. "sigma:2"; a label for fixed-f identities
  std::optional<std::int64_t> alpha;
  std::size_t n_fast = 200;
  std::size_t n_oracle = 30;
};

// One exact comparison: lhs and rhs rendered as decimal strings (or
// exponentiated prime-vector form), compared before rendering.
struct PerNCheck {
  std::size_t n;
  std::string check;
  std::string lhs;
  std::string rhs;
  bool pass;
};

struct VerificationReport {
  IdentityCase target;
  std::vector<PerNCheck> per_n;
  bool overall = true;
  std::string notes;
  // Wall time, informational only; serialized outputs exclude it so that
  // identical configs produce byte-identical files.
  std::chrono::microseconds elapsed{0};
};

// Attached to every report whose computation runs through the distinct-parts
// convolution, recording the summand reading this library uses.
inline constexpr std::string_view kDistinctSummandNote =
    "distinct-parts convolution sums p(n-k)*f(k) over k; the alternative reading with a "
    "constant f(n) factor disagrees with direct enumeration for nonconstant f";

// The exponentiated product identity grows super-exponentially, so it gets a
// separate bound from the additive prime-vector form of the same identity.
inline constexpr std::size_t kMangoldtProductBound = 25;

namespace detail {

class ReportBuilder {
 public:
  explicit ReportBuilder(IdentityCase c) : start_(std::chrono::steady_clock::now()) {
    report_.target = std::move(c);
  }

  void row(std::size_t n, std::string_view check, const BigInt& lhs, const BigInt& rhs) {
    const bool ok = (lhs == rhs);
    report_.per_n.push_back({n, std::string(check), lhs.str(), rhs.str(), ok});
    report_.overall = report_.overall && ok;
  }

  void row(std::size_t n, std::string_view check, const PrimeLogVector& lhs,
           const PrimeLogVector& rhs) {
    const bool ok = (lhs == rhs);
    report_.per_n.push_back({n, std::string(check), lhs.str(), rhs.str(), ok});
    report_.overall = report_.overall && ok;
  }

  void row_raw(std::size_t n, std::string_view check, std::string lhs, std::string rhs,
               bool ok) {
    report_.per_n.push_back({n, std::string(check), std::move(lhs), std::move(rhs), ok});
    report_.overall = report_.overall && ok;
  }

  void note(std::string_view text) {
    if (!report_.notes.empty()) report_.notes += "; ";
    report_.notes += text;
  }

  VerificationReport finish() {
    report_.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
        std::chrono::steady_clock::now() - start_);
    return std::move(report_);
  }

 private:
  VerificationReport report_;
  std::chrono::steady_clock::time_point start_;
};

inline void check_bounds(const IdentityCase& c) {
  if (c.n_oracle > c.n_fast) {
    throw invalid_case_error("oracle bound " + std::to_string(c.n_oracle) +
                             " exceeds fast bound " + std::to_string(c.n_fast));
  }
}

inline std::int64_t require_alpha(const IdentityCase& c) {
  if (!c.alpha) {
    throw invalid_case_error(std::string(to_string(c.id)) + " requires an alpha parameter");
  }
  return *c.alpha;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// <sum of f over all parts>_q = sum f(n) q^n / (1-q^n), coefficientwise.
// Fast route at every n <= n_fast; the statistic is additionally recomputed
// by enumeration for n <= n_oracle.
// ---------------------------------------------------------------------------
inline VerificationReport verify_theorem1(const FunctionTable& f, std::size_t n_fast,
                                          std::size_t n_oracle) {
  detail::ReportBuilder rb({IdentityId::kTheorem1, f.name(), std::nullopt, n_fast, n_oracle});
  const StatisticVector stat = stat_all_parts_fast(f, n_fast);
  const TruncatedSeries bracket = q_bracket(stat, n_fast);
  const TruncatedSeries closed = lambert_series(f, n_fast);
  for (std::size_t n = 0; n <= n_fast; ++n) {
    rb.row(n, "qbracket=lambert", bracket[n], closed[n]);
  }
  for (std::uint32_t n = 0; n <= n_oracle; ++n) {
    rb.row(n, "stat_oracle=stat_fast", stat_oracle(f, StatMode::kAllParts, n), stat.values[n]);
  }
  return rb.finish();
}

// ---------------------------------------------------------------------------
// <sum of f over distinct parts>_q = sum f(n) q^n, coefficientwise.
// ---------------------------------------------------------------------------
inline VerificationReport verify_theorem3(const FunctionTable& f, std::size_t n_fast,
                                          std::size_t n_oracle) {
  detail::ReportBuilder rb({IdentityId::kTheorem3, f.name(), std::nullopt, n_fast, n_oracle});
  const StatisticVector stat = stat_distinct_parts_fast(f, n_fast);
  const TruncatedSeries bracket = q_bracket(stat, n_fast);
  const TruncatedSeries closed = power_series(f, n_fast);
  for (std::size_t n = 0; n <= n_fast; ++n) {
    rb.row(n, "qbracket=power_series", bracket[n], closed[n]);
  }
  for (std::uint32_t n = 0; n <= n_oracle; ++n) {
    rb.row(n, "stat_oracle=stat_fast", stat_oracle(f, StatMode::kDistinctParts, n),
           stat.values[n]);
  }
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

namespace detail {

// Three-way identity: sum of f over all parts = sum of F over distinct parts
// = sum_{k=1..n} p(n-k) F(k), where F is the divisor-sum transform of f.
inline VerificationReport verify_multcor(const IdentityCase& c) {
  ReportBuilder rb(c);
  const FunctionTable f = build_table_from_spec(c.f_name, c.n_fast);
  const FunctionTable F = divisor_sum_transform(f);
  const std::vector<BigInt> conv = convolve_with_partition_counts(F, c.n_fast);
  const StatisticVector all_fast = stat_all_parts_fast(f, c.n_fast);
  const StatisticVector distinct_fast = stat_distinct_parts_fast(F, c.n_fast);
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "allparts_oracle=conv", stat_oracle(f, StatMode::kAllParts, n), conv[n]);
    rb.row(n, "distinct_oracle=conv", stat_oracle(F, StatMode::kDistinctParts, n), conv[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "allparts_fast=distinct_fast", all_fast.values[n], distinct_fast.values[n]);
  }
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

// f = e1: the number of 1s in all partitions of n equals the total count of
// distinct parts over all partitions of n, and both equal sum p(n-k).
inline VerificationReport verify_stanley(const IdentityCase& c) {
  ReportBuilder rb(c);
  const FunctionTable ones_f = e1_table(c.n_fast);
  const FunctionTable const_one = one_table(c.n_fast);
  const std::vector<BigInt> conv = convolve_with_partition_counts(const_one, c.n_fast);
  const StatisticVector ones_fast = stat_all_parts_fast(ones_f, c.n_fast);
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    const BigInt ones = stat_oracle(ones_f, StatMode::kAllParts, n);
    const BigInt distinct_count = stat_oracle(const_one, StatMode::kDistinctParts, n);
    rb.row(n, "ones_oracle=distinct_count_oracle", ones, distinct_count);
    rb.row(n, "distinct_count_oracle=conv", distinct_count, conv[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "ones_fast=conv", ones_fast.values[n], conv[n]);
  }
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

// Partitions of n that contain a 1, counted by enumeration, equal p(n-1).
inline VerificationReport verify_containing_one(const IdentityCase& c) {
  ReportBuilder rb(c);
  const auto p = partition_count_table(c.n_oracle);
  for (std::uint32_t n = 1; n <= c.n_oracle; ++n) {
    BigInt count = 0;
    for_each_partition(n, [&](const Partition& part) {
      // Parts are nonincreasing, so a 1 can only sit at the end.
      if (!part.parts.empty() && part.parts.back() == 1) ++count;
    });
    rb.row(n, "containing_one=p(n-1)", count, p[n - 1]);
  }
  return rb.finish();
}

// sum of alpha-th powers over all parts = sum sigma_alpha(k) p(n-k);
// for alpha = 1 additionally = n p(n).
inline VerificationReport verify_euler_moment(const IdentityCase& c) {
  const std::int64_t alpha = require_alpha(c);
  ReportBuilder rb(c);
  if (alpha < 0) throw unsupported_parameter_error("alpha must be nonnegative");
  const auto a = static_cast<std::uint32_t>(alpha);
  const FunctionTable powers = power_table(a, c.n_fast);
  const FunctionTable sigma = sigma_table(a, c.n_fast);
  const std::vector<BigInt> conv = convolve_with_partition_counts(sigma, c.n_fast);
  const StatisticVector fast = stat_all_parts_fast(powers, c.n_fast);
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "moment_oracle=conv", stat_oracle(powers, StatMode::kAllParts, n), conv[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "moment_fast=conv", fast.values[n], conv[n]);
  }
  if (alpha == 1) {
    const auto p = partition_count_table(c.n_fast);
    for (std::size_t n = 0; n <= c.n_fast; ++n) {
      rb.row(n, "conv=n*p(n)", conv[n], BigInt(n) * p[n]);
    }
  }
  return rb.finish();
}

// Jordan totients over all parts = alpha-th moments over distinct parts
// = sum k^alpha p(n-k). The convolution kernel is the divisor-sum transform
// of J_alpha, i.e. k^alpha; convolving with J_alpha itself instead yields the
// distinct-parts J_alpha statistic, a different quantity (n=2, alpha=1: the
// sides here are 3,3,3 while sum J_1(k) p(n-k) = 2). The fast cross-check
// compares dst(J_alpha) against the directly built power table through the
// two convolution routes.
inline VerificationReport verify_jordan_dual(const IdentityCase& c) {
  const std::int64_t alpha = require_alpha(c);
  ReportBuilder rb(c);
  if (alpha < 0) throw unsupported_parameter_error("alpha must be nonnegative");
  const auto a = static_cast<std::uint32_t>(alpha);
  const FunctionTable jordan = jordan_table(a, c.n_fast);
  const FunctionTable powers = power_table(a, c.n_fast);
  const std::vector<BigInt> conv = convolve_with_partition_counts(powers, c.n_fast);
  const StatisticVector all_fast = stat_all_parts_fast(jordan, c.n_fast);
  const StatisticVector distinct_fast = stat_distinct_parts_fast(powers, c.n_fast);
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "jordan_oracle=conv", stat_oracle(jordan, StatMode::kAllParts, n), conv[n]);
    rb.row(n, "moment_distinct_oracle=conv", stat_oracle(powers, StatMode::kDistinctParts, n),
           conv[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "allparts_fast=distinct_fast", all_fast.values[n], distinct_fast.values[n]);
  }
  rb.note("convolution kernel is k^alpha, the divisor-sum transform of the Jordan totient; "
          "a J_alpha(k) kernel computes the distinct-parts J_alpha statistic instead and does "
          "not match the all-parts side");
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

// Q(n), the number of squarefree parts in all partitions of n, equals
// sum p(n-k) 2^omega(k) and has the parity of p(n-1). The 2^omega table is
// built by shifting, so it genuinely cross-checks dst(moebius_sq).
inline VerificationReport verify_squarefree_parity(const IdentityCase& c) {
  ReportBuilder rb(c);
  const FunctionTable mu_sq = moebius_sq_table(c.n_fast);
  const FunctionTable two_om = two_omega_table(c.n_fast);
  const std::vector<BigInt> conv = convolve_with_partition_counts(two_om, c.n_fast);
  const StatisticVector fast = stat_all_parts_fast(mu_sq, c.n_fast);
  const auto p = partition_count_table(c.n_fast);
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "Q_oracle=conv", stat_oracle(mu_sq, StatMode::kAllParts, n), conv[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "Q_fast=conv", fast.values[n], conv[n]);
  }
  for (std::size_t n = 1; n <= c.n_fast; ++n) {
    const BigInt lhs = conv[n] % 2;
    const BigInt rhs = p[n - 1] % 2;
    rb.row(n, "Q_mod2=p(n-1)_mod2", lhs, rhs);
  }
  return rb.finish();
}

// The number of distinct squares over all partitions of n equals
// sum_{k <= sqrt(n)} p(n - k^2).
inline VerificationReport verify_distinct_squares(const IdentityCase& c) {
  ReportBuilder rb(c);
  const FunctionTable sq = squares_table(c.n_fast);
  const StatisticVector fast = stat_distinct_parts_fast(sq, c.n_fast);
  const auto p = partition_count_table(c.n_fast);
  std::vector<BigInt> skip(c.n_fast + 1, BigInt(0));
  for (std::size_t n = 1; n <= c.n_fast; ++n) {
    BigInt acc = 0;
    for (std::size_t k = 1; k * k <= n; ++k) acc += p[n - k * k];
    skip[n] = std::move(acc);
  }
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "distinct_squares_oracle=skip_sum",
           stat_oracle(sq, StatMode::kDistinctParts, n), skip[n]);
  }
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    rb.row(n, "distinct_squares_fast=skip_sum", fast.values[n], skip[n]);
  }
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

// Additive form over prime-exponent vectors: Lambda over all parts = log over
// distinct parts = sum p(n-k) log k. Exponentiated form as exact big-integer
// products: prod_{k=1..n} k^{p(n-k)} = product of all distinct parts over the
// partitions of n, bounded separately because the products grow so fast.
inline VerificationReport verify_mangoldt_product(const IdentityCase& c) {
  ReportBuilder rb(c);
  const std::size_t bound = c.n_oracle;
  std::vector<PrimeLogVector> logvec(bound + 1);
  std::vector<PrimeLogVector> mangoldt(bound + 1);
  for (std::size_t k = 1; k <= bound; ++k) {
    logvec[k] = prime_log_vector(k);
    mangoldt[k] = von_mangoldt_vector(k);
  }
  const auto p = partition_count_table(bound);
  for (std::uint32_t n = 0; n <= bound; ++n) {
    PrimeLogVector all_parts;
    PrimeLogVector distinct_logs;
    for_each_partition(n, [&](const Partition& part) {
      std::uint32_t prev = 0;
      for (const std::uint32_t v : part.parts) {
        all_parts += mangoldt[v];
        if (v != prev) distinct_logs += logvec[v];
        prev = v;
      }
    });
    PrimeLogVector conv;
    for (std::uint32_t k = 1; k <= n; ++k) conv += logvec[k] * p[n - k];
    rb.row(n, "mangoldt_allparts=conv", all_parts, conv);
    rb.row(n, "log_distinct=conv", distinct_logs, conv);
  }
  const std::size_t prod_bound = std::min(c.n_oracle, kMangoldtProductBound);
  for (std::uint32_t n = 0; n <= prod_bound; ++n) {
    BigInt lhs = 1;
    for (std::uint32_t k = 1; k <= n; ++k) {
      lhs *= boost::multiprecision::pow(BigInt(k), p[n - k].convert_to<unsigned>());
    }
    BigInt rhs = 1;
    for_each_partition(n, [&](const Partition& part) {
      std::uint32_t prev = 0;
      for (const std::uint32_t v : part.parts) {
        if (v != prev) rhs *= v;
        prev = v;
      }
    });
    rb.row(n, "product_conv=product_distinct", lhs, rhs);
  }
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

// q-bracket of the (2k-1)-th moment statistic has coefficient sigma_{2k-1}(n)
// at q^n -- the arithmetic part of the weight-2k Eisenstein expansion.
inline VerificationReport verify_eisenstein_moment(const IdentityCase& c) {
  const std::int64_t weight = require_alpha(c);
  ReportBuilder rb(c);
  if (weight < 1) throw unsupported_parameter_error("weight k must be >= 1");
  const auto exponent = static_cast<std::uint32_t>(2 * weight - 1);
  const FunctionTable powers = power_table(exponent, c.n_fast);
  const FunctionTable sigma = sigma_table(exponent, c.n_fast);
  const StatisticVector stat = stat_all_parts_fast(powers, c.n_fast);
  const TruncatedSeries bracket = q_bracket(stat, c.n_fast);
  for (std::size_t n = 0; n <= c.n_fast; ++n) {
    const BigInt rhs = (n == 0) ? BigInt(0) : sigma(n);
    rb.row(n, "qbracket=sigma", bracket[n], rhs);
  }
  for (std::uint32_t n = 0; n <= c.n_oracle; ++n) {
    rb.row(n, "stat_oracle=stat_fast", stat_oracle(powers, StatMode::kAllParts, n),
           stat.values[n]);
  }
  return rb.finish();
}

}  // namespace detail

// Dispatch for the corollary-style identities (everything except theorem1/3,
// which have their own entry points above).
inline VerificationReport verify_corollary(const IdentityCase& c) {
  detail::check_bounds(c);
  switch (c.id) {
    case IdentityId::kMultCor: return detail::verify_multcor(c);
    case IdentityId::kStanley: return detail::verify_stanley(c);
    case IdentityId::kContainingOne: return detail::verify_containing_one(c);
    case IdentityId::kEulerMoment: return detail::verify_euler_moment(c);
    case IdentityId::kJordanDual: return detail::verify_jordan_dual(c);
    case IdentityId::kSquarefreeParity: return detail::verify_squarefree_parity(c);
    case IdentityId::kDistinctSquares: return detail::verify_distinct_squares(c);
    case IdentityId::kMangoldtProduct: return detail::verify_mangoldt_product(c);
    case IdentityId::kEisensteinMoment: return detail::verify_eisenstein_moment(c);
    case IdentityId::kTheorem1:
    case IdentityId::kTheorem3:
      throw invalid_case_error("use verify_theorem1/verify_theorem3 (or run_case) for " +
                               std::string(to_string(c.id)));
  }
  throw invalid_case_error("unknown identity id");
}

// Runs any catalog case.
inline VerificationReport run_case(const IdentityCase& c) {
  detail::check_bounds(c);
  switch (c.id) {
    case IdentityId::kTheorem1:
      return verify_theorem1(build_table_from_spec(c.f_name.empty() ? "identity" : c.f_name,
                                                   c.n_fast),
                             c.n_fast, c.n_oracle);
    case IdentityId::kTheorem3:
      return verify_theorem3(build_table_from_spec(c.f_name.empty() ? "identity" : c.f_name,
                                                   c.n_fast),
                             c.n_fast, c.n_oracle);
    default:
      return verify_corollary(c);
  }
}

// The full identity suite in its fixed (deterministic) order.
inline std::vector<IdentityCase> default_catalog(std::size_t n_fast, std::size_t n_oracle) {
  std::vector<IdentityCase> cases;
  for (const auto& f : catalog_f_specs()) {
    cases.push_back({IdentityId::kTheorem1, f, std::nullopt, n_fast, n_oracle});
  }
  for (const auto& f : catalog_f_specs()) {
    cases.push_back({IdentityId::kTheorem3, f, std::nullopt, n_fast, n_oracle});
  }
  for (const auto& f : catalog_f_specs()) {
    cases.push_back({IdentityId::kMultCor, f, std::nullopt, n_fast, n_oracle});
  }
  cases.push_back({IdentityId::kStanley, "e1", std::nullopt, n_fast, n_oracle});
  cases.push_back({IdentityId::kContainingOne, "moebius", std::nullopt, n_fast, n_oracle});
  for (std::int64_t a : {1, 2, 3}) {
    cases.push_back({IdentityId::kEulerMoment, "power:" + std::to_string(a), a, n_fast, n_oracle});
  }
  for (std::int64_t a : {1, 2}) {
    cases.push_back({IdentityId::kJordanDual, "jordan:" + std::to_string(a), a, n_fast, n_oracle});
  }
  cases.push_back({IdentityId::kSquarefreeParity, "moebius_sq", std::nullopt, n_fast, n_oracle});
  cases.push_back({IdentityId::kDistinctSquares, "liouville", std::nullopt, n_fast, n_oracle});
  cases.push_back({IdentityId::kMangoldtProduct, "mangoldt", std::nullopt, n_fast, n_oracle});
  for (std::int64_t k : {1, 2, 3}) {
    cases.push_back({IdentityId::kEisensteinMoment, "power:" + std::to_string(2 * k - 1), k,
                     n_fast, n_oracle});
  }
  return cases;
}

inline std::vector<VerificationReport> run_cases(const std::vector<IdentityCase>& cases) {
  std::vector<VerificationReport> out;
  out.reserve(cases.size());
  for (const auto& c : cases) out.push_back(run_case(c));
  return out;
}

inline bool all_pass(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    if (!r.overall) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Randomized three-way check: num_tables integer tables f on 1..n_max with
// values in [-9, 9] drawn from a seeded mt19937_64 (reduction by modulo, so
// the stream is identical across platforms). For every table and every n,
//   sum of f over all parts  =  sum of F over distinct parts  =  conv,
// with the two statistic sides computed by enumeration (shared across tables)
// and the convolution from the pentagonal p-table.
// ---------------------------------------------------------------------------
inline VerificationReport verify_multcor_random(std::uint64_t seed, std::size_t num_tables,
                                                 std::size_t n_max) {
  detail::ReportBuilder rb({IdentityId::kMultCor,
                            "random:seed=" + std::to_string(seed) +
                                ",tables=" + std::to_string(num_tables),
                            std::nullopt, n_max, n_max});
  std::mt19937_64 rng(seed);
  // f_by_v[v][t] = f_t(v); transposed so the per-partition loops stay contiguous.
  std::vector<std::vector<std::int64_t>> f_by_v(n_max + 1, std::vector<std::int64_t>(num_tables));
  for (std::size_t t = 0; t < num_tables; ++t) {
    for (std::size_t v = 1; v <= n_max; ++v) {
      f_by_v[v][t] = static_cast<std::int64_t>(rng() % 19) - 9;
    }
  }
  std::vector<std::vector<std::int64_t>> dst_by_v(n_max + 1,
                                                  std::vector<std::int64_t>(num_tables, 0));
  for (std::size_t d = 1; d <= n_max; ++d) {
    for (std::size_t m = d; m <= n_max; m += d) {
      for (std::size_t t = 0; t < num_tables; ++t) dst_by_v[m][t] += f_by_v[d][t];
    }
  }
  // Enumeration shared across all tables: all_sum[n][t], distinct_sum[n][t].
  std::vector<std::vector<std::int64_t>> all_sum(n_max + 1,
                                                 std::vector<std::int64_t>(num_tables, 0));
  std::vector<std::vector<std::int64_t>> distinct_sum(
      n_max + 1, std::vector<std::int64_t>(num_tables, 0));
  std::vector<std::pair<std::uint32_t, std::uint32_t>> runs;  // (value, multiplicity)
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    auto& all_n = all_sum[n];
    auto& distinct_n = distinct_sum[n];
    for_each_partition(n, [&](const Partition& part) {
      runs.clear();
      for (const std::uint32_t v : part.parts) {
        if (!runs.empty() && runs.back().first == v) {
          ++runs.back().second;
        } else {
          runs.emplace_back(v, 1);
        }
      }
      for (const auto& [v, mult] : runs) {
        const auto& fv = f_by_v[v];
        const auto& Fv = dst_by_v[v];
        for (std::size_t t = 0; t < num_tables; ++t) {
          all_n[t] += static_cast<std::int64_t>(mult) * fv[t];
          distinct_n[t] += Fv[t];
        }
      }
    });
  }
  // Convolution side; p(n) for n <= 40-ish fits comfortably in int64, but the
  // p-table is exact regardless.
  const auto p_big = partition_count_table(n_max);
  std::vector<std::int64_t> p(n_max + 1);
  for (std::size_t i = 0; i <= n_max; ++i) p[i] = p_big[i].convert_to<std::int64_t>();
  std::size_t comparisons = 0;
  std::size_t failures = 0;
  for (std::size_t t = 0; t < num_tables; ++t) {
    for (std::size_t n = 0; n <= n_max; ++n) {
      std::int64_t conv = 0;
      for (std::size_t k = 1; k <= n; ++k) conv += p[n - k] * dst_by_v[k][t];
      comparisons += 2;
      if (all_sum[n][t] != conv) {
        ++failures;
        rb.row_raw(n, "allparts_oracle=conv[t=" + std::to_string(t) + "]",
                   std::to_string(all_sum[n][t]), std::to_string(conv), false);
      }
      if (distinct_sum[n][t] != conv) {
        ++failures;
        rb.row_raw(n, "distinct_oracle=conv[t=" + std::to_string(t) + "]",
                   std::to_string(distinct_sum[n][t]), std::to_string(conv), false);
      }
    }
  }
  rb.row_raw(0, "random_three_way_summary", "failures=" + std::to_string(failures),
             "comparisons=" + std::to_string(comparisons), failures == 0);
  rb.note(kDistinctSummandNote);
  return rb.finish();
}

}  // namespace qbracket
