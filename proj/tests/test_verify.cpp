#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "qbracket/qbracket.hpp"
#include "qbracket/verify.hpp"

using namespace qbracket;

namespace {

const PerNCheck* find_row(const VerificationReport& r, std::size_t n, std::string_view check) {
  for (const auto& row : r.per_n) {
    if (row.n == n && row.check == check) return &row;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("q-bracket of the zero statistic is the zero series") {
  StatisticVector stat{std::vector<BigInt>(11, BigInt(0)), StatMode::kAllParts, "zero"};
  CHECK(q_bracket(stat, 10) == TruncatedSeries::zero(10));
}

TEST_CASE("q-bracket of the all-parts identity statistic gives sigma_1") {
  const auto stat = stat_all_parts_fast(identity_table(6), 6);
  const auto bracket = q_bracket(stat, 6);
  CHECK(bracket.coeffs() == lambert_series(identity_table(6), 6).coeffs());
  CHECK(bracket[1] == 1);
  CHECK(bracket[2] == 3);
  CHECK(bracket[3] == 4);
  CHECK(bracket[4] == 7);
  CHECK(bracket[5] == 6);
  CHECK(bracket[6] == 12);
}

TEST_CASE("q-bracket of the distinct-parts e1 statistic is the series q") {
  const auto stat = stat_distinct_parts_fast(e1_table(10), 10);
  const auto bracket = q_bracket(stat, 10);
  for (std::size_t n = 0; n <= 10; ++n) {
    REQUIRE(bracket[n] == (n == 1 ? 1 : 0));
  }
  // The statistic itself is backed by enumeration at small n.
  const auto e1 = e1_table(10);
  for (std::uint32_t n = 0; n <= 10; ++n) {
    REQUIRE(stat_oracle(e1, StatMode::kDistinctParts, n) == stat.values[n]);
  }
}

TEST_CASE("q-bracket rejects statistics shorter than the requested order") {
  StatisticVector stat{std::vector<BigInt>(5, BigInt(0)), StatMode::kAllParts, "zero"};
  CHECK_THROWS_AS(q_bracket(stat, 10), table_too_short_error);
}

TEST_CASE("q-bracket is linear in the statistic") {
  const std::size_t order = 50;
  const auto s = stat_all_parts_fast(identity_table(order), order);
  const auto t = stat_distinct_parts_fast(moebius_table(order), order);
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 10; ++iter) {
    const BigInt a = static_cast<std::int64_t>(rng() % 41) - 20;
    const BigInt b = static_cast<std::int64_t>(rng() % 41) - 20;
    StatisticVector combo{std::vector<BigInt>(order + 1), StatMode::kAllParts, "combo"};
    for (std::size_t n = 0; n <= order; ++n) {
      combo.values[n] = a * s.values[n] + b * t.values[n];
    }
    const auto lhs = q_bracket(combo, order);
    const auto rhs = series_add(series_scale(a, q_bracket(s, order)),
                                series_scale(b, q_bracket(t, order)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("all-parts bracket identity verifies for identity, zero, and cubes") {
  const auto r = verify_theorem1(identity_table(40), 40, 12);
  CHECK(r.overall);
  CHECK(r.notes.empty());

  const auto zero = verify_theorem1(zero_table(20), 20, 8);
  CHECK(zero.overall);

  const auto cubes = verify_theorem1(power_table(3, 20), 20, 8);
  CHECK(cubes.overall);
  const auto* row = find_row(cubes, 4, "qbracket=lambert");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "73");  // 1 + 8 + 64
}

TEST_CASE("distinct-parts bracket identity verifies and carries the summand note") {
  const auto r = verify_theorem3(identity_table(40), 40, 12);
  CHECK(r.overall);
  CHECK(r.notes == std::string(kDistinctSummandNote));
  // coefficient n of the bracket is f(n) itself
  const auto* row = find_row(r, 7, "qbracket=power_series");
  REQUIRE(row != nullptr);
  CHECK(row->rhs == "7");
}

TEST_CASE("distinct-parts bracket of sigma_1 gives sigma_1 back") {
  const auto r = verify_theorem3(sigma_table(1, 30), 30, 10);
  CHECK(r.overall);
}

TEST_CASE("three-way divisor-sum identity verifies per catalog function") {
  for (const auto& spec : catalog_f_specs()) {
    const auto r = verify_corollary({IdentityId::kMultCor, spec, std::nullopt, 40, 12});
    REQUIRE(r.overall);
    REQUIRE(r.notes == std::string(kDistinctSummandNote));
  }
}

TEST_CASE("ones count, distinct count, and the convolution coincide") {
  const auto r = verify_corollary({IdentityId::kStanley, "e1", std::nullopt, 40, 15});
  CHECK(r.overall);
}

TEST_CASE("partitions containing 1 are counted by p(n-1)") {
  const auto r = verify_corollary({IdentityId::kContainingOne, "moebius", std::nullopt, 30, 30});
  CHECK(r.overall);
  const auto* row = find_row(r, 5, "containing_one=p(n-1)");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "5");
  CHECK(row->rhs == "5");
}

TEST_CASE("part moments match the sigma convolution, and n p(n) at alpha 1") {
  const auto r = verify_corollary({IdentityId::kEulerMoment, "power:1", 1, 60, 12});
  CHECK(r.overall);
  const auto* row = find_row(r, 4, "conv=n*p(n)");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "20");

  const auto r2 = verify_corollary({IdentityId::kEulerMoment, "power:2", 2, 40, 10});
  CHECK(r2.overall);
}

TEST_CASE("euler_moment without alpha is an invalid case") {
  CHECK_THROWS_AS(verify_corollary({IdentityId::kEulerMoment, "power", std::nullopt, 20, 10}),
                  invalid_case_error);
  CHECK_THROWS_AS(verify_corollary({IdentityId::kEisensteinMoment, "power", std::nullopt, 20, 10}),
                  invalid_case_error);
}

TEST_CASE("an oracle bound beyond the fast bound is an invalid case") {
  CHECK_THROWS_AS(run_case({IdentityId::kStanley, "e1", std::nullopt, 10, 20}),
                  invalid_case_error);
}

TEST_CASE("Jordan totients over parts equal distinct part moments") {
  for (std::int64_t alpha : {1, 2}) {
    const auto r = verify_corollary({IdentityId::kJordanDual,
                                     "jordan:" + std::to_string(alpha), alpha, 40, 12});
    REQUIRE(r.overall);
  }
}

TEST_CASE("squarefree part counts: convolution and parity") {
  const auto r =
      verify_corollary({IdentityId::kSquarefreeParity, "moebius_sq", std::nullopt, 60, 12});
  CHECK(r.overall);
  const auto* row = find_row(r, 4, "Q_oracle=conv");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "11");  // squarefree parts 0,2,2,3,4 across the partitions of 4
}

TEST_CASE("distinct square counts match the skip convolution") {
  const auto r =
      verify_corollary({IdentityId::kDistinctSquares, "liouville", std::nullopt, 60, 12});
  CHECK(r.overall);
  const auto* row = find_row(r, 4, "distinct_squares_oracle=skip_sum");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "4");
}

TEST_CASE("prime-vector and product forms of the log identity") {
  const auto r =
      verify_corollary({IdentityId::kMangoldtProduct, "mangoldt", std::nullopt, 20, 20});
  CHECK(r.overall);
  const auto* row = find_row(r, 3, "product_conv=product_distinct");
  REQUIRE(row != nullptr);
  CHECK(row->lhs == "6");  // 1^2 * 2^1 * 3^1; distinct-part products 3*2*1
  CHECK(row->rhs == "6");
}

TEST_CASE("bracket moments of odd powers give sigma coefficients") {
  for (std::int64_t k : {1, 2, 3}) {
    const auto r = verify_corollary({IdentityId::kEisensteinMoment,
                                     "power:" + std::to_string(2 * k - 1), k, 40, 10});
    REQUIRE(r.overall);
  }
  // sigma_3 is multiplicative: sigma_3(6) = sigma_3(2) sigma_3(3) = 9*28.
  const auto sg = sigma_table(3, 6);
  CHECK(sg(2) == 9);
  CHECK(sg(3) == 28);
  CHECK(sg(6) == sg(2) * sg(3));
  CHECK(sg(6) == 252);
}

TEST_CASE("randomized three-way identity holds for seeded tables") {
  const auto r = verify_multcor_random(1729, 20, 25);
  CHECK(r.overall);
  REQUIRE(!r.per_n.empty());
  CHECK(r.per_n.back().check == "random_three_way_summary");
}

TEST_CASE("the default catalog covers every identity and passes at small bounds") {
  const auto cases = default_catalog(30, 10);
  CHECK(cases.size() == 37);
  const auto reports = run_cases(cases);
  CHECK(all_pass(reports));
  // every distinct-parts report carries the summand note
  for (const auto& r : reports) {
    switch (r.target.id) {
      case IdentityId::kTheorem3:
      case IdentityId::kMultCor:
      case IdentityId::kStanley:
      case IdentityId::kJordanDual:
      case IdentityId::kDistinctSquares:
      case IdentityId::kMangoldtProduct:
        REQUIRE(r.notes.find(kDistinctSummandNote) != std::string::npos);
        break;
      default:
        REQUIRE(r.notes.empty());
        break;
    }
  }
}

TEST_CASE("identity names round-trip") {
  for (const auto name :
       {"theorem1", "theorem3", "multcor", "stanley", "containing_one", "euler_moment",
        "jordan_dual", "squarefree_parity", "distinct_squares", "mangoldt_product",
        "eisenstein_moment"}) {
    const auto id = identity_from_string(name);
    REQUIRE(id);
    REQUIRE(to_string(*id) == name);
  }
  CHECK(!identity_from_string("theorem9"));
}

TEST_CASE("run_case dispatches the bracket identities through the catalog") {
  CHECK(run_case({IdentityId::kTheorem1, "moebius", std::nullopt, 25, 10}).overall);
  CHECK(run_case({IdentityId::kTheorem3, "liouville", std::nullopt, 25, 10}).overall);
  CHECK(run_case({IdentityId::kTheorem1, "", std::nullopt, 25, 10}).overall);  // default f
}
