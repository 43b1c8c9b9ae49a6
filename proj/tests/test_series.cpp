#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "oracles.hpp"
#include "qbracket/series.hpp"

using namespace qbracket;

namespace {

std::vector<BigInt> big(std::initializer_list<long> xs) {
  std::vector<BigInt> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

TruncatedSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::vector<BigInt> c(order + 1);
  for (auto& x : c) x = static_cast<std::int64_t>(rng() % 199) - 99;
  return TruncatedSeries(std::move(c));
}

}  // namespace

TEST_CASE("series construction stores coefficients verbatim") {
  const auto s = series_from_coeffs(big({1, 1, 2, 3, 5}));
  CHECK(s.order() == 4);
  CHECK(s[0] == 1);
  CHECK(s[4] == 5);

  CHECK(series_from_coeffs(big({1})).order() == 0);
  const auto q = series_from_coeffs(big({0, 1}));
  CHECK(q.order() == 1);
  CHECK(q[1] == 1);
}

TEST_CASE("empty coefficient list is rejected") {
  CHECK_THROWS_AS(series_from_coeffs({}), std::invalid_argument);
}

TEST_CASE("multiplication requires equal orders") {
  const auto a = series_from_coeffs(big({1, 1}));
  const auto b = series_from_coeffs(big({1, 1, 1}));
  CHECK_THROWS_AS(series_mul(a, b), order_mismatch_error);
}

TEST_CASE("difference of squares at order 2") {
  const auto a = series_from_coeffs(big({1, 1, 0}));
  const auto b = series_from_coeffs(big({1, -1, 0}));
  CHECK(series_mul(a, b) == series_from_coeffs(big({1, 0, -1})));
}

TEST_CASE("product truncates high-order terms") {
  // (1+q)(1+q) at order 1: the q^2 term falls away.
  const auto a = series_from_coeffs(big({1, 1}));
  CHECK(series_mul(a, a) == series_from_coeffs(big({1, 2})));
}

TEST_CASE("multiplication matches the schoolbook oracle and is commutative/associative") {
  std::mt19937_64 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    const std::size_t order = rng() % 9;
    const auto a = random_series(rng, order);
    const auto b = random_series(rng, order);
    const auto c = random_series(rng, order);
    const auto ab = series_mul(a, b);
    CHECK(ab.coeffs() == testoracle::poly_mul_truncated(a.coeffs(), b.coeffs(), order));
    CHECK(ab == series_mul(b, a));
    CHECK(series_mul(ab, c) == series_mul(a, series_mul(b, c)));
  }
}

TEST_CASE("euler product via pentagonal indices matches direct expansion") {
  CHECK(euler_product_series(0) == series_from_coeffs(big({1})));
  CHECK(euler_product_series(7).coeffs() == big({1, -1, -1, 0, 0, 1, 0, 1}));
  for (std::size_t order : {1u, 5u, 12u, 30u, 60u}) {
    CHECK(euler_product_series(order).coeffs() ==
          testoracle::euler_product_by_expansion(order));
  }
}

TEST_CASE("partition generating function starts 1,1,2,3,5,7,11") {
  const auto p = partition_gf_series(6);
  CHECK(p.coeffs() == big({1, 1, 2, 3, 5, 7, 11}));
}

TEST_CASE("partition gf and euler product are inverse up to order 50") {
  const std::size_t order = 50;
  const auto prod = series_mul(euler_product_series(order), partition_gf_series(order));
  std::vector<BigInt> one(order + 1, BigInt(0));
  one[0] = 1;
  CHECK(prod == series_from_coeffs(std::move(one)));
}

TEST_CASE("lambert series of the identity function lists divisor sums") {
  const auto s = lambert_series(identity_table(6), 6);
  CHECK(s.coeffs() == big({0, 1, 3, 4, 7, 6, 12}));
}

TEST_CASE("lambert coefficients equal divisor sums for every catalog function") {
  for (const auto& spec : catalog_f_specs()) {
    const auto f = build_table_from_spec(spec, 60);
    const auto s = lambert_series(f, 60);
    for (std::uint64_t m = 1; m <= 60; ++m) {
      REQUIRE(s[m] == testoracle::divisor_sum_enum(f, m));
    }
  }
}

TEST_CASE("lambert series of e1 is the geometric series q/(1-q)") {
  const auto s = lambert_series(e1_table(8), 8);
  CHECK(s.coeffs() == big({0, 1, 1, 1, 1, 1, 1, 1, 1}));
}

TEST_CASE("lambert series of moebius is the single term q") {
  const auto s = lambert_series(moebius_table(6), 6);
  CHECK(s.coeffs() == big({0, 1, 0, 0, 0, 0, 0}));
}

TEST_CASE("lambert series reports a short table") {
  CHECK_THROWS_AS(lambert_series(identity_table(3), 6), table_too_short_error);
}

TEST_CASE("n p(n) appears in the product of the partition gf and the sigma Lambert series") {
  // Coefficient of q^4 in (sum p(n) q^n)(sum sigma_1(n) q^n) is 1*3+3*2+4*1+7*1 = 20.
  const auto prod = series_mul(partition_gf_series(4), lambert_series(identity_table(4), 4));
  CHECK(prod[4] == 20);
}

TEST_CASE("series add and scale behave coefficientwise") {
  const auto a = series_from_coeffs(big({1, 2, 3}));
  const auto b = series_from_coeffs(big({5, -2, 1}));
  CHECK(series_add(a, b) == series_from_coeffs(big({6, 0, 4})));
  CHECK(series_scale(BigInt(-3), a) == series_from_coeffs(big({-3, -6, -9})));
}
