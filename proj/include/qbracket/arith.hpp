#pragma once

// Sieve-backed exact evaluation of the arithmetic functions used by the
// identity suite: moebius, sigma_alpha, Jordan totients, Liouville, 2^omega,
// indicator tables, the divisor-sum transform F(n) = sum_{d|n} f(d), and the
// exact prime-exponent representation of log k.

#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qbracket/bigint.hpp"
#include "qbracket/errors.hpp"

namespace qbracket {

// Dense table of f(1..N) for an integer-valued arithmetic function.
// There is deliberately no f(0) entry: every identity here sums from 1.
class FunctionTable {
 public:
  // values[i] holds f(i+1); the table then covers n = 1..values.size().
  FunctionTable(std::string name, std::vector<BigInt> values)
      : name_(std::move(name)), table_(std::move(values)) {}

  const std::string& name() const { return name_; }

  // Largest n the table is defined at.
  std::size_t limit() const { return table_.size(); }

  const BigInt& operator()(std::size_t n) const {
    if (n < 1 || n > table_.size()) {
      throw table_too_short_error("table \"" + name_ + "\" is not defined at n=" +
                                  std::to_string(n) + " (limit " +
                                  std::to_string(table_.size()) + ")");
    }
    return table_[n - 1];
  }

  // Throws unless the table covers 1..upto.
  void require(std::size_t upto) const {
    if (limit() < upto) {
      throw table_too_short_error("table \"" + name_ + "\" covers 1.." +
                                  std::to_string(limit()) + " but 1.." +
                                  std::to_string(upto) + " is needed");
    }
  }

 private:
  std::string name_;
  std::vector<BigInt> table_;
};

// Least-prime-factor sieve: s[k] is the smallest prime dividing k for
// 2 <= k <= n; s[0] = s[1] = 0. Enables O(log k) factorization below n.
inline std::vector<std::uint32_t> spf_sieve(std::size_t n) {
  std::vector<std::uint32_t> s(n + 1, 0);
  for (std::size_t i = 2; i <= n; ++i) {
    if (s[i] != 0) continue;
    for (std::size_t j = i; j <= n; j += i) {
      if (s[j] == 0) s[j] = static_cast<std::uint32_t>(i);
    }
  }
  return s;
}

struct PrimePower {
  std::uint64_t prime;
  std::uint32_t exponent;
};

// Trial-division factorization, primes ascending. factorize(1) = {}.
inline std::vector<PrimePower> factorize(std::uint64_t k) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= k; p += (p == 2 ? 1 : 2)) {
    if (k % p == 0) {
      std::uint32_t e = 0;
      while (k % p == 0) {
        k /= p;
        ++e;
      }
      out.push_back({p, e});
    }
  }
  if (k > 1) out.push_back({k, 1});
  return out;
}

namespace detail {

// Factorization of k using a precomputed least-prime-factor table.
inline std::vector<PrimePower> factorize_with_spf(std::size_t k,
                                                  const std::vector<std::uint32_t>& spf) {
  std::vector<PrimePower> out;
  while (k > 1) {
    const std::uint32_t p = spf[k];
    std::uint32_t e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Table builders. Each returns exact values for n = 1..count.
// ---------------------------------------------------------------------------

inline FunctionTable zero_table(std::size_t count) {
  return {"zero", std::vector<BigInt>(count, BigInt(0))};
}

inline FunctionTable one_table(std::size_t count) {
  return {"one", std::vector<BigInt>(count, BigInt(1))};
}

// Indicator of n == 1.
inline FunctionTable e1_table(std::size_t count) {
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  return {"e1", std::move(v)};
}

inline FunctionTable identity_table(std::size_t count) {
  std::vector<BigInt> v;
  v.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) v.emplace_back(k);
  return {"identity", std::move(v)};
}

inline FunctionTable power_table(std::uint32_t alpha, std::size_t count) {
  std::vector<BigInt> v;
  v.reserve(count);
  for (std::size_t k = 1; k <= count; ++k) {
    v.push_back(boost::multiprecision::pow(BigInt(k), alpha));
  }
  return {"power:" + std::to_string(alpha), std::move(v)};
}

// sigma_alpha(n) = sum of alpha-th powers of the divisors of n, by divisor
// iteration: add d^alpha to every multiple of d. O(count log count) adds.
inline FunctionTable sigma_table(std::uint32_t alpha, std::size_t count) {
  std::vector<BigInt> v(count, BigInt(0));
  for (std::size_t d = 1; d <= count; ++d) {
    const BigInt dp = boost::multiprecision::pow(BigInt(d), alpha);
    for (std::size_t m = d; m <= count; m += d) v[m - 1] += dp;
  }
  return {"sigma:" + std::to_string(alpha), std::move(v)};
}

// Jordan totient, multiplicative with J_alpha(p^m) = p^{alpha m} - p^{alpha(m-1)}.
// J_1 is Euler's totient.
inline FunctionTable jordan_table(std::uint32_t alpha, std::size_t count) {
  const auto spf = spf_sieve(count);
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  for (std::size_t k = 2; k <= count; ++k) {
    BigInt val = 1;
    for (const auto& pp : detail::factorize_with_spf(k, spf)) {
      val *= boost::multiprecision::pow(BigInt(pp.prime), alpha * pp.exponent) -
             boost::multiprecision::pow(BigInt(pp.prime), alpha * (pp.exponent - 1));
    }
    v[k - 1] = val;
  }
  return {"jordan:" + std::to_string(alpha), std::move(v)};
}

inline FunctionTable moebius_table(std::size_t count) {
  const auto spf = spf_sieve(count);
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  for (std::size_t k = 2; k <= count; ++k) {
    const auto fac = detail::factorize_with_spf(k, spf);
    bool squarefree = true;
    for (const auto& pp : fac) squarefree &= (pp.exponent == 1);
    if (squarefree) v[k - 1] = (fac.size() % 2 == 0) ? 1 : -1;
  }
  return {"moebius", std::move(v)};
}

// mu^2, the squarefree indicator.
inline FunctionTable moebius_sq_table(std::size_t count) {
  const auto spf = spf_sieve(count);
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  for (std::size_t k = 2; k <= count; ++k) {
    bool squarefree = true;
    for (const auto& pp : detail::factorize_with_spf(k, spf)) {
      squarefree &= (pp.exponent == 1);
    }
    v[k - 1] = squarefree ? 1 : 0;
  }
  return {"moebius_sq", std::move(v)};
}

// Liouville lambda(n) = (-1)^{Omega(n)}.
inline FunctionTable liouville_table(std::size_t count) {
  const auto spf = spf_sieve(count);
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  for (std::size_t k = 2; k <= count; ++k) {
    std::uint64_t big_omega = 0;
    for (const auto& pp : detail::factorize_with_spf(k, spf)) big_omega += pp.exponent;
    v[k - 1] = (big_omega % 2 == 0) ? 1 : -1;
  }
  return {"liouville", std::move(v)};
}

// 2^{omega(n)} built from the omega table by exact shifting, independently of
// divisor_sum_transform(moebius_sq), so the two stay a genuine cross-check.
inline FunctionTable two_omega_table(std::size_t count) {
  const auto spf = spf_sieve(count);
  std::vector<BigInt> v(count, BigInt(0));
  if (count >= 1) v[0] = 1;
  for (std::size_t k = 2; k <= count; ++k) {
    const std::size_t omega = detail::factorize_with_spf(k, spf).size();
    v[k - 1] = BigInt(1) << omega;
  }
  return {"two_omega", std::move(v)};
}

// Indicator of the perfect squares.
inline FunctionTable squares_table(std::size_t count) {
  std::vector<BigInt> v(count, BigInt(0));
  for (std::size_t k = 1; k * k <= count; ++k) v[k * k - 1] = 1;
  return {"squares", std::move(v)};
}

// F(m) = sum_{d|m} f(d) for every m up to f's limit, by the same sieve-style
// divisor iteration as the Lambert series. O(N log N) additions, exact.
inline FunctionTable divisor_sum_transform(const FunctionTable& f) {
  const std::size_t n = f.limit();
  std::vector<BigInt> v(n, BigInt(0));
  for (std::size_t d = 1; d <= n; ++d) {
    const BigInt& fd = f(d);
    if (fd == 0) continue;
    for (std::size_t m = d; m <= n; m += d) v[m - 1] += fd;
  }
  return {"dst(" + f.name() + ")", std::move(v)};
}

// ---------------------------------------------------------------------------
// Catalog access by name. Parametric families take alpha >= 0 so that every
// value stays an exact integer.
// ---------------------------------------------------------------------------

inline FunctionTable build_table(std::string_view name, std::optional<std::int64_t> alpha,
                                 std::size_t count) {
  const bool parametric = (name == "power" || name == "sigma" || name == "jordan");
  if (parametric) {
    if (!alpha) {
      throw unsupported_parameter_error("\"" + std::string(name) +
                                        "\" needs an alpha parameter, e.g. \"" +
                                        std::string(name) + ":2\"");
    }
    if (*alpha < 0) {
      throw unsupported_parameter_error("alpha must be a nonnegative integer, got " +
                                        std::to_string(*alpha));
    }
    const auto a = static_cast<std::uint32_t>(*alpha);
    if (name == "power") return power_table(a, count);
    if (name == "sigma") return sigma_table(a, count);
    return jordan_table(a, count);
  }
  if (alpha) {
    throw unsupported_parameter_error("\"" + std::string(name) +
                                      "\" does not take an alpha parameter");
  }
  if (name == "zero") return zero_table(count);
  if (name == "one") return one_table(count);
  if (name == "e1") return e1_table(count);
  if (name == "identity") return identity_table(count);
  if (name == "moebius") return moebius_table(count);
  if (name == "moebius_sq") return moebius_sq_table(count);
  if (name == "liouville") return liouville_table(count);
  if (name == "two_omega") return two_omega_table(count);
  if (name == "squares") return squares_table(count);
  throw std::invalid_argument("unknown arithmetic function \"" + std::string(name) + "\"");
}

struct FSpec {
  std::string name;
  std::optional<std::int64_t> alpha;
};

// "name" or "name:alpha", e.g. "sigma:2".
inline FSpec parse_f_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return {std::string(spec), std::nullopt};
  const std::string_view head = spec.substr(0, colon);
  const std::string_view tail = spec.substr(colon + 1);
  std::int64_t a = 0;
  const auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), a);
  if (ec != std::errc{} || ptr != tail.data() + tail.size()) {
    throw std::invalid_argument("bad alpha in f spec \"" + std::string(spec) + "\"");
  }
  return {std::string(head), a};
}

inline FunctionTable build_table_from_spec(std::string_view spec, std::size_t count) {
  const FSpec s = parse_f_spec(spec);
  return build_table(s.name, s.alpha, count);
}

// The functions every identity is verified against by default.
inline std::vector<std::string> catalog_f_specs() {
  return {"one",     "identity",   "power:2",   "power:3",
          "moebius", "moebius_sq", "liouville", "jordan:1"};
}

// ---------------------------------------------------------------------------
// Exact logarithms.
// ---------------------------------------------------------------------------

// An element of the free abelian group on the primes: log k is represented by
// the exponent vector of k's factorization, so Lambda(k) and log k are exact
// values with no tolerance policy. The zero vector is log 1.
class PrimeLogVector {
 public:
  PrimeLogVector() = default;

  bool is_zero() const { return entries_.empty(); }
  const std::map<std::uint64_t, BigInt>& entries() const { return entries_; }

  void add(std::uint64_t prime, const BigInt& exponent) {
    if (exponent == 0) return;
    auto [it, inserted] = entries_.try_emplace(prime, exponent);
    if (!inserted) {
      it->second += exponent;
      if (it->second == 0) entries_.erase(it);
    }
  }

  PrimeLogVector& operator+=(const PrimeLogVector& rhs) {
    for (const auto& [p, e] : rhs.entries_) add(p, e);
    return *this;
  }
  friend PrimeLogVector operator+(PrimeLogVector lhs, const PrimeLogVector& rhs) {
    lhs += rhs;
    return lhs;
  }

  PrimeLogVector& operator*=(const BigInt& c) {
    if (c == 0) {
      entries_.clear();
      return *this;
    }
    for (auto& [p, e] : entries_) e *= c;
    return *this;
  }
  friend PrimeLogVector operator*(PrimeLogVector v, const BigInt& c) {
    v *= c;
    return v;
  }

  friend bool operator==(const PrimeLogVector&, const PrimeLogVector&) = default;

  // Exponentiated witness form: "1" for the zero vector, else e.g. "2^2*3".
  std::string str() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [p, e] : entries_) {
      if (!out.empty()) out += '*';
      out += std::to_string(p);
      if (e != 1) {
        out += '^';
        out += e.str();
      }
    }
    return out;
  }

 private:
  std::map<std::uint64_t, BigInt> entries_;
};

// log k as an exponent vector; prime_log_vector(1) is the zero vector.
inline PrimeLogVector prime_log_vector(std::uint64_t k) {
  PrimeLogVector v;
  for (const auto& pp : factorize(k)) v.add(pp.prime, BigInt(pp.exponent));
  return v;
}

// Lambda(k): {p: 1} when k = p^m with m >= 1, the zero vector otherwise.
inline PrimeLogVector von_mangoldt_vector(std::uint64_t k) {
  const auto fac = factorize(k);
  PrimeLogVector v;
  if (fac.size() == 1) v.add(fac[0].prime, BigInt(1));
  return v;
}

}  // namespace qbracket
