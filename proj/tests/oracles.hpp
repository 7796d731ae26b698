#pragma once

// Test-only oracles, deliberately independent of the library's
// implementation paths: dense schoolbook polynomial arithmetic with long
// division, brute-force semigroup membership, trial-division prime counting,
// and a fixed-point Machin pi for the zeta(2) cross-check.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "cyclotomix/numbers.hpp"

namespace oracle {

using Poly = std::vector<long long>;  // dense, constant term first

inline Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return trim(std::move(out));
}

// Long division over the integers; false when den does not divide num.
inline bool try_divide(Poly num, const Poly& den, Poly& quot) {
  const Poly d = trim(den);
  num = trim(std::move(num));
  if (d.empty()) throw std::invalid_argument("oracle division by zero");
  if (num.empty()) {
    quot.clear();
    return true;
  }
  if (num.size() < d.size()) return false;
  quot.assign(num.size() - d.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const long long top = num[k + d.size() - 1];
    if (top % d.back() != 0) return false;
    const long long qk = top / d.back();
    quot[k] = qk;
    for (std::size_t j = 0; j < d.size(); ++j) num[k + j] -= qk * d[j];
  }
  for (long long c : num)
    if (c != 0) return false;
  return true;
}

inline Poly xpow_minus_one(long long d) {
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  f.front() = -1;
  f.back() = 1;
  return f;
}

// Phi_n by the Möbius product evaluated densely: one big numerator, one big
// denominator, one long division.
inline Poly cyclotomic(long long n) {
  Poly num{1}, den{1};
  for (long long d : cyclotomix::divisors(n)) {
    const int mu = cyclotomix::mobius(n / d);
    if (mu == 1) num = mul(num, xpow_minus_one(d));
    if (mu == -1) den = mul(den, xpow_minus_one(d));
  }
  Poly quot;
  if (!try_divide(num, den, quot)) throw std::logic_error("oracle cyclotomic: inexact division");
  return quot;
}

inline Poly inverse_cyclotomic(long long n) {
  Poly quot;
  if (!try_divide(xpow_minus_one(n), cyclotomic(n), quot))
    throw std::logic_error("oracle psi: inexact division");
  return quot;
}

// Members of <a,b> up to `limit` by the double loop over x a + y b.
inline std::vector<char> semigroup_members(long long a, long long b, long long limit) {
  std::vector<char> member(static_cast<std::size_t>(limit) + 1, 0);
  for (long long x = 0; x * a <= limit; ++x)
    for (long long y = 0; x * a + y * b <= limit; ++y) member[x * a + y * b] = 1;
  return member;
}

inline long long trial_division_pi(long long limit) {
  long long count = 0;
  for (long long n = 2; n <= limit; ++n) {
    bool prime = true;
    for (long long d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        prime = false;
        break;
      }
    if (prime) ++count;
  }
  return count;
}

// floor(pi * 2^bits) via Machin: pi = 16 atan(1/5) - 4 atan(1/239).
inline mpz_class machin_pi_fixed(int bits) {
  auto atan_inv = [&](long x) {
    const mpz_class one = mpz_class(1) << (bits + 16);
    mpz_class sum = 0;
    mpz_class power = one / x;
    const long x2 = x * x;
    for (long j = 0; power != 0; ++j) {
      if (j % 2 == 0)
        sum += power / (2 * j + 1);
      else
        sum -= power / (2 * j + 1);
      power /= x2;
    }
    return sum;
  };
  mpz_class pi = 16 * atan_inv(5) - 4 * atan_inv(239);
  return pi >> 16;
}

}  // namespace oracle
