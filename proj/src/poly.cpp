#include "cyclotomix/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclotomix {

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::monomial(std::int64_t exponent, std::int64_t coeff) {
  if (exponent < 0) throw std::invalid_argument("monomial: negative exponent");
  if (coeff == 0) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(exponent) + 1, 0);
  c.back() = coeff;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::xpow_minus_one(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("xpow_minus_one: d must be positive");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::degree() const {
  if (c_.empty()) throw std::domain_error("degree undefined for zero polynomial");
  return static_cast<std::int64_t>(c_.size()) - 1;
}

void IntPolynomial::mul_xd_minus_one(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("mul_xd_minus_one: d must be positive");
  if (c_.empty()) return;
  const std::size_t old = c_.size();
  c_.resize(old + static_cast<std::size_t>(d), 0);
  // (f * (Z^d - 1))[i] = f[i-d] - f[i], filled from the top down.
  for (std::size_t i = c_.size(); i-- > 0;) {
    const std::int64_t hi = (i >= static_cast<std::size_t>(d)) ? c_[i - d] : 0;
    const std::int64_t lo = (i < old) ? c_[i] : 0;
    c_[i] = checked_sub(hi, lo);
  }
  trim();
}

void IntPolynomial::div_xd_minus_one(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("div_xd_minus_one: d must be positive");
  if (c_.empty()) return;
  const std::size_t n = c_.size();
  if (n <= static_cast<std::size_t>(d)) throw std::domain_error("not divisible");
  // If f = g * (Z^d - 1) then g[i] = g[i-d] - f[i]; the top d residual
  // relations f[i] == g[i-d] are the remainder check.
  std::vector<std::int64_t> g(n - static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < g.size(); ++i) {
    const std::int64_t prev = (i >= static_cast<std::size_t>(d)) ? g[i - d] : 0;
    g[i] = checked_sub(prev, c_[i]);
  }
  for (std::size_t i = g.size(); i < n; ++i)
    if (c_[i] != g[i - d]) throw std::domain_error("not divisible");
  c_ = std::move(g);
  trim();
}

Support support_of(const IntPolynomial& f) {
  Support s;
  const auto& c = f.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) {
      s.exponents.push_back(static_cast<std::int64_t>(i));
      s.signs.push_back(c[i]);
    }
  return s;
}

IntPolynomial from_support(const Support& s) {
  if (s.exponents.size() != s.signs.size())
    throw std::invalid_argument("support: exponents and signs differ in length");
  if (s.exponents.empty()) return {};
  std::vector<std::int64_t> c(static_cast<std::size_t>(s.exponents.back()) + 1, 0);
  std::int64_t prev = -1;
  for (std::size_t i = 0; i < s.exponents.size(); ++i) {
    if (s.exponents[i] <= prev) throw std::invalid_argument("support: exponents not increasing");
    if (s.exponents[i] < 0) throw std::invalid_argument("support: negative exponent");
    if (s.signs[i] == 0) throw std::invalid_argument("support: zero coefficient");
    c[s.exponents[i]] = s.signs[i];
    prev = s.exponents[i];
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  std::vector<std::int64_t> out(ca.size() + cb.size() - 1, 0);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      if (cb[j] == 0) continue;
      out[i + j] = checked_add(out[i + j], checked_mul(ca[i], cb[j]));
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num.is_zero()) return {};
  std::vector<std::int64_t> rem = num.coeffs();
  const auto& d = den.coeffs();
  if (rem.size() < d.size()) throw std::domain_error("not divisible");
  const std::int64_t lead = d.back();
  std::vector<std::int64_t> q(rem.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const std::int64_t top = rem[k + d.size() - 1];
    if (top % lead != 0) throw std::domain_error("not divisible");
    const std::int64_t qk = top / lead;
    q[k] = qk;
    if (qk == 0) continue;
    for (std::size_t j = 0; j < d.size(); ++j)
      rem[k + j] = checked_sub(rem[k + j], checked_mul(qk, d[j]));
  }
  for (std::int64_t c : rem)
    if (c != 0) throw std::domain_error("not divisible");
  return IntPolynomial(std::move(q));
}

IntPolynomial compose_power(const IntPolynomial& f, std::int64_t e) {
  if (e < 1) throw std::invalid_argument("compose_power: e must be positive");
  if (e == 1 || f.is_zero()) return f;
  const auto& c = f.coeffs();
  std::vector<std::int64_t> out(static_cast<std::size_t>(checked_mul(
                                    static_cast<std::int64_t>(c.size() - 1), e)) +
                                    1,
                                0);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * e] = c[i];
  return IntPolynomial(std::move(out));
}

IntPolynomial alternate_signs(const IntPolynomial& f) {
  std::vector<std::int64_t> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = checked_sub(0, c[i]);
  return IntPolynomial(std::move(c));
}

IntPolynomial reversed(const IntPolynomial& f) {
  std::vector<std::int64_t> c = f.coeffs();
  std::reverse(c.begin(), c.end());
  return IntPolynomial(std::move(c));
}

namespace {

// Multiply the Z^d-1 factors in `mul` (ascending), then divide out the ones
// in `div` (ascending). Every intermediate division is exact because the
// running value is always the target polynomial times pending factors.
IntPolynomial binomial_product(std::vector<std::int64_t> mul, std::vector<std::int64_t> div,
                               std::int64_t degree_budget) {
  std::sort(mul.begin(), mul.end());
  std::sort(div.begin(), div.end());
  std::int64_t peak = 0;
  for (std::int64_t d : mul) peak = checked_add(peak, d);
  if (peak > degree_budget) throw std::length_error("degree budget exceeded");
  IntPolynomial f = IntPolynomial::one();
  for (std::int64_t d : mul) f.mul_xd_minus_one(d);
  for (std::int64_t d : div) {
    try {
      f.div_xd_minus_one(d);
    } catch (const std::domain_error&) {
      // The Möbius product divides exactly by construction; a remainder here
      // is a bug, not a caller error.
      throw std::logic_error("internal error: inexact division in cyclotomic product");
    }
  }
  return f;
}

}  // namespace

IntPolynomial cyclotomic(std::int64_t n, std::int64_t degree_budget) {
  if (n < 1) throw std::invalid_argument("cyclotomic: n must be positive");
  if (n == 1) return IntPolynomial({-1, 1});
  const auto factors = factorize(n);
  std::int64_t odd_radical = 1;
  bool even = false;
  for (auto [p, e] : factors) {
    if (p == 2)
      even = true;
    else
      odd_radical = checked_mul(odd_radical, p);
  }
  if (euler_phi(n) > degree_budget) throw std::length_error("degree budget exceeded");

  IntPolynomial f;
  std::int64_t base;
  if (odd_radical == 1) {
    // n = 2^a: Phi_n = Z^(2^(a-1)) + 1 via Phi_2 = Z + 1 stretched below.
    f = IntPolynomial({1, 1});
    base = 2;
  } else {
    std::vector<std::int64_t> mul, div;
    for (std::int64_t d : divisors(odd_radical)) {
      const int mu = mobius(odd_radical / d);
      if (mu == 1) mul.push_back(d);
      if (mu == -1) div.push_back(d);
    }
    f = binomial_product(std::move(mul), std::move(div), degree_budget);
    if (even && odd_radical > 1) f = alternate_signs(f);  // Phi_2m(Z) = Phi_m(-Z), m odd
    base = even ? 2 * odd_radical : odd_radical;
  }
  if (n != base) f = compose_power(f, n / base);  // Phi_pm(Z) = Phi_m(Z^p) for p | m
  return f;
}

IntPolynomial inverse_cyclotomic(std::int64_t n, std::int64_t degree_budget) {
  if (n < 1) throw std::invalid_argument("inverse_cyclotomic: n must be positive");
  // Psi_n = prod over divisors d of n of (Z^d - 1)^([d = n] - mu(n/d)).
  std::vector<std::int64_t> mul, div;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;  // exponent [d=n] - mu(1) = 0
    const int mu = mobius(n / d);
    if (mu == -1) mul.push_back(d);
    if (mu == 1) div.push_back(d);
  }
  return binomial_product(std::move(mul), std::move(div), degree_budget);
}

IntPolynomial inclusion_exclusion(std::int64_t a, std::int64_t b, std::int64_t degree_budget) {
  if (a < 2 || b <= a) throw std::invalid_argument("inclusion_exclusion: need 2 <= a < b");
  if (std::gcd(a, b) != 1) throw std::domain_error("not a numerical semigroup");
  return binomial_product({1, checked_mul(a, b)}, {a, b}, degree_budget);
}

bool product_over_divisors_check(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("product_over_divisors_check: n must be positive");
  IntPolynomial acc = IntPolynomial::one();
  for (std::int64_t d : divisors(n)) acc = multiply(acc, cyclotomic(d));
  return acc == IntPolynomial::xpow_minus_one(n);
}

bool kaplan_identity_check(std::int64_t p, std::int64_t q) {
  if (!(p >= 3 && p < q && is_prime(p) && is_prime(q)))
    throw std::invalid_argument("kaplan_identity_check: need odd primes p < q");
  const IntPolynomial phi_p = cyclotomic(p);
  const IntPolynomial lhs = multiply(phi_p, cyclotomic(checked_mul(p, q)));
  return lhs == compose_power(phi_p, q);
}

}  // namespace cyclotomix
