#pragma once

// Exact integer polynomial arithmetic and the cyclotomic constructors.
//
// Coefficients are signed 64-bit with checked arithmetic: an overflow
// raises std::overflow_error, it never wraps. The zero polynomial is the
// empty coefficient sequence and has no degree.

#include <cstdint>
#include <vector>

#include "cyclotomix/numbers.hpp"

namespace cyclotomix {

// Upper bound on the working degree of any single polynomial built by the
// cyclotomic constructors. Exceeding it raises std::length_error.
inline constexpr std::int64_t kDefaultDegreeBudget = 2'000'000;

class IntPolynomial {
 public:
  IntPolynomial() = default;  // the zero polynomial
  explicit IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial one() { return IntPolynomial({1}); }
  static IntPolynomial monomial(std::int64_t exponent, std::int64_t coeff = 1);
  // Z^d - 1
  static IntPolynomial xpow_minus_one(std::int64_t d);

  bool is_zero() const { return c_.empty(); }
  std::int64_t degree() const;  // throws std::domain_error on the zero polynomial
  std::int64_t coeff(std::int64_t k) const {
    return (k >= 0 && k < static_cast<std::int64_t>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  bool operator==(const IntPolynomial&) const = default;

  // In-place multiplication / exact division by Z^d - 1, each a single O(deg)
  // pass. These are the workhorses of the cyclotomic constructors.
  void mul_xd_minus_one(std::int64_t d);
  void div_xd_minus_one(std::int64_t d);  // throws "not divisible" on nonzero remainder

 private:
  void trim();
  std::vector<std::int64_t> c_;  // constant term first; trailing entry nonzero
};

// Sparse view of a polynomial: exponents strictly increasing, signs the
// matching nonzero coefficient values.
struct Support {
  std::vector<std::int64_t> exponents;
  std::vector<std::int64_t> signs;
};

Support support_of(const IntPolynomial& f);
IntPolynomial from_support(const Support& s);  // validates the Support invariants

IntPolynomial multiply(const IntPolynomial& a, const IntPolynomial& b);

// Exact quotient over the integers; throws std::domain_error("not divisible")
// when den does not divide num in Z[Z].
IntPolynomial divide_exact(const IntPolynomial& num, const IntPolynomial& den);

// f(Z^e) for e >= 1.
IntPolynomial compose_power(const IntPolynomial& f, std::int64_t e);
// f(-Z)
IntPolynomial alternate_signs(const IntPolynomial& f);
// Z^deg(f) * f(1/Z)
IntPolynomial reversed(const IntPolynomial& f);

// Phi_n, via reduction to the odd squarefree radical followed by the Möbius
// product of Z^d - 1 factors (multiplications first, then exact divisions,
// smallest degrees first).
IntPolynomial cyclotomic(std::int64_t n, std::int64_t degree_budget = kDefaultDegreeBudget);

// Psi_n = (Z^n - 1) / Phi_n, built by the analogous product of Z^d - 1
// factors so that a single call costs O(n) rather than a dense division.
IntPolynomial inverse_cyclotomic(std::int64_t n, std::int64_t degree_budget = kDefaultDegreeBudget);

// Binary inclusion-exclusion polynomial P_<a,b> for coprime 2 <= a < b:
// (1-Z)(1-Z^ab) / ((1-Z^a)(1-Z^b)).
IntPolynomial inclusion_exclusion(std::int64_t a, std::int64_t b,
                                  std::int64_t degree_budget = kDefaultDegreeBudget);

// Product of Phi_d over all divisors d of n equals Z^n - 1.
bool product_over_divisors_check(std::int64_t n);

// Phi_p * Phi_pq == Phi_p(Z^q) for odd primes p < q.
bool kaplan_identity_check(std::int64_t p, std::int64_t q);

}  // namespace cyclotomix
