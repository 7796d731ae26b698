#pragma once

// High-precision constants and exponential-sum experiments: zeta values and
// the constant C in fixed point over GMP integers, the double sums S(a;L,P)
// over inverses of primes, and exact discrepancy with the Erdős–Turán and
// Duke–Friedlander–Iwaniec comparison bounds.

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cyclotomix {

// Fixed-point real: value = raw / 2^bits. Arithmetic truncates toward
// negative infinity, one ulp error per operation; callers carry guard bits.
class Fixed {
 public:
  Fixed() : raw_(0), bits_(0) {}
  Fixed(mpz_class raw, int bits) : raw_(std::move(raw)), bits_(bits) {}

  static Fixed from_integer(long v, int bits);
  static Fixed from_ratio(const mpz_class& num, const mpz_class& den, int bits);

  int bits() const { return bits_; }
  const mpz_class& raw() const { return raw_; }

  Fixed operator+(const Fixed& o) const { return {raw_ + o.raw_, bits_}; }
  Fixed operator-(const Fixed& o) const { return {raw_ - o.raw_, bits_}; }
  Fixed mul(const Fixed& o) const;
  Fixed div(const Fixed& o) const;
  Fixed mul_int(long v) const { return {raw_ * v, bits_}; }
  Fixed div_int(long v) const;

  // Round-to-nearest change of precision.
  Fixed round_to(int bits) const;

  bool operator<(const Fixed& o) const { return raw_ < o.raw_; }
  bool operator==(const Fixed& o) const { return raw_ == o.raw_ && bits_ == o.bits_; }

  double to_double() const;
  // Truncated decimal expansion with `digits` places after the point.
  std::string to_decimal(int digits) const;

 private:
  mpz_class raw_;
  int bits_;
};

// zeta(s) for integer s >= 2 with absolute error below 2^-precision_bits.
Fixed zeta(int s, int precision_bits);

// ln(x) for fixed-point x in [1, 2), same precision as x.
Fixed log_fixed(const Fixed& x);

// Zeta values 2..K at a common precision, with the bound on what the
// C series neglects beyond K (4 * 2^-K).
struct ZetaTable {
  int bits = 0;
  int K = 0;
  std::vector<Fixed> values;  // values[i] = zeta(i + 2)
  Fixed tail_bound;
  static ZetaTable build(int K, int bits);
};

// C = -1/2 + 2 sum_{k>=2} log zeta(k) (phi(k) - mu(k)) / k, truncated at the
// smallest K with 4 * 2^-K below target. Requires precision_bits >= 40.
Fixed constant_C(int precision_bits);

// (1 + log 4) log 4 = 3.30811...
double constant_c();

// Cached double-precision value of constant_C.
double constant_C_double();

struct PrimeSumForm {
  double value = 0.0;       // 1/2 + sum_{3 <= p <= cutoff} 2/(p(p-1)) (odd_only drops the 1/2)
  double tail_bound = 0.0;  // 2 / cutoff bounds the neglected primes
  std::uint64_t cutoff = 0;
};

// The direct prime-sum form of C, truncated at `cutoff`; the true value lies
// in [value, value + tail_bound].
PrimeSumForm constant_C_prime_form(std::uint64_t cutoff, bool odd_only = false);

// One point ell*_p / p of the inverse-fraction sequence.
struct InverseFraction {
  std::int64_t num = 0;  // in [0, den)
  std::int64_t den = 1;
};

// All fractions ell*_p / p over primes ell in [L, 2L], p in [P, 2P], ell != p,
// ordered by p then ell.
std::vector<InverseFraction> inverse_fractions(double L, double P);

// Exponential sum over an explicit point list; a = 0 gives the point count.
std::complex<double> exponential_sum(const std::vector<InverseFraction>& points, std::int64_t a);

// S(a; L, P) = sum over the inverse fractions of exp(2 pi i a ell*_p / p).
// Requires 1 <= |a| <= L*P and L, P >= 2. Deterministic summation order.
std::complex<double> double_sum(std::int64_t a, double L, double P, int threads = 0);

struct DiscrepancyReport {
  std::size_t N = 0;
  double discrepancy = 0.0;        // sup over alpha of |T(alpha) - alpha N|, computed exactly
  double erdos_turan_bound = 0.0;  // N/H + sum_{a<=H} |S_a| / a, constant 1
  double dfi_bound = 0.0;          // (L^1/2 + P^1/2 + min{L,P}) (LP)^(1/2+eps); 0 when no (L,P)
};

// Discrepancy of an explicit multiset of fractions in [0,1); order of the
// input points does not matter.
DiscrepancyReport discrepancy_of_fractions(std::vector<InverseFraction> points, int H);

// Discrepancy of the inverse-fraction sequence, with both comparison bounds.
// Throws when the prime ranges are empty.
DiscrepancyReport discrepancy(double L, double P, int H, double eps = 0.25);

}  // namespace cyclotomix
