#include "cyclotomix/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclotomix/census.hpp"
#include "cyclotomix/numbers.hpp"
#include "cyclotomix/parallel.hpp"

namespace cyclotomix {

Fixed Fixed::from_integer(long v, int bits) {
  mpz_class raw(v);
  raw <<= bits;
  return {std::move(raw), bits};
}

Fixed Fixed::from_ratio(const mpz_class& num, const mpz_class& den, int bits) {
  if (den == 0) throw std::invalid_argument("fixed: zero denominator");
  mpz_class scaled = num << bits;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  return {std::move(q), bits};
}

Fixed Fixed::mul(const Fixed& o) const {
  mpz_class prod = raw_ * o.raw_;
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), prod.get_mpz_t(), static_cast<mp_bitcnt_t>(bits_));
  return {std::move(q), bits_};
}

Fixed Fixed::div(const Fixed& o) const {
  if (o.raw_ == 0) throw std::invalid_argument("fixed: division by zero");
  mpz_class scaled = raw_ << bits_;
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), o.raw_.get_mpz_t());
  return {std::move(q), bits_};
}

Fixed Fixed::div_int(long v) const {
  if (v == 0) throw std::invalid_argument("fixed: division by zero");
  mpz_class d(v);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), raw_.get_mpz_t(), d.get_mpz_t());
  return {std::move(q), bits_};
}

Fixed Fixed::round_to(int bits) const {
  if (bits == bits_) return *this;
  if (bits > bits_) return {raw_ << (bits - bits_), bits};
  const int drop = bits_ - bits;
  mpz_class adjusted = raw_ + (mpz_class(1) << (drop - 1));
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), adjusted.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
  return {std::move(q), bits};
}

double Fixed::to_double() const {
  mpf_class f(raw_, 64);
  f /= mpf_class(mpz_class(1) << bits_, 64);
  return f.get_d();
}

std::string Fixed::to_decimal(int digits) const {
  const bool negative = raw_ < 0;
  mpz_class mag = negative ? mpz_class(-raw_) : raw_;
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  mpz_class scaled = mag * pow10;
  mpz_class q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(bits_));
  mpz_class int_part = q / pow10;
  mpz_class frac_part = q % pow10;
  std::string frac = frac_part.get_str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(), '0');
  return (negative ? "-" : "") + int_part.get_str() + "." + frac;
}

namespace {

// Alternating-series acceleration after P. Borwein: with
// d_j = n sum_{i<=j} (n+i-1)! 4^i / ((n-i)! (2i)!),
// zeta(s) = 1/(d_n (1 - 2^(1-s))) sum_{j<n} (-1)^j (d_n - d_j)/(j+1)^s + err,
// |err| <= 3 / ((3 + sqrt 8)^n |1 - 2^(1-s)|)  <=  6 / 5.82^n  for s >= 2.
Fixed zeta_accelerated(int s, int bits) {
  constexpr int kGuard = 32;
  const int wb = bits + kGuard;
  const int n = static_cast<int>((wb + 6) / 2.54) + 2;

  std::vector<mpz_class> d(static_cast<std::size_t>(n) + 1);
  mpz_class term = 1;  // i = 0 summand of d_j, times n already (n * (n-1)!/n! = 1)
  d[0] = term;
  for (int i = 1; i <= n; ++i) {
    term *= 4 * mpz_class(n + i - 1) * (n - i + 1);
    mpz_class divisor = mpz_class(2 * i) * (2 * i - 1);
    mpz_divexact(term.get_mpz_t(), term.get_mpz_t(), divisor.get_mpz_t());
    d[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>(i - 1)] + term;
  }

  const mpz_class scale = mpz_class(1) << wb;
  mpz_class sum = 0;
  for (int j = 0; j < n; ++j) {
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), static_cast<unsigned long>(j + 1),
                  static_cast<unsigned long>(s));
    mpz_class num = (d[static_cast<std::size_t>(n)] - d[static_cast<std::size_t>(j)]) * scale;
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
    if (j % 2 == 0)
      sum += q;
    else
      sum -= q;
  }
  // Divide by d_n (1 - 2^(1-s)) = d_n (2^(s-1) - 1) / 2^(s-1) exactly in mpz.
  mpz_class two_pow = mpz_class(1) << (s - 1);
  mpz_class numer = sum * two_pow;
  mpz_class denom = d[static_cast<std::size_t>(n)] * (two_pow - 1);
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), numer.get_mpz_t(), denom.get_mpz_t());
  return Fixed(std::move(q), wb).round_to(bits);
}

}  // namespace

Fixed zeta(int s, int precision_bits) {
  if (s < 2) throw std::invalid_argument("zeta: need s >= 2");
  if (precision_bits < 8) throw std::invalid_argument("zeta: need at least 8 bits");
  if (s >= precision_bits + 4) {
    // zeta(s) - 1 < 2^(1-s) is already below the precision target.
    return Fixed::from_integer(1, precision_bits);
  }
  return zeta_accelerated(s, precision_bits);
}

Fixed log_fixed(const Fixed& x) {
  const int bits = x.bits();
  const Fixed one = Fixed::from_integer(1, bits);
  const Fixed two = Fixed::from_integer(2, bits);
  if (!(one < x || x == one) || !(x < two))
    throw std::invalid_argument("log_fixed: argument must lie in [1, 2)");
  // ln x = 2 atanh(y), y = (x-1)/(x+1) in [0, 1/3): the series gains more
  // than three bits per term.
  const Fixed y = (x - one).div(x + one);
  const Fixed y2 = y.mul(y);
  Fixed sum(mpz_class(0), bits);
  Fixed power = y;
  for (long j = 1;; j += 2) {
    const Fixed term = power.div_int(j);
    if (term.raw() == 0) break;
    sum = sum + term;
    power = power.mul(y2);
  }
  return sum.mul_int(2);
}

ZetaTable ZetaTable::build(int K, int bits) {
  if (K < 2) throw std::invalid_argument("zeta table: need K >= 2");
  ZetaTable t;
  t.bits = bits;
  t.K = K;
  t.values.reserve(static_cast<std::size_t>(K) - 1);
  for (int k = 2; k <= K; ++k) t.values.push_back(zeta(k, bits));
  t.tail_bound = K >= bits ? Fixed(mpz_class(1), bits)
                           : Fixed(mpz_class(1) << (bits - K + 2), bits);
  return t;
}

Fixed constant_C(int precision_bits) {
  if (precision_bits < 40) throw std::invalid_argument("insufficient precision budget");
  const int wb = precision_bits + 16;
  const int K = precision_bits + 5;  // series tail 4 * 2^-K below 2^(-bits-3)
  const ZetaTable table = ZetaTable::build(K, wb);
  Fixed sum(mpz_class(0), wb);
  for (int k = 2; k <= K; ++k) {
    const long weight = static_cast<long>(euler_phi(k)) - mobius(k);
    const Fixed lz = log_fixed(table.values[static_cast<std::size_t>(k - 2)]);
    sum = sum + lz.mul_int(weight).div_int(k);
  }
  const Fixed half = Fixed(mpz_class(1) << (wb - 1), wb);
  return (sum.mul_int(2) - half).round_to(precision_bits);
}

double constant_c() {
  const double log4 = std::log(4.0);
  return (1.0 + log4) * log4;
}

double constant_C_double() {
  static const double value = constant_C(64).to_double();
  return value;
}

PrimeSumForm constant_C_prime_form(std::uint64_t cutoff, bool odd_only) {
  if (cutoff < 3) throw std::invalid_argument("prime form: cutoff must be at least 3");
  // Accumulate floor(2^65 / (p(p-1))) per odd prime; the 64 fractional bits
  // keep the rounding error below cutoff * 2^-64.
  unsigned __int128 acc = 0;
  const unsigned __int128 numerator = static_cast<unsigned __int128>(1) << 65;
  for_each_prime(cutoff, [&](std::uint64_t p) {
    if (p == 2) return;
    acc += numerator / (static_cast<unsigned __int128>(p) * (p - 1));
  });
  PrimeSumForm out;
  out.cutoff = cutoff;
  out.tail_bound = 2.0 / static_cast<double>(cutoff);
  const double sum = std::ldexp(static_cast<double>(acc), -64);
  out.value = odd_only ? sum : 0.5 + sum;
  return out;
}

std::vector<InverseFraction> inverse_fractions(double L, double P) {
  if (!(L >= 2.0 && P >= 2.0)) throw std::invalid_argument("need L, P >= 2");
  const std::uint64_t hi = static_cast<std::uint64_t>(2.0 * std::max(L, P)) + 1;
  const PrimeSieve sieve(hi);
  std::vector<std::int64_t> small, big;
  for (std::uint32_t v : sieve.primes()) {
    if (v >= L && v <= 2.0 * L) small.push_back(v);
    if (v >= P && v <= 2.0 * P) big.push_back(v);
  }
  std::vector<InverseFraction> out;
  out.reserve(small.size() * big.size());
  for (std::int64_t p : big) {
    // Inverse of ell mod p via exponentiation-free Euclid, per pair.
    for (std::int64_t ell : small) {
      if (ell == p) continue;
      std::int64_t r0 = p, r1 = ell % p, t0 = 0, t1 = 1;
      while (r1 != 0) {
        const std::int64_t quot = r0 / r1;
        std::int64_t tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
      }
      out.push_back({((t0 % p) + p) % p, p});
    }
  }
  return out;
}

std::complex<double> exponential_sum(const std::vector<InverseFraction>& points, std::int64_t a) {
  std::complex<double> sum = 0.0;
  for (const auto& pt : points) {
    // Reduce a * num mod den in integers so the angle stays in [0, 2 pi).
    const __int128 prod = static_cast<__int128>(a) * pt.num;
    std::int64_t res = static_cast<std::int64_t>(prod % pt.den);
    if (res < 0) res += pt.den;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(res) /
                         static_cast<double>(pt.den);
    sum += std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return sum;
}

std::complex<double> double_sum(std::int64_t a, double L, double P, int threads) {
  if (!(L >= 2.0 && P >= 2.0)) throw std::invalid_argument("double_sum: need L, P >= 2");
  const std::int64_t abs_a = a < 0 ? -a : a;
  if (abs_a < 1 || static_cast<double>(abs_a) > L * P)
    throw std::invalid_argument("double_sum: need 1 <= |a| <= L*P");
  const std::vector<InverseFraction> points = inverse_fractions(L, P);
  // Fixed-size chunks summed in chunk order: byte-identical results for any
  // worker count.
  const std::int64_t chunk = 1024;
  std::vector<std::complex<double>> partial(
      static_cast<std::size_t>((static_cast<std::int64_t>(points.size()) + chunk - 1) / chunk) + 1,
      0.0);
  parallel_chunks(static_cast<std::int64_t>(points.size()), chunk, threads,
                  [&](std::size_t c, std::int64_t lo, std::int64_t hi) {
                    std::vector<InverseFraction> slice(points.begin() + lo, points.begin() + hi);
                    partial[c] = exponential_sum(slice, a);
                  });
  std::complex<double> sum = 0.0;
  for (const auto& v : partial) sum += v;
  return sum;
}

DiscrepancyReport discrepancy_of_fractions(std::vector<InverseFraction> points, int H) {
  if (points.empty()) throw std::domain_error("discrepancy: no points");
  if (H < 1) throw std::invalid_argument("discrepancy: H must be at least 1");
  for (const auto& pt : points)
    if (pt.den <= 0 || pt.num < 0 || pt.num >= pt.den)
      throw std::invalid_argument("discrepancy: fractions must lie in [0, 1)");
  const std::int64_t N = static_cast<std::int64_t>(points.size());

  auto less = [](const InverseFraction& x, const InverseFraction& y) {
    return static_cast<__int128>(x.num) * y.den < static_cast<__int128>(y.num) * x.den;
  };
  std::sort(points.begin(), points.end(), less);

  // sup_alpha |T(alpha) - alpha N| is attained at a sample point from one
  // side or the other; track the running maximum as an exact fraction.
  __int128 best_num = 0;
  std::int64_t best_den = 1;
  auto consider = [&](__int128 num, std::int64_t den) {
    if (num < 0) num = -num;
    if (num * best_den > static_cast<__int128>(best_num) * den) {
      best_num = num;
      best_den = den;
    }
  };
  std::size_t i = 0;
  std::int64_t below = 0;  // points strictly smaller than the current value
  while (i < points.size()) {
    std::size_t j = i;
    while (j < points.size() && !less(points[i], points[j])) ++j;
    const std::int64_t upto = below + static_cast<std::int64_t>(j - i);
    const __int128 alpha_n = static_cast<__int128>(points[i].num) * N;
    consider(static_cast<__int128>(upto) * points[i].den - alpha_n, points[i].den);  // at alpha
    consider(alpha_n - static_cast<__int128>(below) * points[i].den, points[i].den);  // left limit
    below = upto;
    i = j;
  }
  DiscrepancyReport rep;
  rep.N = points.size();
  rep.discrepancy = static_cast<double>(best_num) / static_cast<double>(best_den);
  double et = static_cast<double>(N) / H;
  for (int a = 1; a <= H; ++a)
    et += std::abs(exponential_sum(points, a)) / a;
  rep.erdos_turan_bound = et;
  return rep;
}

DiscrepancyReport discrepancy(double L, double P, int H, double eps) {
  std::vector<InverseFraction> points = inverse_fractions(L, P);
  if (points.empty()) throw std::domain_error("discrepancy: no primes in range");
  DiscrepancyReport rep = discrepancy_of_fractions(std::move(points), H);
  rep.dfi_bound = (std::sqrt(L) + std::sqrt(P) + std::min(L, P)) * std::pow(L * P, 0.5 + eps);
  return rep;
}

}  // namespace cyclotomix
