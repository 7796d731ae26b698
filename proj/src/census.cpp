#include "cyclotomix/census.hpp"

#include <cmath>
#include <stdexcept>

#include "cyclotomix/analytic.hpp"
#include "cyclotomix/gaps.hpp"
#include "cyclotomix/numbers.hpp"
#include "cyclotomix/parallel.hpp"

namespace cyclotomix {

namespace {

constexpr std::uint64_t kSegmentSize = 1u << 20;

// Base primes up to sqrt(limit) by a plain odd sieve.
std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  const std::uint64_t root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
  std::vector<char> is(root + 1, 1);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!is[i]) continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= root; j += i) is[j] = 0;
  }
  return out;
}

// Sieve [low, high) into seg (1 = prime candidate), using the base primes.
void sieve_segment(std::vector<char>& seg, std::uint64_t low, std::uint64_t high,
                   const std::vector<std::uint32_t>& base) {
  std::fill(seg.begin(), seg.begin() + static_cast<std::ptrdiff_t>(high - low), 1);
  if (low == 0) {
    seg[0] = 0;
    if (high > 1) seg[1] = 0;
  }
  for (std::uint32_t p : base) {
    const std::uint64_t p2 = static_cast<std::uint64_t>(p) * p;
    if (p2 >= high) break;
    std::uint64_t start = std::max(p2, (low + p - 1) / p * p);
    for (std::uint64_t j = start; j < high; j += p) {
      if (j != p) seg[j - low] = 0;
    }
  }
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw std::invalid_argument("sieve: limit must be at least 2");
  // Refuse before allocating when the table plus prime list cannot fit a
  // sane budget (~1.5 GiB).
  const double est_bytes = limit / 8.0 + 4.5 * limit / std::log(static_cast<double>(limit));
  if (est_bytes > 1.5e9) throw std::length_error("sieve memory budget exceeded");

  bits_.assign((limit >> 6) + 1, 0);
  const auto base = base_primes(limit);
  primes_.reserve(static_cast<std::size_t>(1.2 * limit / std::log(static_cast<double>(limit))) + 16);
  std::vector<char> seg(kSegmentSize);
  for (std::uint64_t low = 0; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(limit + 1, low + kSegmentSize);
    sieve_segment(seg, low, high, base);
    for (std::uint64_t n = low; n < high; ++n) {
      if (seg[n - low]) {
        bits_[n >> 6] |= 1ull << (n & 63);
        primes_.push_back(static_cast<std::uint32_t>(n));
      }
    }
  }
}

std::uint64_t PrimeSieve::count_below(std::uint64_t x) const {
  if (x > limit_) throw std::invalid_argument("count_below: x exceeds sieve limit");
  const auto it = std::upper_bound(primes_.begin(), primes_.end(), static_cast<std::uint32_t>(x));
  return static_cast<std::uint64_t>(it - primes_.begin());
}

std::uint64_t PrimeSieve::count_in_progression(std::uint64_t z, std::uint64_t k,
                                               std::int64_t a) const {
  if (z > limit_) throw std::invalid_argument("count_in_progression: z exceeds sieve limit");
  if (k < 2) throw std::invalid_argument("count_in_progression: modulus must be at least 2");
  std::uint64_t res = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(k)) +
                                                  static_cast<std::int64_t>(k)) %
                                                 static_cast<std::int64_t>(k));
  std::uint64_t q = k + res;       // smallest value > k in the progression
  if (res == 0) q = 2 * k;         // never prime, loop exits immediately below
  std::uint64_t count = 0;
  for (; q <= z; q += k)
    if (is_prime(q)) ++count;
  return count;
}

void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn) {
  if (limit < 2) return;
  const auto base = base_primes(limit);
  std::vector<char> seg(kSegmentSize);
  for (std::uint64_t low = 0; low <= limit; low += kSegmentSize) {
    const std::uint64_t high = std::min(limit + 1, low + kSegmentSize);
    sieve_segment(seg, low, high, base);
    for (std::uint64_t n = low; n < high; ++n)
      if (seg[n - low]) fn(n);
  }
}

TernaryClassification classify(std::int64_t p, std::int64_t q, std::int64_t r, bool with_E3,
                               std::int64_t degree_budget) {
  if (!(2 < p && p < q && q < r && is_prime(p) && is_prime(q) && is_prime(r)))
    throw std::invalid_argument("classify: need primes 2 < p < q < r");
  TernaryClassification out;
  out.p = p;
  out.q = q;
  out.r = r;
  out.n = checked_mul(checked_mul(p, q), r);
  out.in_Q3 = true;
  out.in_R3 = (4 * (p - 1) > q) && (p * p > r);
  out.in_E4 = (q * r < (q + r) * (p - 1));
  if (with_E3) out.in_E3 = !ternary_gap_check(p, q, r, degree_budget).equals_formula;
  return out;
}

std::pair<std::int64_t, std::int64_t> count_R3_E4_by_predicates(const PrimeSieve& sieve,
                                                                std::uint64_t x) {
  std::int64_t r3 = 0, e4 = 0;
  const auto& primes = sieve.primes();
  for (std::uint32_t p : primes) {
    if (p == 2) continue;
    const std::uint64_t p64 = p;
    if (p64 * p64 * p64 > x) break;
    // q ranges over (p, 4(p-1)); r over (q, min{p^2 - 1, x/pq}).
    for (std::size_t j = sieve.count_below(p64); j < primes.size(); ++j) {
      const std::uint64_t q = primes[j];
      if (q >= 4 * (p64 - 1)) break;
      if (p64 * q * q > x) break;
      const std::uint64_t r_cap_r3 = std::min<std::uint64_t>(p64 * p64 - 1, x / (p64 * q));
      if (r_cap_r3 > q) r3 += static_cast<std::int64_t>(sieve.count_below(r_cap_r3) - sieve.count_below(q));
      // E4: qr < (q+r)(p-1)  <=>  r(q-p+1) < q(p-1)  <=>  r <= ceil(q(p-1)/(q-p+1)) - 1.
      const std::uint64_t denom = q - p64 + 1;
      const std::uint64_t r_strict = (q * (p64 - 1) + denom - 1) / denom - 1;
      const std::uint64_t r_cap_e4 = std::min<std::uint64_t>(r_strict, x / (p64 * q));
      if (r_cap_e4 > q) e4 += static_cast<std::int64_t>(sieve.count_below(r_cap_e4) - sieve.count_below(q));
    }
  }
  return {r3, e4};
}

TernaryCounts count_ternary_full_filter(const PrimeSieve& sieve, std::uint64_t x, int threads) {
  const auto& primes = sieve.primes();
  // Collect the odd primes p with p^3 <= x, then parallelize over them.
  std::vector<std::uint32_t> outer;
  for (std::uint32_t p : primes) {
    if (p == 2) continue;
    if (static_cast<std::uint64_t>(p) * p * p > x) break;
    outer.push_back(p);
  }
  std::vector<TernaryCounts> partial((outer.size() + 7) / 8 + 1);
  parallel_chunks(static_cast<std::int64_t>(outer.size()), 8, threads,
                  [&](std::size_t chunk, std::int64_t lo, std::int64_t hi) {
                    TernaryCounts acc;
                    for (std::int64_t i = lo; i < hi; ++i) {
                      const std::uint64_t p = outer[static_cast<std::size_t>(i)];
                      for (std::size_t j = sieve.count_below(p); j < primes.size(); ++j) {
                        const std::uint64_t q = primes[j];
                        if (p * q * q > x) break;
                        for (std::size_t k = j + 1; k < primes.size(); ++k) {
                          const std::uint64_t r = primes[k];
                          if (p * q * r > x) break;
                          ++acc.q3;
                          if (4 * (p - 1) > q && p * p > r) ++acc.r3;
                          if (q * r < (q + r) * (p - 1)) ++acc.e4;
                        }
                      }
                    }
                    partial[chunk] = acc;
                  });
  TernaryCounts total;
  for (const auto& c : partial) {
    total.q3 += c.q3;
    total.r3 += c.r3;
    total.e4 += c.e4;
  }
  return total;
}

CensusRow enumerate_census(const PrimeSieve& sieve, std::uint64_t x, std::uint64_t with_E3_below,
                           int threads, bool allow_small) {
  if (x < 105 && !allow_small) throw std::invalid_argument("census: no ternary n below 105");
  if (x > sieve.limit()) throw std::invalid_argument("census: x exceeds sieve limit");
  CensusRow row;
  row.x = x;
  const TernaryCounts counts = count_ternary_full_filter(sieve, x, threads);
  row.countQ3 = counts.q3;
  row.countR3 = counts.r3;
  row.countE4 = counts.e4;
  if (with_E3_below > 0) {
    const std::uint64_t cap = std::min(with_E3_below, x);
    std::int64_t e3 = 0;
    const auto& primes = sieve.primes();
    for (std::size_t i = 0; i < primes.size(); ++i) {
      const std::uint64_t p = primes[i];
      if (p == 2) continue;
      if (p * p * p > cap) break;
      for (std::size_t j = i + 1; j < primes.size(); ++j) {
        const std::uint64_t q = primes[j];
        if (p * q * q > cap) break;
        for (std::size_t k = j + 1; k < primes.size(); ++k) {
          const std::uint64_t r = primes[k];
          if (p * q * r > cap) break;
          if (!ternary_gap_check(static_cast<std::int64_t>(p), static_cast<std::int64_t>(q),
                                 static_cast<std::int64_t>(r))
                   .equals_formula)
            ++e3;
        }
      }
    }
    row.countE3 = e3;
  }
  if (x >= 16) {
    const MainTerms terms = asymptotic_columns(x);
    row.main_term_R3 = terms.r3;
    row.main_term_Q3 = terms.q3;
    row.ratio_R3 = terms.r3 > 0 ? static_cast<double>(row.countR3) / terms.r3 : 0.0;
  }
  return row;
}

std::int64_t count_N2(const PrimeSieve& sieve, std::uint64_t x, bool odd_only) {
  if (x < 6) throw std::invalid_argument("count_N2: need x >= 6");
  std::int64_t count = 0;
  const auto& primes = sieve.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::uint64_t p = primes[i];
    if (p * p > x) break;
    if (odd_only && p == 2) continue;
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::uint64_t q = primes[j];
      if (p * q > x) break;
      const std::uint64_t res = q % p;
      if (res == 1 || res == p - 1) ++count;
    }
  }
  return count;
}

std::int64_t count_N2_progressions(const PrimeSieve& sieve, std::uint64_t x, bool odd_only) {
  if (x < 6) throw std::invalid_argument("count_N2: need x >= 6");
  std::int64_t count = 0;
  for (std::uint32_t p : sieve.primes()) {
    const std::uint64_t p64 = p;
    if (p64 * p64 > x) break;
    if (p64 == 2) {
      if (!odd_only) count += static_cast<std::int64_t>(sieve.count_in_progression(x / 2, 2, 1));
      continue;
    }
    count += static_cast<std::int64_t>(sieve.count_in_progression(x / p64, p64, 1) +
                                       sieve.count_in_progression(x / p64, p64, -1));
  }
  return count;
}

MainTerms asymptotic_columns(std::uint64_t x) {
  if (x < 16) throw std::invalid_argument("asymptotic_columns: need x >= 16");
  MainTerms out;
  const double lx = std::log(static_cast<double>(x));
  const double llx = std::log(lx);
  out.r3 = constant_c() * static_cast<double>(x) / (lx * lx);
  out.q3 = static_cast<double>(x) * llx * llx / (2.0 * lx);
  out.n2 = constant_C_double() * static_cast<double>(x) / lx;
  return out;
}

}  // namespace cyclotomix
