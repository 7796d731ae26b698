#pragma once

// Prime sieving and exact enumeration of the ternary counting sets Q3, R3,
// E4 (arithmetic predicates), E3 (via the gap formula), and the binary set
// behind N2, with asymptotic main-term columns for comparison.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace cyclotomix {

class PrimeSieve {
 public:
  // Segmented sieve of Eratosthenes over [0, limit], 2^20-entry segments.
  explicit PrimeSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  bool is_prime(std::uint64_t n) const {
    return n <= limit_ && (bits_[n >> 6] >> (n & 63)) & 1;
  }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

  // pi(x): number of primes <= x. Requires x <= limit.
  std::uint64_t count_below(std::uint64_t x) const;

  // Number of primes q with k < q <= z and q = a (mod k); the q > k
  // convention keeps progression counts disjoint across moduli.
  std::uint64_t count_in_progression(std::uint64_t z, std::uint64_t k, std::int64_t a) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> primes_;
};

// Streaming prime enumeration without materializing a sieve table.
void for_each_prime(std::uint64_t limit, const std::function<void(std::uint64_t)>& fn);

struct TernaryClassification {
  std::int64_t n = 0, p = 0, q = 0, r = 0;
  bool in_Q3 = false;            // n = pqr, 2 < p < q < r primes
  bool in_R3 = false;            // 4(p-1) > q and p^2 > r
  bool in_E4 = false;            // qr < (q+r)(p-1)
  std::optional<bool> in_E3;     // g(Psi_n) != 2n/p - deg Psi_n; gated by budget
};

TernaryClassification classify(std::int64_t p, std::int64_t q, std::int64_t r, bool with_E3,
                               std::int64_t degree_budget = 2'000'000);

struct CensusRow {
  std::uint64_t x = 0;
  std::int64_t countQ3 = 0, countR3 = 0, countE4 = 0;
  std::optional<std::int64_t> countE3;
  double main_term_R3 = 0.0;  // c x / (log x)^2
  double main_term_Q3 = 0.0;  // x (log log x)^2 / (2 log x)
  double ratio_R3 = 0.0;      // countR3 / main_term_R3
};

// Counts by the predicate-driven loops of the R3 asymptotic proof structure:
// p <= x^(1/3), q in (p, 4(p-1)), r below min{p^2, x/pq} via pi lookups.
// Returns {countR3, countE4}.
std::pair<std::int64_t, std::int64_t> count_R3_E4_by_predicates(const PrimeSieve& sieve,
                                                                std::uint64_t x);

// Independent strategy: iterate every ternary triple p < q < r with
// pqr <= x and test the set predicates per triple. Returns {Q3, R3, E4}.
struct TernaryCounts {
  std::int64_t q3 = 0, r3 = 0, e4 = 0;
};
TernaryCounts count_ternary_full_filter(const PrimeSieve& sieve, std::uint64_t x,
                                        int threads = 0);

// Exact census row at threshold x; E3 is counted for n <= with_E3_below
// (0 disables it). Requires x >= 105 unless allow_small.
CensusRow enumerate_census(const PrimeSieve& sieve, std::uint64_t x,
                           std::uint64_t with_E3_below = 0, int threads = 0,
                           bool allow_small = false);

// Count of n = pq <= x, p < q primes, q = +-1 (mod p); odd_only drops p = 2.
// Direct double loop over the sieve.
std::int64_t count_N2(const PrimeSieve& sieve, std::uint64_t x, bool odd_only);

// Same count assembled per-p from progression counts pi(x/p, p, +-1).
std::int64_t count_N2_progressions(const PrimeSieve& sieve, std::uint64_t x, bool odd_only);

struct MainTerms {
  double r3 = 0.0;  // c x / (log x)^2 with c = (1 + log 4) log 4
  double q3 = 0.0;  // x (log log x)^2 / (2 log x)
  double n2 = 0.0;  // C x / log x
};

// Requires x >= 16 so that log log x is positive.
MainTerms asymptotic_columns(std::uint64_t x);

}  // namespace cyclotomix
