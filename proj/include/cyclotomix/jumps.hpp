#pragma once

// Jump statistics of ternary cyclotomic polynomials, the conditional prime
// family m, 6m-1, 12m-1, and the small-modular-inverse triple search.

#include <cstdint>
#include <utility>
#include <vector>

#include "cyclotomix/poly.hpp"

namespace cyclotomix {

// The unique inverse of k modulo m in [1, m); throws "not invertible" when
// gcd(k, m) != 1.
std::int64_t modular_inverse(std::int64_t k, std::int64_t m);

struct JumpReport {
  std::int64_t n = 0, p = 0, q = 0, r = 0;
  std::int64_t jumps_up = 0;    // indices k with a_n(k) = a_n(k-1) + 1
  std::int64_t jumps_down = 0;  // indices k with a_n(k) = a_n(k-1) - 1
  std::int64_t max_step = 0;    // max |a_n(k) - a_n(k-1)|
  // Differences run over k = 0..phi(n)+1 with virtual zeros at both ends, so
  // jumps_up == jumps_down holds literally.

  // The ratio jumps_up / n^(1/3) compared without floating point.
  bool cube_exceeds_n() const { return static_cast<unsigned __int128>(jumps_up) * jumps_up * jumps_up > static_cast<unsigned __int128>(n); }
  bool cube_below_bound(std::int64_t factor) const {
    return static_cast<unsigned __int128>(jumps_up) * jumps_up * jumps_up <
           static_cast<unsigned __int128>(factor) * n;
  }
};

JumpReport jump_report(std::int64_t p, std::int64_t q, std::int64_t r,
                       std::int64_t degree_budget = kDefaultDegreeBudget);

// All m <= m_max (m >= 7) with m, 6m-1, 12m-1 simultaneously prime, paired
// with n = m(6m-1)(12m-1).
std::vector<std::pair<std::int64_t, std::int64_t>> family_search(std::int64_t m_max);

struct TripleCandidate {
  std::int64_t p = 0, q = 0, r = 0;
  std::int64_t q_inv = 0, r_inv = 0;  // q*_p, r*_p in [1, p)
  std::int64_t window = 0;            // integer threshold ceil(h p / P)
  bool q_mirrored = false;            // matched via p - q*_p <= window
  bool r_mirrored = false;
};

// Search p ~ P and prime pairs q < r ~ L = ceil(P^rho) whose inverses mod p
// (or their mirrors p - inverse) fall below h p / P, with
// h = L^(-1/2) P^(1+eps) + L^(1/2) P^(1/2+eps). Requires 0 < rho < 1 and
// 0 < eps < min{rho/2, (1-rho)/2}. Deterministic order; at most `budget`
// candidates.
std::vector<TripleCandidate> triple_search(double P, double rho, double eps, std::int64_t budget,
                                           int threads = 0);

struct JumpScanRow {
  std::int64_t n = 0;
  std::int64_t jumps = 0;
  double exponent = 0.0;  // log J_n / log n
  bool skipped = false;   // n exceeded the degree budget
};

// Observational table over the candidates' n = pqr, sorted by n (duplicates
// merged). Rows over budget are kept but flagged.
std::vector<JumpScanRow> jump_exponent_scan(const std::vector<TripleCandidate>& candidates,
                                            std::int64_t degree_budget = kDefaultDegreeBudget);

}  // namespace cyclotomix
