#pragma once

// Gap statistics over polynomial supports: maximum gap, its multiplicity,
// coefficient pattern scans, and the ternary inverse-cyclotomic gap checks.

#include <cstdint>
#include <vector>

#include "cyclotomix/poly.hpp"

namespace cyclotomix {

struct GapReport {
  std::int64_t max_gap = 0;      // g(f): largest e_{i+1} - e_i over the support; 0 when t <= 1
  std::int64_t multiplicity = 0; // number of support gaps attaining max_gap
  std::vector<std::int64_t> positions;  // starting exponents e_i of the maximal gaps
};

GapReport max_gap(const IntPolynomial& f);  // throws on the zero polynomial

// g(Phi_pq) == p-1 with multiplicity exactly 2*floor(q/p), for odd primes p < q.
bool binary_gap_check(std::int64_t p, std::int64_t q);

// Entry m (m = 0..p-2) is true iff the coefficient sequence of f contains a
// consecutive run (+1, m zeros, -1) or (-1, m zeros, +1).
std::vector<bool> pattern_scan(const IntPolynomial& f, std::int64_t p);

struct TernaryGapCheck {
  std::int64_t n = 0, p = 0, q = 0, r = 0;
  std::int64_t psi_gap = 0;        // g(Psi_n)
  std::int64_t formula_value = 0;  // 2n/p - deg Psi_n  (an integer: n/p = qr)
  std::int64_t lower_bound = 0;    // max{p-1, formula_value}
  std::int64_t upper_bound = 0;    // 2n(1/p + 1/q + 1/r) - deg Psi_n = 2(qr+pr+pq) - deg Psi_n
  bool equals_formula = false;     // psi_gap == formula_value
};

TernaryGapCheck ternary_gap_check(std::int64_t p, std::int64_t q, std::int64_t r,
                                  std::int64_t degree_budget = kDefaultDegreeBudget);

// Max gap of P_<a,b> is a-1 with multiplicity 2*floor(b/a), and the pattern
// scan is all-true exactly when b = +-1 (mod a).
bool inclusion_exclusion_gap_check(std::int64_t a, std::int64_t b);

}  // namespace cyclotomix
