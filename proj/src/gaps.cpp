#include "cyclotomix/gaps.hpp"

#include <stdexcept>

namespace cyclotomix {

GapReport max_gap(const IntPolynomial& f) {
  if (f.is_zero()) throw std::domain_error("undefined for zero polynomial");
  const auto& c = f.coeffs();
  GapReport rep;
  std::int64_t prev = -1;
  // First pass: the maximum gap; second pass folded in by rescanning when a
  // larger gap appears.
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t e = static_cast<std::int64_t>(i);
    if (prev >= 0) {
      const std::int64_t gap = e - prev;
      if (gap > rep.max_gap) {
        rep.max_gap = gap;
        rep.positions.clear();
        rep.positions.push_back(prev);
      } else if (gap == rep.max_gap) {
        rep.positions.push_back(prev);
      }
    }
    prev = e;
  }
  rep.multiplicity = static_cast<std::int64_t>(rep.positions.size());
  return rep;
}

bool binary_gap_check(std::int64_t p, std::int64_t q) {
  if (!(p >= 3 && p < q && is_prime(p) && is_prime(q)))
    throw std::invalid_argument("binary_gap_check: need odd primes 3 <= p < q");
  const GapReport rep = max_gap(cyclotomic(checked_mul(p, q)));
  return rep.max_gap == p - 1 && rep.multiplicity == 2 * (q / p);
}

std::vector<bool> pattern_scan(const IntPolynomial& f, std::int64_t p) {
  if (f.is_zero()) throw std::domain_error("undefined for zero polynomial");
  if (p < 2) throw std::invalid_argument("pattern_scan: p must be at least 2");
  std::vector<bool> found(static_cast<std::size_t>(p - 1), false);
  const auto& c = f.coeffs();
  std::int64_t prev = -1;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    const std::int64_t e = static_cast<std::int64_t>(i);
    if (prev >= 0) {
      const std::int64_t m = e - prev - 1;  // zeros between the two entries
      const bool opposite_units = (c[prev] == 1 && c[e] == -1) || (c[prev] == -1 && c[e] == 1);
      if (opposite_units && m <= p - 2) found[static_cast<std::size_t>(m)] = true;
    }
    prev = e;
  }
  return found;
}

TernaryGapCheck ternary_gap_check(std::int64_t p, std::int64_t q, std::int64_t r,
                                  std::int64_t degree_budget) {
  if (!(2 < p && p < q && q < r && is_prime(p) && is_prime(q) && is_prime(r)))
    throw std::invalid_argument("ternary_gap_check: need primes 2 < p < q < r");
  TernaryGapCheck out;
  out.p = p;
  out.q = q;
  out.r = r;
  out.n = checked_mul(checked_mul(p, q), r);
  const IntPolynomial psi = inverse_cyclotomic(out.n, degree_budget);
  const std::int64_t deg_psi = psi.degree();
  out.psi_gap = max_gap(psi).max_gap;
  out.formula_value = checked_sub(2 * q * r, deg_psi);
  out.lower_bound = std::max(p - 1, out.formula_value);
  out.upper_bound = checked_sub(2 * (q * r + p * r + p * q), deg_psi);
  out.equals_formula = (out.psi_gap == out.formula_value);
  return out;
}

bool inclusion_exclusion_gap_check(std::int64_t a, std::int64_t b) {
  const IntPolynomial f = inclusion_exclusion(a, b);  // validates coprimality
  const GapReport rep = max_gap(f);
  if (rep.max_gap != a - 1 || rep.multiplicity != 2 * (b / a)) return false;
  const std::vector<bool> scan = pattern_scan(f, a);
  bool all = true;
  for (bool v : scan) all = all && v;
  const std::int64_t res = b % a;
  const bool expect_all = (res == 1 || res == a - 1);
  return all == expect_all;
}

}  // namespace cyclotomix
