#include "cyclotomix/jumps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cyclotomix/census.hpp"
#include "cyclotomix/parallel.hpp"

namespace cyclotomix {

std::int64_t modular_inverse(std::int64_t k, std::int64_t m) {
  if (m < 2) throw std::invalid_argument("modular_inverse: modulus must be at least 2");
  // Extended Euclid on (k mod m, m).
  std::int64_t a = ((k % m) + m) % m;
  std::int64_t r0 = m, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    std::int64_t tmp = r0 - quot * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - quot * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (r0 != 1) throw std::domain_error("not invertible");
  return ((t0 % m) + m) % m;
}

JumpReport jump_report(std::int64_t p, std::int64_t q, std::int64_t r,
                       std::int64_t degree_budget) {
  if (!(2 < p && p < q && q < r && is_prime(p) && is_prime(q) && is_prime(r)))
    throw std::invalid_argument("jump_report: need odd primes p < q < r");
  JumpReport rep;
  rep.p = p;
  rep.q = q;
  rep.r = r;
  rep.n = checked_mul(checked_mul(p, q), r);
  const IntPolynomial phi = cyclotomic(rep.n, degree_budget);
  const auto& c = phi.coeffs();
  std::int64_t prev = 0;  // virtual a_n(-1) = 0
  for (std::size_t k = 0; k <= c.size(); ++k) {
    const std::int64_t cur = (k < c.size()) ? c[k] : 0;  // virtual a_n(phi(n)+1) = 0
    const std::int64_t step = cur - prev;
    if (step == 1) ++rep.jumps_up;
    if (step == -1) ++rep.jumps_down;
    rep.max_step = std::max(rep.max_step, step < 0 ? -step : step);
    prev = cur;
  }
  // Consecutive ternary coefficients differ by at most one; a larger step can
  // only come from a bug in the polynomial construction.
  if (rep.max_step > 1) throw std::logic_error("jump_report: internal error, step exceeds 1");
  return rep;
}

std::vector<std::pair<std::int64_t, std::int64_t>> family_search(std::int64_t m_max) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (m_max < 7) return out;
  const PrimeSieve sieve(static_cast<std::uint64_t>(12 * m_max));
  for (std::int64_t m = 7; m <= m_max; ++m) {
    if (sieve.is_prime(static_cast<std::uint64_t>(m)) &&
        sieve.is_prime(static_cast<std::uint64_t>(6 * m - 1)) &&
        sieve.is_prime(static_cast<std::uint64_t>(12 * m - 1)))
      out.emplace_back(m, checked_mul(checked_mul(m, 6 * m - 1), 12 * m - 1));
  }
  return out;
}

std::vector<TripleCandidate> triple_search(double P, double rho, double eps, std::int64_t budget,
                                           int threads) {
  if (!(P >= 2.0)) throw std::invalid_argument("triple_search: P must be at least 2");
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("triple_search: need 0 < rho < 1");
  if (!(eps > 0.0 && eps < std::min(rho / 2.0, (1.0 - rho) / 2.0)))
    throw std::invalid_argument("triple_search: need 0 < eps < min{rho/2, (1-rho)/2}");
  if (budget < 0) throw std::invalid_argument("triple_search: budget must be non-negative");

  const double L = std::ceil(std::pow(P, rho));
  const double h = std::pow(L, -0.5) * std::pow(P, 1.0 + eps) +
                   std::pow(L, 0.5) * std::pow(P, 0.5 + eps);

  const std::uint64_t p_hi = static_cast<std::uint64_t>(2.0 * P);
  const PrimeSieve sieve(std::max<std::uint64_t>(p_hi, static_cast<std::uint64_t>(2.0 * L)) + 1);
  std::vector<std::int64_t> small;  // primes in [L, 2L]
  for (std::uint32_t v : sieve.primes()) {
    if (v < L) continue;
    if (v > 2.0 * L) break;
    small.push_back(v);
  }
  std::vector<std::int64_t> big;  // primes in [P, 2P]
  for (std::uint32_t v : sieve.primes()) {
    if (v < P) continue;
    if (v > 2.0 * P) break;
    big.push_back(v);
  }

  // Per-chunk candidate lists merged in p order keep the output independent
  // of the worker count; the budget is applied after the merge.
  const std::int64_t chunk = 16;
  std::vector<std::vector<TripleCandidate>> partial(
      static_cast<std::size_t>((static_cast<std::int64_t>(big.size()) + chunk - 1) / chunk) + 1);
  parallel_chunks(
      static_cast<std::int64_t>(big.size()), chunk, threads,
      [&](std::size_t c, std::int64_t lo, std::int64_t hi) {
        auto& out = partial[c];
        for (std::int64_t i = lo; i < hi; ++i) {
          const std::int64_t p = big[static_cast<std::size_t>(i)];
          const std::int64_t window =
              static_cast<std::int64_t>(std::ceil(h * static_cast<double>(p) / P));
          // Inverses of the small primes mod p, with the mirror tag.
          struct Hit {
            std::int64_t prime, inv;
            bool mirrored;
          };
          std::vector<Hit> hits;
          for (std::int64_t ell : small) {
            if (ell == p) continue;
            const std::int64_t inv = modular_inverse(ell, p);
            if (inv <= window)
              hits.push_back({ell, inv, false});
            else if (p - inv <= window)
              hits.push_back({ell, inv, true});
          }
          for (std::size_t u = 0; u < hits.size(); ++u)
            for (std::size_t v = u + 1; v < hits.size(); ++v) {
              TripleCandidate cand;
              cand.p = p;
              cand.q = hits[u].prime;
              cand.r = hits[v].prime;
              cand.q_inv = hits[u].inv;
              cand.r_inv = hits[v].inv;
              cand.window = window;
              cand.q_mirrored = hits[u].mirrored;
              cand.r_mirrored = hits[v].mirrored;
              out.push_back(cand);
            }
        }
      });
  std::vector<TripleCandidate> merged;
  for (auto& part : partial)
    for (auto& cand : part) {
      if (static_cast<std::int64_t>(merged.size()) >= budget) return merged;
      merged.push_back(cand);
    }
  return merged;
}

std::vector<JumpScanRow> jump_exponent_scan(const std::vector<TripleCandidate>& candidates,
                                            std::int64_t degree_budget) {
  std::vector<JumpScanRow> rows;
  for (const auto& cand : candidates) {
    JumpScanRow row;
    row.n = checked_mul(checked_mul(cand.p, cand.q), cand.r);
    // Candidate triples are unordered in (p; q, r); sort for the report.
    std::int64_t t[3] = {cand.p, cand.q, cand.r};
    std::sort(t, t + 3);
    if (euler_phi(row.n) > degree_budget) {
      row.skipped = true;
    } else {
      const JumpReport rep = jump_report(t[0], t[1], t[2], degree_budget);
      row.jumps = rep.jumps_up;
      row.exponent = std::log(static_cast<double>(rep.jumps_up)) /
                     std::log(static_cast<double>(row.n));
    }
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const JumpScanRow& a, const JumpScanRow& b) {
    return a.n < b.n;
  });
  rows.erase(std::unique(rows.begin(), rows.end(),
                         [](const JumpScanRow& a, const JumpScanRow& b) { return a.n == b.n; }),
             rows.end());
  return rows;
}

}  // namespace cyclotomix
