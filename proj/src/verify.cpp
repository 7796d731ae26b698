#include "cyclotomix/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "cyclotomix/analytic.hpp"
#include "cyclotomix/census.hpp"
#include "cyclotomix/gaps.hpp"
#include "cyclotomix/jumps.hpp"
#include "cyclotomix/parallel.hpp"
#include "cyclotomix/poly.hpp"
#include "cyclotomix/semigroup.hpp"

namespace cyclotomix {

namespace {

struct FailureLog {
  std::int64_t count = 0;
  std::string first;

  void note(const std::string& what) {
    if (count == 0) first = what;
    ++count;
  }
  void merge(const FailureLog& o) {
    if (count == 0) first = o.first;
    count += o.count;
  }
};

std::string summary(const FailureLog& log, std::int64_t checked, const std::string& unit) {
  std::ostringstream os;
  if (log.count == 0) {
    os << checked << " " << unit << " checked, no violations";
  } else {
    os << log.count << " violations out of " << checked << " " << unit << "; first: " << log.first;
  }
  return os.str();
}

std::vector<std::array<std::int64_t, 3>> ternary_triples(std::int64_t limit) {
  std::vector<std::array<std::int64_t, 3>> triples;
  const PrimeSieve sieve(static_cast<std::uint64_t>(std::max<std::int64_t>(limit / 15, 30)));
  const auto& primes = sieve.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::int64_t p = primes[i];
    if (p == 2) continue;
    if (p * p * p > limit) break;
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::int64_t q = primes[j];
      if (p * q * q > limit) break;
      for (std::size_t k = j + 1; k < primes.size(); ++k) {
        const std::int64_t r = primes[k];
        if (p * q * r > limit) break;
        triples.push_back({p, q, r});
      }
    }
  }
  return triples;
}

}  // namespace

std::vector<CriterionResult> run_binary_criteria(const VerifyOptions& opt) {
  const std::int64_t limit = opt.binary_limit;
  const PrimeSieve sieve(static_cast<std::uint64_t>(std::max<std::int64_t>(limit / 3, 30)));
  std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
  const auto& primes = sieve.primes();
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const std::int64_t p = primes[i];
    if (p == 2) continue;
    if (p * p > limit) break;
    for (std::size_t j = i + 1; j < primes.size(); ++j) {
      const std::int64_t q = primes[j];
      if (p * q > limit) break;
      pairs.emplace_back(p, q);
    }
  }

  struct Chunk {
    FailureLog gap, pattern, inverse;
  };
  std::vector<Chunk> parts((pairs.size() + 63) / 64 + 1);
  parallel_chunks(
      static_cast<std::int64_t>(pairs.size()), 64, opt.threads,
      [&](std::size_t c, std::int64_t lo, std::int64_t hi) {
        auto& part = parts[c];
        for (std::int64_t i = lo; i < hi; ++i) {
          const auto [p, q] = pairs[static_cast<std::size_t>(i)];
          const std::int64_t n = p * q;
          const IntPolynomial phi = cyclotomic(n);
          const GapReport rep = max_gap(phi);
          if (rep.max_gap != p - 1 || rep.multiplicity != 2 * (q / p))
            part.gap.note("pq=" + std::to_string(n));

          const auto scan = pattern_scan(phi, p);
          bool all = true;
          for (bool v : scan) all = all && v;
          const bool expect = (q % p == 1 || q % p == p - 1);
          if (all != expect) part.pattern.note("pq=" + std::to_string(n));

          const GapReport psi_rep = max_gap(inverse_cyclotomic(n));
          if (psi_rep.max_gap != q - p + 1) part.inverse.note("pq=" + std::to_string(n));
        }
      });
  Chunk total;
  for (const auto& part : parts) {
    total.gap.merge(part.gap);
    total.pattern.merge(part.pattern);
    total.inverse.merge(part.inverse);
  }
  // g(Psi_p) = 1 for every odd prime p up to the same bound.
  FailureLog prime_psi;
  std::int64_t prime_count = 0;
  const PrimeSieve psi_sieve(static_cast<std::uint64_t>(limit));
  for (std::uint32_t p : psi_sieve.primes()) {
    if (p == 2) continue;
    ++prime_count;
    if (max_gap(inverse_cyclotomic(p)).max_gap != 1) prime_psi.note("p=" + std::to_string(p));
  }

  const std::int64_t checked = static_cast<std::int64_t>(pairs.size());
  std::vector<CriterionResult> out;
  out.push_back({1, "binary max gap g(Phi_pq) = p-1 with multiplicity 2*floor(q/p)",
                 total.gap.count == 0, summary(total.gap, checked, "pairs")});
  out.push_back({2, "pattern scan all-true iff q = +-1 (mod p)", total.pattern.count == 0,
                 summary(total.pattern, checked, "pairs")});
  const bool c3 = total.inverse.count == 0 && prime_psi.count == 0;
  out.push_back({3, "g(Psi_pq) = q-p+1 and g(Psi_p) = 1", c3,
                 summary(total.inverse, checked, "pairs") + "; " +
                     summary(prime_psi, prime_count, "primes")});
  return out;
}

std::vector<CriterionResult> run_ternary_criteria(const VerifyOptions& opt) {
  const auto triples = ternary_triples(opt.ternary_limit);

  struct Chunk {
    FailureLog bounds, formula, chain, steps, balance, cube;
    bool saw_105_ok = false, saw_1001_ok = false;
  };
  std::vector<Chunk> parts((triples.size() + 31) / 32 + 1);
  parallel_chunks(
      static_cast<std::int64_t>(triples.size()), 32, opt.threads,
      [&](std::size_t c, std::int64_t lo, std::int64_t hi) {
        auto& part = parts[c];
        for (std::int64_t i = lo; i < hi; ++i) {
          const auto [p, q, r] = triples[static_cast<std::size_t>(i)];
          const TernaryGapCheck tgc = ternary_gap_check(p, q, r);
          const std::string tag = "n=" + std::to_string(tgc.n);

          // Criterion 4: the two-sided bound and the off-R3 exact formula.
          if (!(tgc.lower_bound <= tgc.psi_gap && tgc.psi_gap < tgc.upper_bound))
            part.bounds.note(tag);
          const bool in_R3 = (4 * (p - 1) > q) && (p * p > r);
          if (!in_R3 && !tgc.equals_formula) part.formula.note(tag);

          // Criterion 5: E4 <= E3 <= R3 <= Q3 elementwise.
          const bool in_E4 = (q * r < (q + r) * (p - 1));
          const bool in_E3 = !tgc.equals_formula;
          if ((in_E4 && !in_E3) || (in_E3 && !in_R3)) part.chain.note(tag);
          if (tgc.n == 105 && in_R3 && !in_E4) part.saw_105_ok = true;
          if (tgc.n == 1001 && in_E4) part.saw_1001_ok = true;

          // Criterion 7: unit steps, balance, J^3 > n.
          try {
            const JumpReport jr = jump_report(p, q, r);
            if (jr.max_step > 1) part.steps.note(tag);
            if (jr.jumps_up != jr.jumps_down) part.balance.note(tag);
            if (!jr.cube_exceeds_n()) part.cube.note(tag);
          } catch (const std::logic_error&) {
            part.steps.note(tag);
          }
        }
      });
  Chunk total;
  for (const auto& part : parts) {
    total.bounds.merge(part.bounds);
    total.formula.merge(part.formula);
    total.chain.merge(part.chain);
    total.steps.merge(part.steps);
    total.balance.merge(part.balance);
    total.cube.merge(part.cube);
    total.saw_105_ok = total.saw_105_ok || part.saw_105_ok;
    total.saw_1001_ok = total.saw_1001_ok || part.saw_1001_ok;
  }
  const std::int64_t checked = static_cast<std::int64_t>(triples.size());

  std::vector<CriterionResult> out;
  const bool c4 = total.bounds.count == 0 && total.formula.count == 0;
  out.push_back({4, "ternary Psi gap bounds and off-R3 formula", c4,
                 summary(total.bounds, checked, "triples") + "; formula: " +
                     summary(total.formula, checked, "triples")});
  const bool c5 = total.chain.count == 0 && total.saw_105_ok && total.saw_1001_ok;
  out.push_back({5, "subset chain E4 <= E3 <= R3 <= Q3 with anchors 105, 1001", c5,
                 summary(total.chain, checked, "triples") +
                     (total.saw_105_ok ? "; 105 in R3\\E4" : "; 105 anchor MISSING") +
                     (total.saw_1001_ok ? "; 1001 in E4" : "; 1001 anchor MISSING")});

  // The m = 7 family member n = 23821 = 7 * 41 * 83.
  const JumpReport family = jump_report(7, 41, 83);
  const bool family_ok = family.cube_exceeds_n() && family.cube_below_bound(3375);
  const bool c7 = total.steps.count == 0 && total.balance.count == 0 && total.cube.count == 0 &&
                  family_ok;
  std::ostringstream det7;
  det7 << summary(total.steps, checked, "triples") << "; balance: " << total.balance.count
       << "; cube: " << total.cube.count << "; J(23821)=" << family.jumps_up
       << (family_ok ? " within (n^(1/3), 15 n^(1/3))" : " OUT OF RANGE");
  out.push_back({7, "ternary jumps: unit steps, up=down, n < J^3, family n=23821", c7, det7.str()});
  return out;
}

std::vector<CriterionResult> run_semigroup_criteria(const VerifyOptions& opt) {
  const std::int64_t limit = opt.semigroup_limit;
  std::vector<std::pair<std::int64_t, std::int64_t>> coprime_pairs;
  for (std::int64_t a = 2; a * (a + 1) <= limit; ++a)
    for (std::int64_t b = a + 1; a * b <= limit; ++b)
      if (std::gcd(a, b) == 1) coprime_pairs.emplace_back(a, b);

  struct Chunk {
    FailureLog dual, symmetry, multiset, shape;
  };
  std::vector<Chunk> parts((coprime_pairs.size() + 127) / 128 + 1);
  parallel_chunks(
      static_cast<std::int64_t>(coprime_pairs.size()), 128, opt.threads,
      [&](std::size_t c, std::int64_t lo, std::int64_t hi) {
        auto& part = parts[c];
        for (std::int64_t i = lo; i < hi; ++i) {
          const auto [a, b] = coprime_pairs[static_cast<std::size_t>(i)];
          const std::string tag = "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ")";
          const NumericalSemigroup S(a, b);

          // Two independent routes to P_S.
          if (semigroup_polynomial(S) != inclusion_exclusion(a, b)) part.dual.note(tag);
          if (!symmetry_check(S)) part.symmetry.note(tag);

          std::map<std::int64_t, std::int64_t> gap_sizes, elem_sizes;
          std::int64_t widest_gapblocks = 0;
          for (const Block& blk : blocks(S)) {
            if (blk.kind == BlockKind::gapblock) {
              ++gap_sizes[blk.length];
              if (blk.length == a - 1) ++widest_gapblocks;
            } else {
              ++elem_sizes[blk.length];
            }
          }
          if (gap_sizes != elem_sizes) part.multiset.note(tag);

          // Shape facts: F(S) = ab-a-b, deg P_S = F+1, floor(b/a) widest gapblocks.
          const bool shape_ok = S.frobenius() == a * b - a - b &&
                                semigroup_polynomial(S).degree() == S.frobenius() + 1 &&
                                widest_gapblocks == b / a;
          if (!shape_ok) part.shape.note(tag);
        }
      });
  Chunk total;
  for (const auto& part : parts) {
    total.dual.merge(part.dual);
    total.symmetry.merge(part.symmetry);
    total.multiset.merge(part.multiset);
    total.shape.merge(part.shape);
  }
  const std::int64_t checked = static_cast<std::int64_t>(coprime_pairs.size());
  const bool pass = total.dual.count == 0 && total.symmetry.count == 0 &&
                    total.multiset.count == 0 && total.shape.count == 0;
  std::ostringstream det;
  det << summary(total.dual, checked, "pairs") << "; symmetry: " << total.symmetry.count
      << "; multisets: " << total.multiset.count << "; shape: " << total.shape.count;
  return {{6, "semigroup duality: coeff rule = quotient, symmetry, block multisets", pass,
           det.str()}};
}

std::vector<CriterionResult> run_census_criteria(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;

  // Criterion 10: N2 direct scan vs progression sums, plus the x = 15 anchor.
  {
    std::uint64_t top = 6;
    for (std::uint64_t x : opt.n2_checkpoints) top = std::max(top, x);
    const PrimeSieve sieve(top);
    FailureLog log;
    std::ostringstream det;
    for (std::uint64_t x : opt.n2_checkpoints) {
      const std::int64_t direct = count_N2(sieve, x, false);
      const std::int64_t prog = count_N2_progressions(sieve, x, false);
      const std::int64_t direct_odd = count_N2(sieve, x, true);
      const std::int64_t prog_odd = count_N2_progressions(sieve, x, true);
      if (direct != prog || direct_odd != prog_odd) log.note("x=" + std::to_string(x));
      det << " N2(" << x << ")=" << direct << "/odd " << direct_odd << ";";
    }
    const PrimeSieve tiny(32);
    const bool anchor = count_N2(tiny, 15, false) == 4 && count_N2(tiny, 15, true) == 1;
    if (!anchor) log.note("x=15 anchor");
    out.push_back({10, "N2 double loop equals progression-sum form", log.count == 0,
                   summary(log, static_cast<std::int64_t>(opt.n2_checkpoints.size()), "checkpoints") +
                       ";" + det.str()});
  }

  // Criteria 11 and 12 share one sieve and the per-checkpoint counts.
  {
    std::uint64_t top = 105;
    for (std::uint64_t x : opt.census_checkpoints) top = std::max(top, x);
    const PrimeSieve sieve(top);
    FailureLog cross;
    std::vector<TernaryCounts> rows;
    for (std::uint64_t x : opt.census_checkpoints) {
      const TernaryCounts full = count_ternary_full_filter(sieve, x, opt.threads);
      const auto [r3, e4] = count_R3_E4_by_predicates(sieve, x);
      if (full.r3 != r3 || full.e4 != e4) cross.note("x=" + std::to_string(x));
      rows.push_back(full);
    }
    std::ostringstream counts;
    for (std::size_t i = 0; i < rows.size(); ++i)
      counts << " x=" << opt.census_checkpoints[i] << ": Q3=" << rows[i].q3
             << " R3=" << rows[i].r3 << " E4=" << rows[i].e4 << ";";
    out.push_back({11, "R3/E4 predicate counts equal full-triple-filter counts",
                   cross.count == 0,
                   summary(cross, static_cast<std::int64_t>(rows.size()), "checkpoints") + ";" +
                       counts.str()});

    FailureLog shape;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!(rows[i].e4 <= rows[i].r3 && rows[i].r3 <= rows[i].q3))
        shape.note("subset at x=" + std::to_string(opt.census_checkpoints[i]));
      if (i > 0 && !(rows[i - 1].q3 <= rows[i].q3 && rows[i - 1].r3 <= rows[i].r3 &&
                     rows[i - 1].e4 <= rows[i].e4))
        shape.note("monotonicity at x=" + std::to_string(opt.census_checkpoints[i]));
    }
    std::ostringstream ratios;
    ratios.setf(std::ios::fixed);
    ratios.precision(4);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const MainTerms terms = asymptotic_columns(opt.census_checkpoints[i]);
      ratios << " x=" << opt.census_checkpoints[i] << ": R3/main=" << rows[i].r3 / terms.r3
             << " Q3/main=" << rows[i].q3 / terms.q3 << ";";
    }
    out.push_back({12, "ratio columns reported; only monotonicity and subsets asserted",
                   shape.count == 0,
                   summary(shape, static_cast<std::int64_t>(rows.size()), "rows") + ";" +
                       ratios.str()});
  }
  return out;
}

std::vector<CriterionResult> run_analytic_criteria(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;

  // Criterion 8: C against the 35-digit reference, then against the
  // truncated prime sum within the combined tail bounds.
  {
    const Fixed C = constant_C(opt.constant_bits);
    const mpz_class reference_digits("10463133380995902557287349197118847");
    mpz_class pow10;
    mpz_ui_pow_ui(pow10.get_mpz_t(), 10, 34);
    const Fixed reference = Fixed::from_ratio(reference_digits, pow10, opt.constant_bits);
    mpz_class diff = C.raw() - reference.raw();
    if (diff < 0) diff = -diff;
    // 15 significant digits: |C - reference| < 0.5 * 10^-14, compared exactly.
    mpz_class lhs = diff * 2 * mpz_class("100000000000000");
    const bool digits_ok = lhs < (mpz_class(1) << opt.constant_bits);

    const PrimeSumForm prime_form = constant_C_prime_form(opt.prime_cutoff);
    const double gap = C.to_double() - prime_form.value;
    const bool sum_ok = gap >= -1e-10 && gap <= prime_form.tail_bound + 1e-8;
    std::ostringstream det;
    det.precision(12);
    det << "C=" << C.to_decimal(20) << "; prime-sum gap=" << gap << " (tail bound "
        << prime_form.tail_bound << " at cutoff " << prime_form.cutoff << ")";
    out.push_back({8, "constant C to 15 significant digits; zeta vs prime-sum forms",
                   digits_ok && sum_ok, det.str()});
  }

  // Criterion 9: c = (1 + log 4) log 4 = 3.30811 within 1e-5.
  {
    const double c = constant_c();
    const bool ok = std::abs(c - 3.30811) <= 1e-5;
    std::ostringstream det;
    det.precision(10);
    det << "c=" << c;
    out.push_back({9, "constant c = 3.30811 to five decimals", ok, det.str()});
  }

  // Criterion 13: exponential-sum grid and the discrepancy report.
  {
    FailureLog log;
    std::ostringstream det;
    det.precision(3);
    for (double L : {50.0, 100.0})
      for (double P : {200.0, 400.0}) {
        const auto points = inverse_fractions(L, P);
        const double pairs = static_cast<double>(points.size());
        double worst_ratio = 0.0;
        for (std::int64_t a = 1; a <= 10; ++a) {
          const std::complex<double> s = double_sum(a, L, P, opt.threads);
          const std::complex<double> s_neg = double_sum(-a, L, P, opt.threads);
          if (std::abs(s) > pairs + 1e-9)
            log.note("triangle a=" + std::to_string(a));
          if (std::abs(s_neg - std::conj(s)) > 1e-9 * (1.0 + std::abs(s)))
            log.note("conjugate a=" + std::to_string(a));
          const double irv = (std::sqrt(L) + std::sqrt(P) + std::min(L, P)) *
                             std::pow(L * P, 0.75);
          worst_ratio = std::max(worst_ratio, std::abs(s) / irv);
        }
        det << " L=" << L << ",P=" << P << ": pairs=" << points.size()
            << " worst |S|/irv(eps=0.25)=" << worst_ratio << ";";
      }
    const std::size_t pair_count = inverse_fractions(50, 200).size();
    const DiscrepancyReport rep = discrepancy(50, 200, 50);
    const bool disc_ok = rep.discrepancy >= 0.0 &&
                         rep.discrepancy <= static_cast<double>(rep.N) &&
                         rep.N == pair_count;  // every point is below 1, so T(1) = N
    if (!disc_ok) log.note("discrepancy range");
    det << " Delta=" << rep.discrepancy << " N=" << rep.N
        << " ET-ratio=" << rep.discrepancy / rep.erdos_turan_bound;
    out.push_back({13, "exponential sums: triangle bound, conjugacy, discrepancy range",
                   log.count == 0, det.str()});
  }
  return out;
}

std::vector<CriterionResult> run_poly_invariants(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  const std::int64_t limit = opt.poly_limit;

  {
    FailureLog log;
    for (std::int64_t n = 1; n <= limit; ++n)
      if (!product_over_divisors_check(n)) log.note("n=" + std::to_string(n));
    out.push_back({0, "prod over d|n of Phi_d = Z^n - 1", log.count == 0,
                   summary(log, limit, "values of n")});
  }
  {
    FailureLog sym, pair_identity;
    for (std::int64_t n = 2; n <= limit; ++n) {
      const IntPolynomial phi = cyclotomic(n);
      if (phi != reversed(phi)) sym.note("n=" + std::to_string(n));
      if (multiply(phi, inverse_cyclotomic(n)) != IntPolynomial::xpow_minus_one(n))
        pair_identity.note("n=" + std::to_string(n));
    }
    out.push_back({0, "coefficient symmetry a_n(k) = a_n(phi(n)-k)", sym.count == 0,
                   summary(sym, limit - 1, "values of n")});
    out.push_back({0, "Phi_n * Psi_n = Z^n - 1", pair_identity.count == 0,
                   summary(pair_identity, limit - 1, "values of n")});
  }
  {
    FailureLog log;
    std::int64_t checked = 0;
    for (std::int64_t n = 3; 2 * n <= limit; n += 2) {
      ++checked;
      if (cyclotomic(2 * n) != alternate_signs(cyclotomic(n))) log.note("n=" + std::to_string(n));
    }
    out.push_back({0, "Phi_2n(Z) = Phi_n(-Z) for odd n", log.count == 0,
                   summary(log, checked, "values of n")});
  }
  {
    FailureLog log;
    std::int64_t checked = 0;
    for (std::int64_t m = 2; m <= limit; ++m)
      for (auto [p, e] : factorize(m)) {
        if (p * m > limit) continue;
        ++checked;
        if (cyclotomic(p * m) != compose_power(cyclotomic(m), p))
          log.note("pm=" + std::to_string(p * m));
      }
    out.push_back({0, "Phi_pm(Z) = Phi_m(Z^p) for p | m", log.count == 0,
                   summary(log, checked, "pairs")});
  }
  {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> deg_dist(0, 24);
    std::uniform_int_distribution<std::int64_t> coeff_dist(-9, 9);
    FailureLog round_trip, support_trip;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
      auto random_poly = [&](bool nonzero) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(deg_dist(rng)) + 1);
        for (auto& v : c) v = coeff_dist(rng);
        IntPolynomial f{std::move(c)};
        if (nonzero && f.is_zero()) f = IntPolynomial::one();
        return f;
      };
      const IntPolynomial a = random_poly(false);
      const IntPolynomial b = random_poly(true);
      if (divide_exact(multiply(a, b), b) != a) round_trip.note("trial " + std::to_string(t));
      if (from_support(support_of(a)) != a) support_trip.note("trial " + std::to_string(t));
    }
    out.push_back({0, "divide_exact(multiply(a,b), b) = a on random inputs",
                   round_trip.count == 0, summary(round_trip, trials, "trials")});
    out.push_back({0, "support round trip is the identity", support_trip.count == 0,
                   summary(support_trip, trials, "trials")});
  }
  return out;
}

std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt) {
  std::vector<CriterionResult> all;
  for (auto&& group : {run_binary_criteria(opt), run_ternary_criteria(opt),
                       run_semigroup_criteria(opt), run_census_criteria(opt),
                       run_analytic_criteria(opt)})
    for (const auto& res : group) all.push_back(res);
  std::sort(all.begin(), all.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  return all;
}

}  // namespace cyclotomix
