#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclotomix/jumps.hpp"
#include "oracles.hpp"

using namespace cyclotomix;

namespace {

// Jump count from the dense oracle coefficients, padded with zeros.
std::int64_t oracle_jumps_up(const oracle::Poly& f) {
  std::int64_t ups = 0;
  long long prev = 0;
  for (std::size_t k = 0; k <= f.size(); ++k) {
    const long long cur = k < f.size() ? f[k] : 0;
    if (cur - prev == 1) ++ups;
    prev = cur;
  }
  return ups;
}

}  // namespace

TEST_CASE("modular inverse") {
  CHECK(modular_inverse(3, 7) == 5);
  CHECK(modular_inverse(1, 9) == 1);
  CHECK(modular_inverse(-3, 7) == 2);  // -3 = 4, 4*2 = 8 = 1
  CHECK_THROWS_WITH_AS(modular_inverse(6, 9), "not invertible", std::domain_error);
  CHECK_THROWS_AS(modular_inverse(3, 1), std::invalid_argument);

  // Involution: (k*)* = k mod m.
  for (std::int64_t m : {7, 11, 101, 997})
    for (std::int64_t k = 1; k < m; ++k) CHECK(modular_inverse(modular_inverse(k, m), m) == k);
}

TEST_CASE("jump report for (3,5,7)") {
  const JumpReport rep = jump_report(3, 5, 7);
  CHECK(rep.n == 105);
  CHECK(rep.max_step == 1);
  CHECK(rep.jumps_up == rep.jumps_down);
  CHECK(rep.jumps_up == oracle_jumps_up(oracle::cyclotomic(105)));
  CHECK(rep.cube_exceeds_n());  // jumps_up^3 > 105
}

TEST_CASE("jump report for the m=7 family member 23821 = 7*41*83") {
  const JumpReport rep = jump_report(7, 41, 83);
  CHECK(rep.n == 23821);
  CHECK(rep.max_step == 1);
  CHECK(rep.jumps_up == rep.jumps_down);
  CHECK(rep.cube_exceeds_n());           // n < J^3
  CHECK(rep.cube_below_bound(3375));     // J^3 < 3375 n, i.e. J < 15 n^(1/3)
}

TEST_CASE("jump report validation") {
  CHECK_THROWS_AS(jump_report(2, 5, 7), std::invalid_argument);
  CHECK_THROWS_AS(jump_report(3, 5, 5), std::invalid_argument);
  CHECK_THROWS_AS(jump_report(3, 5, 7, 10), std::length_error);
}

TEST_CASE("family search") {
  const auto at7 = family_search(7);
  REQUIRE(at7.size() == 1);
  CHECK(at7[0] == std::pair<std::int64_t, std::int64_t>{7, 23821});

  CHECK(family_search(6).empty());

  // Against a brute-force triple primality scan.
  const auto found = family_search(100);
  std::vector<std::pair<std::int64_t, std::int64_t>> expected;
  for (std::int64_t m = 7; m <= 100; ++m)
    if (is_prime(m) && is_prime(6 * m - 1) && is_prime(12 * m - 1))
      expected.emplace_back(m, m * (6 * m - 1) * (12 * m - 1));
  CHECK(found == expected);
}

TEST_CASE("triple search at P=1000") {
  const auto candidates = triple_search(1000, 0.5, 0.05, 10);
  CHECK(candidates.size() <= 10);
  const double L = std::ceil(std::pow(1000.0, 0.5));
  const double h = std::pow(L, -0.5) * std::pow(1000.0, 1.05) +
                   std::pow(L, 0.5) * std::pow(1000.0, 0.55);
  for (const auto& cand : candidates) {
    CHECK(cand.p >= 1000);
    CHECK(cand.p <= 2000);
    CHECK(cand.q >= L);
    CHECK(cand.q <= 2 * L);
    CHECK(cand.r > cand.q);
    CHECK(cand.r <= 2 * L);
    CHECK(modular_inverse(cand.q, cand.p) == cand.q_inv);
    CHECK(modular_inverse(cand.r, cand.p) == cand.r_inv);
    CHECK(cand.window <= static_cast<std::int64_t>(std::ceil(2.0 * h)));
    if (cand.q_mirrored)
      CHECK(cand.p - cand.q_inv <= cand.window);
    else
      CHECK(cand.q_inv <= cand.window);
    if (cand.r_mirrored)
      CHECK(cand.p - cand.r_inv <= cand.window);
    else
      CHECK(cand.r_inv <= cand.window);
  }
}

TEST_CASE("triple search domain") {
  CHECK_NOTHROW(triple_search(10, 0.5, 0.05, 10));  // possibly empty, never an error
  CHECK_THROWS_AS(triple_search(1000, 0.0, 0.05, 10), std::invalid_argument);
  CHECK_THROWS_AS(triple_search(1000, 1.2, 0.05, 10), std::invalid_argument);
  CHECK_THROWS_AS(triple_search(1000, 0.5, 0.3, 10), std::invalid_argument);  // eps >= rho/2
  CHECK_THROWS_AS(triple_search(1000, 0.5, 0.05, -1), std::invalid_argument);
}

TEST_CASE("jump exponent scan") {
  TripleCandidate single;
  single.p = 7;
  single.q = 3;
  single.r = 5;
  const auto rows = jump_exponent_scan({single});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].n == 105);
  CHECK_FALSE(rows[0].skipped);
  CHECK(rows[0].jumps == jump_report(3, 5, 7).jumps_up);
  CHECK(rows[0].exponent == doctest::Approx(std::log(static_cast<double>(rows[0].jumps)) /
                                            std::log(105.0)));

  CHECK(jump_exponent_scan({}).empty());

  // Family members within the degree budget satisfy both cube bounds; the
  // rest come back flagged, never silently dropped.
  std::vector<TripleCandidate> family;
  for (auto [m, n] : family_search(200)) {
    TripleCandidate cand;
    cand.p = m;
    cand.q = 6 * m - 1;
    cand.r = 12 * m - 1;
    family.push_back(cand);
  }
  const auto scan = jump_exponent_scan(family);
  CHECK(scan.size() == family.size());
  std::int64_t in_budget = 0;
  for (const auto& row : scan) {
    if (row.skipped) {
      CHECK(euler_phi(row.n) > kDefaultDegreeBudget);
      continue;
    }
    ++in_budget;
    const unsigned __int128 cube = static_cast<unsigned __int128>(row.jumps) * row.jumps *
                                   static_cast<unsigned __int128>(row.jumps);
    CHECK(cube > static_cast<unsigned __int128>(row.n));
    CHECK(cube < static_cast<unsigned __int128>(3375) * row.n);
  }
  CHECK(in_budget >= 2);  // at least m = 7 and m = 19
}

TEST_CASE("scan flags rows over budget") {
  TripleCandidate big;
  big.p = 101;
  big.q = 103;
  big.r = 107;
  const auto rows = jump_exponent_scan({big}, 1000);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].skipped);
}
