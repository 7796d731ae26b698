#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cyclotomix/census.hpp"
#include "oracles.hpp"

using namespace cyclotomix;

TEST_CASE("sieve correctness") {
  const PrimeSieve s30(30);
  CHECK(s30.primes() == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(s30.is_prime(29));
  CHECK_FALSE(s30.is_prime(27));
  CHECK_FALSE(s30.is_prime(0));
  CHECK_FALSE(s30.is_prime(1));

  const PrimeSieve s1000(1000);
  CHECK(s1000.count_below(10) == 4);
  CHECK(s1000.count_below(100) == 25);
  CHECK(s1000.count_below(1000) == 168);

  CHECK_THROWS_AS(PrimeSieve(1), std::invalid_argument);
}

TEST_CASE("pi(10^6) against an independent trial-division count") {
  const PrimeSieve sieve(1'000'000);
  CHECK(sieve.count_below(1'000'000) == 78498);
  CHECK(static_cast<long long>(sieve.count_below(1'000'000)) ==
        oracle::trial_division_pi(1'000'000));
}

TEST_CASE("streaming enumeration matches the table") {
  const PrimeSieve sieve(100'000);
  std::vector<std::uint64_t> streamed;
  for_each_prime(100'000, [&](std::uint64_t p) { streamed.push_back(p); });
  REQUIRE(streamed.size() == sieve.primes().size());
  for (std::size_t i = 0; i < streamed.size(); ++i) CHECK(streamed[i] == sieve.primes()[i]);
}

TEST_CASE("progression counts") {
  const PrimeSieve sieve(1000);
  // Primes q with 5 < q <= 100, q = 1 (mod 5): 11, 31, 41, 61, 71.
  CHECK(sieve.count_in_progression(100, 5, 1) == 5);
  // q = -1 (mod 5): 19, 29, 59, 79, 89.
  CHECK(sieve.count_in_progression(100, 5, -1) == 5);
  CHECK(sieve.count_in_progression(100, 2, 1) == 24);  // odd primes up to 100
}

TEST_CASE("classification") {
  const TernaryClassification a = classify(3, 5, 7, true);
  CHECK(a.n == 105);
  CHECK(a.in_Q3);
  CHECK(a.in_R3);  // 8 > 5 and 9 > 7
  CHECK_FALSE(a.in_E4);  // 35 >= 24
  REQUIRE(a.in_E3.has_value());
  CHECK_FALSE(*a.in_E3);

  const TernaryClassification b = classify(7, 11, 13, true);
  CHECK(b.in_E4);  // 143 < 144
  CHECK(b.in_R3);
  REQUIRE(b.in_E3.has_value());
  CHECK(*b.in_E3);

  const TernaryClassification c = classify(3, 5, 31, false);
  CHECK_FALSE(c.in_R3);  // 9 < 31
  CHECK_FALSE(c.in_E3.has_value());

  CHECK_THROWS_AS(classify(2, 5, 7, false), std::invalid_argument);
}

TEST_CASE("census rows at the anchors") {
  const PrimeSieve sieve(2000);
  const CensusRow at105 = enumerate_census(sieve, 105, 105);
  CHECK(at105.countQ3 == 1);
  CHECK(at105.countR3 == 1);
  CHECK(at105.countE4 == 0);
  REQUIRE(at105.countE3.has_value());
  CHECK(*at105.countE3 == 0);

  const CensusRow at1001 = enumerate_census(sieve, 1001, 1001);
  CHECK(at1001.countE4 >= 1);
  REQUIRE(at1001.countE3.has_value());
  CHECK(*at1001.countE3 >= at1001.countE4);

  CHECK_THROWS_AS(enumerate_census(sieve, 104, 0), std::invalid_argument);
  const CensusRow empty = enumerate_census(sieve, 104, 0, 0, true);
  CHECK(empty.countQ3 == 0);
}

TEST_CASE("the two enumeration strategies agree") {
  const PrimeSieve sieve(200'000);
  for (std::uint64_t x : {10'000ull, 50'000ull, 200'000ull}) {
    const TernaryCounts full = count_ternary_full_filter(sieve, x);
    const auto [r3, e4] = count_R3_E4_by_predicates(sieve, x);
    CHECK(full.r3 == r3);
    CHECK(full.e4 == e4);
  }
}

TEST_CASE("census counts via a third, factorization-based route") {
  // Classify every n <= x through a smallest-prime-factor table; fully
  // independent of both triple-generation strategies.
  const std::uint64_t x = 300'000;
  std::vector<std::uint32_t> spf(x + 1, 0);
  for (std::uint32_t i = 2; i <= x; ++i)
    if (!spf[i])
      for (std::uint64_t j = i; j <= x; j += i)
        if (!spf[j]) spf[j] = i;
  std::int64_t q3 = 0, r3 = 0, e4 = 0;
  for (std::uint64_t n = 105; n <= x; ++n) {
    std::uint64_t m = n;
    std::uint64_t f[3];
    int k = 0;
    bool squarefree_three = true;
    while (m > 1) {
      const std::uint64_t p = spf[m];
      if (k == 3) {
        squarefree_three = false;
        break;
      }
      f[k++] = p;
      m /= p;
      if (m % p == 0) {
        squarefree_three = false;
        break;
      }
    }
    if (!squarefree_three || k != 3 || f[0] == 2) continue;
    ++q3;
    if (4 * (f[0] - 1) > f[1] && f[0] * f[0] > f[2]) ++r3;
    if (f[1] * f[2] < (f[1] + f[2]) * (f[0] - 1)) ++e4;
  }
  const PrimeSieve sieve(x);
  const TernaryCounts full = count_ternary_full_filter(sieve, x);
  CHECK(full.q3 == q3);
  CHECK(full.r3 == r3);
  CHECK(full.e4 == e4);
}

TEST_CASE("counts are monotone and nested") {
  const PrimeSieve sieve(100'000);
  TernaryCounts prev;
  for (std::uint64_t x : {1'000ull, 10'000ull, 100'000ull}) {
    const TernaryCounts row = count_ternary_full_filter(sieve, x);
    CHECK(row.e4 <= row.r3);
    CHECK(row.r3 <= row.q3);
    CHECK(prev.q3 <= row.q3);
    CHECK(prev.r3 <= row.r3);
    CHECK(prev.e4 <= row.e4);
    prev = row;
  }
}

TEST_CASE("N2 anchors and the progression form") {
  const PrimeSieve sieve(100'000);
  CHECK(count_N2(sieve, 15, false) == 4);  // 6, 10, 14, 15
  CHECK(count_N2(sieve, 15, true) == 1);   // 15 only
  CHECK(count_N2(sieve, 6, false) == 1);
  CHECK_THROWS_AS(count_N2(sieve, 5, false), std::invalid_argument);

  for (std::uint64_t x : {1'000ull, 10'000ull, 100'000ull}) {
    CHECK(count_N2(sieve, x, false) == count_N2_progressions(sieve, x, false));
    CHECK(count_N2(sieve, x, true) == count_N2_progressions(sieve, x, true));
  }
}

TEST_CASE("asymptotic columns") {
  const MainTerms terms = asymptotic_columns(1'000'000);
  const double lx = std::log(1e6);
  CHECK(terms.r3 == doctest::Approx(3.30811 * 1e6 / (lx * lx)).epsilon(1e-4));
  CHECK(terms.q3 > 0);
  CHECK(terms.n2 == doctest::Approx(1.04631 * 1e6 / lx).epsilon(1e-4));
  CHECK(asymptotic_columns(16).r3 > 0);
  CHECK_THROWS_AS(asymptotic_columns(15), std::invalid_argument);
}
