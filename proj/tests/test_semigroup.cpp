#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "cyclotomix/semigroup.hpp"
#include "oracles.hpp"

using namespace cyclotomix;

TEST_CASE("construction and membership") {
  const NumericalSemigroup S(3, 5);
  CHECK(S.frobenius() == 7);
  const auto member = oracle::semigroup_members(3, 5, 8);
  for (std::int64_t s = 0; s <= 8; ++s) CHECK(S.contains(s) == static_cast<bool>(member[s]));
  std::vector<std::int64_t> gaps;
  for (std::int64_t s = 1; s <= 7; ++s)
    if (!S.contains(s)) gaps.push_back(s);
  CHECK(gaps == std::vector<std::int64_t>{1, 2, 4, 7});
  CHECK(S.contains(100));
  CHECK_FALSE(S.contains(-1));

  const NumericalSemigroup tiny(2, 3);
  CHECK(tiny.frobenius() == 1);
  CHECK_FALSE(tiny.contains(1));

  CHECK_THROWS_WITH_AS(NumericalSemigroup(4, 6), "not a numerical semigroup", std::domain_error);
  CHECK_THROWS_AS(NumericalSemigroup(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(NumericalSemigroup(5, 3), std::invalid_argument);
}

TEST_CASE("semigroup polynomial equals the cyclotomic connection") {
  CHECK(semigroup_polynomial(NumericalSemigroup(3, 5)) == cyclotomic(15));
  CHECK(semigroup_polynomial(NumericalSemigroup(2, 3)) == IntPolynomial({1, -1, 1}));
  CHECK(semigroup_polynomial(NumericalSemigroup(2, 3)) == cyclotomic(6));
  CHECK(semigroup_polynomial(NumericalSemigroup(4, 9)) == inclusion_exclusion(4, 9));
}

TEST_CASE("blocks of <3,5>") {
  const auto list = blocks(NumericalSemigroup(3, 5));
  std::vector<Block> gapblocks, elementblocks;
  for (const Block& blk : list)
    (blk.kind == BlockKind::gapblock ? gapblocks : elementblocks).push_back(blk);
  REQUIRE(gapblocks.size() == 3);
  CHECK(gapblocks[0].start == 1);
  CHECK(gapblocks[0].length == 2);
  CHECK(gapblocks[1].start == 4);
  CHECK(gapblocks[1].length == 1);
  CHECK(gapblocks[2].start == 7);
  CHECK(gapblocks[2].length == 1);
  REQUIRE(elementblocks.size() == 3);  // {0}, {3}, {5,6}
  std::multiset<std::int64_t> gap_sizes, elem_sizes;
  for (const Block& blk : gapblocks) gap_sizes.insert(blk.length);
  for (const Block& blk : elementblocks) elem_sizes.insert(blk.length);
  CHECK(gap_sizes == elem_sizes);
}

TEST_CASE("blocks of <3,7>: floor(q/p) widest gapblocks") {
  std::int64_t widest = 0;
  for (const Block& blk : blocks(NumericalSemigroup(3, 7)))
    if (blk.kind == BlockKind::gapblock && blk.length == 2) ++widest;
  CHECK(widest == 2);
}

TEST_CASE("blocks of <2,3>") {
  const auto list = blocks(NumericalSemigroup(2, 3));
  REQUIRE(list.size() == 2);
  CHECK(list[0].kind == BlockKind::gapblock);
  CHECK(list[0].start == 1);
  CHECK(list[0].length == 1);
  CHECK(list[1].kind == BlockKind::elementblock);
  CHECK(list[1].start == 0);
  CHECK(list[1].length == 1);
}

TEST_CASE("hilbert series truncations") {
  const NumericalSemigroup S(3, 5);
  CHECK(hilbert_series_truncated(S, 8) == IntPolynomial({1, 0, 0, 1, 0, 1, 1, 0, 1}));
  CHECK(hilbert_series_truncated(S, 0) == IntPolynomial::one());
  CHECK(hilbert_series_truncated(NumericalSemigroup(2, 3), 5) ==
        IntPolynomial({1, 0, 1, 1, 1, 1}));

  // (1 - Z) H_S = P_S (mod Z^(d+1)) beyond the Frobenius number.
  const std::int64_t d = S.frobenius() + 1;
  IntPolynomial lhs = hilbert_series_truncated(S, d);
  lhs.mul_xd_minus_one(1);
  std::vector<std::int64_t> low(lhs.coeffs().begin(), lhs.coeffs().begin() + d + 1);
  // mul by (Z-1) negates: (1-Z) H = -(Z-1) H.
  for (auto& v : low) v = -v;
  CHECK(IntPolynomial(std::move(low)) == semigroup_polynomial(S));
}

TEST_CASE("symmetry") {
  CHECK(symmetry_check(NumericalSemigroup(3, 5)));
  CHECK(symmetry_check(NumericalSemigroup(5, 8)));
  CHECK(symmetry_check(NumericalSemigroup(2, 3)));
}

TEST_CASE("sweep: dual routes, multisets, shape facts") {
  for (std::int64_t a = 2; a <= 24; ++a)
    for (std::int64_t b = a + 1; a * b <= 600; ++b) {
      if (std::gcd(a, b) != 1) continue;
      CAPTURE(a);
      CAPTURE(b);
      const NumericalSemigroup S(a, b);
      CHECK(S.frobenius() == a * b - a - b);
      const IntPolynomial ps = semigroup_polynomial(S);
      CHECK(ps == inclusion_exclusion(a, b));
      CHECK(ps.degree() == S.frobenius() + 1);
      CHECK(symmetry_check(S));
      std::map<std::int64_t, std::int64_t> gap_sizes, elem_sizes;
      std::int64_t widest = 0;
      for (const Block& blk : blocks(S)) {
        if (blk.kind == BlockKind::gapblock) {
          ++gap_sizes[blk.length];
          if (blk.length == a - 1) ++widest;
        } else {
          ++elem_sizes[blk.length];
        }
      }
      CHECK(gap_sizes == elem_sizes);
      CHECK(widest == b / a);
    }
}
