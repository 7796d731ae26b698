#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclotomix/poly.hpp"
#include "oracles.hpp"

using namespace cyclotomix;

namespace {

IntPolynomial from_oracle(const oracle::Poly& f) {
  return IntPolynomial(std::vector<std::int64_t>(f.begin(), f.end()));
}

}  // namespace

TEST_CASE("multiply basics") {
  const IntPolynomial one_plus({1, 1});
  const IntPolynomial one_minus({1, -1});
  CHECK(multiply(one_plus, one_minus) == IntPolynomial({1, 0, -1}));

  const IntPolynomial f({3, 0, -2, 7});
  CHECK(multiply(f, IntPolynomial::one()) == f);

  CHECK(multiply(cyclotomic(3), cyclotomic(1)) == IntPolynomial::xpow_minus_one(3));

  CHECK(multiply(f, IntPolynomial()).is_zero());
}

TEST_CASE("divide_exact basics and errors") {
  CHECK(divide_exact(IntPolynomial({-1, 0, 1}), IntPolynomial({-1, 1})) == IntPolynomial({1, 1}));
  CHECK_THROWS_WITH_AS(divide_exact(IntPolynomial({1, 0, 1}), IntPolynomial({-1, 1})),
                       "not divisible", std::domain_error);
  CHECK_THROWS_AS(divide_exact(IntPolynomial({1}), IntPolynomial()), std::domain_error);
}

TEST_CASE("Psi_15 by long-division oracle") {
  const oracle::Poly psi = oracle::inverse_cyclotomic(15);
  // Support {0,1,2,5,6,7} with signs {-1,-1,-1,+1,+1,+1}.
  CHECK(from_oracle(psi) == IntPolynomial({-1, -1, -1, 0, 0, 1, 1, 1}));
  CHECK(divide_exact(IntPolynomial::xpow_minus_one(15), cyclotomic(15)) == from_oracle(psi));
  CHECK(inverse_cyclotomic(15) == from_oracle(psi));
}

TEST_CASE("cyclotomic known values") {
  CHECK(cyclotomic(1) == IntPolynomial({-1, 1}));
  CHECK(cyclotomic(7) == IntPolynomial({1, 1, 1, 1, 1, 1, 1}));

  // Support {0,1,3,4,5,7,8}, signs alternating from +1.
  CHECK(cyclotomic(15) == IntPolynomial({1, -1, 0, 1, -1, 1, 0, -1, 1}));
  CHECK(cyclotomic(15) == from_oracle(oracle::cyclotomic(15)));

  const IntPolynomial phi105 = cyclotomic(105);
  CHECK(phi105.coeff(7) == -2);
  CHECK(phi105 == from_oracle(oracle::cyclotomic(105)));

  CHECK(cyclotomic(2) == IntPolynomial({1, 1}));
  CHECK(cyclotomic(8) == IntPolynomial({1, 0, 0, 0, 1}));
  CHECK_THROWS_AS(cyclotomic(0), std::invalid_argument);
}

TEST_CASE("cyclotomic matches the dense oracle across small n") {
  for (std::int64_t n = 1; n <= 220; ++n) {
    CAPTURE(n);
    CHECK(cyclotomic(n) == from_oracle(oracle::cyclotomic(n)));
    CHECK(cyclotomic(n).degree() == euler_phi(n));
    CHECK(multiply(cyclotomic(n), inverse_cyclotomic(n)) == IntPolynomial::xpow_minus_one(n));
  }
}

TEST_CASE("inverse_cyclotomic basics") {
  CHECK(inverse_cyclotomic(1) == IntPolynomial::one());
  for (std::int64_t p : {3, 5, 7, 11, 13}) CHECK(inverse_cyclotomic(p) == IntPolynomial({-1, 1}));
  CHECK(inverse_cyclotomic(12) == from_oracle(oracle::inverse_cyclotomic(12)));
}

TEST_CASE("reduction identities") {
  for (std::int64_t n = 3; n <= 301; n += 2)
    CHECK(cyclotomic(2 * n) == alternate_signs(cyclotomic(n)));
  for (std::int64_t m : {4, 6, 9, 10, 12, 15, 18, 25, 27})
    for (auto [p, e] : factorize(m)) CHECK(cyclotomic(p * m) == compose_power(cyclotomic(m), p));
}

TEST_CASE("inclusion_exclusion") {
  CHECK(inclusion_exclusion(3, 5) == cyclotomic(15));

  const IntPolynomial p49 = inclusion_exclusion(4, 9);
  CHECK(p49.degree() == 24);
  // Independent check against the defining quotient evaluated densely.
  oracle::Poly quotient;
  REQUIRE(oracle::try_divide(oracle::mul(oracle::xpow_minus_one(36), oracle::xpow_minus_one(1)),
                             oracle::mul(oracle::xpow_minus_one(4), oracle::xpow_minus_one(9)),
                             quotient));
  CHECK(p49 == from_oracle(quotient));

  CHECK_THROWS_WITH_AS(inclusion_exclusion(4, 6), "not a numerical semigroup", std::domain_error);
  CHECK_THROWS_AS(inclusion_exclusion(1, 5), std::invalid_argument);
}

TEST_CASE("product over divisors") {
  CHECK(product_over_divisors_check(1));
  CHECK(product_over_divisors_check(6));
  CHECK(product_over_divisors_check(360));
}

TEST_CASE("kaplan identity") {
  CHECK(kaplan_identity_check(3, 5));
  CHECK(kaplan_identity_check(3, 7));
  CHECK(kaplan_identity_check(5, 11));
  // No coefficient of the product equals -1.
  const IntPolynomial prod = multiply(cyclotomic(5), cyclotomic(55));
  for (std::int64_t c : prod.coeffs()) CHECK(c != -1);
  CHECK_THROWS_AS(kaplan_identity_check(4, 7), std::invalid_argument);
}

TEST_CASE("coefficient symmetry for n > 1") {
  for (std::int64_t n = 2; n <= 200; ++n) {
    const IntPolynomial phi = cyclotomic(n);
    CHECK(phi == reversed(phi));
  }
}

TEST_CASE("overflow is detected, never wrapped") {
  const std::int64_t big = std::int64_t{1} << 62;
  const IntPolynomial f({big});
  CHECK_THROWS_AS(multiply(f, IntPolynomial({4})), std::overflow_error);
  CHECK_THROWS_AS(multiply(IntPolynomial({big, big}), IntPolynomial({1, 1})),
                  std::overflow_error);
}

TEST_CASE("zero polynomial edges") {
  const IntPolynomial zero;
  CHECK(zero.is_zero());
  CHECK_THROWS_AS(zero.degree(), std::domain_error);
  CHECK(IntPolynomial({0, 0, 0}).is_zero());
}

TEST_CASE("degree budget") {
  CHECK_THROWS_AS(cyclotomic(101 * 103, 1000), std::length_error);
  CHECK_THROWS_AS(inverse_cyclotomic(2 * 3 * 5 * 7 * 11 * 13, 100), std::length_error);
}

TEST_CASE("randomized round trips") {
  std::mt19937_64 rng(20250808);
  std::uniform_int_distribution<int> deg(0, 20);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  auto random_poly = [&] {
    std::vector<std::int64_t> c(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& v : c) v = coeff(rng);
    return IntPolynomial(std::move(c));
  };
  for (int t = 0; t < 500; ++t) {
    const IntPolynomial a = random_poly();
    IntPolynomial b = random_poly();
    if (b.is_zero()) b = IntPolynomial::one();
    CHECK(divide_exact(multiply(a, b), b) == a);
    CHECK(from_support(support_of(a)) == a);
  }
}

TEST_CASE("support validation") {
  CHECK_THROWS_AS(from_support({{2, 1}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(from_support({{1, 2}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(from_support({{1}, {1, 2}}), std::invalid_argument);
  CHECK(from_support({{}, {}}).is_zero());
}
