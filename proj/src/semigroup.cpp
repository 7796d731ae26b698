#include "cyclotomix/semigroup.hpp"

#include <numeric>
#include <stdexcept>

namespace cyclotomix {

NumericalSemigroup::NumericalSemigroup(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
  if (a < 2 || b <= a) throw std::invalid_argument("numerical semigroup: need 2 <= a < b");
  if (std::gcd(a, b) != 1) throw std::domain_error("not a numerical semigroup");
  frobenius_ = checked_sub(checked_sub(checked_mul(a, b), a), b);
  membership_.assign(static_cast<std::size_t>(frobenius_) + 2, 0);
  membership_[0] = 1;
  for (std::int64_t s = 1; s <= frobenius_ + 1; ++s) {
    const bool via_a = s >= a && membership_[static_cast<std::size_t>(s - a)];
    const bool via_b = s >= b && membership_[static_cast<std::size_t>(s - b)];
    membership_[static_cast<std::size_t>(s)] = (via_a || via_b) ? 1 : 0;
  }
}

IntPolynomial semigroup_polynomial(const NumericalSemigroup& S) {
  const std::int64_t top = S.frobenius() + 1;
  std::vector<std::int64_t> c(static_cast<std::size_t>(top) + 1, 0);
  for (std::int64_t s = 0; s <= top; ++s) {
    const bool here = S.contains(s);
    const bool before = S.contains(s - 1);
    if (here && !before) c[static_cast<std::size_t>(s)] = 1;
    if (!here && before) c[static_cast<std::size_t>(s)] = -1;
  }
  return IntPolynomial(std::move(c));
}

std::vector<Block> blocks(const NumericalSemigroup& S) {
  std::vector<Block> out;
  const std::int64_t F = S.frobenius();
  // Gapblocks: maximal runs of non-members in [1, F]. Both boundaries are
  // members automatically (0 and F+1 included).
  std::int64_t s = 1;
  while (s <= F) {
    if (!S.contains(s)) {
      std::int64_t e = s;
      while (e + 1 <= F && !S.contains(e + 1)) ++e;
      out.push_back({s, e - s + 1, BlockKind::gapblock});
      s = e + 1;
    }
    ++s;
  }
  // Elementblocks: maximal runs of members in [0, F-1], bounded above by a
  // gap and below by a gap or the virtual non-member -1.
  s = 0;
  while (s < F) {
    if (S.contains(s)) {
      std::int64_t e = s;
      while (e + 1 < F && S.contains(e + 1)) ++e;
      out.push_back({s, e - s + 1, BlockKind::elementblock});
      s = e + 1;
    }
    ++s;
  }
  return out;
}

IntPolynomial hilbert_series_truncated(const NumericalSemigroup& S, std::int64_t d) {
  if (d < 0) throw std::invalid_argument("hilbert_series_truncated: d must be non-negative");
  std::vector<std::int64_t> c(static_cast<std::size_t>(d) + 1, 0);
  for (std::int64_t s = 0; s <= d; ++s)
    if (S.contains(s)) c[static_cast<std::size_t>(s)] = 1;
  return IntPolynomial(std::move(c));
}

bool symmetry_check(const NumericalSemigroup& S) {
  const std::int64_t F = S.frobenius();
  for (std::int64_t s = 0; s <= F; ++s)
    if (S.contains(s) == S.contains(F - s)) return false;
  return true;
}

}  // namespace cyclotomix
