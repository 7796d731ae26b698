#pragma once

// Numerical semigroups <a,b>: membership, Frobenius number, gapblocks and
// elementblocks, Hilbert series, the semigroup polynomial, and symmetry.

#include <cstdint>
#include <vector>

#include "cyclotomix/poly.hpp"

namespace cyclotomix {

class NumericalSemigroup {
 public:
  // Requires 2 <= a < b with gcd(a,b) = 1; otherwise "not a numerical semigroup".
  NumericalSemigroup(std::int64_t a, std::int64_t b);

  std::int64_t a() const { return a_; }
  std::int64_t b() const { return b_; }
  std::vector<std::int64_t> generators() const { return {a_, b_}; }
  std::int64_t frobenius() const { return frobenius_; }

  // s in S; every integer above F(S) is a member, negatives are not.
  bool contains(std::int64_t s) const {
    if (s < 0) return false;
    if (s > frobenius_) return true;
    return membership_[static_cast<std::size_t>(s)] != 0;
  }

  // Bit table over [0, F(S)+1].
  const std::vector<char>& membership() const { return membership_; }

 private:
  std::int64_t a_, b_;
  std::int64_t frobenius_;
  std::vector<char> membership_;
};

enum class BlockKind { gapblock, elementblock };

struct Block {
  std::int64_t start = 0;   // first integer of the block
  std::int64_t length = 0;  // k
  BlockKind kind = BlockKind::gapblock;
};

// P_S = (1-Z) H_S(Z), assembled coefficient-by-coefficient from the
// membership table: +1 where s enters S, -1 where it leaves.
IntPolynomial semigroup_polynomial(const NumericalSemigroup& S);

// All maximal gapblocks and elementblocks below F(S)+1. Gapblock contents lie
// in [1, F(S)]; elementblock contents lie in [0, F(S)-1], with the virtual
// non-member at -1 admitted as a lower boundary so that the symmetry
// correspondence gapblock <-> elementblock is exact. The all-member region
// above F(S) is unbounded and not reported.
std::vector<Block> blocks(const NumericalSemigroup& S);

// Sum of Z^s over members s <= d.
IntPolynomial hilbert_series_truncated(const NumericalSemigroup& S, std::int64_t d);

// S is symmetric: for 0 <= s <= F(S), exactly one of s, F(S)-s is a member.
bool symmetry_check(const NumericalSemigroup& S);

}  // namespace cyclotomix
