#pragma once

// Small integer helpers shared across the library: checked 64-bit
// arithmetic, trial-division factoring, and the classical arithmetic
// functions (Möbius, Euler phi, divisor list) at desk scale.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace cyclotomix {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow");
  return r;
}

// p^e pairs in ascending p order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// All divisors of n, ascending.
std::vector<std::int64_t> divisors(std::int64_t n);

int mobius(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);

// Deterministic trial-division primality test; fine at desk scale.
bool is_prime(std::int64_t n);

}  // namespace cyclotomix
