#pragma once

// Theorem-check suites. Each runner returns one result per acceptance
// criterion; the CLI `verify` subcommand and the acceptance test binary both
// drive these.

#include <cstdint>
#include <string>
#include <vector>

namespace cyclotomix {

struct CriterionResult {
  int id = 0;  // acceptance criterion number; 0 for module-invariant checks
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::int64_t binary_limit = 20'000;      // pq sweep bound, criteria 1-3
  std::int64_t ternary_limit = 100'000;    // pqr sweep bound, criteria 4,5,7
  std::int64_t semigroup_limit = 10'000;   // ab sweep bound, criterion 6
  std::vector<std::uint64_t> census_checkpoints = {10'000, 100'000, 1'000'000, 10'000'000};
  std::vector<std::uint64_t> n2_checkpoints = {1'000, 10'000, 100'000, 1'000'000};
  std::uint64_t prime_cutoff = 100'000'000;  // prime-sum cross-check for C
  int constant_bits = 128;
  std::int64_t poly_limit = 3'000;         // module-invariant sweeps in the poly suite
  std::uint64_t seed = 20250808;           // randomized round-trip properties
  int threads = 0;
};

std::vector<CriterionResult> run_binary_criteria(const VerifyOptions& opt);     // 1, 2, 3
std::vector<CriterionResult> run_ternary_criteria(const VerifyOptions& opt);    // 4, 5, 7
std::vector<CriterionResult> run_semigroup_criteria(const VerifyOptions& opt);  // 6
std::vector<CriterionResult> run_census_criteria(const VerifyOptions& opt);     // 10, 11, 12
std::vector<CriterionResult> run_analytic_criteria(const VerifyOptions& opt);   // 8, 9, 13

// Module-invariant sweep for the polynomial layer (product identity,
// coefficient symmetry, Phi * Psi = Z^n - 1, the two reduction identities,
// randomized round trips). Not numbered criteria.
std::vector<CriterionResult> run_poly_invariants(const VerifyOptions& opt);

// All numbered criteria in order 1..13.
std::vector<CriterionResult> run_all_criteria(const VerifyOptions& opt);

}  // namespace cyclotomix
