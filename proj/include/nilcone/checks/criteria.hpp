#pragma once

// Acceptance criteria and the invariant corpus, each packaged as a check
// that reports a verdict and a one-line summary.

#include <cstdint>
#include <string>
#include <vector>

namespace nilcone::checks {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20261016;

/// Library half of the worked example: the fiber over [[0, z^2], [0, 0]] in
/// component -1 and the condition (2) sweep over (s; 0).
CheckResult worked_example_fiber();
CheckResult globally_regular_singleton(std::uint64_t seed = kDefaultSeed);
CheckResult fiber_counts_and_divisibility(std::uint64_t seed = kDefaultSeed);
CheckResult fitting_suite(std::uint64_t seed = kDefaultSeed);
CheckResult census_golden_values();
CheckResult quasimap_example(std::uint64_t seed = kDefaultSeed);
CheckResult canonical_round_trip(std::uint64_t seed = kDefaultSeed);

/// Forms-level identities: gcd, exact division, factorization, charts.
CheckResult form_identities(std::uint64_t seed = kDefaultSeed);
/// Normalization, rescaling and defect bookkeeping on random subsheaves.
CheckResult subsheaf_identities(std::uint64_t seed = kDefaultSeed);

/// Every check above, in order.
std::vector<CheckResult> invariant_suite(std::uint64_t seed = kDefaultSeed);

}  // namespace nilcone::checks
