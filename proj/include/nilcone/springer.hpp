#pragma once

// Fibers of the partial Springer resolution μ over a nilpotent SL2 Higgs
// field on P^1. A point over (E, φ) in component m is a line subsheaf
// λ = O(m) ⊂ E with
//   (1) λ ⊂ ker φ,
//   (2) im φ ⊂ (λ ⊗ L)(-df(λ)),
//   (3) h^0(λ^2 ⊗ L) >= 1, i.e. 2m + ell >= 0 on P^1.
// Writing λ = g · ker φ, condition (2) becomes g^2 | h for the cofactor h of
// the canonical form, so fiber points in component m are the effective D
// with 2D <= div(h) and deg D = k - m.

#include <optional>
#include <string>
#include <vector>

#include "nilcone/higgs.hpp"

namespace nilcone::springer {

struct ConditionCheck {
  /// 0 when every condition holds, otherwise the first failing one (1..3).
  int failed_condition = 0;
  /// A nonzero form witnessing the failure: the offending entry of φ ∘ λ
  /// for (1), g^2 for (2).
  std::optional<BinaryForm> witness;
  std::string reason;

  bool passed() const { return failed_condition == 0; }
};

/// Throws InputError if φ is zero or not nilpotent, or if λ does not sit in
/// the bundle of φ.
ConditionCheck check_conditions(const HiggsField& phi, const LineSubsheaf& lambda);

class FiberPoint {
 public:
  /// Throws InputError unless (phi, lambda) satisfies all three conditions.
  FiberPoint(HiggsField phi, LineSubsheaf lambda);

  const HiggsField& higgs() const { return higgs_; }
  const LineSubsheaf& lambda() const { return lambda_; }
  int component_degree() const { return lambda_.source_degree(); }

 private:
  HiggsField higgs_;
  LineSubsheaf lambda_;
};

struct FiberDescription {
  HiggsField higgs;
  int component_degree;
  /// Canonical representatives, sorted.
  std::vector<FiberPoint> points;
  /// Set when h has a non-linear factor of multiplicity >= 2 whose
  /// sub-divisors could not be enumerated over Q; `points` then lists only
  /// the strata built from linear factors.
  bool unresolved = false;
};

FiberDescription enumerate_fiber(const HiggsField& phi, int m);

/// irr(φ) is multiplicity-free.
bool is_globally_regular(const HiggsField& phi);

/// h^0(O(2m + ell)) = 2m + ell + 1. Throws InputError when 2m + ell < 0.
int section_space_dimension(int m, int ell);

}  // namespace nilcone::springer
