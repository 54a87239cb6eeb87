#pragma once

// Random inputs for property checks. Everything is seeded explicitly so
// runs are reproducible.

#include <random>
#include <vector>

#include "nilcone/fitting.hpp"
#include "nilcone/forms.hpp"
#include "nilcone/higgs.hpp"
#include "nilcone/sheaves.hpp"

namespace nilcone::checks {

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi);
Rational random_rational(Rng& rng, int span = 5);
BinaryForm random_form(Rng& rng, int degree, int span = 5);
BinaryForm random_nonzero_form(Rng& rng, int degree);
/// a z + b w with small integer a, b not both zero.
BinaryForm random_linear_form(Rng& rng);
/// Product of `count` random linear forms.
BinaryForm random_split_form(Rng& rng, int count);

/// A nilpotent field produced by build_from together with the data it was
/// built from.
struct NilpotentSample {
  HiggsField phi;
  LineSubsheaf kernel;
  BinaryForm h;
  /// The linear forms multiplied together to make h (up to scalar), with
  /// repetition.
  std::vector<BinaryForm> h_factors;
};

enum class CofactorShape { Squarefree, Repeated, Any };

/// d in [0, 2], ell even in [0, 8], deg h <= max_h_degree. h is a scalar
/// times a product of rational linear forms shaped as requested.
NilpotentSample random_nilpotent(Rng& rng, CofactorShape shape, int max_h_degree = 6);

/// A traceless field on O(d) ⊕ O(-d) with random entries; nilpotent only by
/// accident.
HiggsField random_traceless(Rng& rng, int d, int ell);

/// (p, q, r) = h (st, -s^2, t^2) multiplied out here rather than through
/// build_from; s, t need not be coprime.
HiggsField product_nilpotent(Rng& rng, int d, int ell);

Poly random_poly(Rng& rng, int max_degree = 2, int span = 3);
fitting::PresentedModule random_module(Rng& rng, int max_b = 3, int max_a = 3);

/// Applies a random elementary operation: row or column addition, row or
/// column swap, scaling by a unit, appending a combination of existing
/// columns, or stabilizing with a unit block.
fitting::PresentedModule random_elementary_step(Rng& rng, const fitting::PresentedModule& m);

/// A random column O(m) -> O(d) ⊕ O(-d) with a nonempty defect in general:
/// a split cofactor times a random primitive-or-not column.
LineSubsheaf random_line_subsheaf(Rng& rng);

}  // namespace nilcone::checks
