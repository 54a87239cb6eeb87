#pragma once

// Independent reference computations used to cross-check the library.
// Nothing here calls the routine it is meant to verify.

#include <vector>

#include "nilcone/fitting.hpp"
#include "nilcone/forms.hpp"
#include "nilcone/higgs.hpp"
#include "nilcone/sheaves.hpp"

namespace nilcone::checks {

/// Cofactor expansion along the first row.
Poly laplace_determinant(const fitting::Matrix<Poly>& m);

/// Monic gcd of every (b-h)-minor, enumerated by bitmask and expanded with
/// laplace_determinant.
Poly brute_force_fitting_generator(const fitting::PresentedModule& m, int h);

/// Entry-wise product of the 2x2 matrix (p, q; r, -p) with itself.
std::vector<BinaryForm> square_entries(const HiggsField& phi);

/// φ applied to the column e, written out entry by entry.
std::vector<BinaryForm> apply_field(const HiggsField& phi, const std::vector<BinaryForm>& e);

/// Condition (2) read directly off the matrix: with G the gcd of the
/// entries of λ, every column of φ is e·G·x for a form x.
bool image_condition(const HiggsField& phi, const LineSubsheaf& lambda);

/// Conditions (1)-(3) without the canonical form.
bool satisfies_conditions(const HiggsField& phi, const LineSubsheaf& lambda);

/// Distinct fiber points in component m found by trying λ = g·kernel for
/// every product g of `count` linear forms drawn with repetition from
/// `pool`. Returned as canonical representatives, sorted.
std::vector<LineSubsheaf> candidate_fiber(const HiggsField& phi, const LineSubsheaf& kernel, int m,
                                          const std::vector<BinaryForm>& pool);

/// Canonicalizes, sorts and removes duplicates; the order matches
/// candidate_fiber().
void sort_points(std::vector<LineSubsheaf>& points);

/// Number of integer vectors 0 <= c_i <= caps_i with sum total.
long count_bounded_vectors(const std::vector<int>& caps, int total);

/// ad - bc for the column (az + bw; cz + dw), from raw coefficients.
Rational coefficient_determinant(const BinaryForm& top, const BinaryForm& bottom);

}  // namespace nilcone::checks
