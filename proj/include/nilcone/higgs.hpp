#pragma once

// Traceless twisted endomorphisms φ = (p, q; r, -p) of E = O(d) ⊕ O(-d)
// with values in E ⊗ O(ell).
//
// A nonzero nilpotent φ factors as E -> E/λ̃ ≅ λ̃^{-1} -h-> λ̃ ⊗ L -> E ⊗ L
// where λ̃ = ker φ is embedded by a primitive column (s; t). In matrix form
// φ = h (st, -s^2; t^2, -st); canonical_form() recovers (s, t, h).

#include <string>

#include "nilcone/forms.hpp"
#include "nilcone/sheaves.hpp"

namespace nilcone {

class HiggsField {
 public:
  /// Throws InputError for d < 0, odd or negative ell, or entries whose
  /// degrees miss their slots (p: ell, q: ell + 2d, r: ell - 2d).
  HiggsField(int d, int ell, BinaryForm p, BinaryForm q, BinaryForm r);

  int d() const { return d_; }
  int ell() const { return ell_; }
  const BinaryForm& p() const { return p_; }
  const BinaryForm& q() const { return q_; }
  const BinaryForm& r() const { return r_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero() && r_.is_zero(); }

  SplitBundle bundle() const { return SplitBundle::sl2(d_); }
  /// φ : E -> E ⊗ L.
  SheafMap as_map() const;
  /// The same matrix read as E ⊗ L -> E ⊗ L^2.
  SheafMap shifted_map() const;
  /// -det φ = p^2 + qr, a form of degree 2 ell.
  BinaryForm negated_determinant() const;

  friend bool operator==(const HiggsField&, const HiggsField&) = default;

  std::string to_string() const;

 private:
  int d_;
  int ell_;
  BinaryForm p_;
  BinaryForm q_;
  BinaryForm r_;
};

/// Kernel direction (s, t) with gcd 1, kernel O(k), and cofactor h of
/// degree 2k + ell.
struct CanonicalNilpotent {
  BinaryForm s;
  BinaryForm t;
  BinaryForm h;
  int k = 0;
  friend bool operator==(const CanonicalNilpotent&, const CanonicalNilpotent&) = default;
};

/// φ ⊗ L ∘ φ as a map E -> E ⊗ L^2.
SheafMap composed_square(const HiggsField& phi);

/// p^2 + qr = 0, cross-checked against composed_square(phi) being zero.
bool is_nilpotent(const HiggsField& phi);

/// Canonical (s, t, h, k) of a nonzero nilpotent field. The first nonzero
/// coefficient of s (of t when s = 0) is 1; h absorbs the scalar. Throws
/// InputError for zero or non-nilpotent fields.
CanonicalNilpotent canonical_form(const HiggsField& phi);

/// h (st, -s^2; t^2, -st).
HiggsField reassemble(const CanonicalNilpotent& c, int d, int ell);

/// ker φ ⊂ E, always saturated.
LineSubsheaf kernel_subbundle(const HiggsField& phi);

/// div(h), equal to the divisor of gcd(p, q, r).
DivisorP1 irregularity(const HiggsField& phi);

/// The nilpotent field with kernel `kernel` (primitive, target O(d) ⊕ O(-d))
/// and cofactor h ∈ H^0(O(2k + ell)). Throws InputError for h = 0, a
/// non-primitive kernel or inconsistent degrees.
HiggsField build_from(const LineSubsheaf& kernel, const BinaryForm& h, int ell);

}  // namespace nilcone
