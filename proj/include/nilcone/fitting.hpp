#pragma once

// Fitting ideals of finitely presented modules over the PID Q[t].
//
// A module M = coker(A : R^a -> R^b) has F^h(M) generated by the
// (b-h) x (b-h) minors of A. Over a PID every ideal is principal, so an
// ideal is stored as its monic generator.

#include <optional>
#include <vector>

#include "nilcone/poly.hpp"
#include "nilcone/rational.hpp"

namespace nilcone::fitting {

template <typename T>
using Matrix = std::vector<std::vector<T>>;

class PresentedModule {
 public:
  /// `entries` is b rows of a polynomials each. Throws InputError on a
  /// shape mismatch.
  PresentedModule(int b, int a, Matrix<Poly> entries);

  /// R / (f).
  static PresentedModule cyclic(const Poly& f);
  /// R^b with no relations.
  static PresentedModule free(int b);

  int target_rank() const { return b_; }
  int source_rank() const { return a_; }
  const Matrix<Poly>& matrix() const { return entries_; }

 private:
  int b_;
  int a_;
  Matrix<Poly> entries_;
};

class PrincipalIdeal {
 public:
  static PrincipalIdeal zero() { return PrincipalIdeal(Poly()); }
  static PrincipalIdeal unit() { return PrincipalIdeal(Poly::constant(1)); }
  /// Ideal generated by f; the generator is made monic.
  static PrincipalIdeal generated_by(const Poly& f) { return PrincipalIdeal(f.monic()); }

  const Poly& generator() const { return generator_; }
  bool is_zero() const { return generator_.is_zero(); }
  bool is_unit() const { return generator_.degree() == 0; }
  /// this ⊆ other.
  bool contained_in(const PrincipalIdeal& other) const { return divides(other.generator_, generator_); }

  friend PrincipalIdeal operator*(const PrincipalIdeal& x, const PrincipalIdeal& y) {
    return generated_by(x.generator_ * y.generator_);
  }
  friend PrincipalIdeal operator+(const PrincipalIdeal& x, const PrincipalIdeal& y) {
    return PrincipalIdeal(gcd(x.generator_, y.generator_));
  }
  friend bool operator==(const PrincipalIdeal&, const PrincipalIdeal&) = default;

 private:
  explicit PrincipalIdeal(Poly g) : generator_(std::move(g)) {}
  Poly generator_;
};

/// Determinant of a square polynomial matrix (fraction-free elimination).
Poly determinant(Matrix<Poly> m);

/// F^h(M). Unit ideal when b - h <= 0 (the empty minor is 1); zero ideal when
/// b - h > a or every (b-h)-minor vanishes.
PrincipalIdeal fitting_ideal(const PresentedModule& m, int h);

/// Largest h with F^h(M) = 0, or nullopt when F^0(M) is already nonzero.
std::optional<int> fitting_rank(const PresentedModule& m);

/// Block-diagonal presentation of M ⊕ N.
PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n);

/// Base change along t -> u(t), i.e. M ⊗ R via the substitution.
PresentedModule substitute(const PresentedModule& m, const Poly& u);

/// A presentation over the residue field Q after t -> c.
class ScalarPresentation {
 public:
  ScalarPresentation(int b, int a, Matrix<Rational> entries);
  int target_rank() const { return b_; }
  int source_rank() const { return a_; }
  const Matrix<Rational>& matrix() const { return entries_; }
  int rank() const;

 private:
  int b_;
  int a_;
  Matrix<Rational> entries_;
};

ScalarPresentation base_change_evaluate(const PresentedModule& m, const Rational& c);

/// Ideals of a field are 0 or the whole field.
enum class FieldIdeal { Zero, Unit };

FieldIdeal fitting_ideal(const ScalarPresentation& m, int h);

/// Image of an ideal of Q[t] in Q under t -> c.
FieldIdeal evaluate(const PrincipalIdeal& ideal, const Rational& c);

}  // namespace nilcone::fitting
