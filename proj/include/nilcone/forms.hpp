#pragma once

// Homogeneous binary forms over Q and effective divisors on the projective
// line. A form of degree n is stored as c_0..c_n meaning sum c_i z^(n-i) w^i,
// i.e. ascending in the w-exponent.

#include <optional>
#include <string>
#include <vector>

#include "nilcone/poly.hpp"
#include "nilcone/rational.hpp"

namespace nilcone {

/// Affine charts of P^1. Chart::W is {w != 0} with coordinate t = z/w,
/// Chart::Z is {z != 0} with coordinate s = w/z.
enum class Chart { W, Z };

class BinaryForm {
 public:
  /// The constant form 1.
  BinaryForm();
  /// Throws InputError unless coeffs.size() == degree + 1. Negative degrees
  /// are only allowed through zero().
  BinaryForm(int degree, std::vector<Rational> coeffs);

  /// Zero form carrying a degree tag. Negative tags are allowed: they stand
  /// for slots Hom(O(a), O(b)) with b < a, which only contain zero.
  static BinaryForm zero(int degree);
  static BinaryForm constant(const Rational& c);
  static BinaryForm z();
  static BinaryForm w();
  /// c z^(degree - w_exponent) w^w_exponent.
  static BinaryForm monomial(int degree, int w_exponent, const Rational& c = 1);
  /// a z + b w.
  static BinaryForm linear(const Rational& a, const Rational& b);
  /// Inverse of dehomogenize(): the degree-`degree` form restricting to p on
  /// the chart. Requires p.degree() <= degree.
  static BinaryForm homogenize(const Poly& p, int degree, Chart chart);

  int degree() const { return degree_; }
  bool is_zero() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of z^(n-i) w^i; zero outside 0..n.
  Rational coeff(int w_exponent) const;

  /// Restriction to a chart: f(t, 1) or f(1, s).
  Poly dehomogenize(Chart chart) const;
  /// Multiplicity of the point missing from `chart` ([1:0] for Chart::W,
  /// [0:1] for Chart::Z), i.e. the power of w resp. z dividing the form.
  /// Requires a nonzero form.
  int order_at_infinity(Chart chart) const;

  /// Scalar multiple with the first nonzero coefficient equal to 1.
  BinaryForm normalized() const;
  /// First nonzero coefficient in the order z^n, ..., w^n. Requires nonzero.
  const Rational& first_nonzero() const;

  BinaryForm derivative_z() const;
  BinaryForm derivative_w() const;
  Rational evaluate(const Rational& z, const Rational& w) const;
  BinaryForm pow(int e) const;

  BinaryForm operator-() const;
  friend BinaryForm operator+(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator-(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const BinaryForm& f, const BinaryForm& g);
  friend BinaryForm operator*(const Rational& c, const BinaryForm& f);
  /// Strict: zero forms of different degrees compare unequal, use is_zero().
  friend bool operator==(const BinaryForm& f, const BinaryForm& g) = default;

  std::string to_string() const;

 private:
  int degree_ = 0;
  std::vector<Rational> coeffs_;
};

/// Lexicographic order on (degree, coefficients); used only for
/// deterministic sorting.
bool canonical_less(const BinaryForm& f, const BinaryForm& g);

BinaryForm add(const BinaryForm& f, const BinaryForm& g);
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);

/// Normalized gcd, computed on `chart` with the power of the variable lost at
/// infinity tracked separately. Throws InputError if both inputs are zero.
BinaryForm gcd(const BinaryForm& f, const BinaryForm& g, Chart chart = Chart::W);
BinaryForm gcd(const std::vector<BinaryForm>& forms);

/// q with f = q * g, or nullopt when g does not divide f. Throws InputError
/// when g is zero.
std::optional<BinaryForm> exact_div(const BinaryForm& f, const BinaryForm& g);
bool divides(const BinaryForm& g, const BinaryForm& f);

/// Multiplicity-free test; a nonzero constant is squarefree. Checked as
/// gcd(u, u') = 1 for the restriction u on both charts.
bool is_squarefree(const BinaryForm& f);

/// Effective divisor on P^1, represented by its normalized form.
class DivisorP1 {
 public:
  /// Empty divisor.
  DivisorP1() = default;
  /// Divisor of zeros of a nonzero form. Throws InputError on zero.
  explicit DivisorP1(const BinaryForm& f);
  /// The reduced point [a : b].
  static DivisorP1 point(const Rational& a, const Rational& b);

  int degree() const { return form_.degree(); }
  bool is_empty() const { return form_.degree() == 0; }
  const BinaryForm& form() const { return form_; }
  bool is_reduced() const { return is_squarefree(form_); }

  friend DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b);
  DivisorP1 times(int k) const;
  /// Containment D <= E of effective divisors.
  bool leq(const DivisorP1& other) const;

  friend bool operator==(const DivisorP1&, const DivisorP1&) = default;

  std::string to_string() const;

 private:
  BinaryForm form_;
};

/// One entry of a factorization: a linear factor (a reduced point), or an
/// atomic block collecting all factors of degree >= 2 over Q that share a
/// multiplicity.
struct DivisorFactor {
  DivisorP1 divisor;
  int multiplicity = 0;
  bool symbolic = false;
};

/// Squarefree decomposition followed by extraction of rational linear
/// factors. The product of divisor forms raised to their multiplicities
/// equals f up to a nonzero scalar. Throws InputError on the zero form.
std::vector<DivisorFactor> factor_into_divisors(const BinaryForm& f);

}  // namespace nilcone
