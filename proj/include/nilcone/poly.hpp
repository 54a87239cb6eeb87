#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nilcone/rational.hpp"

namespace nilcone {

/// Dense univariate polynomial over Q, coefficients ascending in the
/// variable. Trailing zeros are always trimmed, so the zero polynomial has
/// an empty coefficient list and degree -1.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  /// The polynomial t.
  static Poly variable();
  /// (t - root)^power, handy for building torsion modules.
  static Poly linear_power(const Rational& root, int power);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  /// Scaled to leading coefficient 1; zero stays zero.
  Poly monic() const;
  Poly derivative() const;
  Rational evaluate(const Rational& x) const;
  /// this(inner(t)).
  Poly compose(const Poly& inner) const;
  /// Largest e with t^e dividing this; requires nonzero.
  int valuation_at_zero() const;

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& a);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

}  // namespace nilcone
