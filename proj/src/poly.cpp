#include "nilcone/poly.hpp"

#include <sstream>

#include "nilcone/errors.hpp"

namespace nilcone {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::variable() { return Poly({Rational(0), Rational(1)}); }

Poly Poly::linear_power(const Rational& root, int power) {
  Poly out = constant(1);
  const Poly factor({Rational(-root), Rational(1)});
  for (int i = 0; i < power; ++i) out = out * factor;
  return out;
}

Rational Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Rational inv = 1 / leading();
  return inv * *this;
}

Poly Poly::derivative() const {
  std::vector<Rational> out;
  for (int i = 1; i <= degree(); ++i) out.push_back(coeffs_[i] * i);
  return Poly(std::move(out));
}

Rational Poly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& inner) const {
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * inner + constant(*it);
  }
  return acc;
}

int Poly::valuation_at_zero() const {
  if (is_zero()) throw InputError("valuation of the zero polynomial");
  int e = 0;
  while (coeffs_[e] == 0) ++e;
  return e;
}

Poly Poly::operator-() const { return Rational(-1) * *this; }

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.coeffs_.size()) out[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) out[i] += b.coeffs_[i];
  }
  return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly operator*(const Rational& c, const Poly& a) {
  std::vector<Rational> out(a.coeffs_);
  for (auto& x : out) x *= c;
  return Poly(std::move(out));
}

std::string Poly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i > 0) os << var;
    if (i > 1) os << '^' << i;
    first = false;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly(), a};
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db + 1));
  const Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= db; --i) {
    const Rational c = rem[i] * inv;
    quot[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] -= c * b.coeffs()[j];
  }
  return {Poly(std::move(quot)), Poly(std::move(rem))};
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a;
  Poly y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return divmod(a, d).second.is_zero();
}

}  // namespace nilcone
