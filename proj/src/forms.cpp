#include "nilcone/forms.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "nilcone/errors.hpp"

namespace nilcone {

BinaryForm::BinaryForm() : degree_(0), coeffs_{Rational(1)} {}

BinaryForm::BinaryForm(int degree, std::vector<Rational> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0) throw InputError("binary form of negative degree must be zero");
  if (coeffs_.size() != static_cast<std::size_t>(degree) + 1) {
    throw InputError("binary form of degree " + std::to_string(degree) + " needs " +
                     std::to_string(degree + 1) + " coefficients, got " +
                     std::to_string(coeffs_.size()));
  }
}

BinaryForm BinaryForm::zero(int degree) {
  BinaryForm f;
  f.degree_ = degree;
  f.coeffs_.assign(degree < 0 ? 0 : static_cast<std::size_t>(degree) + 1, Rational(0));
  return f;
}

BinaryForm BinaryForm::constant(const Rational& c) { return BinaryForm(0, {c}); }

BinaryForm BinaryForm::z() { return linear(1, 0); }

BinaryForm BinaryForm::w() { return linear(0, 1); }

BinaryForm BinaryForm::monomial(int degree, int w_exponent, const Rational& c) {
  if (w_exponent < 0 || w_exponent > degree) throw InputError("monomial exponent out of range");
  BinaryForm f = zero(degree);
  f.coeffs_[w_exponent] = c;
  return f;
}

BinaryForm BinaryForm::linear(const Rational& a, const Rational& b) { return BinaryForm(1, {a, b}); }

BinaryForm BinaryForm::homogenize(const Poly& p, int degree, Chart chart) {
  if (p.degree() > degree) throw InputError("homogenize: polynomial degree exceeds form degree");
  BinaryForm f = zero(degree);
  for (int j = 0; j <= p.degree(); ++j) {
    // Chart::W: t^j -> z^j w^(n-j); Chart::Z: s^j -> z^(n-j) w^j.
    const int w_exp = chart == Chart::W ? degree - j : j;
    f.coeffs_[w_exp] = p.coeff(j);
  }
  return f;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational BinaryForm::coeff(int w_exponent) const {
  if (w_exponent < 0 || w_exponent > degree_) return 0;
  return coeffs_[w_exponent];
}

Poly BinaryForm::dehomogenize(Chart chart) const {
  if (degree_ < 0) return {};
  std::vector<Rational> out(coeffs_.size());
  for (int i = 0; i <= degree_; ++i) {
    const int power = chart == Chart::W ? degree_ - i : i;
    out[power] = coeffs_[i];
  }
  return Poly(std::move(out));
}

int BinaryForm::order_at_infinity(Chart chart) const {
  if (is_zero()) throw InputError("order of the zero form");
  if (chart == Chart::W) {
    int e = 0;
    while (coeffs_[e] == 0) ++e;
    return e;
  }
  int e = 0;
  while (coeffs_[degree_ - e] == 0) ++e;
  return e;
}

const Rational& BinaryForm::first_nonzero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return c;
  }
  throw InputError("first nonzero coefficient of the zero form");
}

BinaryForm BinaryForm::normalized() const {
  if (is_zero()) return *this;
  return Rational(1 / first_nonzero()) * *this;
}

BinaryForm BinaryForm::derivative_z() const {
  if (degree_ <= 0) return zero(degree_ - 1);
  BinaryForm out = zero(degree_ - 1);
  for (int i = 0; i < degree_; ++i) out.coeffs_[i] = coeffs_[i] * (degree_ - i);
  return out;
}

BinaryForm BinaryForm::derivative_w() const {
  if (degree_ <= 0) return zero(degree_ - 1);
  BinaryForm out = zero(degree_ - 1);
  for (int i = 1; i <= degree_; ++i) out.coeffs_[i - 1] = coeffs_[i] * i;
  return out;
}

Rational BinaryForm::evaluate(const Rational& z, const Rational& w) const {
  Rational acc = 0;
  for (int i = 0; i <= degree_; ++i) {
    Rational term = coeffs_[i];
    if (term == 0) continue;
    for (int k = 0; k < degree_ - i; ++k) term *= z;
    for (int k = 0; k < i; ++k) term *= w;
    acc += term;
  }
  return acc;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw InputError("negative power of a form");
  BinaryForm out;
  for (int i = 0; i < e; ++i) out = out * *this;
  return out;
}

BinaryForm BinaryForm::operator-() const { return Rational(-1) * *this; }

BinaryForm operator+(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree_ != g.degree_) {
    throw InputError("cannot add forms of degrees " + std::to_string(f.degree_) + " and " +
                     std::to_string(g.degree_));
  }
  BinaryForm out = f;
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) out.coeffs_[i] += g.coeffs_[i];
  return out;
}

BinaryForm operator-(const BinaryForm& f, const BinaryForm& g) { return f + (-g); }

BinaryForm operator*(const BinaryForm& f, const BinaryForm& g) {
  const int n = f.degree_ + g.degree_;
  BinaryForm out = BinaryForm::zero(n);
  if (f.degree_ < 0 || g.degree_ < 0) return out;
  for (int i = 0; i <= f.degree_; ++i) {
    if (f.coeffs_[i] == 0) continue;
    for (int j = 0; j <= g.degree_; ++j) out.coeffs_[i + j] += f.coeffs_[i] * g.coeffs_[j];
  }
  return out;
}

BinaryForm operator*(const Rational& c, const BinaryForm& f) {
  BinaryForm out = f;
  for (auto& x : out.coeffs_) x *= c;
  return out;
}

std::string BinaryForm::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i <= degree_; ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const int ez = degree_ - i;
    const int ew = i;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool bare = ez == 0 && ew == 0;
    if (mag != 1 || bare) os << mag.get_str();
    if (ez > 0) os << 'z' << (ez > 1 ? "^" + std::to_string(ez) : "");
    if (ew > 0) os << 'w' << (ew > 1 ? "^" + std::to_string(ew) : "");
    first = false;
  }
  return os.str();
}

bool canonical_less(const BinaryForm& f, const BinaryForm& g) {
  if (f.degree() != g.degree()) return f.degree() < g.degree();
  return std::lexicographical_compare(f.coeffs().begin(), f.coeffs().end(), g.coeffs().begin(),
                                      g.coeffs().end());
}

BinaryForm add(const BinaryForm& f, const BinaryForm& g) { return f + g; }

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) { return f * g; }

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g, Chart chart) {
  const bool fz = f.is_zero();
  const bool gz = g.is_zero();
  if (fz && gz) throw InputError("gcd of two zero forms");
  if (fz) return g.normalized();
  if (gz) return f.normalized();
  const Poly common = gcd(f.dehomogenize(chart), g.dehomogenize(chart));
  const int at_infinity = std::min(f.order_at_infinity(chart), g.order_at_infinity(chart));
  return BinaryForm::homogenize(common, common.degree() + at_infinity, chart).normalized();
}

BinaryForm gcd(const std::vector<BinaryForm>& forms) {
  std::optional<BinaryForm> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = acc ? gcd(*acc, f) : f.normalized();
  }
  if (!acc) throw InputError("gcd of zero forms only");
  return *acc;
}

std::optional<BinaryForm> exact_div(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw InputError("division by the zero form");
  const int qdeg = f.degree() - g.degree();
  if (qdeg < 0) return std::nullopt;
  if (f.is_zero()) return BinaryForm::zero(qdeg);
  // Solve the convolution f = q * g coefficientwise, pivoting on the first
  // nonzero coefficient of g, then confirm every equation.
  int pivot = 0;
  while (g.coeff(pivot) == 0) ++pivot;
  const Rational inv = 1 / g.coeff(pivot);
  std::vector<Rational> q(static_cast<std::size_t>(qdeg) + 1);
  for (int k = 0; k <= qdeg; ++k) {
    Rational acc = f.coeff(k + pivot);
    for (int i = 0; i < k; ++i) acc -= q[i] * g.coeff(k + pivot - i);
    q[k] = acc * inv;
  }
  BinaryForm quotient(qdeg, std::move(q));
  if (quotient * g != f) return std::nullopt;
  return quotient;
}

bool divides(const BinaryForm& g, const BinaryForm& f) { return exact_div(f, g).has_value(); }

bool is_squarefree(const BinaryForm& f) {
  if (f.is_zero()) throw InputError("squarefree test of the zero form");
  for (Chart chart : {Chart::W, Chart::Z}) {
    const Poly u = f.dehomogenize(chart);
    if (gcd(u, u.derivative()).degree() > 0) return false;
  }
  return true;
}

DivisorP1::DivisorP1(const BinaryForm& f) {
  if (f.is_zero()) throw InputError("divisor of the zero form");
  form_ = f.normalized();
}

DivisorP1 DivisorP1::point(const Rational& a, const Rational& b) {
  if (a == 0 && b == 0) throw InputError("[0 : 0] is not a point");
  // Vanishes at [a : b].
  return DivisorP1(BinaryForm::linear(b, -a));
}

DivisorP1 operator+(const DivisorP1& a, const DivisorP1& b) { return DivisorP1(a.form_ * b.form_); }

DivisorP1 DivisorP1::times(int k) const { return DivisorP1(form_.pow(k)); }

bool DivisorP1::leq(const DivisorP1& other) const { return divides(form_, other.form_); }

std::string DivisorP1::to_string() const {
  return is_empty() ? "div(1)" : "div(" + form_.to_string() + ")";
}

namespace {

// Yun's algorithm over Q: returns monic squarefree a_i with u = c * prod a_i^i.
std::vector<Poly> squarefree_decomposition(const Poly& u) {
  std::vector<Poly> parts;
  if (u.degree() <= 0) return parts;
  const Poly du = u.derivative();
  const Poly a0 = gcd(u, du);
  Poly b = divmod(u, a0).first;
  Poly c = divmod(du, a0).first;
  Poly d = c - b.derivative();
  while (b.degree() > 0) {
    if (static_cast<int>(parts.size()) >= u.degree()) throw std::logic_error("squarefree decomposition diverged");
    const Poly a = gcd(b, d);
    parts.push_back(a);
    b = divmod(b, a).first;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return parts;
}

std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::map<Integer, int> primes;
  Integer m = n;
  for (Integer p = 2; p * p <= m; ++p) {
    while (m % p == 0) {
      ++primes[p];
      m /= p;
    }
  }
  if (m > 1) ++primes[m];
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : primes) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

// Rational roots of a squarefree polynomial; the roots are removed from `u`.
std::vector<Rational> extract_rational_roots(Poly& u) {
  std::vector<Rational> roots;
  while (u.degree() > 0 && u.coeff(0) == 0) {
    roots.emplace_back(0);
    u = divmod(u, Poly::variable()).first;
  }
  if (u.degree() <= 0) return roots;
  Integer lcm_den = 1;
  for (const auto& c : u.coeffs()) lcm_den = lcm(lcm_den, Integer(c.get_den()));
  Integer content = 0;
  std::vector<Integer> ints;
  for (const auto& c : u.coeffs()) {
    ints.emplace_back(Rational(c * lcm_den).get_num());
    content = gcd(content, ints.back());
  }
  for (auto& x : ints) x /= content;
  const auto nums = positive_divisors(ints.front());
  const auto dens = positive_divisors(ints.back());
  std::vector<Rational> candidates;
  for (const auto& p : nums) {
    for (const auto& q : dens) {
      Rational r(p, q);
      r.canonicalize();
      candidates.push_back(r);
      candidates.emplace_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& r : candidates) {
    if (u.degree() <= 0) break;
    if (u.evaluate(r) == 0) {
      roots.push_back(r);
      u = divmod(u, Poly({Rational(-r), Rational(1)})).first;
    }
  }
  return roots;
}

}  // namespace

std::vector<DivisorFactor> factor_into_divisors(const BinaryForm& f) {
  if (f.is_zero()) throw InputError("factorization of the zero form");
  std::vector<DivisorFactor> out;
  const int at_w = f.order_at_infinity(Chart::W);
  if (at_w > 0) out.push_back({DivisorP1(BinaryForm::w()), at_w, false});
  const auto parts = squarefree_decomposition(f.dehomogenize(Chart::W));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int multiplicity = static_cast<int>(i) + 1;
    Poly rest = parts[i];
    for (const auto& r : extract_rational_roots(rest)) {
      out.push_back({DivisorP1(BinaryForm::linear(1, -r)), multiplicity, false});
    }
    if (rest.degree() > 0) {
      out.push_back({DivisorP1(BinaryForm::homogenize(rest, rest.degree(), Chart::W)),
                     multiplicity, true});
    }
  }
  std::sort(out.begin(), out.end(), [](const DivisorFactor& a, const DivisorFactor& b) {
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    if (a.symbolic != b.symbolic) return !a.symbolic;
    return canonical_less(a.divisor.form(), b.divisor.form());
  });
  return out;
}

}  // namespace nilcone
