#include "nilcone/higgs.hpp"

#include <sstream>
#include <stdexcept>

#include "nilcone/errors.hpp"

namespace nilcone {

namespace {

void check_slot(const char* name, const BinaryForm& f, int expected) {
  if (expected < 0) {
    if (!f.is_zero()) {
      throw InputError(std::string("slot ") + name + " has negative degree " +
                       std::to_string(expected) + " and must be zero");
    }
    return;
  }
  if (f.degree() != expected) {
    throw InputError(std::string("slot ") + name + " expects degree " + std::to_string(expected) +
                     ", got " + std::to_string(f.degree()));
  }
}

BinaryForm retag(const BinaryForm& f, int degree) { return f.is_zero() ? BinaryForm::zero(degree) : f; }

}  // namespace

HiggsField::HiggsField(int d, int ell, BinaryForm p, BinaryForm q, BinaryForm r)
    : d_(d), ell_(ell), p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (d_ < 0) throw InputError("E = O(d) ⊕ O(-d) requires d >= 0");
  if (ell_ < 0) throw InputError("twisting degree ell must be nonnegative");
  if (ell_ % 2 != 0) throw InputError("twisting degree ell must be even, got " + std::to_string(ell_));
  check_slot("p", p_, ell_);
  check_slot("q", q_, ell_ + 2 * d_);
  check_slot("r", r_, ell_ - 2 * d_);
  r_ = retag(r_, ell_ - 2 * d_);
}

SheafMap HiggsField::as_map() const {
  return SheafMap(bundle(), bundle().twisted(ell_), {{p_, q_}, {r_, -p_}});
}

SheafMap HiggsField::shifted_map() const {
  return SheafMap(bundle().twisted(ell_), bundle().twisted(2 * ell_), {{p_, q_}, {r_, -p_}});
}

BinaryForm HiggsField::negated_determinant() const { return p_ * p_ + q_ * r_; }

std::string HiggsField::to_string() const {
  std::ostringstream os;
  os << "[[" << p_.to_string() << ", " << q_.to_string() << "], [" << r_.to_string() << ", "
     << (-p_).to_string() << "]] on O(" << d_ << ") ⊕ O(" << -d_ << "), L = O(" << ell_ << ")";
  return os.str();
}

SheafMap composed_square(const HiggsField& phi) { return compose(phi.shifted_map(), phi.as_map()); }

bool is_nilpotent(const HiggsField& phi) {
  const bool by_determinant = phi.negated_determinant().is_zero();
  const bool by_square = composed_square(phi).is_zero();
  if (by_determinant != by_square) throw std::logic_error("Cayley-Hamilton check failed");
  return by_determinant;
}

CanonicalNilpotent canonical_form(const HiggsField& phi) {
  if (phi.is_zero()) throw InputError("canonical form of the zero Higgs field");
  if (!is_nilpotent(phi)) throw InputError("Higgs field is not nilpotent");
  const int d = phi.d();
  // Both columns lie in the kernel line; saturate a nonzero one.
  BinaryForm top = phi.p();
  BinaryForm bottom = phi.r();
  if (top.is_zero() && bottom.is_zero()) {
    top = phi.q();
    bottom = -phi.p();
  }
  const BinaryForm g = gcd(top, bottom);
  BinaryForm s = top.is_zero() ? BinaryForm::zero(top.degree() - g.degree()) : *exact_div(top, g);
  BinaryForm t = bottom.is_zero() ? BinaryForm::zero(bottom.degree() - g.degree()) : *exact_div(bottom, g);
  const Rational scale = 1 / (s.is_zero() ? t.first_nonzero() : s.first_nonzero());
  s = scale * s;
  t = scale * t;
  // The column entries live in O(d + ell) and O(-d + ell); the kernel slots
  // are O(d - k) and O(-d - k).
  const int k = s.is_zero() ? -d - t.degree() : d - s.degree();
  if (!s.is_zero() && !t.is_zero() && -d - t.degree() != k) {
    throw std::logic_error("kernel slot degrees disagree");
  }
  s = retag(s, d - k);
  t = retag(t, -d - k);
  const auto h = s.is_zero() ? exact_div(phi.r(), t * t) : exact_div(-phi.q(), s * s);
  if (!h) throw std::logic_error("cofactor does not divide");
  CanonicalNilpotent out{s, t, *h, k};
  if (!(reassemble(out, d, phi.ell()) == phi)) throw std::logic_error("canonical form does not reassemble");
  return out;
}

HiggsField reassemble(const CanonicalNilpotent& c, int d, int ell) {
  return HiggsField(d, ell, c.h * c.s * c.t, -(c.h * c.s * c.s), c.h * c.t * c.t);
}

LineSubsheaf kernel_subbundle(const HiggsField& phi) {
  const auto c = canonical_form(phi);
  return LineSubsheaf(c.k, phi.bundle(), {c.s, c.t});
}

DivisorP1 irregularity(const HiggsField& phi) {
  const auto c = canonical_form(phi);
  DivisorP1 out(c.h);
  if (!(out.form() == gcd({phi.p(), phi.q(), phi.r()}))) {
    throw std::logic_error("irregularity disagrees with gcd(p, q, r)");
  }
  return out;
}

HiggsField build_from(const LineSubsheaf& kernel, const BinaryForm& h, int ell) {
  if (!kernel.target().is_sl2()) throw InputError("kernel must sit in O(d) ⊕ O(-d)");
  if (h.is_zero()) throw InputError("cofactor h must be nonzero");
  const int k = kernel.source_degree();
  if (2 * k + ell < 0) throw InputError("cofactor degree 2k + ell is negative");
  if (h.degree() != 2 * k + ell) {
    throw InputError("cofactor expects degree " + std::to_string(2 * k + ell) + ", got " +
                     std::to_string(h.degree()));
  }
  if (!defect(kernel).is_empty()) throw InputError("kernel embedding must be primitive");
  const CanonicalNilpotent c{kernel.embedding()[0], kernel.embedding()[1], h, k};
  return reassemble(c, kernel.target().twist(0), ell);
}

}  // namespace nilcone
