#include "nilcone/sheaves.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "nilcone/errors.hpp"
#include "nilcone/fitting.hpp"

namespace nilcone {

SplitBundle SplitBundle::sl2(int d) {
  if (d < 0) throw InputError("O(d) ⊕ O(-d) requires d >= 0");
  return SplitBundle({d, -d});
}

int SplitBundle::total_degree() const { return std::accumulate(twists_.begin(), twists_.end(), 0); }

bool SplitBundle::is_sl2() const { return rank() == 2 && twists_[0] >= 0 && twists_[1] == -twists_[0]; }

SplitBundle SplitBundle::twisted(int ell) const {
  std::vector<int> out = twists_;
  for (auto& a : out) a += ell;
  return SplitBundle(std::move(out));
}

std::string SplitBundle::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < twists_.size(); ++i) os << (i ? " ⊕ " : "") << "O(" << twists_[i] << ")";
  return twists_.empty() ? "0" : os.str();
}

int SheafMap::slot_degree(const SplitBundle& source, const SplitBundle& target, int i, int j) {
  return target.twist(i) - source.twist(j);
}

SheafMap::SheafMap(SplitBundle source, SplitBundle target,
                   std::vector<std::vector<BinaryForm>> entries)
    : source_(std::move(source)), target_(std::move(target)), entries_(std::move(entries)) {
  if (entries_.size() != static_cast<std::size_t>(target_.rank())) {
    throw InputError("map has " + std::to_string(entries_.size()) + " rows, target rank is " +
                     std::to_string(target_.rank()));
  }
  for (int i = 0; i < target_.rank(); ++i) {
    if (entries_[i].size() != static_cast<std::size_t>(source_.rank())) {
      throw InputError("map row " + std::to_string(i) + " has " +
                       std::to_string(entries_[i].size()) + " entries, source rank is " +
                       std::to_string(source_.rank()));
    }
    for (int j = 0; j < source_.rank(); ++j) {
      const int expected = slot_degree(source_, target_, i, j);
      BinaryForm& e = entries_[i][j];
      if (expected < 0) {
        // Only a zero form fits; accept any zero and retag it.
        if (!e.is_zero()) {
          throw InputError("slot (" + std::to_string(i) + "," + std::to_string(j) +
                           ") has negative degree " + std::to_string(expected) +
                           " and must be zero");
        }
        e = BinaryForm::zero(expected);
      } else if (e.degree() != expected) {
        throw InputError("slot (" + std::to_string(i) + "," + std::to_string(j) + ") expects degree " +
                         std::to_string(expected) + ", got " + std::to_string(e.degree()));
      }
    }
  }
}

SheafMap SheafMap::identity(const SplitBundle& e) {
  std::vector<std::vector<BinaryForm>> entries(static_cast<std::size_t>(e.rank()));
  for (int i = 0; i < e.rank(); ++i) {
    for (int j = 0; j < e.rank(); ++j) {
      const int deg = e.twist(i) - e.twist(j);
      entries[i].push_back(i == j ? BinaryForm() : BinaryForm::zero(deg));
    }
  }
  return SheafMap(e, e, std::move(entries));
}

SheafMap SheafMap::zero(const SplitBundle& source, const SplitBundle& target) {
  std::vector<std::vector<BinaryForm>> entries(static_cast<std::size_t>(target.rank()));
  for (int i = 0; i < target.rank(); ++i) {
    for (int j = 0; j < source.rank(); ++j) {
      entries[i].push_back(BinaryForm::zero(slot_degree(source, target, i, j)));
    }
  }
  return SheafMap(source, target, std::move(entries));
}

bool SheafMap::is_zero() const {
  for (const auto& row : entries_) {
    for (const auto& e : row) {
      if (!e.is_zero()) return false;
    }
  }
  return true;
}

SheafMap compose(const SheafMap& g, const SheafMap& f) {
  if (!(f.target() == g.source())) {
    throw InputError("cannot compose: " + f.target().to_string() + " vs " + g.source().to_string());
  }
  const auto& src = f.source();
  const auto& tgt = g.target();
  std::vector<std::vector<BinaryForm>> out(static_cast<std::size_t>(tgt.rank()));
  for (int i = 0; i < tgt.rank(); ++i) {
    for (int j = 0; j < src.rank(); ++j) {
      BinaryForm acc = BinaryForm::zero(SheafMap::slot_degree(src, tgt, i, j));
      for (int k = 0; k < f.target().rank(); ++k) acc = acc + g.entry(i, k) * f.entry(k, j);
      out[i].push_back(std::move(acc));
    }
  }
  return SheafMap(src, tgt, std::move(out));
}

LineSubsheaf::LineSubsheaf(int source_degree, SplitBundle target, std::vector<BinaryForm> embedding)
    : source_degree_(source_degree), target_(std::move(target)), embedding_(std::move(embedding)) {
  // Reuse the slot checks of SheafMap.
  std::vector<std::vector<BinaryForm>> column;
  for (const auto& e : embedding_) column.push_back({e});
  SheafMap checked(SplitBundle({source_degree_}), target_, std::move(column));
  if (checked.is_zero()) throw InputError("line subsheaf needs a nonzero embedding");
  for (std::size_t i = 0; i < embedding_.size(); ++i) embedding_[i] = checked.entry(static_cast<int>(i), 0);
}

LineSubsheaf LineSubsheaf::from_map(const SheafMap& f) {
  if (f.source().rank() != 1) throw InputError("line subsheaf map must have a rank-1 source");
  std::vector<BinaryForm> column;
  for (int i = 0; i < f.target().rank(); ++i) column.push_back(f.entry(i, 0));
  return LineSubsheaf(f.source().twist(0), f.target(), std::move(column));
}

SheafMap LineSubsheaf::as_map() const {
  std::vector<std::vector<BinaryForm>> column;
  for (const auto& e : embedding_) column.push_back({e});
  return SheafMap(SplitBundle({source_degree_}), target_, std::move(column));
}

LineSubsheaf LineSubsheaf::canonical() const {
  for (const auto& e : embedding_) {
    if (e.is_zero()) continue;
    const Rational inv = 1 / e.first_nonzero();
    std::vector<BinaryForm> scaled;
    for (const auto& x : embedding_) scaled.push_back(inv * x);
    return LineSubsheaf(source_degree_, target_, std::move(scaled));
  }
  throw std::logic_error("line subsheaf with zero embedding");
}

std::string LineSubsheaf::to_string() const {
  std::ostringstream os;
  os << "O(" << source_degree_ << ") -> " << target_.to_string() << " via (";
  for (std::size_t i = 0; i < embedding_.size(); ++i) os << (i ? "; " : "") << embedding_[i].to_string();
  os << ")";
  return os.str();
}

DivisorP1 defect(const LineSubsheaf& lambda) { return DivisorP1(gcd(lambda.embedding())); }

LineSubsheaf normalization(const LineSubsheaf& lambda) {
  const BinaryForm g = gcd(lambda.embedding());
  std::vector<BinaryForm> divided;
  for (const auto& e : lambda.embedding()) {
    if (e.is_zero()) {
      divided.push_back(BinaryForm::zero(e.degree() - g.degree()));
      continue;
    }
    auto q = exact_div(e, g);
    if (!q) throw std::logic_error("gcd does not divide an entry");
    divided.push_back(*q);
  }
  return LineSubsheaf(lambda.source_degree() + g.degree(), lambda.target(), std::move(divided));
}

namespace {

// Generator of F^{r-1} of coker(R -> R^r) on one chart, r = target rank.
Poly chart_fitting_generator(const LineSubsheaf& lambda, Chart chart) {
  fitting::Matrix<Poly> column;
  for (const auto& e : lambda.embedding()) column.push_back({e.dehomogenize(chart)});
  const int r = lambda.target().rank();
  const fitting::PresentedModule q(r, 1, std::move(column));
  return fitting::fitting_ideal(q, r - 1).generator();
}

}  // namespace

bool defect_agrees_with_fitting(const LineSubsheaf& lambda) {
  const Poly on_w = chart_fitting_generator(lambda, Chart::W);
  const Poly on_z = chart_fitting_generator(lambda, Chart::Z);
  if (on_w.is_zero() || on_z.is_zero()) return false;
  // Each chart misses one point; its multiplicity is read off the other chart
  // at the origin ([1:0] is s = 0, [0:1] is t = 0).
  const BinaryForm from_w =
      BinaryForm::homogenize(on_w, on_w.degree() + on_z.valuation_at_zero(), Chart::W).normalized();
  const BinaryForm from_z =
      BinaryForm::homogenize(on_z, on_z.degree() + on_w.valuation_at_zero(), Chart::Z).normalized();
  const DivisorP1 expected = defect(lambda);
  return from_w == expected.form() && from_z == expected.form();
}

bool admits_embedding(int source_degree, const SplitBundle& target) {
  for (int a : target.twists()) {
    if (a >= source_degree) return true;
  }
  return false;
}

Rational quasimap_determinant(const LineSubsheaf& f) {
  if (!(f.target() == SplitBundle({0, 0})) || f.source_degree() != -1) {
    throw InputError("determinant criterion needs O(-1) -> O ⊕ O");
  }
  const auto& top = f.embedding()[0];
  const auto& bottom = f.embedding()[1];
  return top.coeff(0) * bottom.coeff(1) - top.coeff(1) * bottom.coeff(0);
}

QuasiMapClass quasimap_classify(const LineSubsheaf& f) {
  if (!(f.target() == SplitBundle({0, 0}))) throw InputError("quasi-maps target O ⊕ O");
  if (f.source_degree() > 0) throw InputError("quasi-map source must be O(-n) with n >= 0");
  const DivisorP1 df = defect(f);
  const bool genuine = df.is_empty();
  if (f.source_degree() == -1 && genuine != (quasimap_determinant(f) != 0)) {
    throw std::logic_error("determinant criterion disagrees with the defect");
  }
  if (genuine) return GenuineMap{};
  return QuasiMapWithDefect{df};
}

int quasimap_parameter_dimension(int n) {
  if (n < 0) throw InputError("quasi-map degree must be nonnegative");
  return 2 * n + 1;
}

}  // namespace nilcone
