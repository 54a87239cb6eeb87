#pragma once

// Split vector bundles O(a_1) ⊕ ... ⊕ O(a_k) on P^1 and maps between them.
// A map O(b) -> O(a) is a form of degree a - b; slots with a - b < 0 hold a
// zero form tagged with that negative degree.

#include <string>
#include <variant>
#include <vector>

#include "nilcone/forms.hpp"

namespace nilcone {

class SplitBundle {
 public:
  SplitBundle() = default;
  explicit SplitBundle(std::vector<int> twists) : twists_(std::move(twists)) {}
  /// O(d) ⊕ O(-d).
  static SplitBundle sl2(int d);

  int rank() const { return static_cast<int>(twists_.size()); }
  const std::vector<int>& twists() const { return twists_; }
  int twist(int i) const { return twists_.at(static_cast<std::size_t>(i)); }
  int total_degree() const;
  /// Rank 2, twists (d, -d) with d >= 0.
  bool is_sl2() const;
  /// E ⊗ O(ell).
  SplitBundle twisted(int ell) const;

  friend bool operator==(const SplitBundle&, const SplitBundle&) = default;

  std::string to_string() const;

 private:
  std::vector<int> twists_;
};

class SheafMap {
 public:
  /// entries[i][j] : O(source_j) -> O(target_i) must have degree
  /// target_i - source_j. Throws InputError naming the offending slot.
  SheafMap(SplitBundle source, SplitBundle target, std::vector<std::vector<BinaryForm>> entries);

  static SheafMap identity(const SplitBundle& e);
  static SheafMap zero(const SplitBundle& source, const SplitBundle& target);
  static int slot_degree(const SplitBundle& source, const SplitBundle& target, int i, int j);

  const SplitBundle& source() const { return source_; }
  const SplitBundle& target() const { return target_; }
  const std::vector<std::vector<BinaryForm>>& entries() const { return entries_; }
  const BinaryForm& entry(int i, int j) const { return entries_.at(i).at(j); }
  bool is_zero() const;

  friend bool operator==(const SheafMap&, const SheafMap&) = default;

 private:
  SplitBundle source_;
  SplitBundle target_;
  std::vector<std::vector<BinaryForm>> entries_;
};

/// g ∘ f; requires f.target() == g.source().
SheafMap compose(const SheafMap& g, const SheafMap& f);

/// A line subsheaf O(m) -> E given by a nonzero column of forms.
class LineSubsheaf {
 public:
  LineSubsheaf(int source_degree, SplitBundle target, std::vector<BinaryForm> embedding);
  /// From a one-column map.
  static LineSubsheaf from_map(const SheafMap& f);

  int source_degree() const { return source_degree_; }
  const SplitBundle& target() const { return target_; }
  const std::vector<BinaryForm>& embedding() const { return embedding_; }
  SheafMap as_map() const;

  /// Scalar multiple with the first nonzero coefficient of the first nonzero
  /// entry equal to 1. Two embeddings give the same moduli point iff their
  /// canonical representatives agree.
  LineSubsheaf canonical() const;
  bool same_point(const LineSubsheaf& other) const { return canonical() == other.canonical(); }

  friend bool operator==(const LineSubsheaf&, const LineSubsheaf&) = default;

  std::string to_string() const;

 private:
  int source_degree_;
  SplitBundle target_;
  std::vector<BinaryForm> embedding_;
};

/// Divisor where λ fails to be a subbundle: zeros of the gcd of the entries.
DivisorP1 defect(const LineSubsheaf& lambda);

/// The saturation λ̃ ⊇ λ: entries divided by their gcd, source degree raised
/// by deg df(λ).
LineSubsheaf normalization(const LineSubsheaf& lambda);

/// Builds the cokernel presentation of the embedding on each affine chart,
/// takes F^{r-1} there, glues the two vanishing loci and compares the result
/// with defect(lambda).
bool defect_agrees_with_fitting(const LineSubsheaf& lambda);

/// Whether some nonzero map O(m) -> E exists, i.e. some twist a_i >= m.
bool admits_embedding(int source_degree, const SplitBundle& target);

struct GenuineMap {
  friend bool operator==(const GenuineMap&, const GenuineMap&) = default;
};
struct QuasiMapWithDefect {
  DivisorP1 defect;
  friend bool operator==(const QuasiMapWithDefect&, const QuasiMapWithDefect&) = default;
};
using QuasiMapClass = std::variant<GenuineMap, QuasiMapWithDefect>;

/// Classifies O(-n) -> O ⊕ O as a genuine degree-n map to P^1 or a
/// quasi-map with nonempty defect. For n = 1 the answer is cross-checked
/// against the 2x2 coefficient determinant.
QuasiMapClass quasimap_classify(const LineSubsheaf& f);

/// ad - bc for the column (az + bw; cz + dw).
Rational quasimap_determinant(const LineSubsheaf& f);

/// Projective dimension of P Hom(O(-n), O ⊕ O): 2n + 2 coefficients up to
/// scalar.
int quasimap_parameter_dimension(int n);

}  // namespace nilcone
