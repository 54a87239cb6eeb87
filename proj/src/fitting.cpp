#include "nilcone/fitting.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "nilcone/errors.hpp"

namespace nilcone::fitting {

namespace {

template <typename T>
void check_shape(int b, int a, const Matrix<T>& entries) {
  if (b < 0 || a < 0) throw InputError("presentation ranks must be nonnegative");
  if (entries.size() != static_cast<std::size_t>(b)) {
    throw InputError("presentation has " + std::to_string(entries.size()) + " rows, expected " +
                     std::to_string(b));
  }
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != static_cast<std::size_t>(a)) {
      throw InputError("presentation row " + std::to_string(i) + " has " +
                       std::to_string(entries[i].size()) + " entries, expected " +
                       std::to_string(a));
    }
  }
}

// Calls fn on every increasing k-subset of {0..n-1}; stops early when fn
// returns false.
template <typename Fn>
bool for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    if (!fn(idx)) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PresentedModule::PresentedModule(int b, int a, Matrix<Poly> entries)
    : b_(b), a_(a), entries_(std::move(entries)) {
  check_shape(b_, a_, entries_);
}

PresentedModule PresentedModule::cyclic(const Poly& f) { return PresentedModule(1, 1, {{f}}); }

PresentedModule PresentedModule::free(int b) {
  return PresentedModule(b, 0, Matrix<Poly>(static_cast<std::size_t>(b)));
}

Poly determinant(Matrix<Poly> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Poly::constant(1);
  Poly prev = Poly::constant(1);
  bool negate = false;
  for (int p = 0; p < n - 1; ++p) {
    if (m[p][p].is_zero()) {
      int swap_row = p + 1;
      while (swap_row < n && m[swap_row][p].is_zero()) ++swap_row;
      if (swap_row == n) return {};
      std::swap(m[p], m[swap_row]);
      negate = !negate;
    }
    for (int i = p + 1; i < n; ++i) {
      for (int j = p + 1; j < n; ++j) {
        // Sylvester's identity guarantees exact division.
        m[i][j] = divmod(m[i][j] * m[p][p] - m[i][p] * m[p][j], prev).first;
      }
    }
    prev = m[p][p];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

PrincipalIdeal fitting_ideal(const PresentedModule& m, int h) {
  if (h < 0) throw InputError("Fitting index must be nonnegative");
  const int k = m.target_rank() - h;
  if (k <= 0) return PrincipalIdeal::unit();
  if (k > m.source_rank()) return PrincipalIdeal::zero();
  Poly acc;
  for_each_subset(m.target_rank(), k, [&](const std::vector<int>& rows) {
    return for_each_subset(m.source_rank(), k, [&](const std::vector<int>& cols) {
      Matrix<Poly> sub(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) sub[i].push_back(m.matrix()[rows[i]][cols[j]]);
      }
      acc = gcd(acc, determinant(std::move(sub)));
      return acc.degree() != 0;  // unit ideal reached
    });
  });
  return PrincipalIdeal::generated_by(acc);
}

std::optional<int> fitting_rank(const PresentedModule& m) {
  if (!fitting_ideal(m, 0).is_zero()) return std::nullopt;
  int h = 0;
  while (fitting_ideal(m, h + 1).is_zero()) ++h;
  return h;
}

PresentedModule direct_sum(const PresentedModule& m, const PresentedModule& n) {
  const int b = m.target_rank() + n.target_rank();
  const int a = m.source_rank() + n.source_rank();
  Matrix<Poly> out(static_cast<std::size_t>(b), std::vector<Poly>(static_cast<std::size_t>(a)));
  for (int i = 0; i < m.target_rank(); ++i) {
    for (int j = 0; j < m.source_rank(); ++j) out[i][j] = m.matrix()[i][j];
  }
  for (int i = 0; i < n.target_rank(); ++i) {
    for (int j = 0; j < n.source_rank(); ++j) {
      out[m.target_rank() + i][m.source_rank() + j] = n.matrix()[i][j];
    }
  }
  return PresentedModule(b, a, std::move(out));
}

PresentedModule substitute(const PresentedModule& m, const Poly& u) {
  Matrix<Poly> out = m.matrix();
  for (auto& row : out) {
    for (auto& e : row) e = e.compose(u);
  }
  return PresentedModule(m.target_rank(), m.source_rank(), std::move(out));
}

ScalarPresentation::ScalarPresentation(int b, int a, Matrix<Rational> entries)
    : b_(b), a_(a), entries_(std::move(entries)) {
  check_shape(b_, a_, entries_);
}

int ScalarPresentation::rank() const {
  Matrix<Rational> m = entries_;
  int rank = 0;
  for (int col = 0; col < a_ && rank < b_; ++col) {
    int pivot = rank;
    while (pivot < b_ && m[pivot][col] == 0) ++pivot;
    if (pivot == b_) continue;
    std::swap(m[rank], m[pivot]);
    for (int i = rank + 1; i < b_; ++i) {
      if (m[i][col] == 0) continue;
      const Rational factor = m[i][col] / m[rank][col];
      for (int j = col; j < a_; ++j) m[i][j] -= factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

ScalarPresentation base_change_evaluate(const PresentedModule& m, const Rational& c) {
  Matrix<Rational> out(static_cast<std::size_t>(m.target_rank()));
  for (int i = 0; i < m.target_rank(); ++i) {
    for (const auto& e : m.matrix()[i]) out[i].push_back(e.evaluate(c));
  }
  return ScalarPresentation(m.target_rank(), m.source_rank(), std::move(out));
}

FieldIdeal fitting_ideal(const ScalarPresentation& m, int h) {
  if (h < 0) throw InputError("Fitting index must be nonnegative");
  // Some (b-h)-minor is nonzero iff the rank reaches b-h.
  return m.rank() >= m.target_rank() - h ? FieldIdeal::Unit : FieldIdeal::Zero;
}

FieldIdeal evaluate(const PrincipalIdeal& ideal, const Rational& c) {
  return ideal.generator().evaluate(c) == 0 ? FieldIdeal::Zero : FieldIdeal::Unit;
}

}  // namespace nilcone::fitting
