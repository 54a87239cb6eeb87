#include "nilcone/checks/oracles.hpp"

#include <algorithm>
#include <bit>

namespace nilcone::checks {

namespace {

bool same_form(const BinaryForm& a, const BinaryForm& b) {
  return (a.is_zero() && b.is_zero()) || a == b;
}

bool subsheaf_less(const LineSubsheaf& a, const LineSubsheaf& b) {
  if (a.source_degree() != b.source_degree()) return a.source_degree() < b.source_degree();
  const auto& x = a.embedding();
  const auto& y = b.embedding();
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (canonical_less(x[i], y[i])) return true;
    if (canonical_less(y[i], x[i])) return false;
  }
  return x.size() < y.size();
}

void sort_unique(std::vector<LineSubsheaf>& points) {
  for (auto& p : points) p = p.canonical();
  std::sort(points.begin(), points.end(), subsheaf_less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
}

}  // namespace

Poly laplace_determinant(const fitting::Matrix<Poly>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly::constant(1);
  Poly acc;
  for (std::size_t j = 0; j < n; ++j) {
    fitting::Matrix<Poly> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Poly> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != j) row.push_back(m[i][c]);
      }
      minor.push_back(std::move(row));
    }
    const Poly term = m[0][j] * laplace_determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

Poly brute_force_fitting_generator(const fitting::PresentedModule& m, int h) {
  const int b = m.target_rank(), a = m.source_rank(), k = b - h;
  if (k <= 0) return Poly::constant(1);
  Poly acc;
  for (unsigned rows = 0; rows < (1u << b); ++rows) {
    if (std::popcount(rows) != k) continue;
    for (unsigned cols = 0; cols < (1u << a); ++cols) {
      if (std::popcount(cols) != k) continue;
      fitting::Matrix<Poly> sub;
      for (int i = 0; i < b; ++i) {
        if (!(rows >> i & 1)) continue;
        std::vector<Poly> row;
        for (int j = 0; j < a; ++j) {
          if (cols >> j & 1) row.push_back(m.matrix()[i][j]);
        }
        sub.push_back(std::move(row));
      }
      acc = gcd(acc, laplace_determinant(sub));
    }
  }
  return acc;
}

std::vector<BinaryForm> square_entries(const HiggsField& phi) {
  const auto& p = phi.p();
  const auto& q = phi.q();
  const auto& r = phi.r();
  // (p q; r -p)^2 = (p^2 + qr, pq - qp; rp - pr, rq + p^2)
  return {p * p + q * r, p * q - q * p, r * p - p * r, r * q + p * p};
}

std::vector<BinaryForm> apply_field(const HiggsField& phi, const std::vector<BinaryForm>& e) {
  return {phi.p() * e[0] + phi.q() * e[1], phi.r() * e[0] - phi.p() * e[1]};
}

bool image_condition(const HiggsField& phi, const LineSubsheaf& lambda) {
  const auto& e = lambda.embedding();
  const std::size_t pivot = e[0].is_zero() ? 1 : 0;
  const BinaryForm g = e[0].is_zero() ? e[1].normalized() : e[1].is_zero() ? e[0].normalized() : gcd(e[0], e[1]);
  const std::vector<std::vector<BinaryForm>> columns{{phi.p(), phi.r()}, {phi.q(), -phi.p()}};
  for (const auto& col : columns) {
    if (col[0].is_zero() && col[1].is_zero()) continue;
    const auto x = exact_div(col[pivot], e[pivot] * g);
    if (!x) return false;
    for (std::size_t i = 0; i < 2; ++i) {
      if (!same_form(col[i], e[i] * g * *x)) return false;
    }
  }
  return true;
}

bool satisfies_conditions(const HiggsField& phi, const LineSubsheaf& lambda) {
  const auto image = apply_field(phi, lambda.embedding());
  if (!image[0].is_zero() || !image[1].is_zero()) return false;
  if (!image_condition(phi, lambda)) return false;
  return 2 * lambda.source_degree() + phi.ell() >= 0;
}

std::vector<LineSubsheaf> candidate_fiber(const HiggsField& phi, const LineSubsheaf& kernel, int m,
                                          const std::vector<BinaryForm>& pool) {
  const int count = kernel.source_degree() - m;
  std::vector<LineSubsheaf> found;
  if (count < 0 || pool.empty()) return found;
  std::vector<std::size_t> pick(static_cast<std::size_t>(count), 0);
  for (;;) {
    BinaryForm g;
    for (auto i : pick) g = g * pool[i];
    const LineSubsheaf lambda(m, kernel.target(), {g * kernel.embedding()[0], g * kernel.embedding()[1]});
    if (satisfies_conditions(phi, lambda)) found.push_back(lambda);
    // Next non-decreasing index tuple.
    int pos = count - 1;
    while (pos >= 0 && pick[static_cast<std::size_t>(pos)] + 1 == pool.size()) --pos;
    if (pos < 0) break;
    const auto next = pick[static_cast<std::size_t>(pos)] + 1;
    for (auto i = static_cast<std::size_t>(pos); i < pick.size(); ++i) pick[i] = next;
  }
  sort_unique(found);
  return found;
}

void sort_points(std::vector<LineSubsheaf>& points) { sort_unique(points); }

long count_bounded_vectors(const std::vector<int>& caps, int total) {
  if (total < 0) return 0;
  if (caps.empty()) return total == 0 ? 1 : 0;
  const std::vector<int> rest(caps.begin() + 1, caps.end());
  long n = 0;
  for (int c = 0; c <= caps[0] && c <= total; ++c) n += count_bounded_vectors(rest, total - c);
  return n;
}

Rational coefficient_determinant(const BinaryForm& top, const BinaryForm& bottom) {
  return top.coeff(0) * bottom.coeff(1) - top.coeff(1) * bottom.coeff(0);
}

}  // namespace nilcone::checks
