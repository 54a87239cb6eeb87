#include "nilcone/checks/corpus.hpp"

#include <algorithm>

namespace nilcone::checks {

namespace {

bool same_point(const BinaryForm& a, const BinaryForm& b) { return a.normalized() == b.normalized(); }

/// n distinct linear forms.
std::vector<BinaryForm> distinct_linear_forms(Rng& rng, int n) {
  std::vector<BinaryForm> out;
  while (static_cast<int>(out.size()) < n) {
    auto f = random_linear_form(rng);
    if (std::none_of(out.begin(), out.end(), [&](const BinaryForm& g) { return same_point(f, g); })) {
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<BinaryForm> cofactor_factors(Rng& rng, CofactorShape shape, int n) {
  std::vector<BinaryForm> factors;
  switch (shape) {
    case CofactorShape::Squarefree:
      return distinct_linear_forms(rng, n);
    case CofactorShape::Repeated: {
      // One point of multiplicity >= 2, the rest filled in at random.
      const int top = uniform(rng, 2, n);
      const auto points = distinct_linear_forms(rng, 1 + n - top);
      factors.assign(static_cast<std::size_t>(top), points[0]);
      for (int i = top; i < n; ++i) {
        factors.push_back(points[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(points.size()) - 1))]);
      }
      return factors;
    }
    case CofactorShape::Any:
      for (int i = 0; i < n; ++i) factors.push_back(random_linear_form(rng));
      return factors;
  }
  return factors;
}

Rational nonzero_rational(Rng& rng) {
  for (;;) {
    auto c = random_rational(rng);
    if (c != 0) return c;
  }
}

/// Kernel degrees k allowed on O(d) ⊕ O(-d) with deg h = 2k + ell in
/// [min_h, max_h].
std::vector<int> kernel_degrees(int d, int ell, int min_h, int max_h) {
  std::vector<int> ks;
  for (int k = -ell / 2; k <= -d; ++k) ks.push_back(k);
  if (d > 0) ks.push_back(d);
  std::erase_if(ks, [&](int k) { return 2 * k + ell < min_h || 2 * k + ell > max_h; });
  return ks;
}

}  // namespace

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Rational random_rational(Rng& rng, int span) {
  Rational r(uniform(rng, -span, span), uniform(rng, 1, 3));
  r.canonicalize();
  return r;
}

BinaryForm random_form(Rng& rng, int degree, int span) {
  if (degree < 0) return BinaryForm::zero(degree);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_rational(rng, span));
  return BinaryForm(degree, std::move(c));
}

BinaryForm random_nonzero_form(Rng& rng, int degree) {
  for (;;) {
    auto f = random_form(rng, degree);
    if (!f.is_zero()) return f;
  }
}

BinaryForm random_linear_form(Rng& rng) {
  int a = uniform(rng, -3, 3), b = uniform(rng, -3, 3);
  if (a == 0 && b == 0) a = 1;
  return BinaryForm::linear(a, b);
}

BinaryForm random_split_form(Rng& rng, int count) {
  BinaryForm out;
  for (int i = 0; i < count; ++i) out = out * random_linear_form(rng);
  return out;
}

NilpotentSample random_nilpotent(Rng& rng, CofactorShape shape, int max_h_degree) {
  const int min_h = shape == CofactorShape::Repeated ? 2 : 0;
  for (;;) {
    const int d = uniform(rng, 0, 2);
    const int ell = 2 * uniform(rng, 0, 4);
    const auto ks = kernel_degrees(d, ell, min_h, max_h_degree);
    if (ks.empty()) continue;
    const int k = ks[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ks.size()) - 1))];
    const SplitBundle e = SplitBundle::sl2(d);

    BinaryForm s, t;
    if (k == d && d > 0) {
      s = BinaryForm::constant(nonzero_rational(rng));
      t = BinaryForm::zero(-2 * d);
    } else if (k == -d && uniform(rng, 0, 5) == 0) {
      s = BinaryForm::zero(2 * d);
      t = BinaryForm::constant(nonzero_rational(rng));
    } else {
      s = uniform(rng, 0, 1) == 0 ? random_split_form(rng, d - k) : random_form(rng, d - k);
      t = random_form(rng, -d - k);
      if (s.is_zero() && t.is_zero()) continue;
    }
    LineSubsheaf kernel(k, e, {s, t});
    if (!defect(kernel).is_empty()) continue;

    auto factors = cofactor_factors(rng, shape, 2 * k + ell);
    BinaryForm h = BinaryForm::constant(nonzero_rational(rng));
    for (const auto& f : factors) h = h * f;
    auto phi = build_from(kernel, h, ell);
    return {std::move(phi), std::move(kernel), std::move(h), std::move(factors)};
  }
}

HiggsField random_traceless(Rng& rng, int d, int ell) {
  auto entry = [&](int degree) {
    return uniform(rng, 0, 3) == 0 ? BinaryForm::zero(degree) : random_form(rng, degree, 2);
  };
  auto p = entry(ell);
  auto q = entry(ell + 2 * d);
  auto r = entry(ell - 2 * d);
  return HiggsField(d, ell, std::move(p), std::move(q), std::move(r));
}

HiggsField product_nilpotent(Rng& rng, int d, int ell) {
  for (;;) {
    const auto ks = kernel_degrees(d, ell, 0, ell + 2 * d);
    if (ks.empty()) return HiggsField(d, ell, BinaryForm::zero(ell), BinaryForm::zero(ell + 2 * d),
                                      BinaryForm::zero(ell - 2 * d));
    const int k = ks[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(ks.size()) - 1))];
    const auto s = random_form(rng, d - k, 2);
    const auto t = random_form(rng, -d - k, 2);
    const auto h = uniform(rng, 0, 1) == 0 ? random_split_form(rng, 2 * k + ell) : random_form(rng, 2 * k + ell, 2);
    if (h.is_zero() || (s.is_zero() && t.is_zero())) continue;
    return HiggsField(d, ell, h * s * t, -(h * s * s), h * t * t);
  }
}

Poly random_poly(Rng& rng, int max_degree, int span) {
  std::vector<Rational> c;
  for (int i = 0, n = uniform(rng, -1, max_degree); i <= n; ++i) c.emplace_back(uniform(rng, -span, span));
  return Poly(std::move(c));
}

fitting::PresentedModule random_module(Rng& rng, int max_b, int max_a) {
  const int b = uniform(rng, 1, max_b), a = uniform(rng, 0, max_a);
  fitting::Matrix<Poly> m(static_cast<std::size_t>(b));
  for (auto& row : m) {
    for (int j = 0; j < a; ++j) row.push_back(random_poly(rng));
  }
  return fitting::PresentedModule(b, a, std::move(m));
}

fitting::PresentedModule random_elementary_step(Rng& rng, const fitting::PresentedModule& m) {
  int b = m.target_rank(), a = m.source_rank();
  auto x = m.matrix();
  const bool small = b < 5 && a < 6;
  for (;;) {
    switch (uniform(rng, 0, 7)) {
      case 0: {  // row_i += u row_j
        if (b < 2) break;
        const int i = uniform(rng, 0, b - 1), j = (i + uniform(rng, 1, b - 1)) % b;
        const Poly u = random_poly(rng, 2);
        for (int c = 0; c < a; ++c) x[i][c] = x[i][c] + u * x[j][c];
        return fitting::PresentedModule(b, a, std::move(x));
      }
      case 1: {  // col_i += u col_j
        if (a < 2) break;
        const int i = uniform(rng, 0, a - 1), j = (i + uniform(rng, 1, a - 1)) % a;
        const Poly u = random_poly(rng, 2);
        for (int r = 0; r < b; ++r) x[r][i] = x[r][i] + u * x[r][j];
        return fitting::PresentedModule(b, a, std::move(x));
      }
      case 2:
        if (b < 2) break;
        std::swap(x[uniform(rng, 0, b - 1)], x[uniform(rng, 0, b - 1)]);
        return fitting::PresentedModule(b, a, std::move(x));
      case 3: {
        if (a < 2) break;
        const int i = uniform(rng, 0, a - 1), j = uniform(rng, 0, a - 1);
        for (auto& row : x) std::swap(row[i], row[j]);
        return fitting::PresentedModule(b, a, std::move(x));
      }
      case 4: {
        const Rational c = nonzero_rational(rng);
        for (auto& e : x[uniform(rng, 0, b - 1)]) e = c * e;
        return fitting::PresentedModule(b, a, std::move(x));
      }
      case 5: {
        if (a < 1) break;
        const Rational c = nonzero_rational(rng);
        const int j = uniform(rng, 0, a - 1);
        for (auto& row : x) row[j] = c * row[j];
        return fitting::PresentedModule(b, a, std::move(x));
      }
      case 6: {  // append a combination of existing columns
        if (!small) break;
        std::vector<Poly> weights;
        for (int j = 0; j < a; ++j) weights.push_back(random_poly(rng, 1));
        for (auto& row : x) {
          Poly acc;
          for (int j = 0; j < a; ++j) acc = acc + weights[j] * row[j];
          row.push_back(acc);
        }
        return fitting::PresentedModule(b, a + 1, std::move(x));
      }
      case 7: {  // [[A, 0], [v, 1]] presents the same module
        if (!small) break;
        for (auto& row : x) row.emplace_back();
        std::vector<Poly> last;
        for (int j = 0; j < a; ++j) last.push_back(random_poly(rng, 1));
        last.push_back(Poly::constant(1));
        x.push_back(std::move(last));
        return fitting::PresentedModule(b + 1, a + 1, std::move(x));
      }
    }
  }
}

LineSubsheaf random_line_subsheaf(Rng& rng) {
  for (;;) {
    const int d = uniform(rng, 0, 2);
    const int top_degree = uniform(rng, 0, 3);
    const int m = d - top_degree;
    const bool split = uniform(rng, 0, 1) == 0;
    auto top = split ? random_split_form(rng, top_degree) : random_form(rng, top_degree);
    auto bottom = random_form(rng, -d - m);
    if (uniform(rng, 0, 4) == 0) top = BinaryForm::zero(top_degree);
    if (top.is_zero() && bottom.is_zero()) continue;
    const int g_degree = uniform(rng, 0, 3);
    const auto g = uniform(rng, 0, 2) == 0 ? random_nonzero_form(rng, g_degree) : random_split_form(rng, g_degree);
    return LineSubsheaf(m - g_degree, SplitBundle::sl2(d), {g * top, g * bottom});
  }
}

}  // namespace nilcone::checks
