#include "nilcone/springer.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "nilcone/errors.hpp"

namespace nilcone::springer {

namespace {

void require_nonzero_nilpotent(const HiggsField& phi) {
  if (phi.is_zero()) throw InputError("Higgs field must be nonzero");
  if (!is_nilpotent(phi)) throw InputError("Higgs field must be nilpotent");
}

}  // namespace

ConditionCheck check_conditions(const HiggsField& phi, const LineSubsheaf& lambda) {
  require_nonzero_nilpotent(phi);
  if (!(lambda.target() == phi.bundle())) {
    throw InputError("λ sits in " + lambda.target().to_string() + ", φ acts on " +
                     phi.bundle().to_string());
  }
  const SheafMap image = compose(phi.as_map(), lambda.as_map());
  for (const auto& row : image.entries()) {
    if (!row[0].is_zero()) return {1, row[0], "λ is not contained in ker φ"};
  }
  const CanonicalNilpotent c = canonical_form(phi);
  const auto& f = lambda.embedding();
  const auto g = c.s.is_zero() ? exact_div(f[1], c.t) : exact_div(f[0], c.s);
  if (!g || !(c.s * *g == f[0] && c.t * *g == f[1])) {
    throw std::logic_error("λ ⊂ ker φ but is not a multiple of the kernel direction");
  }
  const BinaryForm g2 = *g * *g;
  if (!divides(g2, c.h)) return {2, g2, "2 df(λ) is not contained in irr(φ)"};
  const int m = lambda.source_degree();
  if (2 * m + phi.ell() < 0) return {3, std::nullopt, "λ^2 ⊗ L has negative degree"};
  return {};
}

FiberPoint::FiberPoint(HiggsField phi, LineSubsheaf lambda)
    : higgs_(std::move(phi)), lambda_(std::move(lambda)) {
  const auto check = check_conditions(higgs_, lambda_);
  if (!check.passed()) {
    throw InputError("not a fiber point: condition (" + std::to_string(check.failed_condition) +
                     ") fails: " + check.reason);
  }
}

FiberDescription enumerate_fiber(const HiggsField& phi, int m) {
  require_nonzero_nilpotent(phi);
  FiberDescription out{phi, m, {}, false};
  const CanonicalNilpotent c = canonical_form(phi);
  const int depth = c.k - m;
  if (depth < 0 || 2 * m + phi.ell() < 0) return out;

  std::vector<BinaryForm> lines;
  std::vector<int> caps;
  for (const auto& factor : factor_into_divisors(c.h)) {
    if (factor.symbolic) {
      if (factor.multiplicity >= 2) out.unresolved = true;
      continue;
    }
    lines.push_back(factor.divisor.form());
    caps.push_back(factor.multiplicity / 2);
  }

  // Every exponent vector 0 <= c_i <= e_i / 2 with sum c_i = depth.
  std::vector<int> exps(lines.size(), 0);
  std::function<void(std::size_t, int)> visit = [&](std::size_t i, int remaining) {
    if (i == lines.size()) {
      if (remaining != 0) return;
      BinaryForm g;
      for (std::size_t j = 0; j < lines.size(); ++j) g = g * lines[j].pow(exps[j]);
      LineSubsheaf lambda(m, phi.bundle(), {g * c.s, g * c.t});
      out.points.emplace_back(phi, lambda.canonical());
      return;
    }
    for (int e = 0; e <= std::min(caps[i], remaining); ++e) {
      exps[i] = e;
      visit(i + 1, remaining - e);
    }
    exps[i] = 0;
  };
  visit(0, depth);

  std::sort(out.points.begin(), out.points.end(), [](const FiberPoint& a, const FiberPoint& b) {
    const auto& x = a.lambda().embedding();
    const auto& y = b.lambda().embedding();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), canonical_less);
  });
  return out;
}

bool is_globally_regular(const HiggsField& phi) {
  require_nonzero_nilpotent(phi);
  return is_squarefree(canonical_form(phi).h);
}

int section_space_dimension(int m, int ell) {
  const int degree = 2 * m + ell;
  if (degree < 0) {
    throw InputError("λ^2 ⊗ L = O(" + std::to_string(degree) + ") has no sections");
  }
  return degree + 1;
}

}  // namespace nilcone::springer
