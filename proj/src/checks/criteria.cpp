#include "nilcone/checks/criteria.hpp"

#include <sstream>

#include "nilcone/census.hpp"
#include "nilcone/checks/corpus.hpp"
#include "nilcone/checks/oracles.hpp"
#include "nilcone/springer.hpp"

namespace nilcone::checks {

namespace {

/// Counts cases and keeps the first failure message.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checked_;
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  int checked() const { return checked_; }
  bool ok() const { return failures_ == 0; }

  CheckResult result(std::string id, std::string description, const std::string& summary) const {
    CheckResult r{std::move(id), std::move(description), ok(), summary};
    if (!ok()) r.detail += "; " + std::to_string(failures_) + " failures, first: " + first_;
    return r;
  }

 private:
  int checked_ = 0;
  int failures_ = 0;
  std::string first_;
};

template <typename F>
void guarded(Tally& tally, const std::string& label, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    tally.expect(false, label + " threw: " + e.what());
  }
}

BinaryForm z() { return BinaryForm::z(); }
BinaryForm w() { return BinaryForm::w(); }

/// Multiplicities of the distinct points among `factors`.
std::vector<int> multiplicities(const std::vector<BinaryForm>& factors, std::vector<BinaryForm>* points) {
  std::vector<BinaryForm> seen;
  std::vector<int> mult;
  for (const auto& f : factors) {
    const auto n = f.normalized();
    std::size_t i = 0;
    while (i < seen.size() && !(seen[i] == n)) ++i;
    if (i == seen.size()) {
      seen.push_back(n);
      mult.push_back(0);
    }
    ++mult[i];
  }
  if (points) *points = seen;
  return mult;
}

std::vector<NilpotentSample> corpus(std::uint64_t seed, CofactorShape shape, int n) {
  Rng rng(seed);
  std::vector<NilpotentSample> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(random_nilpotent(rng, shape));
  return out;
}

std::vector<LineSubsheaf> library_points(const springer::FiberDescription& f) {
  std::vector<LineSubsheaf> out;
  for (const auto& p : f.points) out.push_back(p.lambda());
  sort_points(out);
  return out;
}

}  // namespace

CheckResult worked_example_fiber() {
  Tally tally;
  int passing = 0, failing_two = 0;
  guarded(tally, "worked example", [&] {
    const HiggsField phi(0, 2, BinaryForm::zero(2), z() * z(), BinaryForm::zero(2));
    const SplitBundle e = SplitBundle::sl2(0);
    const LineSubsheaf expected(-1, e, {z(), BinaryForm::zero(1)});

    const auto fiber = springer::enumerate_fiber(phi, -1);
    tally.expect(fiber.points.size() == 1, "fiber has " + std::to_string(fiber.points.size()) + " points");
    tally.expect(!fiber.points.empty() && fiber.points[0].lambda().same_point(expected), "point is not (z; 0)");
    tally.expect(!fiber.unresolved, "fiber marked unresolved");

    for (int a = -6; a <= 6; ++a) {
      for (int b = -6; b <= 6; ++b) {
        if (a == 0 && b == 0) continue;
        const LineSubsheaf lambda(-1, e, {BinaryForm::linear(a, b), BinaryForm::zero(1)});
        const auto check = springer::check_conditions(phi, lambda);
        const bool parallel = b == 0;
        const std::string label = "s = " + lambda.embedding()[0].to_string();
        if (parallel) {
          ++passing;
          tally.expect(check.passed(), label + " rejected");
        } else {
          failing_two += check.failed_condition == 2;
          tally.expect(check.failed_condition == 2, label + " did not fail condition (2)");
          tally.expect(check.witness.has_value() && check.witness->normalized() == lambda.embedding()[0].normalized().pow(2),
                       label + " witness is not s^2");
        }
        tally.expect(satisfies_conditions(phi, lambda) == parallel, label + " disagrees with the matrix oracle");
      }
    }

    const std::vector<BinaryForm> pool{z(), w(), z() + w(), z() - w(), 2 * z() + 3 * w()};
    const auto brute = candidate_fiber(phi, kernel_subbundle(phi), -1, pool);
    tally.expect(brute.size() == 1 && brute[0].same_point(expected), "brute-force fiber differs");
  });
  std::ostringstream s;
  s << "1 point (z; 0); " << passing << " multiples of z pass, " << failing_two << " other (s; 0) fail condition (2)";
  return tally.result("AC1", "worked-example fiber over [[0, z^2], [0, 0]], m = -1", s.str());
}

CheckResult globally_regular_singleton(std::uint64_t seed) {
  Tally tally;
  const auto samples = corpus(seed, CofactorShape::Squarefree, 500);
  int fibers = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& sample = samples[i];
    guarded(tally, "sample " + std::to_string(i), [&] {
      const auto& phi = sample.phi;
      const std::string label = phi.to_string();
      tally.expect(springer::is_globally_regular(phi), label + " not globally regular");
      const int k = sample.kernel.source_degree();
      tally.expect(canonical_form(phi).k == k, label + " kernel degree mismatch");
      const auto kernel = kernel_subbundle(phi);
      tally.expect(kernel.same_point(sample.kernel), label + " kernel differs from the generating one");
      for (int m = -phi.ell() / 2 - 2; m <= k + 2; ++m) {
        const auto fiber = springer::enumerate_fiber(phi, m);
        ++fibers;
        tally.expect(!fiber.unresolved, label + " unresolved");
        if (m == k) {
          tally.expect(fiber.points.size() == 1 && fiber.points[0].lambda().same_point(kernel),
                       label + " fiber at m = k is not {ker}");
        } else {
          tally.expect(fiber.points.empty(), label + " nonempty fiber at m = " + std::to_string(m));
        }
      }
    });
  }
  return tally.result("AC2", "globally-regular singleton fibers",
                      std::to_string(samples.size()) + " fields with squarefree split h, " +
                          std::to_string(fibers) + " component fibers");
}

CheckResult fiber_counts_and_divisibility(std::uint64_t seed) {
  Tally tally;
  auto samples = corpus(seed, CofactorShape::Squarefree, 500);
  const auto repeated = corpus(seed + 1, CofactorShape::Repeated, 500);
  samples.insert(samples.end(), repeated.begin(), repeated.end());
  Rng extra(seed + 2);
  long points = 0;
  int fibers = 0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& sample = samples[i];
    guarded(tally, "sample " + std::to_string(i), [&] {
      const auto& phi = sample.phi;
      const std::string label = phi.to_string();
      const auto irr = irregularity(phi);
      std::vector<BinaryForm> pool;
      const auto caps_full = multiplicities(sample.h_factors, &pool);
      std::vector<int> caps;
      for (int e : caps_full) caps.push_back(e / 2);
      pool.push_back(random_linear_form(extra));
      pool.push_back(random_linear_form(extra));
      const int k = sample.kernel.source_degree();
      for (int m = -phi.ell() / 2 - 1; m <= k + 1; ++m) {
        const auto fiber = springer::enumerate_fiber(phi, m);
        ++fibers;
        const auto found = library_points(fiber);
        points += static_cast<long>(found.size());
        const std::string where = label + " m = " + std::to_string(m);
        for (const auto& lambda : found) {
          tally.expect(defect(lambda).times(2).leq(irr), where + ": 2 df(lambda) not <= irr");
          tally.expect(springer::check_conditions(phi, lambda).passed(), where + ": point fails check_conditions");
        }
        const long formula = 2 * m + phi.ell() < 0 ? 0 : count_bounded_vectors(caps, k - m);
        tally.expect(static_cast<long>(found.size()) == formula,
                     where + ": " + std::to_string(found.size()) + " points, formula " + std::to_string(formula));
        const auto brute = candidate_fiber(phi, sample.kernel, m, pool);
        tally.expect(brute == found, where + ": brute-force oracle found " + std::to_string(brute.size()));
      }
    });
  }
  return tally.result("AC3", "divisibility law and fiber cardinalities",
                      std::to_string(samples.size()) + " fields, " + std::to_string(fibers) + " fibers, " +
                          std::to_string(points) + " points checked against formula and brute force");
}

CheckResult fitting_suite(std::uint64_t seed) {
  using namespace fitting;
  Tally tally;
  Rng rng(seed);
  int sequences = 0, sums = 0, evaluations = 0, dvr = 0, subsheaves = 0;

  for (; sequences < 120; ++sequences) {
    guarded(tally, "sequence", [&] {
      const auto m = random_module(rng);
      auto n = m;
      const int steps = uniform(rng, 1, 6);
      for (int s = 0; s < steps; ++s) n = random_elementary_step(rng, n);
      for (int h = 0; h <= n.target_rank() + 1; ++h) {
        const auto ideal = fitting_ideal(m, h);
        tally.expect(ideal == fitting_ideal(n, h), "presentation dependence at h = " + std::to_string(h));
        tally.expect(ideal.generator() == brute_force_fitting_generator(m, h), "minor oracle disagrees");
        tally.expect(fitting_ideal(m, h).contained_in(fitting_ideal(m, h + 1)), "not monotone");
      }
    });
  }

  for (; sums < 100; ++sums) {
    guarded(tally, "direct sum", [&] {
      const auto m = random_module(rng), n = random_module(rng);
      const auto sum = direct_sum(m, n);
      tally.expect(fitting_ideal(sum, 0) == fitting_ideal(m, 0) * fitting_ideal(n, 0), "F^0 not multiplicative");
      tally.expect(fitting_ideal(sum, 0).generator() == brute_force_fitting_generator(sum, 0), "minor oracle");
      // For h > 0 the product rule becomes F^h(M + N) = sum over i + j = h of F^i(M) F^j(N).
      for (int h = 1; h <= 3; ++h) {
        PrincipalIdeal expected = PrincipalIdeal::zero();
        for (int i = 0; i <= h; ++i) expected = expected + fitting_ideal(m, i) * fitting_ideal(n, h - i);
        tally.expect(fitting_ideal(sum, h) == expected, "sum formula at h = " + std::to_string(h));
      }
    });
  }

  for (int i = 0; i < 30; ++i) {
    guarded(tally, "base change", [&] {
      const auto m = random_module(rng);
      for (int c = -10; c <= 10; ++c) {
        const auto scalar = base_change_evaluate(m, c);
        for (int h = 0; h <= m.target_rank(); ++h) {
          ++evaluations;
          tally.expect(evaluate(fitting_ideal(m, h), c) == fitting_ideal(scalar, h),
                       "base change at t = " + std::to_string(c));
        }
      }
      Poly u;
      while (u.degree() < 1) u = random_poly(rng, 2);
      const auto pulled = substitute(m, u);
      for (int h = 0; h <= m.target_rank(); ++h) {
        const auto expected = fitting_ideal(m, h).is_zero()
                                  ? PrincipalIdeal::zero()
                                  : PrincipalIdeal::generated_by(fitting_ideal(m, h).generator().compose(u));
        tally.expect(fitting_ideal(pulled, h) == expected, "substitution");
      }
    });
  }

  for (; dvr < 60; ++dvr) {
    guarded(tally, "dvr", [&] {
      const int parts = uniform(rng, 1, 4);
      int length = 0;
      auto m = PresentedModule::cyclic(Poly::linear_power(0, 0));
      std::vector<int> ks;
      for (int i = 0; i < parts; ++i) {
        const int k = uniform(rng, 0, 4);
        ks.push_back(k);
        length += k;
        m = i == 0 ? PresentedModule::cyclic(Poly::linear_power(0, k))
                   : direct_sum(m, PresentedModule::cyclic(Poly::linear_power(0, k)));
      }
      for (int s = 0; s < 3; ++s) m = random_elementary_step(rng, m);
      tally.expect(fitting_ideal(m, 0) == PrincipalIdeal::generated_by(Poly::linear_power(0, length)),
                   "F^0 of a torsion module is not t^" + std::to_string(length));
    });
  }

  for (; subsheaves < 250; ++subsheaves) {
    guarded(tally, "subsheaf", [&] {
      const auto lambda = random_line_subsheaf(rng);
      tally.expect(defect_agrees_with_fitting(lambda), "defect vs Fitting on " + lambda.to_string());
    });
  }

  std::ostringstream s;
  s << sequences << " operation sequences, " << sums << " direct sums, " << evaluations << " evaluations at 21 points, "
    << dvr << " torsion modules, " << subsheaves << " line subsheaves";
  return tally.result("AC4", "Fitting ideal suite", s.str());
}

CheckResult census_golden_values() {
  using namespace census;
  Tally tally;
  guarded(tally, "census", [&] {
    for (int degL = 2; degL <= 20; degL += 2) {
      tally.expect(nilcone_census({0, degL, std::nullopt}, 0, 0).dimension == degL - 1,
                   "g = 0 dimension at degL " + std::to_string(degL));
      tally.expect(nilcone_census({1, degL, std::nullopt}, 0, 0).dimension == degL,
                   "g = 1 dimension at degL " + std::to_string(degL));
    }
    for (int g = 0; g <= 8; ++g) {
      for (int degL = 2 * g; degL <= 2 * g + 12; degL += 2) {
        const auto r = nilcone_census({g, degL, std::nullopt}, -degL / 2, -degL / 2 + 3);
        const std::string label = "g = " + std::to_string(g) + ", degL = " + std::to_string(degL);
        tally.expect(r.dimension == degL + g - 1, label + " dimension");
        tally.expect(r.square_root_count == (std::uint64_t{1} << (2 * g)), label + " square roots");
        tally.expect(!r.rows.empty() && r.rows[0].square_root && r.rows[0].count == r.square_root_count,
                     label + " square-root row");
        tally.expect(r.min_degree == -degL / 2, label + " bound");
      }
    }
    tally.expect(stable_census(2, 4) == 2, "stable (2, 4)");
    tally.expect(stable_census(2, 2) == 2, "stable (2, 2)");
    tally.expect(stable_census(2, 0) == 1, "stable (2, 0)");
    for (int degL = 0; degL <= 20; degL += 2) {
      const auto r = nilcone_census({0, degL, std::nullopt}, -degL / 2, 20);
      tally.expect(static_cast<int>(r.rows.size()) == 20 + degL / 2 + 1, "row count");
      for (int d = -degL / 2; d <= 20; ++d) {
        const std::string label = "degL = " + std::to_string(degL) + ", d = " + std::to_string(d);
        const auto rank = springer_bundle_rank(0, d, degL);
        tally.expect(rank.has_value() && *rank + bun_b_dimension(d, 0) == degL - 1, label + " bookkeeping");
        tally.expect(rank == springer::section_space_dimension(d, degL), label + " section space");
        tally.expect(rank == riemann_roch(0, 2 * d + degL), label + " Riemann-Roch");
      }
      for (const auto& row : r.rows) {
        tally.expect(*row.bundle_rank + *row.bun_b_dimension == degL - 1, "report row bookkeeping");
      }
    }
  });
  return tally.result("AC5", "census golden values",
                      std::to_string(tally.checked()) + " integer identities (genus 0..8, degL up to 2g + 12)");
}

CheckResult quasimap_example(std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  int genuine = 0, degenerate = 0;
  const SplitBundle target({0, 0});
  const int count_coefficients = 4;
  tally.expect(quasimap_parameter_dimension(1) == count_coefficients - 1, "parameter space is not P^3");
  for (int i = 0; i < 1200; ++i) {
    guarded(tally, "column", [&] {
      auto entry = [&] { return BinaryForm::linear(uniform(rng, -3, 3), uniform(rng, -3, 3)); };
      const auto top = entry();
      BinaryForm bottom;
      switch (uniform(rng, 0, 2)) {
        case 0: bottom = random_rational(rng) * top; break;
        default: bottom = entry(); break;
      }
      if (top.is_zero() && bottom.is_zero()) return;
      const LineSubsheaf lambda(-1, target, {top, bottom});
      tally.expect(static_cast<int>(top.coeffs().size() + bottom.coeffs().size()) == count_coefficients,
                   "coefficient count");
      const Rational det = coefficient_determinant(top, bottom);
      tally.expect(quasimap_determinant(lambda) == det, "determinant mismatch");
      const auto cls = quasimap_classify(lambda);
      const bool is_genuine = std::holds_alternative<GenuineMap>(cls);
      (is_genuine ? genuine : degenerate)++;
      const std::string label = lambda.to_string();
      tally.expect(is_genuine == (det != 0), label + ": classification vs determinant");
      const auto df = defect(lambda);
      tally.expect(is_genuine == df.is_empty(), label + ": defect vs classification");
      if (!is_genuine) tally.expect(std::get<QuasiMapWithDefect>(cls).defect == df, label + ": reported defect");
      const int map_degree = -normalization(lambda).source_degree();
      tally.expect(df.degree() + map_degree == 1, label + ": degree bookkeeping");
    });
  }
  return tally.result("AC6", "quasi-maps O(-1) -> O + O",
                      std::to_string(genuine + degenerate) + " columns, " + std::to_string(genuine) + " genuine, " +
                          std::to_string(degenerate) + " with defect; parameter space P^3");
}

CheckResult canonical_round_trip(std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  int trips = 0, nilpotent = 0, other = 0;
  for (int i = 0; i < 600; ++i) {
    guarded(tally, "round trip", [&] {
      const HiggsField phi = i % 2 == 0
                                 ? random_nilpotent(rng, CofactorShape::Any).phi
                                 : product_nilpotent(rng, uniform(rng, 0, 2), 2 * uniform(rng, 0, 3));
      if (phi.is_zero()) return;
      ++trips;
      const auto c = canonical_form(phi);
      const std::string label = phi.to_string();
      const LineSubsheaf kernel(c.k, phi.bundle(), {c.s, c.t});
      tally.expect(build_from(kernel, c.h, phi.ell()) == phi, label + ": build_from does not invert");
      tally.expect(reassemble(c, phi.d(), phi.ell()) == phi, label + ": reassemble");
      tally.expect(defect(kernel_subbundle(phi)).is_empty(), label + ": kernel not saturated");
      tally.expect(irregularity(phi).degree() == 2 * c.k + phi.ell(), label + ": irregularity degree");
    });
  }
  for (int i = 0; i < 1200; ++i) {
    guarded(tally, "nilpotency", [&] {
      const int d = uniform(rng, 0, 2), ell = 2 * uniform(rng, 0, 3);
      const HiggsField phi = i % 2 == 0 ? random_traceless(rng, d, ell) : product_nilpotent(rng, d, ell);
      const auto sq = square_entries(phi);
      const bool zero = sq[0].is_zero() && sq[1].is_zero() && sq[2].is_zero() && sq[3].is_zero();
      (zero ? nilpotent : other)++;
      tally.expect(is_nilpotent(phi) == zero, phi.to_string() + ": is_nilpotent vs composed square");
    });
  }
  tally.expect(nilpotent > 0 && other > 0, "corpus lacks one of the two classes");
  return tally.result("AC7", "canonical form round trip and nilpotency test",
                      std::to_string(trips) + " round trips; " + std::to_string(nilpotent + other) +
                          " traceless fields (" + std::to_string(nilpotent) + " nilpotent, " + std::to_string(other) +
                          " not)");
}

CheckResult form_identities(std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  for (int i = 0; i < 300; ++i) {
    guarded(tally, "forms", [&] {
      const auto f = random_nonzero_form(rng, uniform(rng, 0, 4));
      const auto g = random_nonzero_form(rng, uniform(rng, 0, 4));
      const auto h = random_split_form(rng, uniform(rng, 0, 3));
      const std::string label = f.to_string() + ", " + g.to_string();
      tally.expect(gcd(f * h, g * h) == (gcd(f, g) * h).normalized(), label + ": gcd not multiplicative");
      tally.expect(gcd(f, g, Chart::W) == gcd(f, g, Chart::Z), label + ": charts disagree");
      tally.expect(exact_div(f * g, g) == f, label + ": exact_div");
      BinaryForm product;
      bool multiplicity_free = true;
      for (const auto& factor : factor_into_divisors(f * h)) {
        multiplicity_free = multiplicity_free && factor.multiplicity == 1;
        product = product * factor.divisor.form().pow(factor.multiplicity);
      }
      tally.expect(product == (f * h).normalized(), label + ": factorization does not multiply back");
      tally.expect(is_squarefree(f * h) == multiplicity_free, label + ": squarefree test vs factorization");
    });
  }
  return tally.result("forms", "form arithmetic identities", std::to_string(tally.checked()) + " identities");
}

CheckResult subsheaf_identities(std::uint64_t seed) {
  Tally tally;
  Rng rng(seed);
  for (int i = 0; i < 300; ++i) {
    guarded(tally, "subsheaf", [&] {
      const auto lambda = random_line_subsheaf(rng);
      const std::string label = lambda.to_string();
      const auto df = defect(lambda);
      const auto n = normalization(lambda);
      tally.expect(n.source_degree() == lambda.source_degree() + df.degree(), label + ": normalization degree");
      tally.expect(defect(n).is_empty(), label + ": normalization not saturated");
      Rational c;
      while (c == 0) c = random_rational(rng);
      const LineSubsheaf scaled(lambda.source_degree(), lambda.target(),
                                {c * lambda.embedding()[0], c * lambda.embedding()[1]});
      tally.expect(defect(scaled) == df, label + ": defect not scale invariant");
      tally.expect(scaled.same_point(lambda), label + ": rescaling changed the point");
    });
  }
  for (int d = 0; d <= 4; ++d) {
    for (int m = -6; m <= 0; ++m) tally.expect(admits_embedding(m, SplitBundle::sl2(d)), "m <= 0 must embed");
  }
  return tally.result("sheaves", "line subsheaf identities", std::to_string(tally.checked()) + " identities");
}

std::vector<CheckResult> invariant_suite(std::uint64_t seed) {
  return {form_identities(seed),        subsheaf_identities(seed),
          worked_example_fiber(),       globally_regular_singleton(seed),
          fiber_counts_and_divisibility(seed), fitting_suite(seed),
          census_golden_values(),       quasimap_example(seed),
          canonical_round_trip(seed)};
}

}  // namespace nilcone::checks
