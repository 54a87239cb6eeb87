#include "nilcone/census.hpp"

#include <algorithm>

#include "nilcone/errors.hpp"

namespace nilcone::census {

std::string to_string(Regime r) {
  switch (r) {
    case Regime::HighDegree: return "degL >= 2g";
    case Regime::LowPositive: return "0 < degL <= 2g-2";
    case Regime::NonPositive: return "degL <= 0";
  }
  return "unknown";
}

Regime regime(int g, int degL) {
  if (g < 0) throw InputError("genus must be nonnegative");
  if (degL % 2 != 0) throw InputError("deg L must be even, got " + std::to_string(degL));
  if (degL >= 2 * g) return Regime::HighDegree;
  return degL > 0 ? Regime::LowPositive : Regime::NonPositive;
}

namespace {

std::uint64_t square_roots(int g) {
  if (g > 31) throw InputError("2^{2g} overflows for g > 31");
  return std::uint64_t{1} << (2 * g);
}

}  // namespace

CensusReport nilcone_census(const CensusInput& input, int d_lo, int d_hi) {
  const int g = input.g;
  const int degL = input.degL;
  CensusReport report;
  report.g = g;
  report.degL = degL;
  report.regime = regime(g, degL);
  report.min_degree = -degL / 2;
  report.square_root_count = square_roots(g);
  report.zero_section_present = degL <= 2 * g - 2;
  if (report.regime == Regime::HighDegree) report.dimension = degL + g - 1;

  if (input.d) {
    if (*input.d < report.min_degree) {
      throw InputError("component degree " + std::to_string(*input.d) + " is below -degL/2 = " +
                       std::to_string(report.min_degree));
    }
    d_lo = d_hi = *input.d;
  }
  for (int d = std::max(d_lo, report.min_degree); d <= d_hi; ++d) {
    ComponentRow row;
    row.d = d;
    row.square_root = d == report.min_degree;
    row.count = row.square_root ? report.square_root_count : 1;
    if (g == 1 && row.square_root) {
      // Bun̄_B restricted to λ^2 ⊗ L having a section: codimension 1.
      row.bun_b_dimension = degL - 1;
    } else {
      row.bun_b_dimension = bun_b_dimension(d, g);
    }
    row.bundle_rank = springer_bundle_rank(g, d, degL);
    if (row.bundle_rank) {
      row.dimension = *row.bundle_rank + *row.bun_b_dimension;
    } else if (report.dimension) {
      row.dimension = report.dimension;
    }
    report.rows.push_back(row);
  }
  return report;
}

int stable_census(int g, int degL) {
  if (g < 2) throw InputError("there are no stable SL2-bundles when g < 2");
  switch (regime(g, degL)) {
    case Regime::HighDegree: return degL / 2;
    case Regime::LowPositive: return degL / 2 + 1;
    case Regime::NonPositive: return 1;
  }
  return 0;
}

int bun_b_dimension(int alpha, int g) { return -2 * alpha + 2 * (g - 1); }

int riemann_roch(int g, int deg) { return deg + 1 - g; }

std::optional<int> springer_bundle_rank(int g, int d, int degL) {
  if (g < 0) throw InputError("genus must be nonnegative");
  if (2 * d + degL < 0) {
    throw InputError("2d + degL = " + std::to_string(2 * d + degL) + " is below the component bound");
  }
  if (g == 0) return 2 * d + degL + 1;
  if (g == 1) return 2 * d + degL > 0 ? 2 * d + degL : 1;
  return std::nullopt;
}

CgSmoothness cg_smoothness(int g, int d, bool s_is_zero, int h0, int h1) {
  if (g < 2) throw InputError("the CG_d smoothness criterion is stated for g >= 2");
  if (d < 0) throw InputError("CG_d needs d >= 0");
  if (h0 < 1 || h1 < 0) throw InputError("a point of W^0_d needs h0 >= 1 and h1 >= 0");
  if (h0 - h1 != riemann_roch(g, d)) {
    throw InputError("h0 - h1 = " + std::to_string(h0 - h1) + " contradicts Riemann-Roch (" +
                     std::to_string(riemann_roch(g, d)) + ")");
  }
  CgSmoothness out;
  out.dimension = d;
  if (d > 2 * g - 2) {
    out.smooth = true;
  } else if (d < g) {
    out.smooth = !s_is_zero || h0 == 1;
  } else {
    out.smooth = !s_is_zero || h1 == 0;
  }
  return out;
}

}  // namespace nilcone::census
