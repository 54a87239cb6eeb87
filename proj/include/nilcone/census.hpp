#pragma once

// Dimension and component counts of the SL2 global nilpotent cone on a
// curve of genus g with twisting line bundle L of even degree degL.
//
// Only SL2 is supported: dim B = 2 and the pairing of a coweight with the
// single positive root is the integer degree itself, so the general
// dim Bun_{B,α} = -2|α| + dim(B)(g - 1) becomes -2α + 2(g - 1).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nilcone::census {

enum class Regime {
  HighDegree,   // degL >= 2g
  LowPositive,  // 0 < degL <= 2g - 2
  NonPositive,  // degL <= 0 (and degL <= 2g - 2)
};

std::string to_string(Regime r);

/// Throws InputError for negative g or odd degL.
Regime regime(int g, int degL);

struct CensusInput {
  int g = 0;
  int degL = 0;
  std::optional<int> d;
};

/// One connected component family of degree d (deg λ = d).
struct ComponentRow {
  int d = 0;
  bool square_root = false;
  /// Number of components with this degree: 2^{2g} at d = -degL/2, else 1.
  std::uint64_t count = 1;
  std::optional<int> bun_b_dimension;
  std::optional<int> bundle_rank;
  std::optional<int> dimension;
};

struct CensusReport {
  int g = 0;
  int degL = 0;
  Regime regime = Regime::HighDegree;
  /// Components are indexed by integers d > min_degree plus the square roots
  /// of L^{-1} at d = min_degree.
  int min_degree = 0;
  std::uint64_t square_root_count = 1;
  bool zero_section_present = false;
  /// degL + g - 1 when degL >= 2g; unset otherwise.
  std::optional<int> dimension;
  std::vector<ComponentRow> rows;
};

/// Rows are produced for d in [d_lo, d_hi] ∩ [-degL/2, ∞); with
/// input.d set only that component is listed.
CensusReport nilcone_census(const CensusInput& input, int d_lo, int d_hi);

/// Irreducible components of the stable nilpotent cone; g >= 2.
int stable_census(int g, int degL);

/// -2α + 2(g - 1).
int bun_b_dimension(int alpha, int g);

/// χ(λ) = deg + 1 - g.
int riemann_roch(int g, int deg);

/// Rank of N̂_d -> Bun̄_{B,d} for g ∈ {0, 1}; nullopt (not a vector bundle
/// statement) for g >= 2. Throws InputError when 2d + degL < 0.
std::optional<int> springer_bundle_rank(int g, int d, int degL);

struct CgSmoothness {
  bool smooth = false;
  /// C G_d is irreducible of dimension d.
  int dimension = 0;
};

/// Smoothness of a point (λ, s) of CG_d(X) for g >= 2, given h^0(λ) and
/// h^1(λ). Throws InputError when g < 2 or h0 - h1 != d + 1 - g.
CgSmoothness cg_smoothness(int g, int d, bool s_is_zero, int h0, int h1);

}  // namespace nilcone::census
