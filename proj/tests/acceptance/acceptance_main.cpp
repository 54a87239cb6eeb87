// Runs every acceptance criterion and prints one verdict line per criterion.
// Exit status is nonzero when any criterion fails.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "nilcone/checks/criteria.hpp"
#include "nilcone/cli.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/sheaves.hpp"

using namespace nilcone;

namespace {

// The worked example has to come out of the command line as well:
// `fiber --m -1` on [[0, z^2], [0, 0]].
checks::CheckResult worked_example_via_cli() {
  auto result = checks::worked_example_fiber();
  const HiggsField phi(0, 2, BinaryForm::zero(2), BinaryForm::z() * BinaryForm::z(), BinaryForm::zero(2));
  const std::vector<std::string> args{"fiber", "--m", "-1", "--json", json_io::higgs_to_json(phi).dump()};
  std::istringstream in;
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  std::string problem;
  if (code != 0) {
    problem = "cli exit " + std::to_string(code) + ": " + err.str();
  } else {
    const auto j = json_io::Json::parse(out.str());
    const LineSubsheaf expected(-1, SplitBundle::sl2(0), {BinaryForm::z(), BinaryForm::zero(1)});
    if (j.at("m") != -1 || j.at("unresolved") != false || j.at("points").size() != 1) {
      problem = "cli returned " + j.dump();
    } else if (!json_io::subsheaf_from_json(j["points"][0]["lambda"]).same_point(expected)) {
      problem = "cli point is not (z; 0)";
    }
  }
  if (problem.empty()) {
    result.detail += "; cli agrees";
  } else {
    result.passed = false;
    result.detail += "; " + problem;
  }
  return result;
}

}  // namespace

int main() {
  const std::vector<checks::CheckResult> results{
      worked_example_via_cli(),
      checks::globally_regular_singleton(),
      checks::fiber_counts_and_divisibility(),
      checks::fitting_suite(),
      checks::census_golden_values(),
      checks::quasimap_example(),
      checks::canonical_round_trip(),
  };
  int failed = 0;
  for (const auto& r : results) {
    failed += !r.passed;
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.description << ": " << r.detail << "\n";
  }
  std::cout << results.size() - failed << "/" << results.size() << " acceptance criteria passed\n";
  return failed == 0 ? 0 : 1;
}
