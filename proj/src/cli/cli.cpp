#include "nilcone/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "nilcone/census.hpp"
#include "nilcone/checks/criteria.hpp"
#include "nilcone/errors.hpp"
#include "nilcone/json_io.hpp"
#include "nilcone/springer.hpp"

namespace nilcone::cli {

namespace {

using json_io::Json;

struct Source {
  std::string path;
  std::string inline_json;
};

void add_source(CLI::App* sub, Source& src) {
  sub->add_option("-i,--input", src.path, "JSON input file ('-' for standard input)");
  sub->add_option("-j,--json", src.inline_json, "JSON input given inline");
}

Json read_input(const Source& src, std::istream& in) {
  std::string text;
  if (!src.inline_json.empty()) {
    text = src.inline_json;
  } else if (!src.path.empty() && src.path != "-") {
    std::ifstream file(src.path);
    if (!file) throw InputError("cannot open " + src.path);
    text.assign(std::istreambuf_iterator<char>(file), {});
  } else {
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// "lo:hi" with lo <= hi.
std::pair<int, int> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InputError("range must look like lo:hi, got '" + text + "'");
  try {
    std::size_t used_lo = 0, used_hi = 0;
    const int lo = std::stoi(text.substr(0, colon), &used_lo);
    const int hi = std::stoi(text.substr(colon + 1), &used_hi);
    if (used_lo != colon || used_hi != text.size() - colon - 1) throw std::invalid_argument(text);
    if (lo > hi) throw InputError("empty range '" + text + "'");
    return {lo, hi};
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InputError*>(&e)) throw;
    throw InputError("range must look like lo:hi, got '" + text + "'");
  }
}

Json defect_json(const DivisorP1& d) { return {{"divisor", json_io::divisor_to_json(d)}, {"degree", d.degree()}}; }

Json selftest_json(std::uint64_t seed, bool& all_passed) {
  Json checks = Json::array();
  all_passed = true;
  for (const auto& r : checks::invariant_suite(seed)) {
    all_passed = all_passed && r.passed;
    checks.push_back({{"id", r.id}, {"description", r.description}, {"passed", r.passed}, {"detail", r.detail}});
  }
  return {{"seed", seed}, {"checks", checks}, {"passed", all_passed}};
}

std::string census_table(const census::CensusReport& r) {
  std::ostringstream s;
  s << "g = " << r.g << ", degL = " << r.degL << " (" << census::to_string(r.regime) << ")\n";
  s << "dimension: " << (r.dimension ? std::to_string(*r.dimension) : "-") << "\n";
  s << "integer family: d > " << r.min_degree << "\n";
  s << "zero section: " << (r.zero_section_present ? "yes" : "no") << "\n";
  s << "d\tcount\tdim Bun_B\trank\tdim\n";
  auto cell = [](const std::optional<int>& x) { return x ? std::to_string(*x) : std::string("-"); };
  for (const auto& row : r.rows) {
    s << row.d << (row.square_root ? "*" : "") << "\t" << row.count << "\t" << cell(row.bun_b_dimension) << "\t"
      << cell(row.bundle_rank) << "\t" << cell(row.dimension) << "\n";
  }
  return s.str();
}

}  // namespace

int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations on the SL2 global nilpotent cone over P^1", "nilcone"};
  app.require_subcommand(1);

  Source src;
  std::optional<Json> result;
  std::optional<std::string> text_result;
  int exit_code = 0;

  auto subsheaf_command = [&](const std::string& name, const std::string& help,
                              std::function<Json(const LineSubsheaf&)> body) {
    auto* sub = app.add_subcommand(name, help);
    add_source(sub, src);
    sub->callback([&, body] { result = body(json_io::subsheaf_from_json(read_input(src, in))); });
  };
  auto higgs_command = [&](const std::string& name, const std::string& help,
                           std::function<Json(const HiggsField&)> body) {
    auto* sub = app.add_subcommand(name, help);
    add_source(sub, src);
    sub->callback([&, body] { result = body(json_io::higgs_from_json(read_input(src, in))); });
    return sub;
  };

  subsheaf_command("defect", "Defect divisor of a line subsheaf", [](const LineSubsheaf& l) {
    return defect_json(defect(l));
  });
  subsheaf_command("normalize", "Saturation of a line subsheaf", [](const LineSubsheaf& l) {
    return Json{{"normalization", json_io::subsheaf_to_json(normalization(l))}, {"defect", defect_json(defect(l))}};
  });
  subsheaf_command("quasimap", "Classify O(-n) -> O + O as a map or a quasi-map", [](const LineSubsheaf& l) {
    Json j = {{"class", json_io::quasimap_to_json(quasimap_classify(l))},
              {"parameter_dimension", quasimap_parameter_dimension(-l.source_degree())}};
    if (l.source_degree() == -1) j["determinant"] = json_io::rational_to_json(quasimap_determinant(l));
    return j;
  });

  higgs_command("nilpotent-check", "Whether a Higgs field is nilpotent", [](const HiggsField& phi) {
    return Json{{"nilpotent", is_nilpotent(phi)},
                {"negated_determinant", json_io::form_to_json(phi.negated_determinant())}};
  });
  higgs_command("canonical-form", "Canonical (s, t, h, k) of a nilpotent field", [](const HiggsField& phi) {
    return json_io::canonical_to_json(canonical_form(phi));
  });
  higgs_command("kernel", "Kernel line subbundle of a nilpotent field", [](const HiggsField& phi) {
    return Json{{"kernel", json_io::subsheaf_to_json(kernel_subbundle(phi))}};
  });
  higgs_command("irregularity", "Irregularity divisor of a nilpotent field", [](const HiggsField& phi) {
    const auto irr = irregularity(phi);
    return Json{{"divisor", json_io::divisor_to_json(irr)},
                {"degree", irr.degree()},
                {"globally_regular", springer::is_globally_regular(phi)}};
  });

  std::optional<int> fiber_m;
  std::string fiber_range;
  auto* fiber = higgs_command("fiber", "Springer fiber over a nilpotent field", [&](const HiggsField& phi) {
    if (fiber_m) return json_io::fiber_to_json(springer::enumerate_fiber(phi, *fiber_m));
    if (fiber_range.empty()) throw InputError("fiber needs --m or --range");
    const auto [lo, hi] = parse_range(fiber_range);
    Json fibers = Json::array();
    for (int m = lo; m <= hi; ++m) fibers.push_back(json_io::fiber_to_json(springer::enumerate_fiber(phi, m)));
    return Json{{"fibers", fibers}};
  });
  auto* m_opt = fiber->add_option("--m", fiber_m, "Component degree");
  fiber->add_option("--range", fiber_range, "Component degrees lo:hi")->excludes(m_opt);

  std::optional<int> fitting_h;
  auto* fitting = app.add_subcommand("fitting", "Fitting ideals of a presented Q[t]-module");
  add_source(fitting, src);
  fitting->set_help_flag("--help", "Print this help message and exit");
  fitting->add_option("--h", fitting_h, "Index of the Fitting ideal (all when omitted)");
  fitting->callback([&] {
    const auto m = json_io::module_from_json(read_input(src, in));
    if (fitting_h) {
      result = Json{{"h", *fitting_h}, {"ideal", json_io::ideal_to_json(fitting::fitting_ideal(m, *fitting_h))}};
      return;
    }
    Json ideals = Json::array();
    for (int h = 0; h <= m.target_rank(); ++h) {
      ideals.push_back({{"h", h}, {"ideal", json_io::ideal_to_json(fitting::fitting_ideal(m, h))}});
    }
    const auto rank = fitting::fitting_rank(m);
    result = Json{{"ideals", ideals}, {"fitting_rank", rank ? Json(*rank) : Json(nullptr)}};
  });

  int census_g = 0, census_degL = 0;
  std::optional<int> census_d;
  std::string census_range;
  bool census_as_table = false;
  auto* census_cmd = app.add_subcommand("census", "Dimension and components of the nilpotent cone");
  census_cmd->add_option("--g", census_g, "Genus")->required();
  census_cmd->add_option("--degL", census_degL, "Degree of L (even)")->required();
  census_cmd->add_option("--d", census_d, "Report a single component degree");
  census_cmd->add_option("--d-range", census_range, "Component degrees lo:hi to tabulate");
  census_cmd->add_flag("--table", census_as_table, "Plain-text table instead of JSON");
  census_cmd->callback([&] {
    census::regime(census_g, census_degL);
    const int lo = -census_degL / 2;
    auto [d_lo, d_hi] = census_range.empty() ? std::pair{lo, lo + 5} : parse_range(census_range);
    const auto report = census::nilcone_census({census_g, census_degL, census_d}, d_lo, d_hi);
    if (census_as_table) {
      text_result = census_table(report);
    } else {
      result = json_io::census_to_json(report);
    }
  });

  int stable_g = 2, stable_degL = 0;
  auto* stable = app.add_subcommand("stable-census", "Irreducible components of the stable nilpotent cone");
  stable->add_option("--g", stable_g, "Genus (>= 2)")->required();
  stable->add_option("--degL", stable_degL, "Degree of L (even)")->required();
  stable->callback([&] {
    result = Json{{"g", stable_g},
                  {"degL", stable_degL},
                  {"regime", census::to_string(census::regime(stable_g, stable_degL))},
                  {"components", census::stable_census(stable_g, stable_degL)}};
  });

  std::uint64_t seed = checks::kDefaultSeed;
  auto* selftest = app.add_subcommand("selftest", "Run the bundled invariant corpus");
  selftest->add_option("--seed", seed, "Random seed");
  selftest->callback([&] {
    bool passed = false;
    result = selftest_json(seed, passed);
    if (!passed) exit_code = 1;
  });

  std::vector<const char*> argv{"nilcone"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }

  if (text_result) out << *text_result;
  if (result) out << result->dump(2) << "\n";
  return exit_code;
}

}  // namespace nilcone::cli
