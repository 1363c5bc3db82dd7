// qtbound: analyze QT codes and compare minimum-distance bounds.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qtbound/codespec_io.hpp"
#include "qtbound/simulate.hpp"

using namespace qtbound;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitBudget = 2;

std::vector<BoundKind> parse_families(const std::string& csv) {
  std::vector<BoundKind> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto k = parse_bound_kind(item);
    if (!k) throw ParseError("unknown bound family '" + item + "'");
    if (std::find(out.begin(), out.end(), *k) == out.end()) out.push_back(*k);
  }
  return out;
}

std::pair<int, int> parse_range(const std::string& s, const char* what) {
  const auto dash = s.find('-');
  try {
    if (dash == std::string::npos) {
      const int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
  } catch (const std::exception&) {
    throw ParseError(std::string("bad ") + what + " '" + s + "', expected a-b");
  }
}

ExpSet parse_exponent_set(const std::string& s) {
  ExpSet out = 0;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const int k = std::stoi(item);
      if (k < 0 || k > 63) throw ParseError("exponent out of range in '" + s + "'");
      out |= ExpSet{1} << k;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad exponent set '" + s + "'");
    }
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot write " + out_path);
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-twisted code analysis and minimum-distance bounds"};
  app.require_subcommand(1);

  std::string file, out_path, families = "bch,ht,roos,exact", format = "json";
  int s = 2;
  int max_subset_bits = 12;
  std::uint64_t oracle_budget = std::uint64_t{1} << 22;
  bool no_oracle = false, restricted = false, jensen_ties = false;
  std::vector<std::string> eigencode_sets;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--oracle-budget", oracle_budget, "Maximum number of codewords or column subsets enumerated")->capture_default_str();
    sub->add_option("--out", out_path, "Write output to this file instead of stdout");
  };

  auto* analyze = app.add_subcommand("analyze", "Groebner matrix, spectrum and eigencodes of a code");
  analyze->add_option("file", file, "Code spec JSON")->required();
  analyze->add_option("--eigencode", eigencode_sets, "Exponent set such as 0,1 (repeatable)");
  add_common(analyze);

  auto* bounds = app.add_subcommand("bounds", "Compare Jensen and spectral bounds with the true distance");
  bounds->add_option("file", file, "Code spec JSON")->required();
  bounds->add_option("--s", s, "Number of defining-set bounds combined")->capture_default_str();
  bounds->add_option("--families", families, "Comma list of bch,ht,roos,exact")->capture_default_str();
  bounds->add_option("--max-subset-bits", max_subset_bits, "Largest eigenvalue set searched exhaustively")
      ->capture_default_str();
  bounds->add_flag("--restricted", restricted, "Use consecutive subsets when the eigenvalue set is too large");
  bounds->add_flag("--no-oracle", no_oracle, "Skip the exact distance");
  bounds->add_flag("--jensen-ties", jensen_ties, "Try every tie order in the Jensen bound");
  bounds->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  add_common(bounds);

  auto* distance = app.add_subcommand("distance", "Exact minimum distance by exhaustive search");
  distance->add_option("file", file, "Code spec JSON")->required();
  add_common(distance);

  SimulationConfig sim;
  std::string ell_range = "2-4", r_range, summary_path;
  int count = sim.count;
  auto* simulate = app.add_subcommand("simulate", "Seeded random-code comparison as CSV");
  simulate->add_option("--q", sim.q, "Field order")->capture_default_str();
  simulate->add_option("--m", sim.m, "Block length")->capture_default_str();
  simulate->add_option("--lambda", sim.lambda, "Twist (element encoding)")->capture_default_str();
  simulate->add_option("--ell-range", ell_range, "Index range a-b")->capture_default_str();
  simulate->add_option("--r-range", r_range, "Generator count range a-b (capped at ell); default 1-ell");
  simulate->add_option("--count", count, "Number of codes")->capture_default_str();
  simulate->add_option("--seed", sim.seed, "Base seed")->capture_default_str();
  simulate->add_option("--s", sim.s, "Largest s evaluated")->capture_default_str();
  simulate->add_option("--families", families, "Comma list of bch,ht,roos,exact")->capture_default_str();
  simulate->add_option("--max-subset-bits", max_subset_bits, "Largest eigenvalue set searched exhaustively")
      ->capture_default_str();
  simulate->add_option("--summary", summary_path, "Write the JSON summary here (default: stderr)");
  add_common(simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParse;
  }

  OracleLimits lim;
  lim.span_budget = oracle_budget;
  lim.subset_budget = std::min(lim.subset_budget, oracle_budget);

  try {
    if (*analyze) {
      const QTCodeSpec spec = load_code_spec(file);
      AnalysisOptions opt;
      opt.lim = lim;
      for (const auto& e : eigencode_sets) opt.eigencode_sets.push_back(parse_exponent_set(e));
      emit(analysis_to_json(spec, opt).dump(2) + "\n", out_path);
      return kExitOk;
    }
    if (*bounds) {
      if (s < 1) throw ParseError("--s must be at least 1");
      const QTCodeSpec spec = load_code_spec(file);
      CompareOptions opt;
      opt.s = s;
      opt.lim = lim;
      opt.with_oracle = !no_oracle;
      opt.pool.families = parse_families(families);
      opt.pool.max_subset_bits = max_subset_bits;
      opt.pool.restricted = restricted;
      opt.jensen.exhaustive_ties = jensen_ties;
      const BoundReport rep = compare_all(spec, opt);
      if (format == "csv") {
        emit(report_csv_header() + "\n" + report_csv_row(rep) + "\n", out_path);
      } else {
        emit(report_to_json(rep).dump(2) + "\n", out_path);
      }
      for (const auto& [field, msg] : rep.errors) std::cerr << "warning: " << field << ": " << msg << "\n";
      return kExitOk;
    }
    if (*distance) {
      const QTCodeSpec spec = load_code_spec(file);
      const Distance d = exact_min_distance(scalar_generator_matrix(spec), lim);
      nlohmann::json j;
      j["d_true"] = distance_to_json(d);
      emit(j.dump() + "\n", out_path);
      return kExitOk;
    }
    if (*simulate) {
      std::tie(sim.ell_min, sim.ell_max) = parse_range(ell_range, "--ell-range");
      if (!r_range.empty()) std::tie(sim.r_min, sim.r_max) = parse_range(r_range, "--r-range");
      if (count < 0) throw ParseError("--count must be nonnegative");
      if (sim.s < 1) throw ParseError("--s must be at least 1");
      sim.count = count;
      sim.compare.lim = lim;
      sim.compare.pool.families = parse_families(families);
      sim.compare.pool.max_subset_bits = max_subset_bits;
      const auto rows = run_simulation(sim);
      emit(simulation_csv(rows, sim.s), out_path);
      const std::string summary = summary_to_json(summarize(rows, sim.s)).dump(2) + "\n";
      if (summary_path.empty()) {
        std::cerr << summary;
      } else {
        std::ofstream(summary_path) << summary;
      }
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitOk;
}
