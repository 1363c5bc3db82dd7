#pragma once

// Seeded random QT-code comparison runs: per-code bound values against the
// exact distance, with sharp/best tallies.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qtbound/bounds.hpp"

namespace qtbound {

struct SimulationConfig {
  std::uint32_t q = 3;
  int m = 4;
  std::uint32_t lambda = 2;  // element encoding in F_q
  int ell_min = 2, ell_max = 4;
  int r_min = 1, r_max = 0;  // r_max 0 means r <= ell
  int count = 135;
  std::uint64_t seed = 1;
  int s = 3;
  CompareOptions compare;  // s inside is ignored
};

struct SimulationRow {
  std::uint32_t q = 0;
  int m = 0, ell = 0, r = 0;
  std::uint64_t seed = 0;
  int dim = 0;
  std::optional<Distance> d_true, d_jensen;
  std::vector<std::optional<Distance>> d_spec;  // s = 1..S
  // Bound order: jensen, spec1, ..., specS.
  std::vector<bool> sharp, best;

  std::vector<std::optional<Distance>> bounds() const;
};

struct SimulationSummary {
  int rows = 0;
  int complete = 0;  // rows with d_true and every bound present
  std::vector<std::string> names;
  std::vector<int> sharp, best;
};

std::vector<std::string> bound_names(int s);
/// (ell, r) tuples in the order rows are assigned to them.
std::vector<std::pair<int, int>> simulation_tuples(const SimulationConfig& cfg);
std::vector<SimulationRow> run_simulation(const SimulationConfig& cfg);
void fill_flags(SimulationRow& row);
SimulationSummary summarize(const std::vector<SimulationRow>& rows, int s);

std::string simulation_csv_header(int s);
std::string simulation_csv_row(const SimulationRow& row);
std::string simulation_csv(const std::vector<SimulationRow>& rows, int s);
nlohmann::json summary_to_json(const SimulationSummary& sum);

}  // namespace qtbound
