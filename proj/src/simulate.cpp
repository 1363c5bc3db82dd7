#include "qtbound/simulate.hpp"

#include <sstream>

#include "qtbound/codespec_io.hpp"

namespace qtbound {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr int kMaxRedraws = 1000;

}  // namespace

std::vector<std::optional<Distance>> SimulationRow::bounds() const {
  std::vector<std::optional<Distance>> out{d_jensen};
  out.insert(out.end(), d_spec.begin(), d_spec.end());
  return out;
}

std::vector<std::string> bound_names(int s) {
  std::vector<std::string> out{"d_jensen"};
  for (int k = 1; k <= s; ++k) out.push_back("d_spec" + std::to_string(k));
  return out;
}

std::vector<std::pair<int, int>> simulation_tuples(const SimulationConfig& cfg) {
  std::vector<std::pair<int, int>> out;
  for (int ell = cfg.ell_min; ell <= cfg.ell_max; ++ell) {
    const int rmax = cfg.r_max > 0 ? std::min(cfg.r_max, ell) : ell;
    for (int r = cfg.r_min; r <= rmax; ++r) out.emplace_back(ell, r);
  }
  return out;
}

void fill_flags(SimulationRow& row) {
  const auto b = row.bounds();
  row.sharp.assign(b.size(), false);
  row.best.assign(b.size(), false);
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i]) continue;
    row.sharp[i] = row.d_true && *b[i] == *row.d_true;
    bool top = true;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] && *b[j] > *b[i]) top = false;
    row.best[i] = top;
  }
}

std::vector<SimulationRow> run_simulation(const SimulationConfig& cfg) {
  if (cfg.count < 0) throw Error("count must be nonnegative");
  if (cfg.s < 1) throw Error("s must be at least 1");
  const auto tuples = simulation_tuples(cfg);
  if (tuples.empty() && cfg.count > 0) throw Error("empty (ell, r) range");
  const FiniteField F = [&] {
    std::uint32_t p = 2;
    while (cfg.q % p) ++p;
    int e = 0;
    for (std::uint32_t t = cfg.q; t > 1; t /= p) ++e;
    return FiniteField::with_degree(p, e);
  }();
  if (cfg.lambda == 0 || cfg.lambda >= F.order()) throw Error("lambda must be a nonzero element of F_q");
  const Elem lambda{cfg.lambda};

  std::vector<SimulationRow> rows(static_cast<std::size_t>(cfg.count));
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < cfg.count; ++i) {
    SimulationRow& row = rows[static_cast<std::size_t>(i)];
    const auto [ell, r] = tuples[static_cast<std::size_t>(i) % tuples.size()];
    row.q = F.order();
    row.m = cfg.m;
    row.ell = ell;
    row.r = r;
    try {
      std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(static_cast<std::uint64_t>(i)));
      QTCodeSpec spec;
      for (int attempt = 0;; ++attempt) {
        if (attempt == kMaxRedraws) throw Error("no nontrivial code found");
        spec = random_qtcode(F, cfg.m, ell, r, lambda, seed);
        const int dim = dimension(groebner_matrix(spec));
        if (dim > 0 && dim < cfg.m * ell) {
          row.dim = dim;
          break;
        }
        seed = splitmix64(seed);
      }
      row.seed = seed;
      CompareOptions opt = cfg.compare;
      opt.s = 1;
      BoundReport rep = compare_all(spec, opt);
      row.d_true = rep.d_true;
      row.d_jensen = rep.d_jensen;
      row.d_spec.push_back(rep.d_spec1);
      if (cfg.s > 1) {
        const RootSetup setup = root_setup(spec.q_field, spec.m, spec.lambda);
        const Spectrum sp = spectrum(groebner_matrix(spec), setup);
        try {
          const Pool pool = candidate_pool(sp, opt.pool, opt.lim);
          SpectralContext ctx(sp, opt.lim);
          for (int s = 2; s <= cfg.s; ++s) row.d_spec.push_back(optimize_spectral(ctx, pool, s).value);
        } catch (const Error&) {
          row.d_spec.resize(static_cast<std::size_t>(cfg.s));
        }
      }
    } catch (const Error&) {
      // row left incomplete; bounds stay empty
    }
    row.d_spec.resize(static_cast<std::size_t>(cfg.s));
    fill_flags(row);
  }
  return rows;
}

SimulationSummary summarize(const std::vector<SimulationRow>& rows, int s) {
  SimulationSummary sum;
  sum.names = bound_names(s);
  sum.sharp.assign(sum.names.size(), 0);
  sum.best.assign(sum.names.size(), 0);
  sum.rows = static_cast<int>(rows.size());
  for (const auto& row : rows) {
    const auto b = row.bounds();
    bool complete = row.d_true.has_value();
    for (const auto& x : b) complete = complete && x.has_value();
    sum.complete += complete;
    for (std::size_t i = 0; i < sum.names.size() && i < row.sharp.size(); ++i) {
      sum.sharp[i] += row.sharp[i];
      sum.best[i] += row.best[i];
    }
  }
  return sum;
}

std::string simulation_csv_header(int s) {
  std::ostringstream os;
  os << "q,m,ell,r,seed,dim,d_true";
  const auto names = bound_names(s);
  for (const auto& n : names) os << ',' << n;
  for (const auto& n : names) os << ",sharp_" << n;
  for (const auto& n : names) os << ",best_" << n;
  return os.str();
}

std::string simulation_csv_row(const SimulationRow& row) {
  std::ostringstream os;
  os << row.q << ',' << row.m << ',' << row.ell << ',' << row.r << ',' << row.seed << ',' << row.dim << ','
     << distance_to_csv(row.d_true);
  for (const auto& b : row.bounds()) os << ',' << distance_to_csv(b);
  for (bool f : row.sharp) os << ',' << (f ? 1 : 0);
  for (bool f : row.best) os << ',' << (f ? 1 : 0);
  return os.str();
}

std::string simulation_csv(const std::vector<SimulationRow>& rows, int s) {
  std::string out = simulation_csv_header(s) + "\n";
  for (const auto& row : rows) out += simulation_csv_row(row) + "\n";
  return out;
}

nlohmann::json summary_to_json(const SimulationSummary& sum) {
  nlohmann::json out;
  out["rows"] = sum.rows;
  out["complete_rows"] = sum.complete;
  for (std::size_t i = 0; i < sum.names.size(); ++i) {
    out["sharp"][sum.names[i]] = sum.sharp[i];
    out["best"][sum.names[i]] = sum.best[i];
  }
  return out;
}

}  // namespace qtbound
