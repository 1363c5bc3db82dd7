#include "qtbound/bounds.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <sstream>

namespace qtbound {

std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::BCH: return "bch";
    case BoundKind::HT: return "ht";
    case BoundKind::ROOS: return "roos";
    case BoundKind::EXACT: return "exact";
  }
  return "?";
}

std::optional<BoundKind> parse_bound_kind(const std::string& s) {
  for (BoundKind k : all_bound_kinds())
    if (to_string(k) == s) return k;
  return std::nullopt;
}

const std::vector<BoundKind>& all_bound_kinds() {
  static const std::vector<BoundKind> kinds{BoundKind::BCH, BoundKind::HT, BoundKind::ROOS, BoundKind::EXACT};
  return kinds;
}

int popcount(ExpSet s) { return std::popcount(s); }

std::vector<int> members(ExpSet s) {
  std::vector<int> out;
  for (int k = 0; s; ++k, s >>= 1)
    if (s & 1) out.push_back(k);
  return out;
}

std::string format_set(ExpSet s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int k : members(s)) {
    if (!first) os << ',';
    first = false;
    os << k;
  }
  os << '}';
  return os.str();
}

bool lex_less(ExpSet a, ExpSet b) {
  const auto ma = members(a);
  const auto mb = members(b);
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

std::string BoundRecord::describe() const {
  std::ostringstream os;
  os << to_string(kind) << ' ' << format_set(P) << " d=" << d.to_string();
  switch (kind) {
    case BoundKind::BCH:
      os << " e=" << witness[0] << " n=" << witness[1] << " delta=" << witness[2];
      break;
    case BoundKind::HT:
      os << " e=" << witness[0] << " n1=" << witness[1] << " n2=" << witness[2] << " delta=" << witness[3]
         << " s=" << witness[4];
      break;
    case BoundKind::ROOS:
      os << " M=" << format_set(static_cast<ExpSet>(witness[0])) << " N=" << format_set(static_cast<ExpSet>(witness[1]))
         << " M'=" << format_set(static_cast<ExpSet>(witness[2]));
      break;
    case BoundKind::EXACT:
      break;
  }
  return os.str();
}

namespace {

std::vector<int> coprime_steps(int m) {
  if (m == 1) return {1};
  std::vector<int> out;
  for (int n = 1; n < m; ++n)
    if (std::gcd(m, n) == 1) out.push_back(n);
  return out;
}

ExpSet bit(int k) { return ExpSet{1} << k; }

bool subset(ExpSet a, ExpSet b) { return (a & ~b) == 0; }

// Keeps the largest d per set, first witness wins ties.
class Best {
 public:
  void offer(BoundRecord r) {
    auto it = by_set_.find(r.P);
    if (it == by_set_.end()) {
      by_set_.emplace(r.P, std::move(r));
    } else if (r.d > it->second.d) {
      it->second = std::move(r);
    }
  }
  std::vector<BoundRecord> take() {
    std::vector<BoundRecord> out;
    for (auto& [k, v] : by_set_) out.push_back(std::move(v));
    std::sort(out.begin(), out.end(), [](const BoundRecord& a, const BoundRecord& b) { return lex_less(a.P, b.P); });
    return out;
  }

 private:
  std::map<ExpSet, BoundRecord> by_set_;
};

}  // namespace

std::vector<ConsecutiveSet> consecutive_sets(int m) {
  if (m <= 0 || m > 63) throw Error("consecutive_sets: m out of range");
  std::vector<ConsecutiveSet> out;
  std::set<ExpSet> seen;
  for (int len = 1; len <= m; ++len)
    for (int n : coprime_steps(m))
      for (int e = 0; e < m; ++e) {
        ExpSet s = 0;
        for (int z = 0; z < len; ++z) s |= bit((e + z * n) % m);
        if (seen.insert(s).second) out.push_back({s, e, n, len});
      }
  return out;
}

std::vector<BoundRecord> bch_records(ExpSet universe, int m) {
  Best best;
  for (const auto& c : consecutive_sets(m)) {
    if (!subset(c.set, universe)) continue;
    best.offer({BoundKind::BCH, c.set, Distance(static_cast<std::uint32_t>(c.length + 1)), {c.e, c.n, c.length + 1}});
  }
  return best.take();
}

RecordList ht_records(ExpSet universe, int m, std::uint64_t cap) {
  RecordList out;
  Best best;
  std::uint64_t evals = 0;
  for (int delta = 2; delta <= m; ++delta)
    for (int s = 1; (delta - 1) * (s + 1) <= m; ++s)
      for (int n2 = 1; n2 < m; ++n2) {
        if (std::gcd(m, n2) >= delta) continue;
        for (int n1 : coprime_steps(m))
          for (int e = 0; e < m; ++e) {
            if (++evals > cap) {
              out.cap_hit = true;
              out.records = best.take();
              return out;
            }
            ExpSet D = 0;
            bool distinct = true;
            for (int z = 0; z <= delta - 2 && distinct; ++z)
              for (int y = 0; y <= s; ++y) {
                const ExpSet b = bit((e + z * n1 + y * n2) % m);
                if (D & b) {
                  distinct = false;
                  break;
                }
                D |= b;
              }
            if (!distinct || !subset(D, universe)) continue;
            best.offer({BoundKind::HT, D, Distance(static_cast<std::uint32_t>(delta + s)), {e, n1, n2, delta, s}});
          }
      }
  out.records = best.take();
  return out;
}

RecordList roos_records(ExpSet universe, int m, RoosMode mode, std::uint64_t cap) {
  RecordList out;
  Best best;
  const auto cons = consecutive_sets(m);
  std::uint64_t evals = 0;
  auto product = [m](ExpSet M, ExpSet N) {
    ExpSet r = 0;
    for (int a : members(M))
      for (int b : members(N)) r |= bit((a + b) % m);
    return r;
  };
  for (const auto& N : cons) {
    const int nN = N.length;
    for (const auto& Mp : cons) {
      const int nMp = Mp.length;
      if (mode == RoosMode::SingletonM && nMp != 1) continue;
      // |M| >= |M'| - |N| + 1
      const int min_m = std::max(1, nMp - nN + 1);
      for (ExpSet M = Mp.set;; M = (M - 1) & Mp.set) {
        if (M == 0) break;
        const int nM = popcount(M);
        const bool ok = mode == RoosMode::Any ? nM >= min_m : M == Mp.set;
        if (ok) {
          if (++evals > cap) {
            out.cap_hit = true;
            out.records = best.take();
            return out;
          }
          const ExpSet MN = product(M, N.set);
          if (subset(MN, universe)) {
            best.offer({BoundKind::ROOS, MN, Distance(static_cast<std::uint32_t>(nM + nN)),
                        {static_cast<std::int64_t>(M), static_cast<std::int64_t>(N.set),
                         static_cast<std::int64_t>(Mp.set)}});
          }
        }
        if (mode != RoosMode::Any) break;
      }
    }
  }
  out.records = best.take();
  return out;
}

BoundRecord exact_record(ExpSet P, const RootSetup& setup, const OracleLimits& lim) {
  const FiniteField& F = setup.field;
  const std::size_t m = static_cast<std::size_t>(setup.m);
  Matrix h(F, 0, m);
  std::vector<Elem> row(m);
  for (int k : members(P)) {
    if (k >= setup.m) throw Error("exact_record: exponent out of range");
    Elem cur = F.one();
    for (std::size_t j = 0; j < m; ++j) {
      row[j] = cur;
      cur = F.mul(cur, setup.omega[k]);
    }
    h.append_row(row);
  }
  return {BoundKind::EXACT, P, min_distance_from_parity(h, lim), {}};
}

Distance jensen_bound(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup,
                      const OracleLimits& lim, const JensenOptions& opt) {
  const auto cons = constituents(spec, fact, setup);
  struct Outer {
    std::size_t index;
    Distance d;
  };
  std::vector<Outer> outer;
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Matrix basis = rref(cons[i]).reduced;
    if (basis.rows() == 0) continue;
    const auto pb = constituent_prime_basis(i, fact, setup);
    outer.push_back({i, min_distance_over_subfield(basis, pb, lim)});
  }
  if (outer.empty()) return Distance::infinity();
  std::stable_sort(outer.begin(), outer.end(), [](const Outer& a, const Outer& b) { return a.d < b.d; });

  const Polynomial one = Polynomial::constant(spec.q_field, spec.q_field.one());
  std::map<ExpSet, Distance> inner_cache;
  auto inner = [&](ExpSet chosen) {
    auto it = inner_cache.find(chosen);
    if (it != inner_cache.end()) return it->second;
    Polynomial g = one;
    for (std::size_t j = 0; j < fact.count(); ++j)
      if (!(chosen >> j & 1)) g = g * fact.factors[j].f;
    const Distance d = min_distance_from_generator(constacyclic_generator_matrix(g, static_cast<std::size_t>(spec.m)), lim);
    inner_cache.emplace(chosen, d);
    return d;
  };
  auto evaluate = [&](const std::vector<Outer>& order) {
    Distance best = Distance::infinity();
    ExpSet chosen = 0;
    for (const auto& o : order) {
      chosen |= ExpSet{1} << o.index;
      best = std::min(best, o.d * inner(chosen));
    }
    return best;
  };
  if (!opt.exhaustive_ties) return evaluate(outer);

  // Every order that is sorted by distance yields a valid bound; take the largest.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t a = 0; a < outer.size();) {
    std::size_t b = a;
    while (b < outer.size() && outer[b].d == outer[a].d) ++b;
    groups.emplace_back(a, b);
    a = b;
  }
  Distance best(0);
  std::vector<Outer> order = outer;
  auto by_index = [](const Outer& x, const Outer& y) { return x.index < y.index; };
  for (auto [a, b] : groups) std::sort(order.begin() + a, order.begin() + b, by_index);
  while (true) {
    best = std::max(best, evaluate(order));
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      auto [a, b] = groups[g];
      if (std::next_permutation(order.begin() + a, order.begin() + b, by_index)) break;
    }
    if (g == groups.size()) break;
  }
  return best;
}

SpectralContext::SpectralContext(const Spectrum& sp, OracleLimits lim) : sp_(sp), lim_(lim) {}

const Matrix& SpectralContext::constraints(ExpSet P) {
  auto it = constraints_.find(P);
  if (it != constraints_.end()) return it->second;
  Matrix c(sp_.setup.q_field, 0, static_cast<std::size_t>(sp_.ell()));
  if (P != 0) {
    const Matrix v = common_eigenspace(sp_, P);
    if (v.rows() > 0) c = eigencode_constraints(sp_, v);
  }
  return constraints_.emplace(P, std::move(c)).first->second;
}

Distance SpectralContext::intersection_distance(std::vector<ExpSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  auto it = distances_.find(sets);
  if (it != distances_.end()) return it->second;
  Matrix stacked(sp_.setup.q_field, 0, static_cast<std::size_t>(sp_.ell()));
  for (ExpSet P : sets) {
    const Matrix& c = constraints(P);
    for (std::size_t i = 0; i < c.rows(); ++i) stacked.append_row(c.row(i));
  }
  const Matrix kernel = right_kernel(stacked);
  const Distance d = kernel.rows() == 0 ? Distance::infinity() : exact_min_distance(kernel, lim_);
  distances_.emplace(std::move(sets), d);
  return d;
}

Distance spectral_bound(SpectralContext& ctx, const BoundRecord& rec) {
  return generalized_spectral_bound(ctx, {rec});
}

Distance generalized_spectral_bound(SpectralContext& ctx, std::vector<BoundRecord> recs) {
  if (recs.empty()) throw Error("generalized_spectral_bound: no records");
  const ExpSet eig = ctx.spectrum().mask();
  for (const auto& r : recs)
    if (!subset(r.P, eig)) throw Error("record outside eigenvalue set");
  if (eig == 0) return Distance(1);
  std::stable_sort(recs.begin(), recs.end(), [](const BoundRecord& a, const BoundRecord& b) {
    if (a.d != b.d) return a.d > b.d;
    return lex_less(a.P, b.P);
  });
  Distance value = recs[0].d;
  std::vector<ExpSet> prefix{recs[0].P};
  for (std::size_t j = 1; j < recs.size(); ++j) {
    value = std::min(value, recs[j].d * ctx.intersection_distance(prefix));
    prefix.push_back(recs[j].P);
  }
  return std::min(value, ctx.intersection_distance(prefix));
}

Pool candidate_pool(const Spectrum& sp, const PoolOptions& opt, const OracleLimits& lim) {
  Pool pool;
  const ExpSet U = sp.mask();
  if (U == 0) return pool;
  const int bits = popcount(U);
  std::vector<ExpSet> candidates;
  if (bits <= opt.max_subset_bits) {
    for (ExpSet P = U; P; P = (P - 1) & U) candidates.push_back(P);
  } else if (opt.restricted) {
    for (const auto& c : consecutive_sets(sp.setup.m))
      if (subset(c.set, U)) candidates.push_back(c.set);
    candidates.push_back(U);
  } else {
    throw Error("eigenvalue set has " + std::to_string(bits) + " elements, above the subset cap of " +
                std::to_string(opt.max_subset_bits));
  }
  std::sort(candidates.begin(), candidates.end(), lex_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::map<BoundKind, std::vector<BoundRecord>> family;
  for (BoundKind k : opt.families) {
    switch (k) {
      case BoundKind::BCH: family[k] = bch_records(U, sp.setup.m); break;
      case BoundKind::HT: {
        auto r = ht_records(U, sp.setup.m, opt.family_cap);
        pool.cap_hit |= r.cap_hit;
        family[k] = std::move(r.records);
        break;
      }
      case BoundKind::ROOS: {
        auto r = roos_records(U, sp.setup.m, RoosMode::Any, opt.family_cap);
        pool.cap_hit |= r.cap_hit;
        family[k] = std::move(r.records);
        break;
      }
      case BoundKind::EXACT:
        for (ExpSet P : candidates) family[k].push_back(exact_record(P, sp.setup, lim));
        break;
    }
  }

  std::set<std::pair<ExpSet, Distance>> seen;
  for (ExpSet P : candidates)
    for (BoundKind k : opt.families) {
      const BoundRecord* best = nullptr;
      for (const auto& r : family[k])
        if (subset(r.P, P) && (!best || r.d > best->d)) best = &r;
      if (!best) continue;
      if (!seen.insert({P, best->d}).second) continue;
      BoundRecord rec = *best;
      rec.P = P;
      pool.records.push_back(std::move(rec));
    }
  return pool;
}

SpectralOptimum optimize_spectral(SpectralContext& ctx, const Pool& pool, int s) {
  if (s < 1) throw Error("s must be at least 1");
  SpectralOptimum best{Distance(1), {}};
  const std::size_t n = pool.records.size();
  if (n == 0) return best;
  bool have = false;
  const std::size_t top = std::min<std::size_t>(static_cast<std::size_t>(s), n);
  for (std::size_t k = 1; k <= top; ++k) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      std::vector<BoundRecord> recs;
      for (auto i : idx) recs.push_back(pool.records[i]);
      const Distance v = generalized_spectral_bound(ctx, recs);
      if (!have || v > best.value) {
        have = true;
        best.value = v;
        best.witness = std::move(recs);
      }
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t t = i; t < k; ++t) idx[t] = idx[t - 1] + 1;
    }
  }
  return best;
}

BoundReport compare_all(const QTCodeSpec& spec, const CompareOptions& opt) {
  spec.validate();
  BoundReport rep;
  rep.s = opt.s;
  const RootSetup setup = root_setup(spec.q_field, spec.m, spec.lambda);
  const GroebnerMatrix g = groebner_matrix(spec);
  rep.dim = dimension(g);
  const Spectrum sp = spectrum(g, setup);
  rep.eigenvalues = sp.mask();
  const Factorization fact = factor_xm_minus_lambda(setup);

  auto guarded = [&](const char* field, auto&& fn) {
    try {
      fn();
    } catch (const BudgetExceeded& e) {
      rep.errors[field] = e.what();
      rep.budget_failure = true;
    } catch (const Error& e) {
      rep.errors[field] = e.what();
    }
  };

  if (opt.with_oracle) {
    guarded("d_true", [&] { rep.d_true = exact_min_distance(scalar_generator_matrix(spec), opt.lim); });
  }
  guarded("d_jensen", [&] { rep.d_jensen = jensen_bound(spec, fact, setup, opt.lim, opt.jensen); });
  guarded("d_spec", [&] {
    const Pool pool = candidate_pool(sp, opt.pool, opt.lim);
    rep.caps_hit = pool.cap_hit;
    SpectralContext ctx(sp, opt.lim);
    auto one = optimize_spectral(ctx, pool, 1);
    rep.d_spec1 = one.value;
    rep.witness1 = std::move(one.witness);
    auto many = optimize_spectral(ctx, pool, opt.s);
    rep.d_specS = many.value;
    rep.witnessS = std::move(many.witness);
  });
  return rep;
}

}  // namespace qtbound
