#pragma once

// Defining-set bound families on exponent sets of Omega, the Jensen bound,
// and the (generalized) spectral bound with s-tuple optimization.
//
// Exponent sets are bit masks: bit k stands for alpha xi^k.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtbound/qtstruct.hpp"

namespace qtbound {

using ExpSet = std::uint64_t;

enum class BoundKind { BCH, HT, ROOS, EXACT };

std::string to_string(BoundKind k);
std::optional<BoundKind> parse_bound_kind(const std::string& s);
const std::vector<BoundKind>& all_bound_kinds();

struct BoundRecord {
  BoundKind kind = BoundKind::BCH;
  ExpSet P = 0;
  Distance d;
  // BCH: e, n, delta. HT: e, n1, n2, delta, s. ROOS: mask M, mask N, mask M'.
  std::vector<std::int64_t> witness;

  std::string describe() const;
};

struct RecordList {
  std::vector<BoundRecord> records;
  bool cap_hit = false;
};

int popcount(ExpSet s);
std::vector<int> members(ExpSet s);
std::string format_set(ExpSet s);
/// Lexicographic order on the ascending member lists.
bool lex_less(ExpSet a, ExpSet b);

struct ConsecutiveSet {
  ExpSet set = 0;
  int e = 0, n = 1, length = 0;
};
/// Distinct consecutive sets {e + z n mod m : 0 <= z < length}, gcd(m, n) = 1.
std::vector<ConsecutiveSet> consecutive_sets(int m);

inline constexpr std::uint64_t kDefaultFamilyCap = 2'000'000;

std::vector<BoundRecord> bch_records(ExpSet universe, int m);
RecordList ht_records(ExpSet universe, int m, std::uint64_t cap = kDefaultFamilyCap);

enum class RoosMode { Any, SingletonM, MPrimeEqualsM };
RecordList roos_records(ExpSet universe, int m, RoosMode mode = RoosMode::Any,
                        std::uint64_t cap = kDefaultFamilyCap);
/// d(D_P) for the constacyclic code over F with zero set P.
BoundRecord exact_record(ExpSet P, const RootSetup& setup, const OracleLimits& lim = {});

struct JensenOptions {
  bool exhaustive_ties = false;
};
Distance jensen_bound(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup,
                      const OracleLimits& lim = {}, const JensenOptions& opt = {});

/// Eigencode distances with caching; one instance per spectrum.
class SpectralContext {
 public:
  SpectralContext(const Spectrum& sp, OracleLimits lim = {});

  const Spectrum& spectrum() const { return sp_; }
  /// d of the intersection of the eigencodes of the given sets.
  Distance intersection_distance(std::vector<ExpSet> sets);

 private:
  const Matrix& constraints(ExpSet P);

  const Spectrum& sp_;
  OracleLimits lim_;
  std::map<ExpSet, Matrix> constraints_;
  std::map<std::vector<ExpSet>, Distance> distances_;
};

/// min{d_P, d(C_P)}; empty spectrum gives 1.
Distance spectral_bound(SpectralContext& ctx, const BoundRecord& rec);
/// min{d_1, d_2 d(C_1), ..., d_s d(C_1 ^ ... ^ C_{s-1}), d(C_1 ^ ... ^ C_s)} after sorting.
Distance generalized_spectral_bound(SpectralContext& ctx, std::vector<BoundRecord> recs);

struct PoolOptions {
  std::vector<BoundKind> families = all_bound_kinds();
  int max_subset_bits = 12;
  /// Above the cap, use consecutive subsets of the eigenvalue set plus the set itself.
  bool restricted = false;
  std::uint64_t family_cap = kDefaultFamilyCap;
};

struct Pool {
  std::vector<BoundRecord> records;
  bool cap_hit = false;
};
Pool candidate_pool(const Spectrum& sp, const PoolOptions& opt, const OracleLimits& lim = {});

struct SpectralOptimum {
  Distance value;
  std::vector<BoundRecord> witness;
};
SpectralOptimum optimize_spectral(SpectralContext& ctx, const Pool& pool, int s);

struct CompareOptions {
  int s = 2;
  PoolOptions pool;
  OracleLimits lim;
  bool with_oracle = true;
  JensenOptions jensen;
};

struct BoundReport {
  int dim = 0;
  ExpSet eigenvalues = 0;
  int s = 0;
  std::optional<Distance> d_true, d_jensen, d_spec1, d_specS;
  std::vector<BoundRecord> witness1, witnessS;
  bool caps_hit = false;
  std::map<std::string, std::string> errors;  // field -> message
  bool budget_failure = false;
};

BoundReport compare_all(const QTCodeSpec& spec, const CompareOptions& opt = {});

}  // namespace qtbound
