#include <algorithm>
#include <atomic>
#include <limits>

#include <omp.h>

#include "kernels_common.hpp"

namespace qtbound::kernels {

namespace {

constexpr std::uint64_t kSerialCutoff = 1 << 13;

void unrank_combination(std::uint64_t rank, std::size_t n, std::size_t j, std::vector<std::size_t>& idx) {
  idx.resize(j);
  std::size_t start = 0;
  for (std::size_t i = 0; i < j; ++i) {
    for (std::size_t c = start; c < n; ++c) {
      const std::uint64_t below = binomial(n - c - 1, j - i - 1);
      if (rank < below) {
        idx[i] = c;
        start = c + 1;
        break;
      }
      rank -= below;
    }
  }
}

}  // namespace

std::uint32_t min_weight_omp(const SpanProblem& prob) {
  const FiniteField& F = prob.field;
  const std::uint32_t p = F.characteristic();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  const int threads = omp_get_max_threads();
  for (std::size_t lead = 0; lead < prob.generators.size() && best > 1; ++lead) {
    const std::uint64_t states = detail::ipow(p, lead);
    if (states < kSerialCutoff || threads == 1) {
      std::vector<Elem> cur(prob.generators[lead]);
      for (std::uint64_t s = 0; s < states; ++s) {
        if (s > 0) detail::add_into(F, cur, prob.generators[detail::gray_digit(s, p)]);
        const std::uint32_t w = detail::weight(cur);
        if (w > 0 && w < best) best = w;
      }
      continue;
    }
    const std::int64_t chunks = static_cast<std::int64_t>(threads) * 8;
    const std::uint64_t len = (states + chunks - 1) / chunks;
#pragma omp parallel for schedule(dynamic) reduction(min : best)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t s0 = static_cast<std::uint64_t>(c) * len;
      const std::uint64_t s1 = std::min(states, s0 + len);
      if (s0 >= s1) continue;
      std::vector<Elem> cur(prob.generators[lead]);
      // Gray code word of s0: digit t is (s_t - s_{t+1}) mod p.
      std::uint64_t rest = s0;
      for (std::size_t t = 0; t < lead; ++t) {
        const std::uint64_t here = rest % p;
        const std::uint64_t next = (rest / p) % p;
        const std::uint64_t g = (here + p - next) % p;
        const Elem scale = F.from_int(static_cast<std::int64_t>(g));
        if (g != 0) {
          for (std::size_t i = 0; i < prob.n; ++i) cur[i] = F.add(cur[i], F.mul(scale, prob.generators[t][i]));
        }
        rest /= p;
      }
      for (std::uint64_t s = s0; s < s1; ++s) {
        if (s > s0) detail::add_into(F, cur, prob.generators[detail::gray_digit(s, p)]);
        const std::uint32_t w = detail::weight(cur);
        if (w > 0 && w < best) best = w;
      }
    }
  }
  return best;
}

bool all_subsets_independent_omp(const ColumnProblem& prob, std::size_t j, std::uint64_t& evaluations) {
  const std::size_t n = prob.columns.size();
  if (j == 0) return true;
  if (j > n) return false;
  const std::uint64_t total = binomial(n, j);
  if (total < kSerialCutoff || omp_get_max_threads() == 1) {
    return all_subsets_independent_serial(prob, j, evaluations);
  }
  const std::int64_t chunks = static_cast<std::int64_t>(omp_get_max_threads()) * 8;
  const std::uint64_t len = (total + chunks - 1) / chunks;
  std::atomic<bool> dependent{false};
  std::uint64_t evals = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : evals)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::uint64_t r0 = static_cast<std::uint64_t>(c) * len;
    const std::uint64_t r1 = std::min(total, r0 + len);
    if (r0 >= r1 || dependent.load(std::memory_order_relaxed)) continue;
    std::vector<std::size_t> idx;
    std::vector<Elem> scratch;
    unrank_combination(r0, n, j, idx);
    for (std::uint64_t r = r0; r < r1; ++r) {
      if (dependent.load(std::memory_order_relaxed)) break;
      ++evals;
      if (!detail::columns_independent(prob, idx, scratch)) {
        dependent.store(true, std::memory_order_relaxed);
        break;
      }
      detail::next_combination(idx, n);
    }
  }
  evaluations += evals;
  return !dependent.load();
}

}  // namespace qtbound::kernels
