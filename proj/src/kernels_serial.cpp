#include <algorithm>
#include <limits>

#include "kernels_common.hpp"

namespace qtbound::kernels {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

std::uint64_t projective_count(std::uint32_t p, std::size_t k) {
  std::uint64_t total = 0;
  std::uint64_t pw = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total += pw;
    if (pw > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    pw *= p;
  }
  return total;
}

std::uint32_t min_weight_serial(const SpanProblem& prob) {
  const FiniteField& F = prob.field;
  const std::uint32_t p = F.characteristic();
  std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
  std::vector<Elem> cur(prob.n);
  for (std::size_t lead = 0; lead < prob.generators.size() && best > 1; ++lead) {
    std::copy(prob.generators[lead].begin(), prob.generators[lead].end(), cur.begin());
    const std::uint64_t states = detail::ipow(p, lead);
    for (std::uint64_t s = 0; s < states; ++s) {
      if (s > 0) detail::add_into(F, cur, prob.generators[detail::gray_digit(s, p)]);
      const std::uint32_t w = detail::weight(cur);
      if (w > 0 && w < best) {
        best = w;
        if (best == 1) break;
      }
    }
  }
  return best;
}

bool all_subsets_independent_serial(const ColumnProblem& prob, std::size_t j, std::uint64_t& evaluations) {
  const std::size_t n = prob.columns.size();
  if (j == 0) return true;
  if (j > n) return false;
  std::vector<std::size_t> idx(j);
  for (std::size_t i = 0; i < j; ++i) idx[i] = i;
  std::vector<Elem> scratch;
  while (true) {
    ++evaluations;
    if (!detail::columns_independent(prob, idx, scratch)) return false;
    if (!detail::next_combination(idx, n)) break;
  }
  return true;
}

}  // namespace qtbound::kernels
