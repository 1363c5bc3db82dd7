#pragma once

// Helpers shared by the serial and OpenMP kernels.

#include <span>
#include <vector>

#include "qtbound/kernels.hpp"

namespace qtbound::kernels::detail {

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Digit that changes at step s of the modular p-ary Gray code: the number of
// trailing zero base-p digits of s. That digit increases by one.
inline std::size_t gray_digit(std::uint64_t s, std::uint32_t p) {
  std::size_t t = 0;
  while (s % p == 0) {
    s /= p;
    ++t;
  }
  return t;
}

inline void add_into(const FiniteField& F, std::span<Elem> acc, std::span<const Elem> v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = F.add(acc[i], v[i]);
}

inline std::uint32_t weight(std::span<const Elem> v) {
  std::uint32_t w = 0;
  for (Elem x : v) w += x.v != 0;
  return w;
}

inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t j = idx.size();
  std::size_t i = j;
  while (i > 0) {
    --i;
    if (idx[i] < n - j + i) {
      ++idx[i];
      for (std::size_t k = i + 1; k < j; ++k) idx[k] = idx[k - 1] + 1;
      return true;
    }
  }
  return false;
}

// Gaussian elimination on the rows x j submatrix picked by idx.
inline bool columns_independent(const ColumnProblem& prob, const std::vector<std::size_t>& idx,
                                std::vector<Elem>& m) {
  const FiniteField& F = prob.field;
  const std::size_t rows = prob.rows;
  const std::size_t j = idx.size();
  if (j > rows) return false;
  m.resize(rows * j);
  for (std::size_t c = 0; c < j; ++c) {
    const auto& col = prob.columns[idx[c]];
    for (std::size_t r = 0; r < rows; ++r) m[r * j + c] = col[r];
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < j; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv * j + c].v == 0) ++piv;
    if (piv == rows) return false;
    if (piv != rank) {
      for (std::size_t k = 0; k < j; ++k) std::swap(m[piv * j + k], m[rank * j + k]);
    }
    const Elem inv = F.inv(m[rank * j + c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const Elem f = m[r * j + c];
      if (f.v == 0) continue;
      const Elem factor = F.neg(F.mul(f, inv));
      for (std::size_t k = c; k < j; ++k) m[r * j + k] = F.add(m[r * j + k], F.mul(factor, m[rank * j + k]));
    }
    ++rank;
  }
  return true;
}

}  // namespace qtbound::kernels::detail
