#pragma once

// Exhaustive search kernels. Each has a serial reference implementation and
// an OpenMP version that must return identical results.

#include <cstdint>
#include <span>
#include <vector>

#include "qtbound/galois.hpp"

namespace qtbound::kernels {

/// F_p-linear generators of a code over `field`; rows are length n.
struct SpanProblem {
  FiniteField field;
  std::size_t n = 0;
  std::vector<std::vector<Elem>> generators;
};

/// Number of projective codewords visited: (p^K - 1) / (p - 1).
std::uint64_t projective_count(std::uint32_t p, std::size_t k);

/// Minimum nonzero weight over all F_p-combinations of the generators, or
/// UINT32_MAX if every combination is zero.
std::uint32_t min_weight_serial(const SpanProblem& prob);
std::uint32_t min_weight_omp(const SpanProblem& prob);

/// A matrix given column-major: columns[c] has `rows` entries.
struct ColumnProblem {
  FiniteField field;
  std::size_t rows = 0;
  std::vector<std::vector<Elem>> columns;
};

/// True iff every j-subset of columns is linearly independent.
/// `evaluations` is incremented by the number of subsets ranked.
bool all_subsets_independent_serial(const ColumnProblem& prob, std::size_t j, std::uint64_t& evaluations);
bool all_subsets_independent_omp(const ColumnProblem& prob, std::size_t j, std::uint64_t& evaluations);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace qtbound::kernels
