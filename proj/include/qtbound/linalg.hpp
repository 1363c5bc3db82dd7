#pragma once

// Exact dense linear algebra over a FiniteField, the column-independence
// number n_A, and exhaustive minimum-distance oracles.

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "qtbound/galois.hpp"

namespace qtbound {

/// Minimum distance value: a positive integer or infinity (the zero code).
class Distance {
 public:
  constexpr Distance() = default;
  constexpr explicit Distance(std::uint32_t v) : v_(v) {}
  static constexpr Distance infinity() { return Distance(kInf); }

  constexpr bool is_infinite() const { return v_ == kInf; }
  constexpr std::uint32_t value() const { return v_; }

  friend constexpr Distance operator*(Distance a, Distance b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    const std::uint64_t prod = std::uint64_t{a.v_} * b.v_;
    return prod >= kInf ? infinity() : Distance(static_cast<std::uint32_t>(prod));
  }
  friend constexpr bool operator==(Distance, Distance) = default;
  friend constexpr auto operator<=>(Distance, Distance) = default;

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

 private:
  static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::uint32_t v_ = kInf;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(FiniteField field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Elem{}) {}

  static Matrix identity(const FiniteField& field, std::size_t n);

  const FiniteField& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Elem& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Elem> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Elem> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  void append_row(std::span<const Elem> r);
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FiniteField field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

struct Echelon {
  Matrix reduced;                 // nonzero rows of the RREF
  std::vector<std::size_t> pivots;
};

Echelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);
/// Basis rows of { v : A v^T = 0 }.
Matrix right_kernel(const Matrix& a);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix kronecker(const Matrix& a, const Matrix& b);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
bool same_row_space(const Matrix& a, const Matrix& b);
/// Image of every entry under a field embedding.
Matrix embed(const Matrix& a, const Embedding& emb);
/// Inverse image; throws if some entry lies outside the subfield.
Matrix restrict_to_subfield(const Matrix& a, const Embedding& emb);
/// Each row is replaced by its products with the given multipliers.
Matrix expand_rows(const Matrix& g, std::span<const Elem> multipliers);

struct OracleLimits {
  std::uint64_t span_budget = std::uint64_t{1} << 22;   // codewords
  std::uint64_t subset_budget = 1'000'000;              // column subsets
  bool parallel = true;
};

/// Largest j such that every j columns of A are linearly independent.
std::size_t column_independence_number(const Matrix& a, const OracleLimits& lim = {});

/// Minimum weight of the span of G's rows. With `scalars` given, only
/// combinations with coefficients in the F_p-span of `scalars` (a subfield
/// basis) are formed; otherwise the whole field is used.
Distance min_distance_from_generator(const Matrix& g, const OracleLimits& lim = {});
Distance min_distance_over_subfield(const Matrix& g, std::span<const Elem> subfield_basis,
                                    const OracleLimits& lim = {});
/// d = n_H + 1, or infinity when the kernel of H is trivial.
Distance min_distance_from_parity(const Matrix& h, const OracleLimits& lim = {});
/// Picks whichever exact route is cheaper: span enumeration or column subsets.
Distance exact_min_distance(const Matrix& g, const OracleLimits& lim = {});

std::string to_string(const Matrix& a);

}  // namespace qtbound
