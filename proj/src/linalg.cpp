#include "qtbound/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "qtbound/kernels.hpp"

namespace qtbound {

Matrix Matrix::identity(const FiniteField& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

void Matrix::append_row(std::span<const Elem> r) {
  if (rows_ == 0 && cols_ == 0) cols_ = r.size();
  if (r.size() != cols_) throw Error("row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x.v == 0; });
}

Echelon rref(const Matrix& a) {
  const FiniteField& F = a.field();
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).v == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    }
    const Elem inv = F.inv(m(r, c));
    for (std::size_t k = c; k < m.cols(); ++k) m(r, k) = F.mul(m(r, k), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).v == 0) continue;
      const Elem f = F.neg(m(i, c));
      for (std::size_t k = c; k < m.cols(); ++k) m(i, k) = F.add(m(i, k), F.mul(f, m(r, k)));
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix reduced(F, 0, m.cols());
  for (std::size_t i = 0; i < r; ++i) reduced.append_row(m.row(i));
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Matrix right_kernel(const Matrix& a) {
  const FiniteField& F = a.field();
  const auto e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivots) is_pivot[c] = true;
  Matrix k(F, 0, n);
  std::vector<Elem> v(n);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), F.zero());
    v[f] = F.one();
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = F.neg(e.reduced(i, f));
    k.append_row(v);
  }
  return k;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0 && a.cols() == 0) return b;
  if (b.rows() == 0 && b.cols() == 0) return a;
  if (a.cols() != b.cols()) throw Error("vstack: column mismatch");
  if (!(a.field() == b.field())) throw Error("vstack: field mismatch");
  Matrix m = a;
  for (std::size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
  return m;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw Error("kronecker: field mismatch");
  const FiniteField& F = a.field();
  Matrix m(F, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
    for (std::size_t ja = 0; ja < a.cols(); ++ja) {
      const Elem x = a(ia, ja);
      if (x.v == 0) continue;
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
        for (std::size_t jb = 0; jb < b.cols(); ++jb) {
          m(ia * b.rows() + ib, ja * b.cols() + jb) = F.mul(x, b(ib, jb));
        }
    }
  return m;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw Error("multiply: shape mismatch");
  const FiniteField& F = a.field();
  Matrix m(F, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x.v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) m(i, j) = F.add(m(i, j), F.mul(x, b(k, j)));
    }
  return m;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

bool same_row_space(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) return false;
  const std::size_t ra = rank(a);
  const std::size_t rb = rank(b);
  return ra == rb && rank(vstack(a, b)) == ra;
}

Matrix embed(const Matrix& a, const Embedding& emb) {
  Matrix m(emb.super(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = emb(a(i, j));
  return m;
}

Matrix restrict_to_subfield(const Matrix& a, const Embedding& emb) {
  Matrix m(emb.sub(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      auto x = emb.preimage(a(i, j));
      if (!x) throw Error("matrix entry outside the subfield");
      m(i, j) = *x;
    }
  return m;
}

Matrix expand_rows(const Matrix& g, std::span<const Elem> multipliers) {
  const FiniteField& F = g.field();
  Matrix m(F, 0, g.cols());
  std::vector<Elem> r(g.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (Elem s : multipliers) {
      for (std::size_t j = 0; j < g.cols(); ++j) r[j] = F.mul(s, g(i, j));
      m.append_row(r);
    }
  return m;
}

namespace {

// Keeps an F_p-independent subset of the rows (each row read as a vector of
// F_p coordinates).
std::vector<std::vector<Elem>> prime_independent_rows(const Matrix& g) {
  const FiniteField& F = g.field();
  const FiniteField Fp = FiniteField::prime(F.characteristic());
  const std::size_t e = static_cast<std::size_t>(F.degree());
  std::vector<std::vector<Elem>> kept;
  Matrix basis(Fp, 0, g.cols() * e);
  std::size_t current_rank = 0;
  std::vector<Elem> coords(g.cols() * e);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const auto c = F.coords(g(i, j));
      for (std::size_t t = 0; t < e; ++t) coords[j * e + t] = Elem{c[t]};
    }
    Matrix trial = basis;
    trial.append_row(coords);
    const std::size_t rk = rank(trial);
    if (rk > current_rank) {
      current_rank = rk;
      basis = std::move(trial);
      kept.emplace_back(g.row(i).begin(), g.row(i).end());
    }
  }
  return kept;
}

Distance run_span(const Matrix& expanded, const OracleLimits& lim) {
  kernels::SpanProblem prob;
  prob.field = expanded.field();
  prob.n = expanded.cols();
  prob.generators = prime_independent_rows(expanded);
  if (prob.generators.empty()) return Distance::infinity();
  const std::uint64_t cost = kernels::projective_count(prob.field.characteristic(), prob.generators.size());
  if (cost > lim.span_budget) {
    throw BudgetExceeded("oracle budget: " + std::to_string(cost) + " codewords exceed " +
                         std::to_string(lim.span_budget));
  }
  const std::uint32_t w = lim.parallel ? kernels::min_weight_omp(prob) : kernels::min_weight_serial(prob);
  return w == std::numeric_limits<std::uint32_t>::max() ? Distance::infinity() : Distance(w);
}

}  // namespace

std::size_t column_independence_number(const Matrix& a, const OracleLimits& lim) {
  const std::size_t r = rank(a);
  kernels::ColumnProblem prob;
  prob.field = a.field();
  prob.rows = a.rows();
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::vector<Elem> col(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) col[i] = a(i, c);
    prob.columns.push_back(std::move(col));
  }
  std::uint64_t evaluations = 0;
  for (std::size_t j = 1; j <= r; ++j) {
    if (evaluations + kernels::binomial(a.cols(), j) > lim.subset_budget) {
      throw BudgetExceeded("column subset budget exceeded at j = " + std::to_string(j));
    }
    const bool ok = lim.parallel ? kernels::all_subsets_independent_omp(prob, j, evaluations)
                                 : kernels::all_subsets_independent_serial(prob, j, evaluations);
    if (!ok) return j - 1;
  }
  return r;
}

Distance min_distance_from_generator(const Matrix& g, const OracleLimits& lim) {
  const auto basis = g.field().polynomial_basis();
  return run_span(expand_rows(rref(g).reduced, basis), lim);
}

Distance min_distance_over_subfield(const Matrix& g, std::span<const Elem> subfield_basis, const OracleLimits& lim) {
  return run_span(expand_rows(g, subfield_basis), lim);
}

Distance min_distance_from_parity(const Matrix& h, const OracleLimits& lim) {
  if (h.cols() == 0) return Distance::infinity();
  if (rank(h) == h.cols()) return Distance::infinity();
  return Distance(static_cast<std::uint32_t>(column_independence_number(h, lim) + 1));
}

Distance exact_min_distance(const Matrix& g, const OracleLimits& lim) {
  const Matrix basis = rref(g).reduced;
  if (basis.rows() == 0) return Distance::infinity();
  const std::uint64_t span_cost = kernels::projective_count(
      g.field().characteristic(), basis.rows() * static_cast<std::size_t>(g.field().degree()));
  if (span_cost <= lim.span_budget) return min_distance_from_generator(basis, lim);
  return min_distance_from_parity(right_kernel(basis), lim);
}

std::string to_string(const Matrix& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) os << ' ';
      os << a.field().format(a(i, j));
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace qtbound
