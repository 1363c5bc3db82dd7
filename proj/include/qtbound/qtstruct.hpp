#pragma once

// lambda-quasi-twisted codes of index ell: scalar expansion, the reduced
// upper-triangular generator matrix, spectrum, eigencodes, the spectral
// parity-check matrix, constituents and the concatenated reassembly.

#include <cstdint>
#include <vector>

#include "qtbound/galois.hpp"
#include "qtbound/linalg.hpp"
#include "qtbound/polyring.hpp"

namespace qtbound {

using PolyRow = std::vector<Polynomial>;

struct QTCodeSpec {
  FiniteField q_field;
  int m = 0;
  int ell = 0;
  Elem lambda;
  std::vector<PolyRow> generators;  // r rows of ell polynomials, degree < m

  /// Throws Error when an invariant is broken.
  void validate() const;
};

/// Upper-triangular ell x ell matrix over F_q[x].
struct GroebnerMatrix {
  int m = 0;
  Elem lambda;
  std::vector<PolyRow> g;

  std::size_t size() const { return g.size(); }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return g[i][j]; }
  Polynomial det() const;
  /// G(beta) over the field of `emb`.
  Matrix evaluate(Elem beta, const Embedding& emb) const;
};

/// Rows x^t * row for t < m, position (i, j) -> i*ell + j.
Matrix scalar_expansion(const std::vector<PolyRow>& rows, int m, int ell, Elem lambda);
Matrix scalar_generator_matrix(const QTCodeSpec& spec);
GroebnerMatrix groebner_matrix(const QTCodeSpec& spec);
int dimension(const GroebnerMatrix& g);

struct Eigenvalue {
  int k = 0;  // beta = alpha xi^k
  Elem beta;
  int multiplicity = 0;
  Matrix eigenspace;  // basis rows over F, width ell
};

struct Spectrum {
  RootSetup setup;
  GroebnerMatrix groebner;
  SubfieldCoordinates coords;  // F over F_q
  std::vector<Eigenvalue> eigen;  // ascending k

  int ell() const { return static_cast<int>(groebner.size()); }
  std::uint64_t mask() const;  // bit k set iff alpha xi^k is an eigenvalue
  const Eigenvalue* find(int k) const;
};

Spectrum spectrum(const GroebnerMatrix& g, const RootSetup& setup);

/// Common eigenspace of the exponents in `mask` (nonempty, inside the spectrum).
Matrix common_eigenspace(const Spectrum& sp, std::uint64_t mask);
/// F_q rows whose kernel is the eigencode of the span of `v`.
Matrix eigencode_constraints(const Spectrum& sp, const Matrix& v);

struct Eigencode {
  Matrix basis;  // over F_q
  Distance distance;
};

/// Eigencode of the common eigenspace of `mask`; mask 0 gives F_q^ell.
Eigencode eigencode(const Spectrum& sp, std::uint64_t mask, const OracleLimits& lim = {});
/// Stack of (1, beta, ..., beta^{m-1}) (x) V_beta; 1 x m*ell zero row when the spectrum is empty.
Matrix parity_check(const Spectrum& sp);

/// Rows (a_{b,0}(beta_i), ..., a_{b,ell-1}(beta_i)) with beta_i = alpha xi^{u_i}.
std::vector<Matrix> constituents(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup);
/// F_p-basis of E_i = F_q(beta_i) inside F.
std::vector<Elem> constituent_prime_basis(std::size_t i, const Factorization& fact, const RootSetup& setup);
/// psi_i(delta) as a polynomial of degree < m over F_q.
Polynomial psi(std::size_t i, Elem delta, const Factorization& fact, const RootSetup& setup);
Matrix concatenate_and_reassemble(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup);

QTCodeSpec random_qtcode(const FiniteField& q_field, int m, int ell, int r, Elem lambda, std::uint64_t seed);

}  // namespace qtbound
