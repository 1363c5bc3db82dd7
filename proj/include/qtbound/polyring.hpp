#pragma once

// Univariate polynomials over a FiniteField, the quotient ring
// R = F_q[x]/(x^m - lambda), and the factorization of x^m - lambda into
// Frobenius-orbit products together with the primitive idempotents.

#include <string>
#include <vector>

#include "qtbound/galois.hpp"
#include "qtbound/linalg.hpp"

namespace qtbound {

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(FiniteField field) : field_(std::move(field)) {}
  Polynomial(FiniteField field, std::vector<Elem> coeffs);

  static Polynomial constant(const FiniteField& field, Elem c);
  static Polynomial monomial(const FiniteField& field, Elem c, std::size_t deg);
  /// x^m - lambda
  static Polynomial binomial(const FiniteField& field, std::size_t m, Elem lambda);
  /// Coefficients given as integers reduced into the prime subfield.
  static Polynomial from_ints(const FiniteField& field, const std::vector<std::int64_t>& c);

  const FiniteField& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Elem{}; }
  Elem leading() const { return c_.empty() ? Elem{} : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Polynomial monic() const;
  Polynomial scaled(Elem s) const;
  Polynomial shifted(std::size_t k) const;  // times x^k
  Elem eval(Elem x) const;
  /// Evaluates the image of this polynomial in a larger field.
  Elem eval(Elem x, const Embedding& emb) const;
  Polynomial mapped(const Embedding& emb) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  FiniteField field_;
  std::vector<Elem> c_;
};

struct DivMod {
  Polynomial quotient, remainder;
};

DivMod divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
Polynomial operator/(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct XGcd {
  Polynomial g, s, t;  // g = s a + t b, g monic
};
XGcd xgcd(const Polynomial& a, const Polynomial& b);

/// Product in R = F_q[x]/(x^m - lambda); inputs must have degree < m.
Polynomial quotient_mul(const Polynomial& a, const Polynomial& b, std::size_t m, Elem lambda);
/// a mod (x^m - lambda)
Polynomial reduce_mod_binomial(const Polynomial& a, std::size_t m, Elem lambda);

struct IrreducibleFactor {
  Polynomial f;            // over F_q, monic
  int u = 0;               // least exponent k with f(alpha xi^k) = 0
  int degree = 0;          // e_i
  std::vector<int> orbit;  // exponents k of the roots, ascending
};

struct Factorization {
  std::vector<IrreducibleFactor> factors;  // ascending u
  std::size_t count() const { return factors.size(); }
};

/// Orbits of {0..m-1} under k -> (q-1)/r + qk mod m.
std::vector<std::vector<int>> conjugacy_orbits(const RootSetup& setup);
Factorization factor_xm_minus_lambda(const RootSetup& setup);
/// theta_i with theta_i = 1 mod f_i and 0 mod f_j, j != i (index 0-based).
Polynomial primitive_idempotent(std::size_t i, const Factorization& fact, const RootSetup& setup);
/// (x^m - lambda) / f_i
Polynomial minimal_code_generator(std::size_t i, const Factorization& fact, const RootSetup& setup);
/// Rows x^t g(x), t < m - deg g, as a length-m generator matrix over F_q.
Matrix constacyclic_generator_matrix(const Polynomial& g, std::size_t m);
/// Rows x^t a(x) mod (x^m - lambda) for t < m.
Matrix ideal_shift_matrix(const Polynomial& a, std::size_t m, Elem lambda);

}  // namespace qtbound
