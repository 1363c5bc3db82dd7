#pragma once

// Finite fields F_{p^e} with log/antilog tables, subfield embeddings and
// the root-of-lambda setup used by the quasi-twisted code machinery.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown when an exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Element of a finite field, stored as its coordinate vector over F_p
/// packed into the integer c_0 + c_1 p + ... + c_{e-1} p^{e-1}.
struct Elem {
  std::uint32_t v = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 20;

namespace detail {

struct FieldTables {
  std::uint32_t p = 0;
  int e = 0;
  std::uint32_t order = 0;
  std::uint32_t units = 0;          // order - 1
  std::uint32_t log_minus_one = 0;  // log(-1)
  std::vector<std::uint32_t> modulus;
  std::vector<std::uint32_t> exp;       // length 2*units, exp[i] = g^i
  std::vector<std::uint32_t> log;       // log[0] unused
  std::vector<std::uint32_t> one_plus;  // one_plus[t] = 1 + g^t
};

}  // namespace detail

/// Immutable finite field descriptor. Copies share the same tables.
class FiniteField {
 public:
  FiniteField() = default;

  static FiniteField prime(std::uint32_t p);
  /// Field of order base.order()^degree with the canonical modulus.
  static FiniteField extension(const FiniteField& base, int degree);
  /// Field of order p^e with the canonical modulus.
  static FiniteField with_degree(std::uint32_t p, int e);

  bool valid() const { return t_ != nullptr; }
  std::uint32_t characteristic() const { return t_->p; }
  int degree() const { return t_->e; }
  std::uint32_t order() const { return t_->order; }
  bool is_prime_field() const { return t_->e == 1; }
  /// Monic modulus over F_p, little-endian, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const { return t_->modulus; }

  Elem zero() const { return {0}; }
  Elem one() const { return {1}; }
  Elem from_int(std::int64_t n) const;
  Elem from_coords(std::span<const std::uint32_t> c) const;
  std::vector<std::uint32_t> coords(Elem a) const;
  /// {1, y, ..., y^{e-1}}, the polynomial basis over F_p.
  std::vector<Elem> polynomial_basis() const;
  Elem primitive_element() const { return {t_->exp[1 % t_->units]}; }

  Elem add(Elem a, Elem b) const {
    if (t_->e == 1) {
      std::uint32_t s = a.v + b.v;
      return {s >= t_->p ? s - t_->p : s};
    }
    if (a.v == 0) return b;
    if (b.v == 0) return a;
    const std::uint32_t la = t_->log[a.v];
    std::uint32_t t = t_->log[b.v] + t_->units - la;
    if (t >= t_->units) t -= t_->units;
    const std::uint32_t s = t_->one_plus[t];
    if (s == 0) return {0};
    return {t_->exp[la + t_->log[s]]};
  }
  Elem neg(Elem a) const {
    if (a.v == 0) return a;
    if (t_->e == 1) return {t_->p - a.v};
    return {t_->exp[t_->log[a.v] + t_->log_minus_one]};
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {t_->exp[t_->log[a.v] + t_->log[b.v]]};
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t n) const;
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const { return {t_->exp[k % t_->units]}; }
  std::uint64_t multiplicative_order(Elem a) const;
  /// a^q.
  Elem frobenius(Elem a, std::uint64_t q) const { return pow(a, static_cast<std::int64_t>(q)); }

  std::string format(Elem a) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b) {
    if (a.t_ == b.t_) return true;
    if (!a.t_ || !b.t_) return false;
    return a.t_->p == b.t_->p && a.t_->modulus == b.t_->modulus;
  }

 private:
  explicit FiniteField(std::shared_ptr<const detail::FieldTables> t) : t_(std::move(t)) {}
  std::shared_ptr<const detail::FieldTables> t_;
};

/// Value-semantic field element carrying its field.
struct FieldElement {
  FiniteField field;
  Elem value;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.field, a.field.add(a.value, b.value)}; }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.field, a.field.sub(a.value, b.value)}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.field, a.field.mul(a.value, b.value)}; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.field, a.field.div(a.value, b.value)}; }
  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.field == b.field && a.value == b.value; }
  FieldElement pow(std::int64_t n) const { return {field, field.pow(value, n)}; }
  FieldElement inverse() const { return {field, field.inv(value)}; }
};

bool is_prime(std::uint64_t n);
std::uint64_t multiplicative_order(const FieldElement& a);

/// Canonical embedding of a subfield: the generator of `sub` is sent to the
/// first root (in ascending encoding) of its modulus inside `super`.
class Embedding {
 public:
  Embedding() = default;
  Embedding(const FiniteField& sub, const FiniteField& super);

  const FiniteField& sub() const { return sub_; }
  const FiniteField& super() const { return super_; }
  Elem operator()(Elem a) const { return image_[a.v]; }
  std::optional<Elem> preimage(Elem b) const;
  /// image()[c] is the super-field image of the sub-field element with encoding c.
  const std::vector<Elem>& image() const { return image_; }
  /// Index [super : sub].
  int index() const { return super_.degree() / sub_.degree(); }

 private:
  FiniteField sub_, super_;
  std::vector<Elem> image_;
  std::vector<std::pair<Elem, Elem>> reverse_;  // (super, sub), sorted
};

/// Coordinates of super-field elements over the embedded subfield with
/// respect to the basis {1, y, ..., y^{D-1}}, D = [super : sub].
class SubfieldCoordinates {
 public:
  SubfieldCoordinates() = default;
  explicit SubfieldCoordinates(const Embedding& emb);

  int dimension() const { return dim_; }
  const std::vector<Elem>& basis() const { return basis_; }
  const Embedding& embedding() const { return emb_; }
  /// Coordinates as subfield elements (sub encoding).
  std::vector<Elem> sub_coordinates(Elem z) const;
  /// Coordinates as super-field elements lying in the subfield.
  std::vector<Elem> coordinates(Elem z) const;

 private:
  Embedding emb_;
  int dim_ = 0;
  int f_ = 0;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> inverse_;  // e x e over F_p, row major
};

/// x^m - lambda over F_q together with its splitting field and roots.
struct RootSetup {
  FiniteField q_field;
  int m = 0;
  Elem lambda;  // in q_field
  std::uint64_t r = 0;
  FiniteField field;  // splitting field F
  Embedding embed;    // F_q -> F
  Elem lambda_in_field;
  Elem alpha;
  Elem xi;
  std::vector<Elem> omega;  // omega[k] = alpha * xi^k

  std::uint64_t q() const { return q_field.order(); }
  /// [F : F_q]
  int extension_degree() const { return embed.index(); }
  /// (alpha xi^k)^q = alpha xi^{k'}.
  int conjugate_exponent(int k) const;
};

RootSetup root_setup(const FiniteField& q_field, int m, Elem lambda);

/// a^{q^{sub_degree}} == a.
bool subfield_member(const FiniteField& field, Elem a, std::uint64_t q, int sub_degree);
/// Tr_{E/F_q}(a) where E has order q^{sub_degree}. Throws if a is not in E.
Elem relative_trace(const FiniteField& field, Elem a, std::uint64_t q, int sub_degree);

/// Least t >= 1 with base^t = 1 mod n; requires gcd(base, n) = 1.
std::uint64_t order_mod(std::uint64_t base, std::uint64_t n);

}  // namespace qtbound
