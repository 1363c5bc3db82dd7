#include "qtbound/polyring.hpp"

#include <sstream>

namespace qtbound {

Polynomial::Polynomial(FiniteField field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::constant(const FiniteField& field, Elem c) { return Polynomial(field, {c}); }

Polynomial Polynomial::monomial(const FiniteField& field, Elem c, std::size_t deg) {
  std::vector<Elem> v(deg + 1, Elem{});
  v[deg] = c;
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::binomial(const FiniteField& field, std::size_t m, Elem lambda) {
  std::vector<Elem> v(m + 1, Elem{});
  v[m] = field.one();
  v[0] = field.add(v[0], field.neg(lambda));
  return Polynomial(field, std::move(v));
}

Polynomial Polynomial::from_ints(const FiniteField& field, const std::vector<std::int64_t>& c) {
  std::vector<Elem> v;
  v.reserve(c.size());
  for (auto x : c) v.push_back(field.from_int(x));
  return Polynomial(field, std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().v == 0) c_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return scaled(field_.inv(c_.back()));
}

Polynomial Polynomial::scaled(Elem s) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = field_.mul(s, c_[i]);
  return Polynomial(field_, std::move(v));
}

Polynomial Polynomial::shifted(std::size_t k) const {
  if (c_.empty()) return *this;
  std::vector<Elem> v(k, Elem{});
  v.insert(v.end(), c_.begin(), c_.end());
  return Polynomial(field_, std::move(v));
}

Elem Polynomial::eval(Elem x) const {
  Elem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Elem Polynomial::eval(Elem x, const Embedding& emb) const {
  const FiniteField& F = emb.super();
  Elem acc{};
  for (std::size_t i = c_.size(); i-- > 0;) acc = F.add(F.mul(acc, x), emb(c_[i]));
  return acc;
}

Polynomial Polynomial::mapped(const Embedding& emb) const {
  std::vector<Elem> v(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] = emb(c_[i]);
  return Polynomial(emb.super(), std::move(v));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const FiniteField& F = a.field_.valid() ? a.field_ : b.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), Elem{});
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.add(a.coeff(i), b.coeff(i));
  return Polynomial(F, std::move(v));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const FiniteField& F = a.field_.valid() ? a.field_ : b.field_;
  std::vector<Elem> v(std::max(a.c_.size(), b.c_.size()), Elem{});
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = F.sub(a.coeff(i), b.coeff(i));
  return Polynomial(F, std::move(v));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const FiniteField& F = a.field_.valid() ? a.field_ : b.field_;
  if (a.is_zero() || b.is_zero()) return Polynomial(F);
  std::vector<Elem> v(a.c_.size() + b.c_.size() - 1, Elem{});
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].v == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = F.add(v[i + j], F.mul(a.c_[i], b.c_[j]));
  }
  return Polynomial(F, std::move(v));
}

std::string Polynomial::to_string(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].v == 0) continue;
    if (!first) os << " + ";
    first = false;
    std::string coef = field_.format(c_[i]);
    if (!field_.is_prime_field() && coef.find('+') != std::string::npos) coef = "(" + coef + ")";
    if (i == 0) {
      os << coef;
      continue;
    }
    if (c_[i] != field_.one()) os << coef;
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

DivMod divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const FiniteField& F = b.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  const Elem lead_inv = F.inv(b.leading());
  if (a.degree() < db) return {Polynomial(F), a};
  std::vector<Elem> quo(static_cast<std::size_t>(a.degree() - db) + 1, Elem{});
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = rem[i];
    if (c.v == 0) continue;
    const Elem qc = F.mul(c, lead_inv);
    quo[i - db] = qc;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(qc, b.coeff(j)));
  }
  return {Polynomial(F, std::move(quo)), Polynomial(F, std::move(rem))};
}

Polynomial operator%(const Polynomial& a, const Polynomial& b) { return divmod(a, b).remainder; }
Polynomial operator/(const Polynomial& a, const Polynomial& b) { return divmod(a, b).quotient; }

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return xgcd(a, b).g; }

XGcd xgcd(const Polynomial& a, const Polynomial& b) {
  const FiniteField& F = a.field().valid() ? a.field() : b.field();
  Polynomial r0 = a, r1 = b;
  Polynomial s0 = Polynomial::constant(F, F.one()), s1(F);
  Polynomial t0(F), t1 = Polynomial::constant(F, F.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Polynomial s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Polynomial t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem li = F.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

Polynomial reduce_mod_binomial(const Polynomial& a, std::size_t m, Elem lambda) {
  const FiniteField& F = a.field();
  if (a.degree() < static_cast<int>(m)) return a;
  std::vector<Elem> v(m, Elem{});
  // x^{km + j} = lambda^k x^j
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const std::size_t k = i / m;
    v[i % m] = F.add(v[i % m], F.mul(a.coeffs()[i], F.pow(lambda, static_cast<std::int64_t>(k))));
  }
  return Polynomial(F, std::move(v));
}

Polynomial quotient_mul(const Polynomial& a, const Polynomial& b, std::size_t m, Elem lambda) {
  if (a.degree() >= static_cast<int>(m) || b.degree() >= static_cast<int>(m)) {
    throw Error("quotient_mul: operand degree must be below m");
  }
  return reduce_mod_binomial(a * b, m, lambda);
}

std::vector<std::vector<int>> conjugacy_orbits(const RootSetup& setup) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(setup.m, false);
  for (int k = 0; k < setup.m; ++k) {
    if (seen[k]) continue;
    std::vector<int> orbit;
    int cur = k;
    while (!seen[cur]) {
      seen[cur] = true;
      orbit.push_back(cur);
      cur = setup.conjugate_exponent(cur);
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Factorization factor_xm_minus_lambda(const RootSetup& setup) {
  const FiniteField& F = setup.field;
  Factorization out;
  for (auto& orbit : conjugacy_orbits(setup)) {
    Polynomial prod = Polynomial::constant(F, F.one());
    for (int k : orbit) {
      prod = prod * Polynomial(F, {F.neg(setup.omega[k]), F.one()});
    }
    std::vector<Elem> coeffs;
    for (Elem c : prod.coeffs()) {
      auto pre = setup.embed.preimage(c);
      if (!pre) throw Error("internal: orbit product has a coefficient outside F_q");
      coeffs.push_back(*pre);
    }
    IrreducibleFactor fac;
    fac.f = Polynomial(setup.q_field, std::move(coeffs));
    fac.u = orbit.front();
    fac.degree = static_cast<int>(orbit.size());
    fac.orbit = std::move(orbit);
    out.factors.push_back(std::move(fac));
  }
  return out;
}

Polynomial minimal_code_generator(std::size_t i, const Factorization& fact, const RootSetup& setup) {
  if (i >= fact.count()) throw Error("factor index out of range");
  const Polynomial xm = Polynomial::binomial(setup.q_field, setup.m, setup.lambda);
  return xm / fact.factors[i].f;
}

Polynomial primitive_idempotent(std::size_t i, const Factorization& fact, const RootSetup& setup) {
  const Polynomial h = minimal_code_generator(i, fact, setup);
  const auto eg = xgcd(h % fact.factors[i].f, fact.factors[i].f);
  // eg.s * h = 1 mod f_i
  const Polynomial xm = Polynomial::binomial(setup.q_field, setup.m, setup.lambda);
  return (eg.s * h) % xm;
}

Matrix constacyclic_generator_matrix(const Polynomial& g, std::size_t m) {
  const FiniteField& F = g.field();
  Matrix out(F, 0, m);
  if (g.is_zero()) return out;
  const int dg = g.degree();
  for (int t = 0; t + dg < static_cast<int>(m); ++t) {
    std::vector<Elem> row(m, Elem{});
    for (int j = 0; j <= dg; ++j) row[t + j] = g.coeff(j);
    out.append_row(row);
  }
  return out;
}

Matrix ideal_shift_matrix(const Polynomial& a, std::size_t m, Elem lambda) {
  const FiniteField& F = a.field();
  Matrix out(F, 0, m);
  Polynomial cur = reduce_mod_binomial(a, m, lambda);
  const Polynomial x = Polynomial::monomial(F, F.one(), 1);
  for (std::size_t t = 0; t < m; ++t) {
    std::vector<Elem> row(m, Elem{});
    for (std::size_t j = 0; j < m; ++j) row[j] = cur.coeff(j);
    out.append_row(row);
    cur = reduce_mod_binomial(cur * x, m, lambda);
  }
  return out;
}

}  // namespace qtbound
