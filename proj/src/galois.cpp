#include "qtbound/galois.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace qtbound {

namespace {

using Coeffs = std::vector<std::uint32_t>;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Dense polynomial arithmetic over F_p used only while building tables.
void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Coeffs poly_mod(Coeffs a, const Coeffs& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint64_t lead_inv = 1;  // f is monic
  (void)lead_inv;
  while (a.size() > df) {
    const std::uint64_t c = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Coeffs prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  return poly_mod(std::move(prod), f, p);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const std::int64_t qq = r / nr;
    t -= qq * nt;
    std::swap(t, nt);
    r -= qq * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

Coeffs poly_gcd(Coeffs a, Coeffs b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    // make b monic so poly_mod can be reused
    const std::uint32_t li = inv_mod(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
    Coeffs r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Coeffs poly_powmod(Coeffs base, std::uint64_t n, const Coeffs& f, std::uint32_t p) {
  Coeffs result{1};
  base = poly_mod(std::move(base), f, p);
  while (n > 0) {
    if (n & 1) result = poly_mulmod(result, base, f, p);
    n >>= 1;
    if (n > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

// Ben-Or: f of degree e is irreducible iff gcd(x^{p^i} - x, f) = 1 for i <= e/2.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
  const int e = static_cast<int>(f.size()) - 1;
  if (e <= 1) return e == 1;
  Coeffs h{0, 1};
  for (int i = 1; i <= e / 2; ++i) {
    h = poly_powmod(h, p, f, p);
    Coeffs g = h;
    g.resize(std::max<std::size_t>(g.size(), 2), 0);
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    if (g.empty()) return false;
    if (poly_gcd(f, g, p).size() > 1) return false;
  }
  return true;
}

Coeffs canonical_modulus(std::uint32_t p, int e) {
  const std::uint64_t count = ipow(p, e);
  for (std::uint64_t code = 0; code < count; ++code) {
    Coeffs f(e + 1, 0);
    std::uint64_t c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[e] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw Error("no irreducible polynomial found");
}

std::uint32_t encode(const Coeffs& c, std::uint32_t p) {
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
  return v;
}

Coeffs decode(std::uint32_t v, std::uint32_t p, int e) {
  Coeffs c(e, 0);
  for (int i = 0; i < e; ++i) {
    c[i] = v % p;
    v /= p;
  }
  trim(c);
  return c;
}

std::shared_ptr<const detail::FieldTables> build_tables(std::uint32_t p, int e) {
  auto t = std::make_shared<detail::FieldTables>();
  t->p = p;
  t->e = e;
  t->order = static_cast<std::uint32_t>(ipow(p, e));
  t->units = t->order - 1;
  t->modulus = canonical_modulus(p, e);

  const std::uint32_t n = t->units;
  const auto factors = prime_factors(n);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 1; cand < t->order; ++cand) {
    const Coeffs c = decode(cand, p, e);
    bool primitive = true;
    for (auto f : factors) {
      Coeffs pw = poly_powmod(c, n / f, t->modulus, p);
      if (pw.size() == 1 && pw[0] == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = cand;
      break;
    }
  }
  if (gen == 0) throw Error("no primitive element found");

  t->exp.assign(2 * static_cast<std::size_t>(n), 0);
  t->log.assign(t->order, 0);
  if (e == 1) {
    std::uint64_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      t->exp[i] = static_cast<std::uint32_t>(cur);
      t->log[cur] = i;
      cur = cur * gen % p;
    }
  } else {
    const Coeffs g = decode(gen, p, e);
    Coeffs cur{1};
    for (std::uint32_t i = 0; i < n; ++i) {
      const std::uint32_t v = encode(cur, p);
      t->exp[i] = v;
      t->log[v] = i;
      cur = poly_mulmod(cur, g, t->modulus, p);
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) t->exp[n + i] = t->exp[i];
  t->one_plus.assign(n, 0);
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::uint32_t v = t->exp[i];
    const std::uint32_t d0 = v % p;
    t->one_plus[i] = v - d0 + (d0 + 1) % p;
  }
  t->log_minus_one = (p == 2) ? 0 : n / 2;
  return t;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t order_mod(std::uint64_t base, std::uint64_t n) {
  if (n == 1) return 1;
  if (std::gcd(base, n) != 1) throw Error("order_mod: base not coprime to modulus");
  std::uint64_t x = base % n;
  std::uint64_t t = 1;
  while (x != 1) {
    x = x * (base % n) % n;
    ++t;
  }
  return t;
}

FiniteField FiniteField::with_degree(std::uint32_t p, int e) {
  if (!is_prime(p)) throw Error("not prime: " + std::to_string(p));
  if (e <= 0) throw Error("extension degree must be positive");
  long double order = 1;
  for (int i = 0; i < e; ++i) order *= p;
  if (order > static_cast<long double>(kMaxFieldOrder)) {
    throw Error("field order " + std::to_string(p) + "^" + std::to_string(e) + " exceeds supported size");
  }
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::shared_ptr<const detail::FieldTables>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, e});
    if (it != cache.end()) return FiniteField(it->second);
  }
  auto tables = build_tables(p, e);
  std::lock_guard lock(mu);
  auto [it, inserted] = cache.emplace(std::make_pair(p, e), std::move(tables));
  return FiniteField(it->second);
}

FiniteField FiniteField::prime(std::uint32_t p) { return with_degree(p, 1); }

FiniteField FiniteField::extension(const FiniteField& base, int degree) {
  if (!base.valid()) throw Error("extension of an invalid field");
  if (degree <= 0) throw Error("extension degree must be positive");
  if (degree == 1) return base;
  return with_degree(base.characteristic(), base.degree() * degree);
}

Elem FiniteField::from_int(std::int64_t n) const {
  const std::int64_t p = t_->p;
  std::int64_t r = n % p;
  if (r < 0) r += p;
  return {static_cast<std::uint32_t>(r)};
}

Elem FiniteField::from_coords(std::span<const std::uint32_t> c) const {
  if (static_cast<int>(c.size()) > t_->e) throw Error("too many coordinates for field");
  std::uint32_t v = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] >= t_->p) throw Error("coordinate out of range");
    v = v * t_->p + c[i];
  }
  return {v};
}

std::vector<std::uint32_t> FiniteField::coords(Elem a) const {
  std::vector<std::uint32_t> c(t_->e, 0);
  std::uint32_t v = a.v;
  for (int i = 0; i < t_->e; ++i) {
    c[i] = v % t_->p;
    v /= t_->p;
  }
  return c;
}

std::vector<Elem> FiniteField::polynomial_basis() const {
  std::vector<Elem> b;
  std::uint32_t v = 1;
  for (int i = 0; i < t_->e; ++i) {
    b.push_back({v});
    v *= t_->p;
  }
  return b;
}

Elem FiniteField::inv(Elem a) const {
  if (a.v == 0) throw Error("division by zero in finite field");
  const std::uint32_t l = t_->log[a.v];
  return {t_->exp[l == 0 ? 0 : t_->units - l]};
}

Elem FiniteField::pow(Elem a, std::int64_t n) const {
  if (a.v == 0) {
    if (n == 0) return one();
    if (n < 0) throw Error("zero to a negative power");
    return zero();
  }
  const std::int64_t u = t_->units;
  std::int64_t k = n % u;
  if (k < 0) k += u;
  const std::uint64_t l = (std::uint64_t{t_->log[a.v]} * static_cast<std::uint64_t>(k)) % u;
  return {t_->exp[l]};
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a.v == 0) throw Error("log of zero");
  return t_->log[a.v];
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
  if (a.v == 0) throw Error("multiplicative order of zero");
  const std::uint64_t u = t_->units;
  return u / std::gcd<std::uint64_t>(t_->log[a.v], u);
}

std::string FiniteField::format(Elem a) const {
  if (t_->e == 1) return std::to_string(a.v);
  const auto c = coords(a);
  std::ostringstream os;
  bool first = true;
  for (int i = t_->e - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << c[i];
    } else {
      if (c[i] != 1) os << c[i];
      os << 'y';
      if (i > 1) os << '^' << i;
    }
  }
  if (first) os << '0';
  return os.str();
}

std::uint64_t multiplicative_order(const FieldElement& a) { return a.field.multiplicative_order(a.value); }

Embedding::Embedding(const FiniteField& sub, const FiniteField& super) : sub_(sub), super_(super) {
  if (sub.characteristic() != super.characteristic() || super.degree() % sub.degree() != 0) {
    throw Error("not a subfield");
  }
  const auto& mu = sub.modulus();
  Elem root{};
  bool found = false;
  if (sub.is_prime_field()) {
    found = true;  // prime subfield: identity on coordinates
  } else {
    for (std::uint32_t v = 0; v < super.order() && !found; ++v) {
      Elem acc = super.zero();
      for (std::size_t i = mu.size(); i-- > 0;) {
        acc = super.add(super.mul(acc, Elem{v}), super.from_int(mu[i]));
      }
      if (acc.v == 0) {
        root = Elem{v};
        found = true;
      }
    }
  }
  if (!found) throw Error("subfield generator has no root in the extension");
  image_.resize(sub.order());
  for (std::uint32_t c = 0; c < sub.order(); ++c) {
    if (sub.is_prime_field()) {
      image_[c] = super.from_int(c);
      continue;
    }
    const auto digits = sub.coords(Elem{c});
    Elem acc = super.zero();
    for (std::size_t i = digits.size(); i-- > 0;) {
      acc = super.add(super.mul(acc, root), super.from_int(digits[i]));
    }
    image_[c] = acc;
  }
  reverse_.reserve(image_.size());
  for (std::uint32_t c = 0; c < image_.size(); ++c) reverse_.emplace_back(image_[c], Elem{c});
  std::sort(reverse_.begin(), reverse_.end());
}

std::optional<Elem> Embedding::preimage(Elem b) const {
  auto it = std::lower_bound(reverse_.begin(), reverse_.end(), std::make_pair(b, Elem{0}));
  if (it == reverse_.end() || it->first != b) return std::nullopt;
  return it->second;
}

SubfieldCoordinates::SubfieldCoordinates(const Embedding& emb) : emb_(emb) {
  const FiniteField& F = emb.super();
  const FiniteField& K = emb.sub();
  const std::uint32_t p = F.characteristic();
  const int e = F.degree();
  f_ = K.degree();
  dim_ = e / f_;
  // y generates F over F_p, hence also over F_q, so powers of y form a basis.
  const Elem y = e == 1 ? F.one() : Elem{p};
  basis_.clear();
  Elem b = F.one();
  for (int d = 0; d < dim_; ++d) {
    basis_.push_back(b);
    b = F.mul(b, y);
  }
  // Column (d, j) holds the F_p coordinates of w^j * y^d.
  std::vector<std::uint32_t> a(static_cast<std::size_t>(e) * e, 0);
  for (int d = 0; d < dim_; ++d) {
    for (int j = 0; j < f_; ++j) {
      std::vector<std::uint32_t> unit(f_, 0);
      unit[j] = 1;
      const Elem wj = emb(K.from_coords(unit));
      const auto col = F.coords(F.mul(wj, basis_[d]));
      for (int i = 0; i < e; ++i) a[static_cast<std::size_t>(i) * e + d * f_ + j] = col[i];
    }
  }
  inverse_.assign(static_cast<std::size_t>(e) * e, 0);
  for (int i = 0; i < e; ++i) inverse_[static_cast<std::size_t>(i) * e + i] = 1;
  for (int c = 0; c < e; ++c) {
    int piv = -1;
    for (int r = c; r < e; ++r) {
      if (a[static_cast<std::size_t>(r) * e + c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) throw Error("subfield basis is singular");
    for (int k = 0; k < e; ++k) {
      std::swap(a[static_cast<std::size_t>(piv) * e + k], a[static_cast<std::size_t>(c) * e + k]);
      std::swap(inverse_[static_cast<std::size_t>(piv) * e + k], inverse_[static_cast<std::size_t>(c) * e + k]);
    }
    const std::uint64_t li = inv_mod(a[static_cast<std::size_t>(c) * e + c], p);
    for (int k = 0; k < e; ++k) {
      a[static_cast<std::size_t>(c) * e + k] = static_cast<std::uint32_t>(a[static_cast<std::size_t>(c) * e + k] * li % p);
      inverse_[static_cast<std::size_t>(c) * e + k] = static_cast<std::uint32_t>(inverse_[static_cast<std::size_t>(c) * e + k] * li % p);
    }
    for (int r = 0; r < e; ++r) {
      if (r == c) continue;
      const std::uint64_t factor = a[static_cast<std::size_t>(r) * e + c];
      if (factor == 0) continue;
      for (int k = 0; k < e; ++k) {
        a[static_cast<std::size_t>(r) * e + k] = static_cast<std::uint32_t>(
            (a[static_cast<std::size_t>(r) * e + k] + (p - factor) * a[static_cast<std::size_t>(c) * e + k]) % p);
        inverse_[static_cast<std::size_t>(r) * e + k] = static_cast<std::uint32_t>(
            (inverse_[static_cast<std::size_t>(r) * e + k] + (p - factor) * inverse_[static_cast<std::size_t>(c) * e + k]) % p);
      }
    }
  }
}

std::vector<Elem> SubfieldCoordinates::sub_coordinates(Elem z) const {
  const FiniteField& F = emb_.super();
  const std::uint32_t p = F.characteristic();
  const int e = F.degree();
  const auto zc = F.coords(z);
  std::vector<std::uint32_t> c(e, 0);
  for (int i = 0; i < e; ++i) {
    std::uint64_t s = 0;
    for (int k = 0; k < e; ++k) s += std::uint64_t{inverse_[static_cast<std::size_t>(i) * e + k]} * zc[k];
    c[i] = static_cast<std::uint32_t>(s % p);
  }
  std::vector<Elem> out(dim_);
  for (int d = 0; d < dim_; ++d) {
    out[d] = emb_.sub().from_coords(std::span<const std::uint32_t>(c).subspan(static_cast<std::size_t>(d) * f_, f_));
  }
  return out;
}

std::vector<Elem> SubfieldCoordinates::coordinates(Elem z) const {
  auto out = sub_coordinates(z);
  for (auto& x : out) x = emb_(x);
  return out;
}

int RootSetup::conjugate_exponent(int k) const {
  const std::uint64_t qq = q();
  const std::uint64_t shift = (qq - 1) / r;
  return static_cast<int>((shift + (qq % m) * static_cast<std::uint64_t>(k)) % m);
}

RootSetup root_setup(const FiniteField& q_field, int m, Elem lambda) {
  if (m <= 0) throw Error("block length m must be positive");
  const std::uint32_t p = q_field.characteristic();
  if (std::gcd<std::uint64_t>(m, p) != 1) throw Error("m not coprime to characteristic");
  if (lambda.v == 0 || lambda.v >= q_field.order()) throw Error("lambda must be a nonzero element of F_q");

  RootSetup s;
  s.q_field = q_field;
  s.m = m;
  s.lambda = lambda;
  s.r = q_field.multiplicative_order(lambda);
  const std::uint64_t rm = s.r * static_cast<std::uint64_t>(m);
  const std::uint64_t e = order_mod(q_field.order(), rm);
  s.field = FiniteField::extension(q_field, static_cast<int>(e));
  s.embed = Embedding(q_field, s.field);
  s.lambda_in_field = s.embed(lambda);
  const FiniteField& F = s.field;

  bool found = false;
  for (std::uint32_t v = 1; v < F.order(); ++v) {
    const Elem a{v};
    if (F.multiplicative_order(a) == rm && F.pow(a, m) == s.lambda_in_field) {
      s.alpha = a;
      found = true;
      break;
    }
  }
  if (!found) throw Error("no compatible primitive root");
  s.xi = F.pow(s.alpha, static_cast<std::int64_t>(s.r));
  s.omega.resize(m);
  Elem cur = s.alpha;
  for (int k = 0; k < m; ++k) {
    s.omega[k] = cur;
    cur = F.mul(cur, s.xi);
  }
  return s;
}

bool subfield_member(const FiniteField& field, Elem a, std::uint64_t q, int sub_degree) {
  Elem x = a;
  for (int i = 0; i < sub_degree; ++i) x = field.frobenius(x, q);
  return x == a;
}

Elem relative_trace(const FiniteField& field, Elem a, std::uint64_t q, int sub_degree) {
  if (!subfield_member(field, a, q, sub_degree)) throw Error("trace argument outside the stated subfield");
  Elem acc = field.zero();
  Elem x = a;
  for (int i = 0; i < sub_degree; ++i) {
    acc = field.add(acc, x);
    x = field.frobenius(x, q);
  }
  return acc;
}

}  // namespace qtbound
