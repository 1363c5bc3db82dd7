#include "qtbound/qtstruct.hpp"

#include <random>

namespace qtbound {

namespace {

constexpr int kMaxEigencodeLength = 8;

Polynomial xm_minus_lambda(const FiniteField& F, int m, Elem lambda) {
  return Polynomial::binomial(F, static_cast<std::size_t>(m), lambda);
}

// row_a -= q * row_b
void sub_multiple(PolyRow& a, const PolyRow& b, const Polynomial& q) {
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (!b[j].is_zero()) a[j] = a[j] - q * b[j];
  }
}

}  // namespace

void QTCodeSpec::validate() const {
  if (!q_field.valid()) throw Error("spec: field not set");
  if (m <= 0) throw Error("spec: m must be positive");
  if (ell <= 0) throw Error("spec: ell must be positive");
  if (std::gcd<std::uint64_t>(static_cast<std::uint64_t>(m), q_field.characteristic()) != 1) {
    throw Error("m not coprime to characteristic");
  }
  if (lambda.v == 0 || lambda.v >= q_field.order()) throw Error("spec: lambda must be a nonzero element of F_q");
  for (std::size_t b = 0; b < generators.size(); ++b) {
    if (generators[b].size() != static_cast<std::size_t>(ell)) {
      throw Error("spec: generator row " + std::to_string(b) + " does not have ell entries");
    }
    for (const auto& p : generators[b]) {
      if (p.degree() >= m) throw Error("spec: generator polynomial of degree >= m");
      if (!p.is_zero() && !(p.field() == q_field)) throw Error("spec: generator over the wrong field");
    }
  }
}

Polynomial GroebnerMatrix::det() const {
  if (g.empty()) return {};
  Polynomial d = g[0][0];
  for (std::size_t j = 1; j < g.size(); ++j) d = d * g[j][j];
  return d;
}

Matrix GroebnerMatrix::evaluate(Elem beta, const Embedding& emb) const {
  Matrix out(emb.super(), g.size(), g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) out(i, j) = g[i][j].eval(beta, emb);
  return out;
}

Matrix scalar_expansion(const std::vector<PolyRow>& rows, int m, int ell, Elem lambda) {
  if (rows.empty()) throw Error("scalar_expansion needs at least one row to fix the field");
  const FiniteField& F = rows.front().front().field();
  const std::size_t n = static_cast<std::size_t>(m) * ell;
  Matrix out(F, 0, n);
  const Polynomial x = Polynomial::monomial(F, F.one(), 1);
  std::vector<Elem> v(n);
  for (const auto& row : rows) {
    PolyRow cur;
    for (const auto& p : row) cur.push_back(reduce_mod_binomial(p, m, lambda));
    for (int t = 0; t < m; ++t) {
      std::fill(v.begin(), v.end(), Elem{});
      for (int j = 0; j < ell; ++j)
        for (int i = 0; i < m; ++i) v[static_cast<std::size_t>(i) * ell + j] = cur[j].coeff(i);
      out.append_row(v);
      for (auto& p : cur) p = reduce_mod_binomial(p * x, m, lambda);
    }
  }
  return out;
}

Matrix scalar_generator_matrix(const QTCodeSpec& spec) {
  if (spec.generators.empty()) {
    return Matrix(spec.q_field, 0, static_cast<std::size_t>(spec.m) * spec.ell);
  }
  return scalar_expansion(spec.generators, spec.m, spec.ell, spec.lambda);
}

GroebnerMatrix groebner_matrix(const QTCodeSpec& spec) {
  spec.validate();
  const FiniteField& F = spec.q_field;
  const std::size_t ell = static_cast<std::size_t>(spec.ell);
  const Polynomial xm = xm_minus_lambda(F, spec.m, spec.lambda);

  std::vector<PolyRow> pending;
  for (const auto& row : spec.generators) {
    PolyRow r;
    for (const auto& p : row) r.push_back(p.is_zero() ? Polynomial(F) : p % xm);
    pending.push_back(std::move(r));
  }

  GroebnerMatrix out;
  out.m = spec.m;
  out.lambda = spec.lambda;
  for (std::size_t c = 0; c < ell; ++c) {
    PolyRow unit(ell, Polynomial(F));
    unit[c] = xm;
    pending.push_back(std::move(unit));
    // Euclid on column c: keep the minimal-degree entry as pivot.
    while (true) {
      std::size_t piv = pending.size();
      for (std::size_t i = 0; i < pending.size(); ++i) {
        if (pending[i][c].is_zero()) continue;
        if (piv == pending.size() || pending[i][c].degree() < pending[piv][c].degree()) piv = i;
      }
      bool done = true;
      for (std::size_t i = 0; i < pending.size(); ++i) {
        if (i == piv || pending[i][c].is_zero()) continue;
        sub_multiple(pending[i], pending[piv], pending[i][c] / pending[piv][c]);
        if (!pending[i][c].is_zero()) done = false;
      }
      if (done) {
        PolyRow pivot = std::move(pending[piv]);
        pending.erase(pending.begin() + static_cast<std::ptrdiff_t>(piv));
        out.g.push_back(std::move(pivot));
        break;
      }
    }
    // Later columns may be reduced modulo x^m - lambda: (x^m - lambda) e_j is
    // added to the system when column j is processed.
    for (auto& row : pending)
      for (std::size_t j = c + 1; j < ell; ++j) row[j] = row[j] % xm;
    for (std::size_t j = c + 1; j < ell; ++j) out.g.back()[j] = out.g.back()[j] % xm;
  }

  for (std::size_t i = 0; i < ell; ++i) {
    const Elem li = F.inv(out.g[i][i].leading());
    for (auto& p : out.g[i]) p = p.scaled(li);
  }
  for (std::size_t j = 1; j < ell; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      if (out.g[i][j].degree() >= out.g[j][j].degree()) {
        sub_multiple(out.g[i], out.g[j], out.g[i][j] / out.g[j][j]);
      }
    }
  return out;
}

int dimension(const GroebnerMatrix& g) {
  int dim = g.m * static_cast<int>(g.size());
  for (std::size_t j = 0; j < g.size(); ++j) dim -= g(j, j).degree();
  return dim;
}

std::uint64_t Spectrum::mask() const {
  std::uint64_t mk = 0;
  for (const auto& e : eigen) mk |= std::uint64_t{1} << e.k;
  return mk;
}

const Eigenvalue* Spectrum::find(int k) const {
  for (const auto& e : eigen)
    if (e.k == k) return &e;
  return nullptr;
}

Spectrum spectrum(const GroebnerMatrix& g, const RootSetup& setup) {
  if (setup.m > 63) throw Error("spectrum: m above 63 is not supported");
  Spectrum sp;
  sp.setup = setup;
  sp.groebner = g;
  sp.coords = SubfieldCoordinates(setup.embed);
  const FiniteField& F = setup.field;
  const Polynomial det = g.det().mapped(setup.embed);
  for (int k = 0; k < setup.m; ++k) {
    const Elem beta = setup.omega[k];
    const Polynomial lin(F, {F.neg(beta), F.one()});
    int mult = 0;
    Polynomial rest = det;
    while (true) {
      auto dm = divmod(rest, lin);
      if (!dm.remainder.is_zero()) break;
      rest = std::move(dm.quotient);
      ++mult;
    }
    if (mult == 0) continue;
    Eigenvalue ev;
    ev.k = k;
    ev.beta = beta;
    ev.multiplicity = mult;
    ev.eigenspace = right_kernel(g.evaluate(beta, setup.embed));
    if (ev.eigenspace.rows() != static_cast<std::size_t>(mult)) {
      throw Error("internal: eigenvalue multiplicity differs from eigenspace dimension");
    }
    sp.eigen.push_back(std::move(ev));
  }
  return sp;
}

Matrix common_eigenspace(const Spectrum& sp, std::uint64_t mask) {
  if (mask == 0) throw Error("common_eigenspace: empty exponent set");
  Matrix stacked;
  for (int k = 0; k < sp.setup.m; ++k) {
    if (!(mask >> k & 1)) continue;
    const Eigenvalue* ev = sp.find(k);
    if (!ev) throw Error("record outside eigenvalue set");
    stacked = vstack(stacked, sp.groebner.evaluate(ev->beta, sp.setup.embed));
  }
  return right_kernel(stacked);
}

Matrix eigencode_constraints(const Spectrum& sp, const Matrix& v) {
  const int D = sp.coords.dimension();
  const std::size_t ell = static_cast<std::size_t>(sp.ell());
  Matrix out(sp.setup.q_field, 0, ell);
  std::vector<std::vector<Elem>> rows(static_cast<std::size_t>(D), std::vector<Elem>(ell));
  for (std::size_t i = 0; i < v.rows(); ++i) {
    for (std::size_t j = 0; j < ell; ++j) {
      const auto c = sp.coords.sub_coordinates(v(i, j));
      for (int d = 0; d < D; ++d) rows[d][j] = c[d];
    }
    for (const auto& r : rows) out.append_row(r);
  }
  return out;
}

Eigencode eigencode(const Spectrum& sp, std::uint64_t mask, const OracleLimits& lim) {
  if (sp.ell() > kMaxEigencodeLength) throw Error("eigencode: ell above 8 is not supported");
  const FiniteField& Fq = sp.setup.q_field;
  const std::size_t ell = static_cast<std::size_t>(sp.ell());
  Eigencode out;
  if (mask == 0) {
    out.basis = Matrix::identity(Fq, ell);
    out.distance = Distance(1);
    return out;
  }
  const Matrix v = common_eigenspace(sp, mask);
  if (v.rows() == 0) {
    out.basis = Matrix::identity(Fq, ell);
    out.distance = Distance(1);
    return out;
  }
  out.basis = right_kernel(eigencode_constraints(sp, v));
  out.distance = exact_min_distance(out.basis, lim);
  return out;
}

Matrix parity_check(const Spectrum& sp) {
  const FiniteField& F = sp.setup.field;
  const std::size_t m = static_cast<std::size_t>(sp.setup.m);
  const std::size_t n = m * sp.ell();
  if (sp.eigen.empty()) return Matrix(F, 1, n);
  Matrix h(F, 0, n);
  for (const auto& ev : sp.eigen) {
    Matrix powers(F, 1, m);
    Elem cur = F.one();
    for (std::size_t t = 0; t < m; ++t) {
      powers(0, t) = cur;
      cur = F.mul(cur, ev.beta);
    }
    h = vstack(h, kronecker(powers, ev.eigenspace));
  }
  return h;
}

std::vector<Matrix> constituents(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup) {
  std::vector<Matrix> out;
  const std::size_t ell = static_cast<std::size_t>(spec.ell);
  for (const auto& f : fact.factors) {
    const Elem beta = setup.omega[f.u];
    Matrix c(setup.field, spec.generators.size(), ell);
    for (std::size_t b = 0; b < spec.generators.size(); ++b)
      for (std::size_t j = 0; j < ell; ++j) c(b, j) = spec.generators[b][j].eval(beta, setup.embed);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Elem> constituent_prime_basis(std::size_t i, const Factorization& fact, const RootSetup& setup) {
  const FiniteField& F = setup.field;
  const Elem beta = setup.omega[fact.factors.at(i).u];
  std::vector<Elem> out;
  for (Elem b : setup.q_field.polynomial_basis()) {
    Elem cur = setup.embed(b);
    for (int t = 0; t < fact.factors[i].degree; ++t) {
      out.push_back(cur);
      cur = F.mul(cur, beta);
    }
  }
  return out;
}

Polynomial psi(std::size_t i, Elem delta, const Factorization& fact, const RootSetup& setup) {
  const FiniteField& F = setup.field;
  const auto& fac = fact.factors.at(i);
  const Elem beta_inv = F.inv(setup.omega[fac.u]);
  const Elem m_inv = F.inv(F.from_int(setup.m));
  std::vector<Elem> coeffs(static_cast<std::size_t>(setup.m));
  Elem scale = delta;
  for (int k = 0; k < setup.m; ++k) {
    const Elem tr = relative_trace(F, scale, setup.q(), fac.degree);
    const auto pre = setup.embed.preimage(F.mul(m_inv, tr));
    if (!pre) throw Error("internal: psi coefficient outside F_q");
    coeffs[k] = *pre;
    scale = F.mul(scale, beta_inv);
  }
  return Polynomial(setup.q_field, std::move(coeffs));
}

Matrix concatenate_and_reassemble(const QTCodeSpec& spec, const Factorization& fact, const RootSetup& setup) {
  const FiniteField& F = setup.field;
  const std::size_t ell = static_cast<std::size_t>(spec.ell);
  const std::size_t n = static_cast<std::size_t>(spec.m) * ell;
  Matrix out(spec.q_field, 0, n);
  const auto cons = constituents(spec, fact, setup);
  std::vector<Elem> v(n);
  for (std::size_t i = 0; i < cons.size(); ++i) {
    const Elem beta = setup.omega[fact.factors[i].u];
    for (std::size_t b = 0; b < cons[i].rows(); ++b) {
      Elem scale = F.one();
      for (int t = 0; t < fact.factors[i].degree; ++t) {
        for (std::size_t j = 0; j < ell; ++j) {
          const Polynomial a = psi(i, F.mul(scale, cons[i](b, j)), fact, setup);
          for (int k = 0; k < spec.m; ++k) v[static_cast<std::size_t>(k) * ell + j] = a.coeff(k);
        }
        out.append_row(v);
        scale = F.mul(scale, beta);
      }
    }
  }
  return out;
}

QTCodeSpec random_qtcode(const FiniteField& q_field, int m, int ell, int r, Elem lambda, std::uint64_t seed) {
  QTCodeSpec spec;
  spec.q_field = q_field;
  spec.m = m;
  spec.ell = ell;
  spec.lambda = lambda;
  std::mt19937_64 rng(seed);
  const std::uint64_t q = q_field.order();
  for (int b = 0; b < r; ++b) {
    PolyRow row;
    for (int j = 0; j < ell; ++j) {
      std::vector<Elem> c(static_cast<std::size_t>(m));
      for (auto& x : c) x = Elem{static_cast<std::uint32_t>(rng() % q)};
      row.emplace_back(q_field, std::move(c));
    }
    spec.generators.push_back(std::move(row));
  }
  spec.validate();
  return spec;
}

}  // namespace qtbound
