#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "qtbound/galois.hpp"

using namespace qtbound;

namespace {

std::vector<FiniteField> sample_fields() {
  return {FiniteField::prime(2),         FiniteField::prime(3),         FiniteField::prime(7),
          FiniteField::with_degree(2, 3), FiniteField::with_degree(3, 2), FiniteField::with_degree(2, 4),
          FiniteField::with_degree(5, 2), FiniteField::with_degree(3, 4), FiniteField::with_degree(2, 6)};
}

Elem y(const FiniteField& F) { return F.polynomial_basis().at(1); }

}  // namespace

TEST_CASE("canonical modulus is the first irreducible in encoding order") {
  for (auto [p, e] : std::vector<std::pair<std::uint32_t, int>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const FiniteField F = FiniteField::with_degree(p, e);
    const auto want = oracle::first_irreducible(p, e);
    std::vector<std::int64_t> got(F.modulus().begin(), F.modulus().end());
    CHECK(got == want);
  }
  // y^2 + 1 over F_3
  CHECK(FiniteField::with_degree(3, 2).modulus() == std::vector<std::uint32_t>{1, 0, 1});
  const FiniteField F3 = FiniteField::prime(3);
  const FiniteField same = FiniteField::extension(F3, 1);
  CHECK(same.order() == 3);
  CHECK(same.is_prime_field());
  CHECK_THROWS_AS(FiniteField::extension(F3, 0), Error);
  CHECK_THROWS_AS(FiniteField::prime(9), Error);
}

TEST_CASE("table arithmetic agrees with schoolbook multiplication") {
  std::mt19937_64 rng(7);
  for (const auto& F : sample_fields()) {
    std::uniform_int_distribution<std::uint32_t> u(0, F.order() - 1);
    for (int t = 0; t < 200; ++t) {
      const Elem a{u(rng)}, b{u(rng)};
      CHECK(F.mul(a, b) == oracle::slow_mul(F, a, b));
      // addition is coordinatewise mod p
      const auto ca = F.coords(a), cb = F.coords(b), cs = F.coords(F.add(a, b));
      for (std::size_t i = 0; i < ca.size(); ++i) CHECK(cs[i] == (ca[i] + cb[i]) % F.characteristic());
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(11);
  for (const auto& F : sample_fields()) {
    std::uniform_int_distribution<std::uint32_t> nz(1, F.order() - 1);
    for (int t = 0; t < 200; ++t) {
      const Elem a{nz(rng)}, b{nz(rng)}, c{nz(rng)};
      CHECK(F.pow(a, F.order() - 1) == F.one());
      CHECK(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      CHECK(F.mul(a, F.inv(a)) == F.one());
      CHECK(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      CHECK(F.sub(F.add(a, b), b) == a);
    }
  }
}

TEST_CASE("multiplicative order") {
  const FiniteField F3 = FiniteField::prime(3);
  CHECK(F3.multiplicative_order(Elem{2}) == 2);
  CHECK(F3.multiplicative_order(F3.one()) == 1);
  const FiniteField F9 = FiniteField::with_degree(3, 2);
  CHECK(F9.multiplicative_order(y(F9)) == 4);
  CHECK(multiplicative_order(FieldElement{F9, y(F9)}) == 4);
  CHECK_THROWS_AS(F9.multiplicative_order(F9.zero()), Error);
  for (std::uint32_t v = 1; v < F9.order(); ++v) CHECK(F9.multiplicative_order(Elem{v}) == oracle::slow_order(F9, Elem{v}));
}

TEST_CASE("root setup for ternary twist 2, m = 4") {
  const FiniteField F3 = FiniteField::prime(3);
  const RootSetup s = root_setup(F3, 4, Elem{2});
  CHECK(s.r == 2);
  CHECK(s.field.order() == 9);
  CHECK(s.extension_degree() == 2);
  const FiniteField& F = s.field;
  // alpha = y + 1, xi = 2y
  CHECK(F.coords(s.alpha) == std::vector<std::uint32_t>{1, 1});
  CHECK(F.coords(s.xi) == std::vector<std::uint32_t>{0, 2});
  CHECK(F.pow(s.alpha, 4) == s.lambda_in_field);
  CHECK(F.multiplicative_order(s.alpha) == 8);
}

TEST_CASE("root setup for untwisted ternary m = 4") {
  const RootSetup s = root_setup(FiniteField::prime(3), 4, Elem{1});
  CHECK(s.r == 1);
  CHECK(s.field.order() == 9);
  CHECK(s.field.multiplicative_order(s.alpha) == 4);
  CHECK(s.xi == s.alpha);
}

TEST_CASE("root setup rejects m sharing the characteristic") {
  CHECK_THROWS_AS(root_setup(FiniteField::prime(2), 4, Elem{1}), Error);
  CHECK_THROWS_AS(root_setup(FiniteField::prime(3), 4, Elem{0}), Error);
}

TEST_CASE("alpha is the first element of order rm with alpha^m = lambda") {
  struct Case {
    std::uint32_t p;
    int e;
    int m;
  };
  for (const Case c : {Case{3, 1, 4}, Case{3, 1, 5}, Case{3, 1, 7}, Case{2, 1, 5}, Case{2, 2, 3}, Case{5, 1, 6},
                       Case{2, 2, 5}, Case{7, 1, 4}}) {
    const FiniteField Fq = FiniteField::with_degree(c.p, c.e);
    for (std::uint32_t lv = 1; lv < Fq.order(); ++lv) {
      const RootSetup s = root_setup(Fq, c.m, Elem{lv});
      const FiniteField& F = s.field;
      const std::uint64_t rm = s.r * static_cast<std::uint64_t>(c.m);
      CHECK(Fq.multiplicative_order(Elem{lv}) == s.r);
      std::optional<Elem> first;
      for (std::uint32_t v = 1; v < F.order() && !first; ++v) {
        const Elem a{v};
        if (oracle::slow_order(F, a) == rm && F.pow(a, c.m) == s.lambda_in_field) first = a;
      }
      REQUIRE(first.has_value());
      CHECK(*first == s.alpha);
      CHECK(s.xi == F.pow(s.alpha, static_cast<std::int64_t>(s.r)));
      CHECK(F.degree() % Fq.degree() == 0);
      CHECK(F.order() - 1 == (F.order() - 1) / rm * rm);
    }
  }
}

TEST_CASE("Omega: m distinct roots, closed under Frobenius with the conjugation rule") {
  for (auto [q, m, lam] : std::vector<std::tuple<std::uint32_t, int, std::uint32_t>>{
           {3, 4, 2}, {3, 4, 1}, {3, 5, 2}, {2, 7, 1}, {5, 3, 2}, {5, 4, 4}, {7, 6, 3}, {4, 5, 2}, {4, 3, 3}}) {
    const FiniteField Fq = FiniteField::with_degree(q % 2 == 0 && q > 2 ? 2 : q, q == 4 ? 2 : 1);
    const RootSetup s = root_setup(Fq, m, Elem{lam});
    const FiniteField& F = s.field;
    REQUIRE(s.omega.size() == static_cast<std::size_t>(m));
    std::set<std::uint32_t> seen;
    for (Elem w : s.omega) {
      seen.insert(w.v);
      CHECK(F.pow(w, m) == s.lambda_in_field);
    }
    CHECK(seen.size() == static_cast<std::size_t>(m));
    auto scan = oracle::roots_by_scan(s);
    std::set<std::uint32_t> scanned;
    for (Elem w : scan) scanned.insert(w.v);
    CHECK(scanned == seen);
    for (int k = 0; k < m; ++k) {
      CHECK(F.frobenius(s.omega[static_cast<std::size_t>(k)], s.q()) ==
            s.omega[static_cast<std::size_t>(s.conjugate_exponent(k))]);
    }
  }
}

TEST_CASE("subfield membership") {
  const FiniteField F9 = FiniteField::with_degree(3, 2);
  CHECK(subfield_member(F9, Elem{2}, 3, 1));
  CHECK_FALSE(subfield_member(F9, y(F9), 3, 1));
  for (std::uint32_t v = 0; v < 9; ++v) CHECK(subfield_member(F9, Elem{v}, 3, 2));
}

TEST_CASE("relative trace") {
  const FiniteField F9 = FiniteField::with_degree(3, 2);
  CHECK(relative_trace(F9, F9.one(), 3, 2) == Elem{2});
  CHECK(relative_trace(F9, y(F9), 3, 2) == F9.zero());
  CHECK(relative_trace(F9, Elem{2}, 3, 1) == Elem{2});
  const FiniteField F81 = FiniteField::with_degree(3, 4);
  CHECK_THROWS_AS(relative_trace(F81, y(F81), 3, 2), Error);

  std::mt19937_64 rng(5);
  for (auto [F, q, d] : std::vector<std::tuple<FiniteField, std::uint64_t, int>>{
           {F9, 3, 2}, {F81, 3, 4}, {F81, 9, 2}, {FiniteField::with_degree(2, 6), 4, 3}, {FiniteField::with_degree(2, 6), 2, 6}}) {
    std::uniform_int_distribution<std::uint32_t> u(0, F.order() - 1);
    std::vector<Elem> sub;  // F_q inside F
    for (std::uint32_t v = 0; v < F.order(); ++v)
      if (F.pow(Elem{v}, static_cast<std::int64_t>(q)) == Elem{v}) sub.push_back(Elem{v});
    REQUIRE(sub.size() == q);
    std::uniform_int_distribution<std::size_t> us(0, sub.size() - 1);
    for (int t = 0; t < 100; ++t) {
      // a, b drawn from the degree-d layer over F_q (here d is the full degree)
      const Elem a{u(rng)}, b{u(rng)};
      const Elem c = sub[us(rng)];
      const Elem ta = relative_trace(F, a, q, d), tb = relative_trace(F, b, q, d);
      CHECK(subfield_member(F, ta, q, 1));
      CHECK(relative_trace(F, F.add(F.mul(c, a), b), q, d) == F.add(F.mul(c, ta), tb));
    }
  }
}

TEST_CASE("Frobenius is an automorphism fixing exactly the order-q subfield") {
  const std::vector<std::tuple<FiniteField, std::uint64_t>> cases = {
      {FiniteField::with_degree(3, 4), 3}, {FiniteField::with_degree(3, 4), 9}, {FiniteField::with_degree(2, 6), 2},
      {FiniteField::with_degree(2, 6), 4}, {FiniteField::with_degree(2, 6), 8}, {FiniteField::with_degree(5, 2), 5},
      {FiniteField::with_degree(3, 2), 3}};
  for (const auto& [F, q] : cases) {
    std::size_t fixed = 0;
    std::set<std::uint32_t> image;
    for (std::uint32_t a = 0; a < F.order(); ++a) {
      const Elem fa = F.frobenius(Elem{a}, q);
      fixed += fa == Elem{a};
      image.insert(fa.v);
      for (std::uint32_t b = 0; b < F.order(); b += 7) {
        CHECK(F.frobenius(F.add(Elem{a}, Elem{b}), q) == F.add(fa, F.frobenius(Elem{b}, q)));
        CHECK(F.frobenius(F.mul(Elem{a}, Elem{b}), q) == F.mul(fa, F.frobenius(Elem{b}, q)));
      }
    }
    CHECK(fixed == q);
    CHECK(image.size() == F.order());
  }
}

TEST_CASE("embedding of a subfield is a ring map with a working preimage") {
  const FiniteField F9 = FiniteField::with_degree(3, 2);
  const FiniteField F81 = FiniteField::with_degree(3, 4);
  const Embedding emb(F9, F81);
  CHECK(emb.index() == 2);
  for (std::uint32_t a = 0; a < 9; ++a) {
    const Elem ea = emb(Elem{a});
    CHECK(F81.pow(ea, 9) == ea);
    CHECK(emb.preimage(ea) == Elem{a});
    for (std::uint32_t b = 0; b < 9; ++b) {
      CHECK(emb(F9.add(Elem{a}, Elem{b})) == F81.add(ea, emb(Elem{b})));
      CHECK(emb(F9.mul(Elem{a}, Elem{b})) == F81.mul(ea, emb(Elem{b})));
    }
  }
  CHECK_FALSE(emb.preimage(y(F81)).has_value());

  const SubfieldCoordinates sc(emb);
  CHECK(sc.dimension() == 2);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const Elem z{static_cast<std::uint32_t>(rng() % 81)};
    const auto c = sc.coordinates(z);
    Elem back = F81.zero();
    for (std::size_t i = 0; i < c.size(); ++i) back = F81.add(back, F81.mul(c[i], sc.basis()[i]));
    CHECK(back == z);
    for (Elem ci : c) CHECK(emb.preimage(ci).has_value());
  }
}

TEST_CASE("order_mod") {
  CHECK(order_mod(3, 8) == 2);
  CHECK(order_mod(2, 7) == 3);
  CHECK(order_mod(3, 1) == 1);
  CHECK_THROWS_AS(order_mod(2, 4), Error);
}
