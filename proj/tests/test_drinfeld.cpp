#include <random>

#include "doctest.h"
#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/errors.hpp"

using namespace drinfeld;

namespace {

RationalFunction rf_t(const FiniteField* f) { return RationalFunction::t(f); }

RationalFunction random_poly_rf(const FiniteField* F, std::mt19937& rng, int maxdeg) {
  for (;;) {
    std::vector<FqElem> c;
    for (int i = 0; i <= static_cast<int>(rng() % (maxdeg + 1)); ++i)
      c.push_back(F->element(rng() % F->order_ulong()));
    FqPoly p(F, std::move(c));
    if (!p.is_zero()) return RationalFunction(p);
  }
}

}  // namespace

TEST_CASE("twisted multiplication: tau c = c^q tau and unit law") {
  const FiniteField* F = make_field(3, 1);
  TwistedPolynomial tau(F, {RationalFunction::zero(F), RationalFunction::one(F)});
  TwistedPolynomial c(F, {rf_t(F)});
  TwistedPolynomial prod = tau * c;
  CHECK(prod.tau_degree() == 1);
  CHECK(prod.coeff(0).is_zero());
  CHECK(prod.coeff(1) == rf_t(F).pow(3));  // t^q

  TwistedPolynomial f(F, {rf_t(F), rf_t(F) + RationalFunction::one(F)});
  CHECK(f * TwistedPolynomial::identity(F) == f);
  CHECK(TwistedPolynomial::identity(F) * f == f);
}

TEST_CASE("phi_{t^2} has the published coefficients") {
  std::mt19937 rng(99);
  for (auto [p, s] : {std::pair<long, long>{2, 1}, {3, 1}}) {
    const FiniteField* F = make_field(p, s);
    long q = static_cast<long>(F->order_ulong());
    for (int trial = 0; trial < 6; ++trial) {
      RationalFunction a1 = random_poly_rf(F, rng, 2);
      RationalFunction a2 = random_poly_rf(F, rng, 2);
      DrinfeldModule m(F, a1, a2);
      RationalFunction t = rf_t(F);
      TwistedPolynomial sq = m.phi_t() * m.phi_t();
      CHECK(sq.tau_degree() == 4);
      CHECK(sq.coeff(0) == t * t);
      CHECK(sq.coeff(1) == a1 * t + a1 * t.pow(q));
      CHECK(sq.coeff(2) == a2 * t + a1.pow(q + 1) + a2 * t.pow(q * q));
      CHECK(sq.coeff(3) == a1 * a2.pow_q(1) + a2 * a1.pow_q(2));
      CHECK(sq.coeff(4) == a2.pow_q(2) * a2);

      CHECK(m.phi_of(FqPoly::from_ints(F, {0, 0, 1})) == sq);
    }
  }
}

TEST_CASE("phi_of on the base cases") {
  const FiniteField* F = make_field(3, 1);
  DrinfeldModule m(F, rf_t(F).pow(2), RationalFunction::one(F));
  CHECK(m.phi_of(FqPoly::from_ints(F, {1})) == TwistedPolynomial::identity(F));
  TwistedPolynomial pt = m.phi_of(FqPoly::x(F));
  CHECK(pt.tau_degree() == 2);
  CHECK(pt.coeff(0) == rf_t(F));
  CHECK(pt.coeff(1) == rf_t(F).pow(2));
  CHECK(pt.coeff(2) == RationalFunction::one(F));
  CHECK_THROWS_AS(m.phi_of(FqPoly(F)), error);
}

TEST_CASE("phi is a ring morphism and F_q-linear in a") {
  std::mt19937 rng(4242);
  const FiniteField* F = make_field(2, 2);
  auto random_a = [&](bool allow_zero) {
    for (;;) {
      std::vector<FqElem> c;
      for (int i = 0; i <= static_cast<int>(rng() % 4); ++i)
        c.push_back(F->element(rng() % 4));
      FqPoly a(F, std::move(c));
      if (allow_zero || !a.is_zero()) return a;
    }
  };
  DrinfeldModule m(F, random_poly_rf(F, rng, 1), random_poly_rf(F, rng, 1));
  for (int trial = 0; trial < 8; ++trial) {
    FqPoly a = random_a(false), b = random_a(false);
    CHECK(m.phi_of(a * b) == m.phi_of(a) * m.phi_of(b));
    if (!(a + b).is_zero()) {
      CHECK(m.phi_of(a + b) == m.phi_of(a) + m.phi_of(b));
    }
    // F_q-scaling
    FqElem u = F->element(1 + rng() % 3);
    CHECK(m.phi_of(a.scaled(u)) ==
          m.phi_of(a).scaled(RationalFunction::constant(u)));
  }
}

TEST_CASE("realized additive polynomial is additive on field samples") {
  // evaluate phi_a over F_{q^k} at a point t = theta and check
  // phi_a(x+y) = phi_a(x) + phi_a(y)
  const FiniteField* F = make_field(3, 1);
  const FiniteField* E = FiniteField::make(3, 4);
  DrinfeldModule m(F, rf_t(F).pow(2), RationalFunction::one(F));
  TwistedPolynomial phi = m.phi_of(FqPoly::from_ints(F, {1, 1}));  // a = t + 1
  FqElem theta = E->element(37);

  auto eval_rf = [&](const RationalFunction& r) {
    return embed_poly(r.num(), E).eval(theta) / embed_poly(r.den(), E).eval(theta);
  };
  auto apply = [&](const FqElem& x) {
    FqElem acc = E->zero();
    for (long i = 0; i <= phi.tau_degree(); ++i)
      acc = acc + eval_rf(phi.coeff(i)) * x.pow(ipow(3, i));
    return acc;
  };
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    FqElem x = E->element(rng() % E->order_ulong());
    FqElem y = E->element(rng() % E->order_ulong());
    CHECK(apply(x + y) == apply(x) + apply(y));
  }
}

TEST_CASE("j-invariant") {
  const FiniteField* f3 = make_field(3, 1);
  DrinfeldModule m1(f3, rf_t(f3).pow(2), RationalFunction::one(f3));
  CHECK(m1.j_invariant() == rf_t(f3).pow(8));

  DrinfeldModule m2(f3, RationalFunction::zero(f3), rf_t(f3));
  CHECK(m2.j_invariant().is_zero());

  const FiniteField* f2 = make_field(2, 1);
  DrinfeldModule m3(f2, rf_t(f2), rf_t(f2).pow(3));
  CHECK(m3.j_invariant() == RationalFunction::one(f2));

  CHECK_THROWS_AS(DrinfeldModule(f3, rf_t(f3), RationalFunction::zero(f3)), error);
}
