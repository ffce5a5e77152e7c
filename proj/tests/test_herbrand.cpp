#include <random>

#include "doctest.h"
#include "drinfeld/herbrand.hpp"

using namespace drinfeld;

namespace {

ValuationProfile inf_profile(long p, long s, long v0, long v1, long v2) {
  return ValuationProfile::make(p, s, PlaceKind::Infinite, v0, Valuation(v1), v2);
}
ValuationProfile fin_profile(long p, long s, long v1, long v2) {
  return ValuationProfile::make(p, s, PlaceKind::FiniteCoprime, 0, Valuation(v1), v2);
}

}  // namespace

TEST_CASE("Artin-Schreier psi") {
  PiecewiseLinear as = psi_artin_schreier(3, Rat(4));
  CHECK(as.eval(Rat(5)) == Rat(7));        // 3*5 - 2*4
  CHECK(as.eval(Rat(4)) == Rat(4));        // continuity at the break
  CHECK(as.eval(Rat(-1, 2)) == Rat(-1, 2));
  PiecewiseLinear as2 = psi_artin_schreier(2, Rat(1));
  CHECK(as2.breaks() == std::vector<Rat>{Rat(1)});
  CHECK(as2.slopes() == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK_THROWS_AS(psi_artin_schreier(3, Rat(0)), error);
  CHECK_THROWS_AS(psi_artin_schreier(3, Rat(-2)), error);
}

TEST_CASE("tame psi") {
  CHECK(psi_tame(1, 3).is_identity());
  PiecewiseLinear two = psi_tame(2, 3);
  CHECK(two.eval(Rat(5)) == Rat(10));
  CHECK(two.eval(Rat(-1, 3)) == Rat(-1, 3));
  CHECK(psi_tame(2, 3).last_slope() == Rat(2));  // q - 1 for q = 3
  CHECK_THROWS_AS(psi_tame(3, 3), error);        // wild index
  CHECK_THROWS_AS(psi_tame(0, 3), error);
}

TEST_CASE("composition of psi functions") {
  PiecewiseLinear f({Rat(2)}, {Rat(3), Rat(6)});
  CHECK(compose(PiecewiseLinear(), f) == f);
  CHECK(compose(f, PiecewiseLinear()) == f);

  PiecewiseLinear comp = compose(psi_artin_schreier(3, Rat(3)), psi_artin_schreier(3, Rat(1)));
  CHECK(comp.breaks() == std::vector<Rat>{Rat(1), Rat(5, 3)});
  CHECK(comp.slopes() == std::vector<Rat>{Rat(1), Rat(3), Rat(9)});

  CHECK(compose(psi_tame(2, 3), psi_tame(4, 3)) == psi_tame(8, 3));
}

TEST_CASE("heuristic tame index E") {
  ValuationProfile iw = inf_profile(3, 1, -1, -2, 0);
  auto [e1, x1] = heuristic_E(iw, classify(iw));
  CHECK(e1 == 2);
  CHECK_FALSE(x1);

  ValuationProfile fw = fin_profile(3, 1, -1, 0);
  auto [e2, x2] = heuristic_E(fw, classify(fw));
  CHECK(e2 == 2);
  CHECK_FALSE(x2);

  // v(xi_{-1}) integral and v(xi_1) with denominator q gives E = 1
  ValuationProfile iw2 = inf_profile(3, 1, -1, -3, -1);  // vj = -11
  CHECK(xi_val(classify(iw2), iw2, -1) == Rat(1));
  CHECK(xi_val(classify(iw2), iw2, 1) == Rat(-1, 3));
  auto [e3, x3] = heuristic_E(iw2, classify(iw2));
  CHECK(e3 == 1);
  CHECK_FALSE(x3);

  ValuationProfile tame = inf_profile(3, 1, -1, 0, 0);
  CHECK_THROWS_AS(heuristic_E(tame, classify(tame)), inconsistent_case);
}

TEST_CASE("psi_tower closed forms: frozen reference values") {
  ValuationProfile iw = inf_profile(3, 1, -1, -2, 0);
  TowerCase ciw = classify(iw);
  PiecewiseLinear p1 = psi_tower(ciw, iw, 1, 2);
  CHECK(p1.breaks() == std::vector<Rat>{Rat(5, 2)});
  CHECK(p1.slopes() == std::vector<Rat>{Rat(2), Rat(6)});
  CHECK(p1.eval(Rat(5, 2)) == Rat(5));
  CHECK(p1.eval(Rat(3)) == Rat(8));  // 6y - 10

  ValuationProfile fw = fin_profile(3, 1, -1, 0);
  TowerCase cfw = classify(fw);
  PiecewiseLinear p2 = psi_tower(cfw, fw, 2, 2);
  CHECK(p2.breaks() == std::vector<Rat>{Rat(2)});
  CHECK(p2.slopes() == std::vector<Rat>{Rat(2), Rat(18)});
  CHECK(p2.eval(Rat(2)) == Rat(4));
  CHECK(p2.eval(Rat(3)) == Rat(22));  // 18y - 32

  // InfWild m=2: breaks r_2/E < r_1/E with slopes E, qE, q^2 E
  ValuationProfile deep = inf_profile(3, 1, -1, -5, 0);  // vj = -20
  TowerCase cdeep = classify(deep);
  REQUIRE(cdeep.m == 2);
  PiecewiseLinear p3 = psi_tower(cdeep, deep, 2, 2);
  CHECK(p3.breaks() == std::vector<Rat>{Rat(11, 2), Rat(17, 2)});
  CHECK(p3.slopes() == std::vector<Rat>{Rat(2), Rat(6), Rat(18)});
  CHECK(p3.eval(Rat(11, 2)) == Rat(11));
  CHECK(p3.eval(Rat(17, 2)) == Rat(29));
  // the tower stabilizes at m
  CHECK(psi_tower(cdeep, deep, 5, 2) == p3);

  // tame cases use the denominator of the shared valuation
  ValuationProfile it = inf_profile(3, 1, -1, 0, 0);
  CHECK(psi_tower(classify(it), it, 3, 1) == psi_tame(8, 3));
  ValuationProfile ft = fin_profile(3, 1, 1, 1);
  CHECK(psi_tower(classify(ft), ft, 2, 1) == psi_tame(8, 3));
}

TEST_CASE("tower breaks") {
  ValuationProfile iw = inf_profile(3, 1, -1, -2, 0);
  TowerBreaks tb = tower_breaks(classify(iw), iw, 1, 2);
  CHECK(tb.E == 2);
  CHECK_FALSE(tb.exact_E);
  REQUIRE(tb.r_list.size() == 1);
  CHECK(tb.r_list[0] == Rat(5));  // 2 (8 - 3) / 2

  ValuationProfile fw = fin_profile(3, 1, -1, 0);
  TowerBreaks tf = tower_breaks(classify(fw), fw, 3, 2);
  REQUIRE(tf.r_list.size() == 3);
  for (auto& r : tf.r_list) CHECK(r == Rat(4));

  // the break formula vanishes as vj approaches v0 q
  long q = 3, v0 = -1, E = 2;
  long vj_boundary = v0 * q;
  CHECK(Rat(E) * (Rat(-vj_boundary) + Rat(v0) * q) / Rat(q - 1) == Rat(0));

  ValuationProfile deep = inf_profile(3, 1, -1, -5, 0);
  TowerBreaks td = tower_breaks(classify(deep), deep, 2, 2);
  CHECK(td.r_list == std::vector<Rat>{Rat(17), Rat(11)});
}

TEST_CASE("unsupported ranges are rejected") {
  // vj in the gap [v0 q - q + 1, v0 q): q=3, v0=-1: gap is [-5, -3)
  ValuationProfile gap = inf_profile(3, 1, -1, -1, 0);  // vj = -4
  TowerCase cgap = classify(gap);
  CHECK(cgap.tag == CaseTag::InfWild);
  CHECK_THROWS_AS(psi_tower(cgap, gap, 1, 1), unsupported_range);

  // p | vj in a wild range: vj = -6
  ValuationProfile pdiv = inf_profile(3, 1, -1, -1, 2);
  CHECK(pdiv.vj == Valuation(-6));
  CHECK_THROWS_AS(psi_tower(classify(pdiv), pdiv, 1, 1), unsupported_range);
  CHECK_THROWS_AS(tower_breaks(classify(pdiv), pdiv, 1, 1), unsupported_range);

  ValuationProfile fpdiv = fin_profile(3, 1, -2, 2);  // vj = -10? (-8-2) = -10
  CHECK(fpdiv.vj == Valuation(-10));
  CHECK_NOTHROW(psi_tower(classify(fpdiv), fpdiv, 1, 1));
  ValuationProfile fpdiv2 = fin_profile(3, 1, -2, 1);  // vj = -9, p | vj
  CHECK_THROWS_AS(psi_tower(classify(fpdiv2), fpdiv2, 1, 1), unsupported_range);
}

TEST_CASE("step composition: psi_tower(n+1) = AS(r_{n+1}) o psi_tower(n)") {
  std::mt19937 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    long p = (trial % 2 == 0) ? 2 : 3;
    long q = p;
    bool infinite = rng() % 2 == 0;
    long v0 = infinite ? -(1 + static_cast<long>(rng() % 2)) : 0;
    long v1 = -(static_cast<long>(rng() % 40) + 20);
    long v2 = static_cast<long>(rng() % 5) - 2;
    ValuationProfile pr;
    try {
      pr = ValuationProfile::make(p, 1, infinite ? PlaceKind::Infinite : PlaceKind::FiniteCoprime,
                                  v0, Valuation(v1), v2);
    } catch (const error&) {
      continue;
    }
    TowerCase c = classify(pr);
    if (!c.is_wild()) continue;
    if (pr.vj.value() % p == 0) continue;
    if (c.tag == CaseTag::InfWild && (c.m < 6 || Int(pr.vj.value()) >= Int(v0) * q - q + 1))
      continue;
    long E = 1 + rng() % 4;
    if (E % p == 0) E += 1;
    for (long n = 1; n <= 5; ++n) {
      TowerBreaks tb = tower_breaks(c, pr, n + 1, E);
      PiecewiseLinear lhs = compose(psi_artin_schreier(q, tb.r_list[n]), psi_tower(c, pr, n, E));
      CHECK(lhs == psi_tower(c, pr, n + 1, E));
    }
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("three-factor tame/AS/tame composition reproduces psi_tower(1)") {
  ValuationProfile profiles[] = {
      inf_profile(3, 1, -1, -2, 0),   // vj = -8
      inf_profile(3, 1, -1, -5, 0),   // vj = -20
      inf_profile(2, 1, -1, -8, 1),   // vj = -25
      fin_profile(3, 1, -1, 0),       // vj = -4
      fin_profile(2, 1, -3, 2),       // vj = -11
  };
  for (const auto& pr : profiles) {
    TowerCase c = classify(pr);
    Rat v_omega =
        pr.kind == PlaceKind::Infinite
            ? Rat((Rat(-pr.vj.value()) + Rat(pr.v0) * pr.q) / Rat(pr.q - 1))
            : Rat(Rat(-pr.vj.value()) / Rat(pr.q - 1));
    for (long E = 1; E <= 12; ++E) {
      if (E % pr.p == 0) continue;
      PiecewiseLinear expect = psi_tower(c, pr, 1, E);
      for (long e0 = 1; e0 <= E; ++e0) {
        if (E % e0 != 0) continue;
        for (long ep = 1; ep <= E / e0; ++ep) {
          if ((E / e0) % ep != 0) continue;
          long e1 = E / (e0 * ep);
          PiecewiseLinear got =
              compose(psi_tame(e1, pr.p),
                      compose(psi_artin_schreier(pr.q, v_omega * ep * e0),
                              psi_tame(ep * e0, pr.p)));
          CHECK(got == expect);
        }
      }
    }
  }
}

TEST_CASE("psi outputs are convex with integer slopes ending at E q^n") {
  ValuationProfile pr = inf_profile(3, 1, -1, -5, 0);
  TowerCase c = classify(pr);
  for (long E : {1L, 2L, 4L}) {
    for (long n = 1; n <= c.m; ++n) {
      PiecewiseLinear f = psi_tower(c, pr, n, E);
      CHECK(f.is_convex());
      CHECK(f.eval(Rat(0)) == Rat(0));
      for (const Rat& s : f.slopes()) CHECK(s.get_den() == 1);
      CHECK(f.last_slope() == Rat(E) * Rat(ipow(3, n)));
    }
  }
}

TEST_CASE("inversion") {
  CHECK(invert(PiecewiseLinear()) == PiecewiseLinear());
  ValuationProfile iw = inf_profile(3, 1, -1, -2, 0);
  PiecewiseLinear f = psi_tower(classify(iw), iw, 1, 2);
  CHECK(invert(f).eval(Rat(5)) == Rat(5, 2));
  CHECK(compose(invert(f), f) == PiecewiseLinear());
  CHECK(compose(f, invert(f)) == PiecewiseLinear());
  PiecewiseLinear g({Rat(1), Rat(7, 2)}, {Rat(2), Rat(3), Rat(12)});
  for (Rat y : {Rat(-1, 2), Rat(1, 2), Rat(2), Rat(7, 2), Rat(100, 7)})
    CHECK(invert(g).eval(g.eval(y)) == y);
}
