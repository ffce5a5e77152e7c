#include "doctest.h"
#include "drinfeld/fq_poly.hpp"
#include "drinfeld/wildgroup.hpp"

using namespace drinfeld;

namespace {

ValuationProfile inf_profile(long p, long s, long v0, long v1, long v2) {
  return ValuationProfile::make(p, s, PlaceKind::Infinite, v0, Valuation(v1), v2);
}
ValuationProfile fin_profile(long p, long s, long v1, long v2) {
  return ValuationProfile::make(p, s, PlaceKind::FiniteCoprime, 0, Valuation(v1), v2);
}

}  // namespace

TEST_CASE("generator matrices") {
  const FiniteField* f3 = make_field(3, 1);
  BlockUnipotentMatrix m1 = generator_matrix(2, {1, f3->one()});
  CHECK(m1.lower_left() == FqMatrix::identity(f3, 2));

  BlockUnipotentMatrix m2 = generator_matrix(2, {2, f3->one()});
  FqMatrix sup(f3, 2, 2);
  sup.at(0, 1) = f3->one();
  CHECK(m2.lower_left() == sup);

  // u-additivity: sigma_{1,1} sigma_{1,2} = sigma_{1,0} = identity over F_3
  BlockUnipotentMatrix a = generator_matrix(2, {1, f3->from_int(1)});
  BlockUnipotentMatrix b = generator_matrix(2, {1, f3->from_int(2)});
  CHECK(a * b == BlockUnipotentMatrix(2, FqMatrix::identity(f3, 4)));

  CHECK_THROWS_AS(generator_matrix(2, {3, f3->one()}), error);
  CHECK_THROWS_AS(generator_matrix(2, {0, f3->one()}), error);
}

TEST_CASE("sigma_{l,u} sigma_{l,u'} = sigma_{l,u+u'} for all small q, n, u, u'") {
  for (auto [p, s] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const FiniteField* F = make_field(p, s);
    unsigned long q = F->order_ulong();
    for (long n = 1; n <= 3; ++n)
      for (long l = 1; l <= n; ++l)
        for (unsigned long u = 0; u < q; ++u)
          for (unsigned long w = 0; w < q; ++w) {
            BlockUnipotentMatrix lhs = generator_matrix(n, {l, F->element(u)}) *
                                       generator_matrix(n, {l, F->element(w)});
            BlockUnipotentMatrix rhs =
                generator_matrix(n, {l, F->element(u) + F->element(w)});
            CHECK(lhs == rhs);
          }
  }
}

TEST_CASE("shift matrix composition law with truncation") {
  const FiniteField* F = make_field(2, 2);
  for (long n = 1; n <= 4; ++n)
    for (long l = 1; l <= n; ++l)
      for (long l2 = 1; l2 <= n; ++l2) {
        FqMatrix prod = shift_matrix(F, n, l) * shift_matrix(F, n, l2);
        long l3 = l + l2 - 1;
        FqMatrix expect = l3 <= n ? shift_matrix(F, n, l3) : FqMatrix(F, n, n);
        CHECK(prod == expect);
      }
}

TEST_CASE("act_on_basis matches the published action") {
  const FiniteField* f3 = make_field(3, 1);
  FqElem u = f3->from_int(2);

  auto act1 = act_on_basis({1, u}, 3);
  REQUIRE(act1.at(1).size() == 2);
  CHECK(act1.at(1)[0] == std::pair<long, FqElem>{1, f3->one()});
  CHECK(act1.at(1)[1] == std::pair<long, FqElem>{-1, u});
  CHECK(act1.at(-2) == std::vector<std::pair<long, FqElem>>{{-2, f3->one()}});

  auto act2 = act_on_basis({2, u}, 3);
  CHECK(act2.at(1) == std::vector<std::pair<long, FqElem>>{{1, f3->one()}});  // i < l
  REQUIRE(act2.at(3).size() == 2);
  CHECK(act2.at(3)[1] == std::pair<long, FqElem>{-2, u});  // i - l + 1 = 2
}

TEST_CASE("generator_matrix and act_on_basis agree entry by entry") {
  for (auto [p, s] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const FiniteField* F = make_field(p, s);
    for (long n = 1; n <= 3; ++n)
      for (long l = 1; l <= n; ++l)
        for (unsigned long u = 0; u < F->order_ulong(); ++u) {
          WildGenerator g{l, F->element(u)};
          CHECK(action_matrix(F, n, g) == generator_matrix(n, g));
        }
  }
}

TEST_CASE("group enumeration: order, abelianness, exponent p") {
  // finite case: order p^{s n}
  for (auto [p, s] : {std::pair<long, long>{2, 1}, {3, 1}, {2, 2}}) {
    const FiniteField* F = make_field(p, s);
    TowerCase fin{CaseTag::FinWild, 0};
    for (long n = 1; n <= (p == 2 && s == 1 ? 3 : 2); ++n) {
      auto els = group_elements(fin, F, n);
      unsigned long expect = 1;
      for (long i = 0; i < s * n; ++i) expect *= p;
      CHECK(els.size() == expect);
      // abelian and exponent p on the full enumeration
      for (const auto& a : els) {
        BlockUnipotentMatrix pw = a;
        for (long i = 1; i < p; ++i) pw = pw * a;
        CHECK(pw == BlockUnipotentMatrix(n, FqMatrix::identity(F, 2 * n)));
        for (const auto& b : els) CHECK(a * b == b * a);
      }
    }
  }

  // q = 3 finite, n = 2: (Z/pZ)^{sn} has order 9
  CHECK(group_elements(TowerCase{CaseTag::FinWild, 0}, make_field(3, 1), 2).size() == 9);
  // q = 4, finite, n = 1: order 4 (s = 2)
  CHECK(group_elements(TowerCase{CaseTag::FinWild, 0}, make_field(2, 2), 1).size() == 4);
  // q = 2 infinite with m = 3: levels stop at m for n >= 3
  TowerCase infw{CaseTag::InfWild, 3};
  CHECK(group_elements(infw, make_field(2, 1), 3).size() == 8);
  CHECK(group_elements(infw, make_field(2, 1), 5).size() == 8);

  CHECK_THROWS_AS(group_elements(TowerCase{CaseTag::FinTame, 0}, make_field(2, 1), 1),
                  inconsistent_case);
  CHECK_THROWS_AS(group_elements(TowerCase{CaseTag::FinWild, 0}, make_field(2, 1), 2, 3),
                  cap_exceeded);
}

TEST_CASE("filtration breaks R_n^l = psi(r_l / E)") {
  ValuationProfile iw = inf_profile(3, 1, -1, -2, 0);
  TowerCase ciw = classify(iw);
  CHECK(filtration_break(ciw, iw, 1, 1, 2) == Rat(5));

  ValuationProfile fw = fin_profile(3, 1, -1, 0);
  TowerCase cfw = classify(fw);
  CHECK(filtration_break(cfw, fw, 1, 1, 2) == Rat(4));

  // R_n^l >= r_n on samples (psi grows at least linearly past r_n / E)
  ValuationProfile deep = inf_profile(3, 1, -1, -5, 0);
  TowerCase cdeep = classify(deep);
  for (long n = 1; n <= cdeep.m; ++n) {
    TowerBreaks tb = tower_breaks(cdeep, deep, n, 2);
    for (long l = 1; l <= n; ++l)
      CHECK(filtration_break(cdeep, deep, n, l, 2) >= tb.r_list[n - 1]);
  }
  // out-of-range level
  CHECK_THROWS_AS(filtration_break(cdeep, deep, 3, 3, 2), error);
}
