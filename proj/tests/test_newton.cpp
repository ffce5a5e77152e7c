#include <random>
#include <set>

#include "doctest.h"
#include "drinfeld/errors.hpp"
#include "drinfeld/newton.hpp"

using namespace drinfeld;

namespace {

using Pt = std::pair<long, std::optional<Rat>>;

// Independent quadratic-time hull: walk from the leftmost point, always
// taking the smallest slope, preferring the farthest point on ties so
// collinear interior points are skipped.
std::vector<NewtonPolygon::Vertex> brute_hull(std::vector<Pt> pts) {
  std::vector<NewtonPolygon::Vertex> fin;
  for (auto& [x, y] : pts)
    if (y) {
      bool seen = false;
      for (auto& v : fin)
        if (v.x == x) {
          seen = true;
          if (*y < v.y) v.y = *y;
        }
      if (!seen) fin.push_back({x, *y});
    }
  std::sort(fin.begin(), fin.end(),
            [](const auto& a, const auto& b) { return a.x < b.x; });
  std::vector<NewtonPolygon::Vertex> hull{fin.front()};
  while (hull.back().x != fin.back().x) {
    const auto& cur = hull.back();
    const NewtonPolygon::Vertex* best = nullptr;
    for (const auto& cand : fin) {
      if (cand.x <= cur.x) continue;
      if (!best) {
        best = &cand;
        continue;
      }
      Rat sc = (cand.y - cur.y) / Rat(cand.x - cur.x);
      Rat sb = (best->y - cur.y) / Rat(best->x - cur.x);
      if (sc < sb || (sc == sb && cand.x > best->x)) best = &cand;
    }
    hull.push_back(*best);
  }
  return hull;
}

}  // namespace

TEST_CASE("lower_hull on the spec examples") {
  NewtonPolygon h1 = lower_hull({{1, Rat(-1)}, {3, Rat(-2)}, {9, Rat(0)}});
  CHECK(h1.vertex_xs() == std::vector<long>{1, 3, 9});
  auto s1 = slopes(h1);
  REQUIRE(s1.size() == 2);
  CHECK(s1[0] == std::pair<Rat, long>{Rat(-1, 2), 2});
  CHECK(s1[1] == std::pair<Rat, long>{Rat(1, 3), 6});

  NewtonPolygon h2 = lower_hull({{1, Rat(0)}, {3, Rat(0)}, {9, Rat(0)}});
  CHECK(h2.vertex_xs() == std::vector<long>{1, 9});  // collinear point dropped
  auto s2 = slopes(h2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0] == std::pair<Rat, long>{Rat(0), 8});

  NewtonPolygon h3 = lower_hull({{0, Rat(5)}, {1, Rat(0)}, {9, Rat(0)}});
  auto s3 = slopes(h3);
  REQUIRE(s3.size() == 2);
  CHECK(s3[0].first == Rat(-5));
  CHECK(s3[1].first == Rat(0));

  NewtonPolygon h4 = lower_hull({{0, Rat(4)}, {1, Rat(0)}});
  auto s4 = slopes(h4);
  REQUIRE(s4.size() == 1);
  CHECK(s4[0] == std::pair<Rat, long>{Rat(-4), 1});
}

TEST_CASE("infinite points are dropped; too few points throw") {
  NewtonPolygon h = lower_hull({{0, Rat(1)}, {2, std::nullopt}, {5, Rat(0)}});
  CHECK(h.vertex_xs() == std::vector<long>{0, 5});
  CHECK_THROWS_AS(lower_hull({{0, Rat(1)}}), error);
  CHECK_THROWS_AS(lower_hull({{0, Rat(1)}, {2, std::nullopt}}), error);
}

TEST_CASE("slope multiplicities sum to the horizontal extent") {
  NewtonPolygon h = lower_hull({{0, Rat(7, 2)}, {1, Rat(-1)}, {3, Rat(-2)}, {9, Rat(1)}});
  long total = 0;
  Rat weighted(0);
  for (auto& [sl, len] : slopes(h)) {
    total += len;
    weighted += sl * len;
  }
  CHECK(total == 9);
  CHECK(weighted == Rat(1) - Rat(7, 2));  // y_last - y_first
}

TEST_CASE("hull equals the brute-force hull on random point sets") {
  std::mt19937 rng(424242);
  for (int trial = 0; trial < 300; ++trial) {
    int npts = 2 + rng() % 7;
    std::vector<Pt> pts;
    for (int i = 0; i < npts; ++i) {
      long x = rng() % 10;
      if (rng() % 8 == 0) {
        pts.push_back({x, std::nullopt});
        continue;
      }
      Rat y(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3));
      y.canonicalize();
      pts.push_back({x, y});
    }
    std::set<long> finite_xs;
    for (auto& [x, y] : pts)
      if (y) finite_xs.insert(x);
    if (finite_xs.size() < 2) continue;
    NewtonPolygon fast = lower_hull(pts);
    auto slow = brute_hull(pts);
    REQUIRE(fast.vertices().size() == slow.size());
    for (size_t i = 0; i < slow.size(); ++i) {
      CHECK(fast.vertices()[i].x == slow[i].x);
      CHECK(fast.vertices()[i].y == slow[i].y);
    }
  }
}
