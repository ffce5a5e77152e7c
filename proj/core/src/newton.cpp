#include "drinfeld/newton.hpp"

#include <algorithm>
#include <map>

#include "drinfeld/errors.hpp"

namespace drinfeld {

NewtonPolygon::NewtonPolygon(std::vector<Vertex> vertices) : v_(std::move(vertices)) {
  for (size_t i = 1; i < v_.size(); ++i)
    if (v_[i].x <= v_[i - 1].x) throw error("hull vertices must have increasing x");
}

std::vector<NewtonPolygon::Segment> NewtonPolygon::segments() const {
  std::vector<Segment> s;
  for (size_t i = 1; i < v_.size(); ++i) {
    Rat slope = (v_[i].y - v_[i - 1].y) / Rat(v_[i].x - v_[i - 1].x);
    s.push_back({slope, v_[i].x - v_[i - 1].x});
  }
  return s;
}

std::vector<long> NewtonPolygon::vertex_xs() const {
  std::vector<long> xs;
  xs.reserve(v_.size());
  for (const auto& v : v_) xs.push_back(v.x);
  return xs;
}

bool NewtonPolygon::operator==(const NewtonPolygon& o) const {
  if (v_.size() != o.v_.size()) return false;
  for (size_t i = 0; i < v_.size(); ++i)
    if (v_[i].x != o.v_[i].x || v_[i].y != o.v_[i].y) return false;
  return true;
}

NewtonPolygon lower_hull(const std::vector<std::pair<long, std::optional<Rat>>>& points) {
  // drop infinities, keep the lowest y per x
  std::map<long, Rat> best;
  for (const auto& [x, y] : points) {
    if (!y) continue;
    auto it = best.find(x);
    if (it == best.end() || *y < it->second) best[x] = *y;
  }
  if (best.size() < 2) throw error("lower_hull needs at least two finite points");

  std::vector<NewtonPolygon::Vertex> hull;
  for (const auto& [x, y] : best) {
    NewtonPolygon::Vertex p{x, y};
    // pop while the middle vertex lies on or above the chord: collinear
    // interior points are not vertices
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // slope(a,b) >= slope(a,p) <=> (b.y-a.y)(p.x-a.x) >= (p.y-a.y)(b.x-a.x)
      if ((b.y - a.y) * Rat(p.x - a.x) >= (p.y - a.y) * Rat(b.x - a.x))
        hull.pop_back();
      else
        break;
    }
    hull.push_back(p);
  }
  return NewtonPolygon(std::move(hull));
}

std::vector<std::pair<Rat, long>> slopes(const NewtonPolygon& np) {
  std::vector<std::pair<Rat, long>> out;
  for (const auto& s : np.segments()) out.emplace_back(s.slope, s.length);
  return out;
}

}  // namespace drinfeld
