#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

/// Lower convex hull of a set of support points (x, v(coefficient)), with
/// exact rational slopes. Segment of slope mu and horizontal length l
/// reads as: l roots of valuation -mu.
class NewtonPolygon {
 public:
  struct Vertex {
    long x;
    Rat y;
  };
  struct Segment {
    Rat slope;
    long length;
  };

  explicit NewtonPolygon(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return v_; }
  std::vector<Segment> segments() const;
  std::vector<long> vertex_xs() const;

  bool operator==(const NewtonPolygon& o) const;

 private:
  std::vector<Vertex> v_;  // strictly increasing x, strictly increasing slopes
};

/// Points with infinite y (zero coefficients) are ignored. Requires at least
/// two finite points with distinct x.
NewtonPolygon lower_hull(const std::vector<std::pair<long, std::optional<Rat>>>& points);

/// Slope multiset of the polygon: (slope, horizontal length) per segment.
/// Multiplicities sum to x_last - x_first.
std::vector<std::pair<Rat, long>> slopes(const NewtonPolygon& np);

}  // namespace drinfeld
