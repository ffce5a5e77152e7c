#pragma once

#include <string>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

enum class PlaceKind { Infinite, FiniteCoprime, AboveUniformizer };

/// The triple of valuations (v0, v1, v2) of (pi, a1, a2) at a place,
/// together with v(j) = v1(q+1) - v2. This is the sole input to the whole
/// local theory.
struct ValuationProfile {
  long p = 0, s = 0, q = 0;
  PlaceKind kind = PlaceKind::Infinite;
  long v0 = 0;
  Valuation v1;
  long v2 = 0;
  Valuation vj;

  static ValuationProfile make(long p, long s, PlaceKind kind, long v0,
                               Valuation v1, long v2);
  void validate() const;
};

enum class CaseTag {
  InfWild,
  InfTame,
  FinWild,
  FinTame,
  AboveTPos,
  AboveTNonpos,
  AboveTTame
};

/// Case split of the valuation theory; m is the depth parameter where the
/// tower changes shape (InfWild, AboveTPos only).
struct TowerCase {
  CaseTag tag;
  long m = 0;

  /// Wild in the sense of the psi/ramification theory (infinite and finite
  /// coprime places only; the above-uniformizer tower has no such theory).
  bool is_wild() const { return tag == CaseTag::InfWild || tag == CaseTag::FinWild; }
  bool operator==(const TowerCase& o) const { return tag == o.tag && m == o.m; }
  std::string str() const;
};

/// Predicted Newton polygon shape of phi_pi(X) - xi: the vertex
/// x-coordinates, a subset of {0, 1, q, q^2}.
struct PolygonShape {
  std::vector<long> vertex_xs;
  long segment_count() const { return static_cast<long>(vertex_xs.size()) - 1; }
  bool operator==(const PolygonShape& o) const { return vertex_xs == o.vertex_xs; }
};

/// Total classification; vj = +infinity lands in the tame tag of the kind.
TowerCase classify(const ValuationProfile& pr);

/// v(xi_i) by the closed forms; i < 0 selects the high-valuation branch
/// xi_{-n}, i > 0 the xi_n branch, n = |i|.
Rat xi_val(const TowerCase& c, const ValuationProfile& pr, long i);

struct OrderingEntry {
  long index;
  Rat value;
  bool tied_with_next;
};

/// The 2n indices +-1..+-n sorted by descending valuation; stable in the
/// initial order (-1,..,-n,+1,..,+n), so equal values list negative indices
/// first. Tie flags mark exactly the boundary equalities.
std::vector<OrderingEntry> ordering(const TowerCase& c, const ValuationProfile& pr,
                                    long n);

PolygonShape step_polygon(const TowerCase& c, const ValuationProfile& pr, long i);

}  // namespace drinfeld
