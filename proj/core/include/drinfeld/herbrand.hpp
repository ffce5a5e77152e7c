#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/valtower.hpp"

namespace drinfeld {

/// Thrown when a wild profile falls outside the proved range: vj in
/// [v0 q - q + 1, v0 q) at an infinite place, or p | vj.
struct unsupported_range : error {
  using error::error;
};

/// Continuous piecewise-linear increasing function on [-1, +inf) with
/// f(y) = y on [-1, 0]. Pieces are kept canonical: strictly increasing
/// positive breakpoints, no zero-length pieces, equal adjacent slopes
/// merged. Herbrand psi-functions are the convex ones with integer slopes.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;  // identity
  PiecewiseLinear(std::vector<Rat> breaks, std::vector<Rat> slopes);

  const std::vector<Rat>& breaks() const { return breaks_; }
  const std::vector<Rat>& slopes() const { return slopes_; }
  bool is_identity() const { return breaks_.empty() && slopes_[0] == 1; }
  bool is_convex() const;

  Rat eval(const Rat& y) const;
  Rat last_slope() const { return slopes_.back(); }
  PiecewiseLinear inverse() const;

  bool operator==(const PiecewiseLinear& o) const {
    return breaks_ == o.breaks_ && slopes_ == o.slopes_;
  }
  bool operator!=(const PiecewiseLinear& o) const { return !(*this == o); }
  std::string str() const;

 private:
  void canonicalize();
  std::vector<Rat> breaks_;            // strictly increasing, all > 0
  std::vector<Rat> slopes_ = {Rat(1)};  // one more than breaks_
};

/// psi_{L/K} = psi_{L/M} o psi_{M/K}: exact functional composition.
PiecewiseLinear compose(const PiecewiseLinear& outer, const PiecewiseLinear& inner);

/// Exact functional inverse (upper <-> lower numbering translation).
PiecewiseLinear invert(const PiecewiseLinear& f);

/// psi of the degree-q Artin-Schreier extension with ramification break r:
/// y up to r, then qy - (q-1)r. The break usually arrives pre-scaled by a
/// tame index, so divisibility of its numerator by p is not checked here.
PiecewiseLinear psi_artin_schreier(long q, const Rat& r);

/// psi of a tame extension: slope e past 0. Requires p doesn't divide e.
PiecewiseLinear psi_tame(long e, long p);

/// Lower bound for the tame index E (Eq = ramification index of K_1/K):
/// lcm of the denominators of v(xi_{-1}), v(xi_1) divided by q. The paper
/// gives no closed form for E, so `exact` is always false; every conductor
/// output is E-independent.
std::pair<long, bool> heuristic_E(const ValuationProfile& pr, const TowerCase& c);

/// Break data of the division tower: E, the breaks r_1..r_n (constant in
/// the finite-prime case), and whether E is known exactly.
struct TowerBreaks {
  long E = 1;
  std::vector<Rat> r_list;
  bool exact_E = false;
};

/// Closed-form psi_{K_n/K} of the division tower. For InfWild the tower
/// stabilizes at m, so n > m returns psi_{K_m/K}. Tame cases return the
/// tame psi with index read off the one-segment valuation denominator.
PiecewiseLinear psi_tower(const TowerCase& c, const ValuationProfile& pr, long n,
                          long E);

TowerBreaks tower_breaks(const TowerCase& c, const ValuationProfile& pr, long n,
                         long E, bool e_exact = false);

}  // namespace drinfeld
