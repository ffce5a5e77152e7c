#pragma once

#include <string>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/valtower.hpp"

namespace drinfeld {

/// Value of a local 1-conductor, or Unsupported with the violated clause of
/// the admissibility hypothesis. Never a silent 0.
struct LocalConductorResult {
  bool supported = false;
  Rat value;
  std::string reason;

  static LocalConductorResult ok(Rat v) { return {true, std::move(v), ""}; }
  static LocalConductorResult unsupported(std::string why) {
    return {false, Rat(0), std::move(why)};
  }
};

/// Profile of the module at a place. pi = t away from (t); at the place
/// dividing t, `coprime_pi` selects pi = t - 1 (the conductor's view) versus
/// pi = t (the above-uniformizer division tower).
ValuationProfile profile_at(const DrinfeldModule& m, const Place& v, bool coprime_pi);

/// Local 1-conductor from the closed forms. The profile must be an infinite
/// or finite-coprime one; callers re-profile places dividing t with a
/// coprime uniformizer first.
LocalConductorResult local_conductor(const ValuationProfile& pr);

/// Independent route to the local conductor: integrate the Tate-module
/// rank-drop step function whose single jump sits at the given upper break
/// (the xi_{-} line stays fixed, so rank drops 2 -> 1 on (0, break]).
Rat conductor_from_filtration(const Rat& upper_break);

/// J-height over F_q(t): sum of deg(v) * max(-v(j), 0) over all places.
Rat j_height(const DrinfeldModule& m);

struct PlaceConductor {
  Place place;
  ValuationProfile profile;
  LocalConductorResult local;
};

struct GlobalConductor {
  bool supported = false;
  Rat value;
  std::string reason;  // names the offending place when unsupported
  std::vector<PlaceConductor> per_place;
};

/// Global 1-conductor: sum of deg(v) * f_v over all places (only bad places
/// of j and the infinite place can contribute).
GlobalConductor global_conductor(const DrinfeldModule& m);

struct SzpiroReport {
  bool supported = false;
  std::string reason;
  Rat lhs;  // h_J
  Rat rhs;  // f * (q-1) + q  (over F_q(t))
  bool holds = false;
  bool equality = false;
  /// Inequality is strict exactly when some infinite place has v(j) > v0 q.
  bool strict_expected = false;
  /// v(j) = v0 q at an infinite place: equality holds on the tame boundary;
  /// flagged separately.
  bool boundary_equality = false;
  std::vector<PlaceConductor> per_place;
};

SzpiroReport szpiro_check(const DrinfeldModule& m);

}  // namespace drinfeld
