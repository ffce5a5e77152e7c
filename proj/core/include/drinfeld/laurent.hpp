#pragma once

#include "drinfeld/puiseux.hpp"
#include "drinfeld/rational_function.hpp"

namespace drinfeld {

/// Exact Laurent expansion of rational functions at a place of F_q(t),
/// with digits mapped into a chosen working field.
///
/// Finite place h: the uniformizer is u = h(t) and digits are the h-adic
/// ones, evaluated at a fixed root theta of h in the working field.
/// Infinite place: u = 1/t and digits come from power-series division of
/// the reversed numerator and denominator.
class PlaceExpander {
 public:
  /// work must contain the residue field: s * deg(v) | degree(work).
  PlaceExpander(Place v, const FiniteField* work);

  const Place& place() const { return v_; }
  const FiniteField* work() const { return work_; }

  /// Series of x with integer exponents, exact at least up to `trunc`.
  PuiseuxSeries expand(const RationalFunction& x, const Rat& trunc) const;

 private:
  Place v_;
  const FiniteField* base_;
  const FiniteField* work_;
  FqElem theta_;  // root of the place polynomial (finite places only)
};

}  // namespace drinfeld
