#pragma once

#include <map>
#include <optional>
#include <string>

#include "drinfeld/finite_field.hpp"
#include "drinfeld/rational.hpp"

namespace drinfeld {

/// Truncated series in fractional powers of a uniformizer u with
/// coefficients in a finite field: sum of c_e u^e over exponents e < trunc,
/// plus O(u^trunc). Exponents are exact rationals; all stored coefficients
/// are nonzero.
class PuiseuxSeries {
 public:
  PuiseuxSeries() = default;
  static PuiseuxSeries zero(const FiniteField* f, Rat trunc);
  static PuiseuxSeries monomial(const FqElem& c, const Rat& e, Rat trunc);

  const FiniteField* field() const { return f_; }
  const std::map<Rat, FqElem>& terms() const { return t_; }
  const Rat& trunc() const { return trunc_; }

  /// No visible terms: the series is O(u^trunc).
  bool known_zero() const { return t_.empty(); }
  /// Leading exponent; empty when the series is zero to its truncation.
  std::optional<Rat> valuation() const;
  FqElem leading_coeff() const;
  FqElem coeff(const Rat& e) const;

  PuiseuxSeries operator+(const PuiseuxSeries& o) const;
  PuiseuxSeries operator-(const PuiseuxSeries& o) const;
  PuiseuxSeries operator-() const;
  PuiseuxSeries operator*(const PuiseuxSeries& o) const;
  PuiseuxSeries scaled(const FqElem& c) const;
  PuiseuxSeries shifted(const Rat& e) const;   // multiply by u^e
  /// p^k-th power: Frobenius on coefficients, exponents scaled, exact.
  PuiseuxSeries frobenius(long k) const;
  PuiseuxSeries truncated(Rat t) const;

  /// Least common denominator of the stored exponents.
  Int exponent_denominator() const;

  std::string str(const std::string& uniformizer = "u") const;

 private:
  void insert_term(const Rat& e, const FqElem& c);
  const FiniteField* f_ = nullptr;
  std::map<Rat, FqElem> t_;
  Rat trunc_;
};

}  // namespace drinfeld
