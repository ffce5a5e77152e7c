#pragma once

#include <vector>

#include "drinfeld/rational_function.hpp"

namespace drinfeld {

/// Twisted polynomial sum c_i tau^i over F_q(t), where tau is the q-power
/// Frobenius: tau c = c^q tau. Realizes the additive polynomial
/// sum c_i X^{q^i}.
class TwistedPolynomial {
 public:
  TwistedPolynomial() = default;
  explicit TwistedPolynomial(const FiniteField* f) : f_(f) {}
  TwistedPolynomial(const FiniteField* f, std::vector<RationalFunction> coeffs);

  static TwistedPolynomial identity(const FiniteField* f);  // X, i.e. tau^0

  const FiniteField* field() const { return f_; }
  long tau_degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  RationalFunction coeff(long i) const;

  TwistedPolynomial operator+(const TwistedPolynomial& o) const;
  TwistedPolynomial operator-(const TwistedPolynomial& o) const;
  TwistedPolynomial scaled(const RationalFunction& c) const;
  /// Composition of the additive polynomials; tau-degrees add.
  TwistedPolynomial operator*(const TwistedPolynomial& o) const;

  bool operator==(const TwistedPolynomial& o) const { return c_ == o.c_; }
  bool operator!=(const TwistedPolynomial& o) const { return !(*this == o); }

  std::string str() const;

 private:
  void trim();
  const FiniteField* f_ = nullptr;
  std::vector<RationalFunction> c_;
};

/// Rank 2 Drinfeld F_q[t]-module, determined by
/// phi_t(X) = t X + a1 X^q + a2 X^{q^2} with a2 != 0.
class DrinfeldModule {
 public:
  DrinfeldModule(const FiniteField* f, RationalFunction a1, RationalFunction a2);

  const FiniteField* field() const { return f_; }
  const RationalFunction& a1() const { return a1_; }
  const RationalFunction& a2() const { return a2_; }

  /// phi_t as a twisted polynomial: (t, a1, a2).
  TwistedPolynomial phi_t() const;

  /// Ring morphism image phi_a for a nonzero a in F_q[t]; tau-degree 2 deg a.
  TwistedPolynomial phi_of(const FqPoly& a) const;

  /// j-invariant a1^{q+1} / a2, reduced.
  RationalFunction j_invariant() const;

 private:
  const FiniteField* f_;
  RationalFunction a1_, a2_;
};

}  // namespace drinfeld
