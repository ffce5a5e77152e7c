#pragma once

#include <string>
#include <vector>

#include "drinfeld/fq_poly.hpp"

namespace drinfeld {

/// A place of F_q(t): either the infinite place (valuation -deg) or a finite
/// place given by a monic irreducible polynomial.
class Place {
 public:
  static Place infinite(const FiniteField* f);
  static Place finite(FqPoly h);  // h monic irreducible

  bool is_infinite() const { return infinite_; }
  const FqPoly& poly() const;
  long degree() const { return infinite_ ? 1 : poly_.degree(); }
  const FiniteField* field() const { return f_; }

  bool operator==(const Place& o) const;
  bool operator!=(const Place& o) const { return !(*this == o); }
  bool operator<(const Place& o) const;  // finite places first, infinite last
  std::string str() const;

 private:
  Place() = default;
  const FiniteField* f_ = nullptr;
  bool infinite_ = false;
  FqPoly poly_;
};

/// Reduced fraction of polynomials over F_q; denominator monic and coprime
/// to the numerator.
class RationalFunction {
 public:
  RationalFunction() = default;
  explicit RationalFunction(FqPoly num);
  RationalFunction(FqPoly num, FqPoly den);

  static RationalFunction t(const FiniteField* f);
  static RationalFunction constant(const FqElem& c);
  static RationalFunction zero(const FiniteField* f);
  static RationalFunction one(const FiniteField* f);

  const FiniteField* field() const { return num_.field(); }
  const FqPoly& num() const { return num_; }
  const FqPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator-() const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction pow(long e) const;  // negative exponents invert
  /// q^i-th power; cheap because it is the exponent stretch t -> t^{q^i}.
  RationalFunction pow_q(long i) const;

  bool operator==(const RationalFunction& o) const;
  bool operator!=(const RationalFunction& o) const { return !(*this == o); }

  std::string str(const std::string& var = "t") const;

 private:
  void reduce();
  FqPoly num_, den_;
};

/// v-adic valuation, normalized so v(F^x) = Z; v(0) = +infinity.
Valuation place_valuation(const RationalFunction& x, const Place& v);

/// All finite places where v(j) != 0, sorted, followed by the infinite
/// place (always included: infinite conductors can be nonzero even when
/// v_inf(j) >= 0).
std::vector<Place> bad_places(const RationalFunction& j);

}  // namespace drinfeld
