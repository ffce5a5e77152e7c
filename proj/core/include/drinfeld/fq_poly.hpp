#pragma once

#include <string>
#include <utility>
#include <vector>

#include "drinfeld/finite_field.hpp"

namespace drinfeld {

/// Dense univariate polynomial over a finite field, little-endian
/// coefficients, normalized so the leading coefficient is nonzero.
class FqPoly {
 public:
  FqPoly() = default;
  explicit FqPoly(const FiniteField* f) : f_(f) {}
  FqPoly(const FiniteField* f, std::vector<FqElem> coeffs);

  static FqPoly x(const FiniteField* f);
  static FqPoly constant(const FqElem& c);
  static FqPoly from_ints(const FiniteField* f, const std::vector<long>& c);

  const FiniteField* field() const { return f_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  FqElem coeff(long i) const;
  FqElem lead() const;
  bool is_monic() const;

  FqPoly operator+(const FqPoly& o) const;
  FqPoly operator-(const FqPoly& o) const;
  FqPoly operator-() const;
  FqPoly operator*(const FqPoly& o) const;
  FqPoly scaled(const FqElem& c) const;
  FqPoly shifted(long k) const;  // multiply by x^k

  static void divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r);
  FqPoly operator/(const FqPoly& o) const;
  FqPoly operator%(const FqPoly& o) const;
  bool divides(const FqPoly& a) const;  // *this | a

  FqPoly monic() const;
  static FqPoly gcd(FqPoly a, FqPoly b);
  FqPoly derivative() const;
  FqElem eval(const FqElem& x) const;
  FqPoly pow(long e) const;
  FqPoly powmod(Int e, const FqPoly& mod) const;
  bool irreducible() const;

  bool operator==(const FqPoly& o) const { return f_ == o.f_ && c_ == o.c_; }
  bool operator!=(const FqPoly& o) const { return !(*this == o); }
  /// Deterministic total order: by degree, then by coefficient indices from
  /// the leading coefficient down.
  bool operator<(const FqPoly& o) const;

  std::string str(const std::string& var = "t") const;

  /// k-th monic polynomial of the given degree, coefficients enumerated as
  /// base-q digits of k (constant coefficient first).
  static FqPoly monic_by_index(const FiniteField* f, long deg, unsigned long idx);

 private:
  void trim();
  const FiniteField* f_ = nullptr;
  std::vector<FqElem> c_;
};

/// Factorization of a nonzero polynomial into monic irreducibles by trial
/// division in enumeration order (desk scale). Returns pairs (factor,
/// multiplicity) sorted by degree then enumeration index; the product times
/// lead(f) re-multiplies to f exactly.
std::vector<std::pair<FqPoly, long>> factor_monic(const FqPoly& f);

/// All roots of f lying in its own coefficient field, sorted. Deterministic.
std::vector<FqElem> roots_in_field(const FqPoly& f);

/// Map a polynomial over a subfield through the canonical embedding.
FqPoly embed_poly(const FqPoly& a, const FiniteField* big);

/// F_q = F_{p^s} with its canonical modulus; q is capped (default 2^16).
const FiniteField* make_field(long p, long s, const Int& cap = Int(65536));

}  // namespace drinfeld
