#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drinfeld/rational.hpp"

namespace drinfeld {

class FqElem;

/// A finite field F_{p^d}, represented as F_p[x]/(modulus) with a monic
/// irreducible modulus of degree d. Field objects are interned in a global
/// registry and live for the whole process, so elements may hold plain
/// pointers. All state is immutable after construction.
class FiniteField {
 public:
  /// Interned field with the canonical modulus: the monic irreducible of
  /// degree d over F_p whose coefficient vector (c_0, ..., c_{d-1}) encodes
  /// the least integer sum c_i p^i.
  static const FiniteField* make(long p, long d);

  long p() const { return p_; }
  long degree() const { return d_; }
  Int order() const { return order_; }
  bool order_fits_ulong() const { return order_fits_ulong_; }
  unsigned long order_ulong() const { return order_ul_; }
  const std::vector<int32_t>& modulus() const { return modulus_; }

  FqElem zero() const;
  FqElem one() const;
  FqElem from_int(long v) const;          // image of an integer in F_p
  FqElem gen() const;                     // class of x (zero when d == 1)
  FqElem from_coeffs(std::vector<int32_t> c) const;  // little-endian, reduced mod p

  /// Element with the given little-endian base-p digit index, 0 <= k < p^d.
  FqElem element(unsigned long k) const;
  unsigned long index_of(const FqElem& e) const;

  std::string to_string(const FqElem& e, const std::string& gen = "g") const;

 private:
  FiniteField(long p, long d, std::vector<int32_t> modulus);
  friend class FqElem;

  std::vector<int32_t> mul_raw(const std::vector<int32_t>& a,
                               const std::vector<int32_t>& b) const;
  std::vector<int32_t> inv_raw(const std::vector<int32_t>& a) const;

  long p_;
  long d_;
  std::vector<int32_t> modulus_;  // degree d, monic, little-endian, length d+1
  // x^k mod modulus for k = d .. 2d-2, little-endian rows of length d
  std::vector<std::vector<int32_t>> red_;
  Int order_;
  bool order_fits_ulong_ = false;
  unsigned long order_ul_ = 0;
};

class FqElem {
 public:
  FqElem() = default;  // null element; only assignable
  FqElem(const FiniteField* f, std::vector<int32_t> c);

  const FiniteField* field() const { return f_; }
  const std::vector<int32_t>& coeffs() const { return c_; }
  bool is_zero() const;

  FqElem operator+(const FqElem& o) const;
  FqElem operator-(const FqElem& o) const;
  FqElem operator-() const;
  FqElem operator*(const FqElem& o) const;
  FqElem operator/(const FqElem& o) const;
  FqElem inverse() const;
  FqElem pow(const Int& e) const;  // negative exponents invert
  FqElem frobenius(long k = 1) const;      // x -> x^{p^k}
  FqElem pth_root(long k = 1) const;       // inverse of frobenius

  bool operator==(const FqElem& o) const;
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  /// Deterministic order: by base-p digit index.
  bool operator<(const FqElem& o) const;

  std::string str(const std::string& gen = "g") const;

 private:
  const FiniteField* f_ = nullptr;
  std::vector<int32_t> c_;  // length d, values in [0, p)
};

/// Image of a.field()'s generator under the canonical embedding into `big`
/// (requires a.field()->degree() | big->degree()): the least root of the
/// small field's modulus in `big`. Cached per field pair.
FqElem embed_generator(const FiniteField* small, const FiniteField* big);

/// Map an element through the canonical embedding.
FqElem embed(const FqElem& a, const FiniteField* big);

}  // namespace drinfeld
