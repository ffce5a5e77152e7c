#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace drinfeld {

/// Exact rational arithmetic. GMP keeps fractions reduced with positive
/// denominator, which is exactly the canonical form we need.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Int ipow(long base, long exp) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return r;
}

/// Canonical text form: "5", "-5", "5/2".
inline std::string to_string(const Rat& r) { return r.get_str(); }

/// An integer valuation extended by +infinity (the valuation of 0).
/// PlusInfinity is an explicit symbolic value, never a sentinel integer.
class Valuation {
 public:
  Valuation() : finite_(0) {}
  Valuation(long v) : finite_(v) {}
  static Valuation infinity() {
    Valuation v;
    v.finite_.reset();
    return v;
  }

  bool is_infinite() const { return !finite_.has_value(); }
  long value() const {
    if (is_infinite()) throw std::logic_error("valuation is +infinity");
    return *finite_;
  }

  Valuation operator+(const Valuation& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return Valuation(*finite_ + *o.finite_);
  }
  Valuation operator-() const {
    if (is_infinite()) throw std::logic_error("cannot negate +infinity");
    return Valuation(-*finite_);
  }

  // +infinity compares greater than every integer.
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.finite_ == b.finite_;
  }
  friend bool operator<(const Valuation& a, const Valuation& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return *a.finite_ < *b.finite_;
  }
  friend bool operator!=(const Valuation& a, const Valuation& b) { return !(a == b); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

  std::string str() const { return is_infinite() ? "inf" : std::to_string(*finite_); }

 private:
  std::optional<long> finite_;
};

}  // namespace drinfeld
