#include "drinfeld/drinfeld_module.hpp"

#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

TwistedPolynomial::TwistedPolynomial(const FiniteField* f,
                                     std::vector<RationalFunction> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  trim();
}

void TwistedPolynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

TwistedPolynomial TwistedPolynomial::identity(const FiniteField* f) {
  return TwistedPolynomial(f, {RationalFunction::one(f)});
}

RationalFunction TwistedPolynomial::coeff(long i) const {
  if (i < 0 || i > tau_degree()) return RationalFunction::zero(f_);
  return c_[i];
}

TwistedPolynomial TwistedPolynomial::operator+(const TwistedPolynomial& o) const {
  std::vector<RationalFunction> r(std::max(c_.size(), o.c_.size()),
                                  RationalFunction::zero(f_));
  for (size_t i = 0; i < r.size(); ++i) {
    if (i < c_.size()) r[i] = r[i] + c_[i];
    if (i < o.c_.size()) r[i] = r[i] + o.c_[i];
  }
  return TwistedPolynomial(f_, std::move(r));
}

TwistedPolynomial TwistedPolynomial::operator-(const TwistedPolynomial& o) const {
  return *this + o.scaled(-RationalFunction::one(f_));
}

TwistedPolynomial TwistedPolynomial::scaled(const RationalFunction& c) const {
  std::vector<RationalFunction> r(c_);
  for (auto& x : r) x = x * c;
  return TwistedPolynomial(f_, std::move(r));
}

TwistedPolynomial TwistedPolynomial::operator*(const TwistedPolynomial& o) const {
  if (is_zero() || o.is_zero()) return TwistedPolynomial(f_);
  // tau^i c = c^{q^i} tau^i
  std::vector<RationalFunction> r(c_.size() + o.c_.size() - 1,
                                  RationalFunction::zero(f_));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      r[i + j] = r[i + j] + c_[i] * o.c_[j].pow_q(static_cast<long>(i));
    }
  }
  return TwistedPolynomial(f_, std::move(r));
}

std::string TwistedPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = 0; i <= tau_degree(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].str() << ")";
    if (i > 0) os << "*tau^" << i;
    first = false;
  }
  return os.str();
}

DrinfeldModule::DrinfeldModule(const FiniteField* f, RationalFunction a1,
                               RationalFunction a2)
    : f_(f), a1_(std::move(a1)), a2_(std::move(a2)) {
  if (a2_.is_zero()) throw error("a2 must be nonzero (rank 2)");
}

TwistedPolynomial DrinfeldModule::phi_t() const {
  return TwistedPolynomial(f_, {RationalFunction::t(f_), a1_, a2_});
}

TwistedPolynomial DrinfeldModule::phi_of(const FqPoly& a) const {
  if (a.is_zero()) throw error("phi_a is undefined for a = 0");
  // Horner expansion of a in t: phi is a ring morphism, so
  // phi_a = sum c_k phi_t^k with constants acting as scalars.
  TwistedPolynomial pt = phi_t();
  TwistedPolynomial acc(f_);
  for (long k = a.degree(); k >= 0; --k) {
    acc = acc * pt;
    if (!a.coeff(k).is_zero()) {
      RationalFunction c = RationalFunction::constant(a.coeff(k));
      acc = acc + TwistedPolynomial::identity(f_).scaled(c);
    }
  }
  return acc;
}

RationalFunction DrinfeldModule::j_invariant() const {
  if (!f_->order_fits_ulong()) throw cap_exceeded("field too large");
  long q = static_cast<long>(f_->order_ulong());
  return a1_.pow(q + 1) / a2_;
}

}  // namespace drinfeld
