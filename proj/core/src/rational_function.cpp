#include "drinfeld/rational_function.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

Place Place::infinite(const FiniteField* f) {
  Place p;
  p.f_ = f;
  p.infinite_ = true;
  return p;
}

Place Place::finite(FqPoly h) {
  if (!h.is_monic() || !h.irreducible())
    throw error("finite place must be a monic irreducible polynomial");
  Place p;
  p.f_ = h.field();
  p.poly_ = std::move(h);
  return p;
}

const FqPoly& Place::poly() const {
  if (infinite_) throw error("infinite place has no polynomial");
  return poly_;
}

bool Place::operator==(const Place& o) const {
  if (infinite_ != o.infinite_) return false;
  return infinite_ ? f_ == o.f_ : poly_ == o.poly_;
}

bool Place::operator<(const Place& o) const {
  if (infinite_ != o.infinite_) return !infinite_;
  if (infinite_) return false;
  return poly_ < o.poly_;
}

std::string Place::str() const { return infinite_ ? "inf" : poly_.str(); }

RationalFunction::RationalFunction(FqPoly num)
    : num_(std::move(num)), den_(FqPoly::constant(num_.field()->one())) {}

RationalFunction::RationalFunction(FqPoly num, FqPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw error("zero denominator");
  reduce();
}

void RationalFunction::reduce() {
  const FiniteField* f = num_.field();
  if (num_.is_zero()) {
    den_ = FqPoly::constant(f->one());
    return;
  }
  FqPoly g = FqPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  FqElem lc = den_.lead();
  if (!(lc == f->one())) {
    FqElem inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::t(const FiniteField* f) {
  return RationalFunction(FqPoly::x(f));
}

RationalFunction RationalFunction::constant(const FqElem& c) {
  return RationalFunction(FqPoly::constant(c));
}

RationalFunction RationalFunction::zero(const FiniteField* f) {
  return RationalFunction(FqPoly(f));
}

RationalFunction RationalFunction::one(const FiniteField* f) {
  return RationalFunction(FqPoly::constant(f->one()));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw error("division by the zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw error("cannot invert zero");
    return RationalFunction(den_, num_).pow(-e);
  }
  RationalFunction r = one(field());
  RationalFunction base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

namespace {
FqPoly stretch(const FqPoly& a, const Int& k) {
  // a(t^k); coefficients in F_q are fixed by the q-power Frobenius, so for
  // k = q^i this IS the q^i-th power of a.
  if (a.is_zero()) return a;
  if (!k.fits_slong_p()) throw cap_exceeded("exponent stretch too large");
  long kk = k.get_si();
  std::vector<FqElem> c(a.degree() * kk + 1, a.field()->zero());
  for (long i = 0; i <= a.degree(); ++i) c[i * kk] = a.coeff(i);
  return FqPoly(a.field(), std::move(c));
}
}  // namespace

RationalFunction RationalFunction::pow_q(long i) const {
  Int k = field()->order();
  Int e = 1;
  for (long j = 0; j < i; ++j) e *= k;
  return RationalFunction(stretch(num_, e), stretch(den_, e));
}

bool RationalFunction::operator==(const RationalFunction& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_.degree() == 0) return num_.str(var);
  std::string n = num_.str(var), d = den_.str(var);
  auto wrap = [](const std::string& s) {
    return s.find_first_of("+-*^") == std::string::npos ? s : "(" + s + ")";
  };
  return wrap(n) + "/" + wrap(d);
}

Valuation place_valuation(const RationalFunction& x, const Place& v) {
  if (x.is_zero()) return Valuation::infinity();
  if (v.is_infinite()) return Valuation(x.den().degree() - x.num().degree());
  auto count = [&](FqPoly f) {
    long k = 0;
    FqPoly q, r;
    for (;;) {
      FqPoly::divmod(f, v.poly(), q, r);
      if (!r.is_zero()) break;
      f = q;
      ++k;
    }
    return k;
  };
  return Valuation(count(x.num()) - count(x.den()));
}

std::vector<Place> bad_places(const RationalFunction& j) {
  std::vector<Place> out;
  if (!j.is_zero()) {
    for (const FqPoly* part : {&j.num(), &j.den()}) {
      if (part->degree() < 1) continue;
      for (const auto& [h, mult] : factor_monic(*part)) {
        (void)mult;
        Place p = Place::finite(h);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
      }
    }
    std::sort(out.begin(), out.end());
  }
  out.push_back(Place::infinite(j.field()));
  return out;
}

}  // namespace drinfeld
