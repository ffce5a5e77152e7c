#include "drinfeld/puiseux.hpp"

#include <algorithm>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

PuiseuxSeries PuiseuxSeries::zero(const FiniteField* f, Rat trunc) {
  PuiseuxSeries s;
  s.f_ = f;
  s.trunc_ = std::move(trunc);
  return s;
}

PuiseuxSeries PuiseuxSeries::monomial(const FqElem& c, const Rat& e, Rat trunc) {
  PuiseuxSeries s = zero(c.field(), std::move(trunc));
  s.insert_term(e, c);
  return s;
}

void PuiseuxSeries::insert_term(const Rat& e, const FqElem& c) {
  if (c.is_zero() || e >= trunc_) return;
  auto it = t_.find(e);
  if (it == t_.end()) {
    t_.emplace(e, c);
  } else {
    FqElem sum = it->second + c;
    if (sum.is_zero())
      t_.erase(it);
    else
      it->second = sum;
  }
}

std::optional<Rat> PuiseuxSeries::valuation() const {
  if (t_.empty()) return std::nullopt;
  return t_.begin()->first;
}

FqElem PuiseuxSeries::leading_coeff() const {
  if (t_.empty()) throw error("series has no visible terms");
  return t_.begin()->second;
}

FqElem PuiseuxSeries::coeff(const Rat& e) const {
  auto it = t_.find(e);
  return it == t_.end() ? f_->zero() : it->second;
}

PuiseuxSeries PuiseuxSeries::operator+(const PuiseuxSeries& o) const {
  if (f_ != o.f_) throw error("puiseux field mismatch");
  PuiseuxSeries r = zero(f_, std::min(trunc_, o.trunc_));
  for (const auto& [e, c] : t_) r.insert_term(e, c);
  for (const auto& [e, c] : o.t_) r.insert_term(e, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-() const {
  PuiseuxSeries r = *this;
  for (auto& [e, c] : r.t_) c = -c;
  return r;
}

PuiseuxSeries PuiseuxSeries::operator-(const PuiseuxSeries& o) const {
  return *this + (-o);
}

PuiseuxSeries PuiseuxSeries::operator*(const PuiseuxSeries& o) const {
  if (f_ != o.f_) throw error("puiseux field mismatch");
  // (A + O(u^ta))(B + O(u^tb)) = AB + O(u^{min(va + tb, vb + ta)}), bounding
  // each unknown valuation from below by the truncation order
  Rat va = t_.empty() ? trunc_ : t_.begin()->first;
  Rat vb = o.t_.empty() ? o.trunc_ : o.t_.begin()->first;
  Rat tr = std::min(Rat(va + o.trunc_), Rat(vb + trunc_));
  PuiseuxSeries r = zero(f_, tr);
  for (const auto& [e1, c1] : t_)
    for (const auto& [e2, c2] : o.t_) r.insert_term(e1 + e2, c1 * c2);
  return r;
}

PuiseuxSeries PuiseuxSeries::scaled(const FqElem& c) const {
  PuiseuxSeries r = zero(f_, trunc_);
  for (const auto& [e, x] : t_) r.insert_term(e, x * c);
  return r;
}

PuiseuxSeries PuiseuxSeries::shifted(const Rat& e) const {
  PuiseuxSeries r = zero(f_, trunc_ + e);
  for (const auto& [x, c] : t_) r.t_.emplace(x + e, c);
  return r;
}

PuiseuxSeries PuiseuxSeries::frobenius(long k) const {
  // char p: (sum c u^e + O(u^T))^{p^k} = sum c^{p^k} u^{e p^k} + O(u^{T p^k})
  Int pk = ipow(f_->p(), k);
  PuiseuxSeries r = zero(f_, Rat(trunc_ * Rat(pk)));
  for (const auto& [e, c] : t_) r.t_.emplace(Rat(e * Rat(pk)), c.pow(pk));
  return r;
}

PuiseuxSeries PuiseuxSeries::truncated(Rat t) const {
  if (t > trunc_) t = trunc_;
  PuiseuxSeries r = zero(f_, t);
  for (const auto& [e, c] : t_) {
    if (e >= t) break;
    r.t_.emplace(e, c);
  }
  return r;
}

Int PuiseuxSeries::exponent_denominator() const {
  Int l = 1;
  for (const auto& [e, c] : t_) {
    (void)c;
    l = lcm(l, Int(e.get_den()));
  }
  return l;
}

std::string PuiseuxSeries::str(const std::string& u) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : t_) {
    if (!first) os << " + ";
    std::string cs = c.str();
    os << (cs.find('+') == std::string::npos ? cs : "(" + cs + ")");
    if (e != 0) os << "*" << u << "^(" << to_string(e) << ")";
    first = false;
  }
  if (first) os << "0";
  os << " + O(" << u << "^(" << to_string(trunc_) << "))";
  return os.str();
}

}  // namespace drinfeld
