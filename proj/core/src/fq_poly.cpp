#include "drinfeld/fq_poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

FqPoly::FqPoly(const FiniteField* f, std::vector<FqElem> coeffs)
    : f_(f), c_(std::move(coeffs)) {
  trim();
}

void FqPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FqPoly FqPoly::x(const FiniteField* f) { return FqPoly(f, {f->zero(), f->one()}); }

FqPoly FqPoly::constant(const FqElem& c) { return FqPoly(c.field(), {c}); }

FqPoly FqPoly::from_ints(const FiniteField* f, const std::vector<long>& c) {
  std::vector<FqElem> v;
  v.reserve(c.size());
  for (long x : c) v.push_back(f->from_int(x));
  return FqPoly(f, std::move(v));
}

FqElem FqPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return f_->zero();
  return c_[i];
}

FqElem FqPoly::lead() const {
  if (is_zero()) throw error("zero polynomial has no leading coefficient");
  return c_.back();
}

bool FqPoly::is_monic() const { return !is_zero() && lead() == f_->one(); }

FqPoly FqPoly::operator+(const FqPoly& o) const {
  std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), f_->zero());
  for (size_t i = 0; i < r.size(); ++i) {
    FqElem v = f_->zero();
    if (i < c_.size()) v = v + c_[i];
    if (i < o.c_.size()) v = v + o.c_[i];
    r[i] = v;
  }
  return FqPoly(f_, std::move(r));
}

FqPoly FqPoly::operator-(const FqPoly& o) const { return *this + (-o); }

FqPoly FqPoly::operator-() const {
  std::vector<FqElem> r(c_);
  for (auto& x : r) x = -x;
  return FqPoly(f_, std::move(r));
}

FqPoly FqPoly::operator*(const FqPoly& o) const {
  if (is_zero() || o.is_zero()) return FqPoly(f_);
  std::vector<FqElem> r(c_.size() + o.c_.size() - 1, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
  }
  return FqPoly(f_, std::move(r));
}

FqPoly FqPoly::scaled(const FqElem& c) const {
  std::vector<FqElem> r(c_);
  for (auto& x : r) x = x * c;
  return FqPoly(f_, std::move(r));
}

FqPoly FqPoly::shifted(long k) const {
  if (is_zero()) return *this;
  std::vector<FqElem> r(c_.size() + k, f_->zero());
  for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
  return FqPoly(f_, std::move(r));
}

void FqPoly::divmod(const FqPoly& a, const FqPoly& b, FqPoly& q, FqPoly& r) {
  if (b.is_zero()) throw error("polynomial division by zero");
  const FiniteField* f = a.f_;
  std::vector<FqElem> rem(a.c_);
  long db = b.degree();
  FqElem lcinv = b.lead().inverse();
  std::vector<FqElem> quot(std::max<long>(a.degree() - db + 1, 0), f->zero());
  for (long i = a.degree(); i >= db; --i) {
    if (rem[i].is_zero()) continue;
    FqElem c = rem[i] * lcinv;
    quot[i - db] = c;
    for (long j = 0; j <= db; ++j) rem[i - db + j] = rem[i - db + j] - c * b.c_[j];
  }
  q = FqPoly(f, std::move(quot));
  r = FqPoly(f, std::move(rem));
}

FqPoly FqPoly::operator/(const FqPoly& o) const {
  FqPoly q, r;
  divmod(*this, o, q, r);
  return q;
}

FqPoly FqPoly::operator%(const FqPoly& o) const {
  FqPoly q, r;
  divmod(*this, o, q, r);
  return r;
}

bool FqPoly::divides(const FqPoly& a) const { return (a % *this).is_zero(); }

FqPoly FqPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

FqPoly FqPoly::gcd(FqPoly a, FqPoly b) {
  while (!b.is_zero()) {
    FqPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FqPoly FqPoly::derivative() const {
  if (degree() < 1) return FqPoly(f_);
  std::vector<FqElem> r(c_.size() - 1, f_->zero());
  for (long i = 1; i <= degree(); ++i) {
    FqElem m = f_->from_int(i);
    r[i - 1] = c_[i] * m;
  }
  return FqPoly(f_, std::move(r));
}

FqElem FqPoly::eval(const FqElem& x) const {
  FqElem r = f_->zero();
  for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

FqPoly FqPoly::pow(long e) const {
  FqPoly r = constant(f_->one());
  FqPoly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

FqPoly FqPoly::powmod(Int e, const FqPoly& mod) const {
  FqPoly r = constant(f_->one());
  FqPoly base = *this % mod;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = (r * base) % mod;
    base = (base * base) % mod;
    e >>= 1;
  }
  return r;
}

bool FqPoly::irreducible() const {
  long d = degree();
  if (d < 1) return false;
  FqPoly xp = x(f_);
  FqPoly me = monic();
  // x^{q^d} == x (mod f), and gcd(x^{q^{d/l}} - x, f) = 1 for prime l | d
  Int q = f_->order();
  Int qd = 1;
  for (long i = 0; i < d; ++i) qd *= q;
  if (!((xp.powmod(qd, me) - xp) % me).is_zero()) return false;
  for (long l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool prime = true;
    for (long f2 = 2; f2 * f2 <= l; ++f2)
      if (l % f2 == 0) prime = false;
    if (!prime) continue;
    Int qe = 1;
    for (long i = 0; i < d / l; ++i) qe *= q;
    FqPoly g = gcd((xp.powmod(qe, me) - xp) % me, me);
    if (g.degree() != 0) return false;
  }
  return true;
}

bool FqPoly::operator<(const FqPoly& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (long i = degree(); i >= 0; --i) {
    unsigned long a = f_->index_of(coeff(i)), b = f_->index_of(o.coeff(i));
    if (a != b) return a < b;
  }
  return false;
}

std::string FqPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    FqElem c = coeff(i);
    if (c.is_zero()) continue;
    if (!first) os << "+";
    std::string cs = c.str();
    if (i == 0) {
      os << cs;
    } else {
      if (cs != "1") {
        bool composite = cs.find('+') != std::string::npos;
        os << (composite ? "(" + cs + ")" : cs) << "*";
      }
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

FqPoly FqPoly::monic_by_index(const FiniteField* f, long deg, unsigned long idx) {
  std::vector<FqElem> c(deg + 1, f->zero());
  unsigned long q = f->order_ulong();
  for (long i = 0; i < deg; ++i) {
    c[i] = f->element(idx % q);
    idx /= q;
  }
  if (idx != 0) throw error("monic polynomial index out of range");
  c[deg] = f->one();
  return FqPoly(f, std::move(c));
}

std::vector<std::pair<FqPoly, long>> factor_monic(const FqPoly& f) {
  if (f.is_zero()) throw error("cannot factor the zero polynomial");
  const FiniteField* F = f.field();
  if (!F->order_fits_ulong()) throw cap_exceeded("field too large for factorization");
  unsigned long q = F->order_ulong();
  std::vector<std::pair<FqPoly, long>> out;
  FqPoly rem = f.monic();
  FqPoly xp = FqPoly::x(F);
  for (long d = 1; 2 * d <= rem.degree(); ++d) {
    // skip degrees with no irreducible factor: gcd(x^{q^d} - x, rem)
    Int qd = 1;
    for (long i = 0; i < d; ++i) qd *= Int(q);
    FqPoly probe = FqPoly::gcd((xp.powmod(qd, rem) - xp) % rem, rem);
    if (probe.degree() < d) continue;
    unsigned long count = 1;
    for (long i = 0; i < d; ++i) count *= q;
    for (unsigned long k = 0; k < count && 2 * d <= rem.degree(); ++k) {
      FqPoly cand = FqPoly::monic_by_index(F, d, k);
      if (!cand.divides(rem)) continue;
      long mult = 0;
      while (cand.divides(rem)) {
        rem = rem / cand;
        ++mult;
      }
      out.emplace_back(cand, mult);
    }
  }
  if (rem.degree() >= 1) out.emplace_back(rem, 1);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

// Deterministic sequence of field elements used to split products of linear
// factors; cycling through all of them is guaranteed to separate any pair.
FqElem split_probe(const FiniteField* F, unsigned long k) {
  return F->element(k % F->order_ulong());
}

void collect_roots(const FqPoly& g, std::vector<FqElem>& out, unsigned long probe) {
  const FiniteField* F = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  Int Q = F->order();
  FqPoly xp = FqPoly::x(F);
  for (unsigned long k = probe;; ++k) {
    FqPoly h(F);
    if (F->p() == 2) {
      // trace polynomial of (beta x): sum of (beta x)^{2^i}, i < log2(Q).
      // An additive shift cannot separate Frobenius-conjugate roots (the
      // trace is Frobenius-invariant); the multiplicative twist can, since
      // Tr(xy) is a nondegenerate pairing.
      FqPoly twisted = xp.scaled(split_probe(F, k));
      FqPoly term = twisted % g, acc(F);
      long bits = F->degree();  // Q = 2^degree
      for (long i = 0; i < bits; ++i) {
        acc = (acc + term) % g;
        term = (term * term) % g;
      }
      h = FqPoly::gcd(acc, g);
    } else {
      FqPoly shift = xp + FqPoly::constant(split_probe(F, k));
      FqPoly w = shift.powmod((Q - 1) / 2, g) - FqPoly::constant(F->one());
      h = FqPoly::gcd(w % g, g);
    }
    if (h.degree() > 0 && h.degree() < g.degree()) {
      collect_roots(h, out, k + 1);
      collect_roots(g / h, out, k + 1);
      return;
    }
  }
}

}  // namespace

std::vector<FqElem> roots_in_field(const FqPoly& f) {
  if (f.is_zero()) throw error("cannot take roots of the zero polynomial");
  const FiniteField* F = f.field();
  FqPoly xp = FqPoly::x(F);
  FqPoly m = f.monic();
  // product of the distinct linear factors over this field
  FqPoly g = FqPoly::gcd(xp.powmod(F->order(), m) - xp, m);
  std::vector<FqElem> out;
  collect_roots(g, out, 0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {
struct EmbedCache {
  std::mutex mu;
  std::map<std::pair<const FiniteField*, const FiniteField*>, FqElem> images;
};
EmbedCache& embed_cache() {
  static EmbedCache* c = new EmbedCache;
  return *c;
}
}  // namespace

FqElem embed_generator(const FiniteField* small, const FiniteField* big) {
  if (small == big) return small->gen();
  if (small->p() != big->p() || big->degree() % small->degree() != 0)
    throw error("no embedding between these fields");
  auto& cache = embed_cache();
  std::lock_guard<std::mutex> lock(cache.mu);
  auto key = std::make_pair(small, big);
  auto it = cache.images.find(key);
  if (it != cache.images.end()) return it->second;
  // least root of small's modulus inside big
  std::vector<FqElem> mc;
  for (int32_t c : small->modulus()) mc.push_back(big->from_int(c));
  auto roots = roots_in_field(FqPoly(big, std::move(mc)));
  if (roots.empty()) throw error("embedding root not found (unreachable)");
  cache.images.emplace(key, roots.front());
  return roots.front();
}

FqElem embed(const FqElem& a, const FiniteField* big) {
  const FiniteField* small = a.field();
  if (small == big) return a;
  FqElem g = embed_generator(small, big);
  FqElem r = big->zero();
  for (size_t i = a.coeffs().size(); i-- > 0;)
    r = r * g + big->from_int(a.coeffs()[i]);
  return r;
}

FqPoly embed_poly(const FqPoly& a, const FiniteField* big) {
  std::vector<FqElem> c;
  c.reserve(a.degree() + 1);
  for (long i = 0; i <= a.degree(); ++i) c.push_back(embed(a.coeff(i), big));
  return FqPoly(big, std::move(c));
}

const FiniteField* make_field(long p, long s, const Int& cap) {
  if (s < 1) throw error("field exponent must be positive");
  Int q = ipow(p, s);
  if (q > cap) throw cap_exceeded("field size " + q.get_str() + " exceeds cap " + cap.get_str());
  return FiniteField::make(p, s);  // primality checked there
}

}  // namespace drinfeld
