#include "drinfeld/finite_field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

// --- dense polynomial arithmetic over F_p on raw coefficient vectors ---
// little-endian, not necessarily normalized

using PVec = std::vector<int32_t>;

int pdeg(const PVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

PVec ptrim(PVec a) {
  a.resize(pdeg(a) + 1);
  return a;
}

PVec pmul(const PVec& a, const PVec& b, long p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<int32_t>((r[i + j] + static_cast<int64_t>(a[i]) * b[j]) % p);
  }
  return ptrim(r);
}

// remainder of a modulo monic m
PVec pmod(PVec a, const PVec& m, long p) {
  int dm = pdeg(m);
  for (int i = pdeg(a); i >= dm; --i) {
    int64_t c = a[i];
    if (c == 0) continue;
    for (int j = 0; j <= dm; ++j) {
      int64_t v = a[i - dm + j] - c * m[j];
      a[i - dm + j] = static_cast<int32_t>(((v % p) + p) % p);
    }
  }
  a.resize(std::max(dm, 1));
  return ptrim(a);
}

PVec pgcd(PVec a, PVec b, long p) {
  a = ptrim(a);
  b = ptrim(b);
  while (pdeg(b) >= 0) {
    // make b monic before reducing
    int db = pdeg(b);
    int64_t lc = b[db], inv = 1;
    // Fermat inverse; p is prime
    int64_t e = p - 2, base = lc % p;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    PVec bm(b);
    for (auto& c : bm) c = static_cast<int32_t>(c * inv % p);
    PVec r = pmod(a, bm, p);
    a = b;
    b = r;
  }
  return a;
}

PVec ppowmod(PVec base, Int e, const PVec& m, long p) {
  PVec r{1};
  base = pmod(std::move(base), m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_small(long p) {
  if (p < 2) return false;
  for (long f = 2; f * f <= p; ++f)
    if (p % f == 0) return false;
  return true;
}

// Irreducibility of a monic degree-d polynomial over F_p:
// x^{p^d} == x (mod f) and gcd(x^{p^{d/l}} - x, f) = 1 for every prime l | d.
bool irreducible_fp(const PVec& f, long p) {
  int d = pdeg(f);
  if (d < 1) return false;
  PVec x{0, 1};
  Int pd = ipow(p, d);
  PVec xq = ppowmod(x, pd, f, p);
  PVec diff(xq);
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = static_cast<int32_t>(((diff[1] - 1) % p + p) % p);
  if (pdeg(ptrim(diff)) >= 0) return false;
  for (long l = 2; l <= d; ++l) {
    if (d % l != 0) continue;
    bool lprime = is_prime_small(l);
    if (!lprime) continue;
    PVec xe = ppowmod(x, ipow(p, d / l), f, p);
    PVec g(xe);
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = static_cast<int32_t>(((g[1] - 1) % p + p) % p);
    if (pdeg(pgcd(ptrim(g), f, p)) != 0) return false;
  }
  return true;
}

// Least monic irreducible of degree d over F_p, ordered by the integer
// sum c_i p^i of the non-leading coefficients.
PVec least_irreducible(long p, long d) {
  if (d == 1) return PVec{0, 1};  // x itself; F_p[x]/(x) = F_p
  Int count = ipow(p, d);
  for (Int k = 0; k < count; ++k) {
    PVec f(d + 1, 0);
    Int rest = k;
    for (long i = 0; i < d; ++i) {
      f[i] = static_cast<int32_t>(mpz_fdiv_ui(rest.get_mpz_t(), p));
      rest /= p;
    }
    f[d] = 1;
    if (irreducible_fp(f, p)) return f;
  }
  throw error("no irreducible polynomial found (unreachable)");
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<long, long>, std::unique_ptr<FiniteField>> fields;
};

Registry& registry() {
  static Registry* r = new Registry;
  return *r;
}

}  // namespace

const FiniteField* FiniteField::make(long p, long d) {
  if (!is_prime_small(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
  if (d < 1) throw error("field degree must be positive");
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_pair(p, d);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();
  auto f = std::unique_ptr<FiniteField>(new FiniteField(p, d, least_irreducible(p, d)));
  const FiniteField* ptr = f.get();
  reg.fields.emplace(key, std::move(f));
  return ptr;
}

FiniteField::FiniteField(long p, long d, std::vector<int32_t> modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
  order_ = ipow(p, d);
  order_fits_ulong_ = order_.fits_ulong_p();
  if (order_fits_ulong_) order_ul_ = order_.get_ui();
  // reduction rows for x^k, k = d .. 2d-2
  red_.resize(d_ > 1 ? d_ - 1 : 0);
  PVec cur(modulus_.begin(), modulus_.end() - 1);  // x^d = -tail
  for (auto& c : cur) c = static_cast<int32_t>((p_ - c) % p_);
  cur.resize(d_, 0);
  for (long k = 0; k + d_ <= 2 * d_ - 2; ++k) {
    red_[k] = cur;
    // multiply by x and reduce once
    PVec nxt(d_, 0);
    int32_t top = cur[d_ - 1];
    for (long i = d_ - 1; i > 0; --i) nxt[i] = cur[i - 1];
    nxt[0] = 0;
    if (top != 0) {
      for (long i = 0; i < d_; ++i) {
        int64_t v = nxt[i] - static_cast<int64_t>(top) * modulus_[i];
        nxt[i] = static_cast<int32_t>(((v % p_) + p_) % p_);
      }
    }
    cur = nxt;
  }
}

FqElem FiniteField::zero() const { return FqElem(this, std::vector<int32_t>(d_, 0)); }

FqElem FiniteField::one() const { return from_int(1); }

FqElem FiniteField::from_int(long v) const {
  std::vector<int32_t> c(d_, 0);
  c[0] = static_cast<int32_t>(((v % p_) + p_) % p_);
  if (d_ == 1 && modulus_[0] == 0) {
    // modulus is x: nothing more to do, constants already reduced
  }
  return FqElem(this, std::move(c));
}

FqElem FiniteField::gen() const {
  std::vector<int32_t> c(d_, 0);
  if (d_ > 1) c[1] = 1;
  return FqElem(this, std::move(c));
}

FqElem FiniteField::from_coeffs(std::vector<int32_t> c) const {
  if (static_cast<long>(c.size()) > d_)
    throw error("coefficient vector longer than field degree");
  c.resize(d_, 0);
  for (auto& x : c) x = static_cast<int32_t>(((x % p_) + p_) % p_);
  return FqElem(this, std::move(c));
}

FqElem FiniteField::element(unsigned long k) const {
  std::vector<int32_t> c(d_);
  for (long i = 0; i < d_; ++i) {
    c[i] = static_cast<int32_t>(k % p_);
    k /= p_;
  }
  if (k != 0) throw error("element index out of range");
  return FqElem(this, std::move(c));
}

unsigned long FiniteField::index_of(const FqElem& e) const {
  unsigned long k = 0;
  for (long i = d_ - 1; i >= 0; --i) k = k * p_ + e.coeffs()[i];
  return k;
}

std::vector<int32_t> FiniteField::mul_raw(const std::vector<int32_t>& a,
                                          const std::vector<int32_t>& b) const {
  std::vector<int64_t> conv(2 * d_ - 1, 0);
  for (long i = 0; i < d_; ++i) {
    if (a[i] == 0) continue;
    for (long j = 0; j < d_; ++j) conv[i + j] += static_cast<int64_t>(a[i]) * b[j];
  }
  std::vector<int32_t> r(d_, 0);
  for (long i = 0; i < d_; ++i) r[i] = static_cast<int32_t>(conv[i] % p_);
  for (long k = d_; k <= 2 * d_ - 2; ++k) {
    int64_t c = conv[k] % p_;
    if (c == 0) continue;
    const auto& row = red_[k - d_];
    for (long i = 0; i < d_; ++i)
      r[i] = static_cast<int32_t>((r[i] + c * row[i]) % p_);
  }
  return r;
}

std::vector<int32_t> FiniteField::inv_raw(const std::vector<int32_t>& a) const {
  // extended Euclid in F_p[x] against the modulus
  PVec r0(modulus_), r1(a);
  r1 = ptrim(r1);
  if (pdeg(r1) < 0) throw error("division by zero in finite field");
  PVec s0{}, s1{1};
  while (pdeg(r1) > 0) {
    // divide r0 by r1
    PVec q(pdeg(r0) - pdeg(r1) + 1, 0);
    PVec rem(r0);
    int d1 = pdeg(r1);
    int64_t lc = r1[d1];
    int64_t lcinv = 1, e = p_ - 2, base = lc;
    while (e) {
      if (e & 1) lcinv = lcinv * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    for (int i = pdeg(rem); i >= d1; --i) {
      int64_t c = rem[i] % p_;
      if (c == 0) continue;
      int64_t f = c * lcinv % p_;
      q[i - d1] = static_cast<int32_t>(f);
      for (int j = 0; j <= d1; ++j) {
        int64_t v = rem[i - d1 + j] - f * r1[j];
        rem[i - d1 + j] = static_cast<int32_t>(((v % p_) + p_) % p_);
      }
    }
    rem = ptrim(rem);
    // s_{k+1} = s_{k-1} - q s_k
    PVec qs = pmul(q, s1, p_);
    PVec s2(std::max(s0.size(), qs.size()), 0);
    for (size_t i = 0; i < s2.size(); ++i) {
      int64_t v = (i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0);
      s2[i] = static_cast<int32_t>(((v % p_) + p_) % p_);
    }
    r0 = r1;
    r1 = rem;
    s0 = s1;
    s1 = ptrim(s2);
  }
  if (pdeg(r1) != 0) throw error("element not invertible (modulus not irreducible?)");
  int64_t c = r1[0];
  int64_t cinv = 1, e = p_ - 2, base = c;
  while (e) {
    if (e & 1) cinv = cinv * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  PVec res = s1;
  for (auto& x : res) x = static_cast<int32_t>(x * cinv % p_);
  res.resize(d_, 0);
  return res;
}

std::string FiniteField::to_string(const FqElem& e, const std::string& gen) const {
  if (d_ == 1) return std::to_string(e.coeffs()[0]);
  std::ostringstream os;
  bool first = true;
  for (long i = d_ - 1; i >= 0; --i) {
    int32_t c = e.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << "+";
    if (i == 0) {
      os << c;
    } else {
      if (c != 1) os << c << "*";
      os << gen;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

FqElem::FqElem(const FiniteField* f, std::vector<int32_t> c) : f_(f), c_(std::move(c)) {}

bool FqElem::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

FqElem FqElem::operator+(const FqElem& o) const {
  if (f_ != o.f_) throw error("finite field mismatch");
  std::vector<int32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = static_cast<int32_t>((c_[i] + o.c_[i]) % f_->p_);
  return FqElem(f_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const { return *this + (-o); }

FqElem FqElem::operator-() const {
  std::vector<int32_t> r(c_.size());
  for (size_t i = 0; i < c_.size(); ++i)
    r[i] = static_cast<int32_t>((f_->p_ - c_[i]) % f_->p_);
  return FqElem(f_, std::move(r));
}

FqElem FqElem::operator*(const FqElem& o) const {
  if (f_ != o.f_) throw error("finite field mismatch");
  return FqElem(f_, f_->mul_raw(c_, o.c_));
}

FqElem FqElem::operator/(const FqElem& o) const { return *this * o.inverse(); }

FqElem FqElem::inverse() const { return FqElem(f_, f_->inv_raw(c_)); }

FqElem FqElem::pow(const Int& e) const {
  if (e < 0) return inverse().pow(-e);
  FqElem base = *this, r = f_->one();
  Int n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

FqElem FqElem::frobenius(long k) const { return pow(ipow(f_->p_, k)); }

FqElem FqElem::pth_root(long k) const {
  // Frobenius has order d; x^{1/p^k} = x^{p^{d-k mod d}}
  long d = f_->degree();
  long e = ((d - (k % d)) % d + d) % d;
  return frobenius(e);
}

bool FqElem::operator==(const FqElem& o) const { return f_ == o.f_ && c_ == o.c_; }

bool FqElem::operator<(const FqElem& o) const {
  for (size_t i = c_.size(); i-- > 0;)
    if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
  return false;
}

std::string FqElem::str(const std::string& gen) const { return f_->to_string(*this, gen); }

}  // namespace drinfeld
