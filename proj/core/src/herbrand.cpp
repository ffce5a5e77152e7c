#include "drinfeld/herbrand.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace drinfeld {

PiecewiseLinear::PiecewiseLinear(std::vector<Rat> breaks, std::vector<Rat> slopes)
    : breaks_(std::move(breaks)), slopes_(std::move(slopes)) {
  if (slopes_.size() != breaks_.size() + 1)
    throw error("piecewise-linear: need one more slope than breakpoints");
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (breaks_[i] <= 0) throw error("piecewise-linear breakpoints must be positive");
    if (i > 0 && breaks_[i] <= breaks_[i - 1])
      throw error("piecewise-linear breakpoints must increase");
  }
  for (const Rat& s : slopes_)
    if (s <= 0) throw error("piecewise-linear slopes must be positive");
  canonicalize();
}

void PiecewiseLinear::canonicalize() {
  std::vector<Rat> nb, ns;
  ns.push_back(slopes_[0]);
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (slopes_[i + 1] == ns.back()) continue;  // merge equal slopes
    nb.push_back(breaks_[i]);
    ns.push_back(slopes_[i + 1]);
  }
  breaks_ = std::move(nb);
  slopes_ = std::move(ns);
}

bool PiecewiseLinear::is_convex() const {
  for (size_t i = 0; i + 1 < slopes_.size(); ++i)
    if (slopes_[i] > slopes_[i + 1]) return false;
  return true;
}

Rat PiecewiseLinear::eval(const Rat& y) const {
  if (y <= 0) return y;
  Rat x(0), v(0);
  for (size_t i = 0; i < breaks_.size(); ++i) {
    if (y <= breaks_[i]) return v + slopes_[i] * (y - x);
    v += slopes_[i] * (breaks_[i] - x);
    x = breaks_[i];
  }
  return v + slopes_.back() * (y - x);
}

PiecewiseLinear PiecewiseLinear::inverse() const {
  std::vector<Rat> nb;
  nb.reserve(breaks_.size());
  for (const Rat& b : breaks_) nb.push_back(eval(b));
  std::vector<Rat> ns;
  ns.reserve(slopes_.size());
  for (const Rat& s : slopes_) ns.push_back(1 / s);
  return PiecewiseLinear(std::move(nb), std::move(ns));
}

std::string PiecewiseLinear::str() const {
  std::ostringstream os;
  os << "[slope " << to_string(slopes_[0]) << " from 0";
  for (size_t i = 0; i < breaks_.size(); ++i)
    os << "; slope " << to_string(slopes_[i + 1]) << " from " << to_string(breaks_[i]);
  os << "]";
  return os.str();
}

PiecewiseLinear compose(const PiecewiseLinear& outer, const PiecewiseLinear& inner) {
  // breakpoints: inner's, plus preimages of outer's under inner
  std::vector<Rat> xs(inner.breaks());
  PiecewiseLinear inner_inv = inner.inverse();
  for (const Rat& b : outer.breaks()) xs.push_back(inner_inv.eval(b));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

  auto slope_at = [](const PiecewiseLinear& f, const Rat& x0) {
    // slope of f on the piece starting at x0 (x0 >= 0 a piece start)
    size_t i = 0;
    while (i < f.breaks().size() && f.breaks()[i] <= x0) ++i;
    return f.slopes()[i];
  };

  std::vector<Rat> slopes;
  Rat x0(0);
  for (size_t i = 0; i <= xs.size(); ++i) {
    slopes.push_back(slope_at(inner, x0) * slope_at(outer, inner.eval(x0)));
    if (i < xs.size()) x0 = xs[i];
  }
  return PiecewiseLinear(std::move(xs), std::move(slopes));
}

PiecewiseLinear invert(const PiecewiseLinear& f) { return f.inverse(); }

PiecewiseLinear psi_artin_schreier(long q, const Rat& r) {
  if (r <= 0) throw error("Artin-Schreier break must be positive");
  return PiecewiseLinear({r}, {Rat(1), Rat(q)});
}

PiecewiseLinear psi_tame(long e, long p) {
  if (e < 1) throw error("tame index must be positive");
  if (e % p == 0) throw error("tame index divisible by the characteristic");
  if (e == 1) return PiecewiseLinear();
  return PiecewiseLinear({}, {Rat(e)});
}

std::pair<long, bool> heuristic_E(const ValuationProfile& pr, const TowerCase& c) {
  if (!c.is_wild()) throw inconsistent_case("heuristic_E needs a wild case");
  Rat vm = xi_val(c, pr, -1);
  Rat vp = xi_val(c, pr, 1);
  Int l = lcm(vm.get_den(), vp.get_den());
  Int q(pr.q);
  if (!mpz_divisible_p(l.get_mpz_t(), q.get_mpz_t()))
    throw unsupported_range("q does not divide lcm of valuation denominators (p | vj?)");
  Int e = l / q;
  if (!e.fits_slong_p()) throw cap_exceeded("heuristic E too large");
  return {std::max(1L, e.get_si()), false};
}

namespace {

// Shared range checks of the ramification theorems (hypothesis (4.1) shape).
void check_wild_range(const TowerCase& c, const ValuationProfile& pr) {
  long vj = pr.vj.value();
  if (vj % pr.p == 0)
    throw unsupported_range("p divides v(j); the wild theory does not apply");
  if (c.tag == CaseTag::InfWild) {
    // vj < v0 q - q + 1 required; [v0 q - q + 1, v0 q) is the open gap
    if (Int(vj) >= Int(pr.v0) * pr.q - pr.q + 1)
      throw unsupported_range("v(j) in the gap [v0 q - q + 1, v0 q)");
  }
}

std::vector<Rat> infinite_breaks(const ValuationProfile& pr, long n, long E) {
  // r_i = E (-vj + v0 q^i) / (q - 1), i = 1..n (decreasing in i)
  std::vector<Rat> r;
  r.reserve(n);
  for (long i = 1; i <= n; ++i)
    r.push_back(Rat(E) * (Rat(-pr.vj.value()) + Rat(pr.v0) * Rat(ipow(pr.q, i))) /
                Rat(pr.q - 1));
  return r;
}

long tame_index_from_valuation(const TowerCase& c, const ValuationProfile& pr) {
  Rat v = xi_val(c, pr, 1);
  Int den = v.get_den();
  if (!den.fits_slong_p()) throw cap_exceeded("tame index too large");
  return den.get_si();
}

}  // namespace

PiecewiseLinear psi_tower(const TowerCase& c, const ValuationProfile& pr, long n,
                          long E) {
  if (n < 1) throw error("n must be positive");
  switch (c.tag) {
    case CaseTag::InfTame:
    case CaseTag::FinTame:
      return psi_tame(tame_index_from_valuation(c, pr), pr.p);
    case CaseTag::InfWild: {
      check_wild_range(c, pr);
      long depth = std::min(n, c.m);  // K_n = K_m for n >= m
      std::vector<Rat> r = infinite_breaks(pr, depth, E);
      std::vector<Rat> breaks, slopes;
      slopes.push_back(Rat(E));
      for (long j = depth; j >= 1; --j) {
        breaks.push_back(r[j - 1] / E);
        slopes.push_back(Rat(E) * Rat(ipow(pr.q, depth - j + 1)));
      }
      return PiecewiseLinear(std::move(breaks), std::move(slopes));
    }
    case CaseTag::FinWild: {
      check_wild_range(c, pr);
      Rat r = Rat(E) * Rat(-pr.vj.value()) / Rat(pr.q - 1);
      return PiecewiseLinear({r / E}, {Rat(E), Rat(E) * Rat(ipow(pr.q, n))});
    }
    default:
      throw inconsistent_case("no psi theory at places above the uniformizer");
  }
}

TowerBreaks tower_breaks(const TowerCase& c, const ValuationProfile& pr, long n,
                         long E, bool e_exact) {
  if (n < 1) throw error("n must be positive");
  TowerBreaks tb;
  tb.E = E;
  tb.exact_E = e_exact;
  switch (c.tag) {
    case CaseTag::InfTame:
    case CaseTag::FinTame:
      tb.E = tame_index_from_valuation(c, pr);
      return tb;
    case CaseTag::InfWild:
      check_wild_range(c, pr);
      tb.r_list = infinite_breaks(pr, std::min(n, c.m), E);
      return tb;
    case CaseTag::FinWild: {
      check_wild_range(c, pr);
      Rat r = Rat(E) * Rat(-pr.vj.value()) / Rat(pr.q - 1);
      tb.r_list.assign(n, r);
      return tb;
    }
    default:
      throw inconsistent_case("no psi theory at places above the uniformizer");
  }
}

}  // namespace drinfeld
