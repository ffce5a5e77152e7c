#include "drinfeld/valtower.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

ValuationProfile ValuationProfile::make(long p, long s, PlaceKind kind, long v0,
                                        Valuation v1, long v2) {
  ValuationProfile pr;
  pr.p = p;
  pr.s = s;
  Int q = ipow(p, s);
  if (!q.fits_slong_p()) throw cap_exceeded("q too large for a profile");
  pr.q = q.get_si();
  pr.kind = kind;
  pr.v0 = v0;
  pr.v1 = v1;
  pr.v2 = v2;
  pr.vj = v1.is_infinite() ? Valuation::infinity()
                           : Valuation(v1.value() * (pr.q + 1) - v2);
  pr.validate();
  return pr;
}

void ValuationProfile::validate() const {
  switch (kind) {
    case PlaceKind::Infinite:
      if (v0 >= 0) throw error("infinite place requires v0 < 0");
      break;
    case PlaceKind::FiniteCoprime:
      if (v0 != 0) throw error("finite coprime place requires v0 = 0");
      break;
    case PlaceKind::AboveUniformizer:
      if (v0 <= 0) throw error("place above the uniformizer requires v0 > 0");
      break;
  }
  Valuation expect = v1.is_infinite() ? Valuation::infinity()
                                      : Valuation(v1.value() * (q + 1) - v2);
  if (vj != expect) throw error("vj inconsistent with v1, v2");
}

std::string TowerCase::str() const {
  switch (tag) {
    case CaseTag::InfWild:
      return "InfWild(m=" + std::to_string(m) + ")";
    case CaseTag::InfTame:
      return "InfTame";
    case CaseTag::FinWild:
      return "FinWild";
    case CaseTag::FinTame:
      return "FinTame";
    case CaseTag::AboveTPos:
      return "AboveTPos(m=" + std::to_string(m) + ")";
    case CaseTag::AboveTNonpos:
      return "AboveTNonpos";
    case CaseTag::AboveTTame:
      return "AboveTTame";
  }
  return "?";
}

TowerCase classify(const ValuationProfile& pr) {
  pr.validate();
  long q = pr.q;
  switch (pr.kind) {
    case PlaceKind::Infinite: {
      if (pr.vj.is_infinite() || Int(pr.vj.value()) >= Int(pr.v0) * q)
        return {CaseTag::InfTame, 0};
      // vj in (v0 q^{m+1}, v0 q^m]
      long m = 1;
      while (Int(pr.vj.value()) <= Int(pr.v0) * ipow(q, m + 1)) ++m;
      return {CaseTag::InfWild, m};
    }
    case PlaceKind::FiniteCoprime: {
      if (pr.vj.is_infinite() || pr.vj.value() >= 0) return {CaseTag::FinTame, 0};
      return {CaseTag::FinWild, 0};
    }
    case PlaceKind::AboveUniformizer: {
      if (pr.vj.is_infinite() || Int(pr.vj.value()) >= Int(pr.v0) * q)
        return {CaseTag::AboveTTame, 0};
      if (pr.vj.value() <= 0) return {CaseTag::AboveTNonpos, 0};
      // vj in [v0/q^{m-1}, v0/q^{m-2})
      long m = 1;
      while (Int(pr.vj.value()) * ipow(q, m - 1) < Int(pr.v0)) ++m;
      return {CaseTag::AboveTPos, m};
    }
  }
  throw error("unreachable");
}

namespace {

void require_consistent(const TowerCase& c, const ValuationProfile& pr) {
  TowerCase expect = classify(pr);
  if (!(expect == c))
    throw inconsistent_case("case " + c.str() + " does not match profile (expected " +
                            expect.str() + ")");
}

Rat qpow(long q, long e) { return Rat(ipow(q, e)); }

}  // namespace

Rat xi_val(const TowerCase& c, const ValuationProfile& pr, long i) {
  if (i == 0) throw error("index i must be nonzero");
  require_consistent(c, pr);
  long n = std::abs(i);
  long q = pr.q;
  Rat v0(pr.v0), v2(pr.v2);
  Rat v1 = pr.v1.is_infinite() ? Rat(0) : Rat(pr.v1.value());  // unused when infinite

  switch (c.tag) {
    case CaseTag::InfWild: {
      if (i < 0) return -(v0 * (n - 1) + (v1 - v0) / (q - 1));
      if (n <= c.m) return -((v2 + v1 * (qpow(q, n) - q - 1)) / ((q - 1) * qpow(q, n)));
      return -(v0 * (n - c.m) +
               (v2 + v1 * (qpow(q, c.m) - q - 1)) / ((q - 1) * qpow(q, c.m)));
    }
    case CaseTag::InfTame:
      return -(v0 * (n - 1) + (v2 - v0) / (qpow(q, 2) - 1));
    case CaseTag::FinWild: {
      if (i < 0) return -v1 / (q - 1);
      return -((v2 + v1 * (qpow(q, n) - q - 1)) / ((q - 1) * qpow(q, n)));
    }
    case CaseTag::FinTame:
      return -v2 / (qpow(q, 2) - 1);
    case CaseTag::AboveTPos: {
      if (i < 0) {
        if (n <= c.m)
          return -((-v0 + v1 * qpow(q, n - 1)) / ((q - 1) * qpow(q, n - 1)));
        Rat top = -v0 + v1 * qpow(q, c.m - 1) +
                  v2 * qpow(q, c.m - 1) * (qpow(q, 2 * n - 2 * c.m) - 1) / (q + 1);
        return -(top / ((q - 1) * qpow(q, 2 * n - c.m - 1)));
      }
      return -((-v1 + v2 * (qpow(q, 2 * n - 1) + 1) / (q + 1)) /
               ((q - 1) * qpow(q, 2 * n - 1)));
    }
    case CaseTag::AboveTNonpos: {
      if (i < 0) return -((-v0 + v1 * qpow(q, n - 1)) / ((q - 1) * qpow(q, n - 1)));
      return -((v2 + v1 * (qpow(q, n) - q - 1)) / ((q - 1) * qpow(q, n)));
    }
    case CaseTag::AboveTTame:
      return -((-v0 + v2 * qpow(q, 2 * n - 2)) / ((qpow(q, 2) - 1) * qpow(q, 2 * n - 2)));
  }
  throw error("unreachable");
}

std::vector<OrderingEntry> ordering(const TowerCase& c, const ValuationProfile& pr,
                                    long n) {
  if (n < 1) throw error("n must be positive");
  std::vector<OrderingEntry> entries;
  entries.reserve(2 * n);
  for (long k = 1; k <= n; ++k) entries.push_back({-k, xi_val(c, pr, -k), false});
  for (long k = 1; k <= n; ++k) entries.push_back({k, xi_val(c, pr, k), false});
  std::stable_sort(entries.begin(), entries.end(),
                   [](const OrderingEntry& a, const OrderingEntry& b) {
                     return a.value > b.value;
                   });
  for (size_t k = 0; k + 1 < entries.size(); ++k)
    entries[k].tied_with_next = entries[k].value == entries[k + 1].value;
  return entries;
}

PolygonShape step_polygon(const TowerCase& c, const ValuationProfile& pr, long i) {
  if (i == 0) throw error("index i must be nonzero");
  require_consistent(c, pr);
  long n = std::abs(i);
  long q = pr.q;
  long q2 = q * q;
  auto shape = [&](std::initializer_list<long> xs) {
    return PolygonShape{std::vector<long>(xs)};
  };
  switch (c.tag) {
    case CaseTag::InfWild:
      if (i < 0) return shape({0, 1, q, q2});
      return n <= c.m - 1 ? shape({0, q, q2}) : shape({0, 1, q, q2});
    case CaseTag::InfTame:
      return shape({0, 1, q2});
    case CaseTag::FinWild:
      return shape({0, q, q2});
    case CaseTag::FinTame:
      return shape({0, q2});
    case CaseTag::AboveTPos:
      if (i < 0) return n <= c.m - 1 ? shape({0, q, q2}) : shape({0, q2});
      return shape({0, q2});
    case CaseTag::AboveTNonpos:
      if (i < 0) return shape({0, q, q2});
      // vj < 0: two segments; vj = 0: one segment
      return pr.vj.value() < 0 ? shape({0, q, q2}) : shape({0, q2});
    case CaseTag::AboveTTame:
      return shape({0, q2});
  }
  throw error("unreachable");
}

}  // namespace drinfeld
