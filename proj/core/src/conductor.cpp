#include "drinfeld/conductor.hpp"

#include "drinfeld/errors.hpp"

namespace drinfeld {

ValuationProfile profile_at(const DrinfeldModule& m, const Place& v, bool coprime_pi) {
  const FiniteField* f = m.field();
  long p = f->p(), s = f->degree();
  RationalFunction t = RationalFunction::t(f);
  RationalFunction pi = t;
  PlaceKind kind = PlaceKind::FiniteCoprime;
  if (v.is_infinite()) {
    kind = PlaceKind::Infinite;
  } else if (place_valuation(t, v).value() > 0) {
    // the place divides t
    if (coprime_pi) {
      pi = t - RationalFunction::one(f);
      kind = PlaceKind::FiniteCoprime;
    } else {
      kind = PlaceKind::AboveUniformizer;
    }
  }
  Valuation v0 = place_valuation(pi, v);
  Valuation v1 = place_valuation(m.a1(), v);
  Valuation v2 = place_valuation(m.a2(), v);
  return ValuationProfile::make(p, s, kind, v0.value(), v1, v2.value());
}

LocalConductorResult local_conductor(const ValuationProfile& pr) {
  pr.validate();
  long q = pr.q;
  if (pr.kind == PlaceKind::AboveUniformizer)
    throw inconsistent_case("re-profile places above the uniformizer with a coprime pi");
  if (pr.kind == PlaceKind::Infinite) {
    if (pr.vj.is_infinite() || Int(pr.vj.value()) >= Int(pr.v0) * q)
      return LocalConductorResult::ok(Rat(0));
    long vj = pr.vj.value();
    if (vj % pr.p == 0)
      return LocalConductorResult::unsupported("p divides v(j)");
    if (Int(vj) >= Int(pr.v0) * q - q + 1)
      return LocalConductorResult::unsupported("v(j) in the gap [v0 q - q + 1, v0 q)");
    return LocalConductorResult::ok((Rat(-vj) + Rat(pr.v0) * q) / Rat(q - 1));
  }
  // finite coprime place
  if (pr.vj.is_infinite() || pr.vj.value() >= 0)
    return LocalConductorResult::ok(Rat(0));
  long vj = pr.vj.value();
  if (vj % pr.p == 0) return LocalConductorResult::unsupported("p divides v(j) < 0");
  return LocalConductorResult::ok(Rat(-vj) / Rat(q - 1));
}

Rat conductor_from_filtration(const Rat& upper_break) {
  if (upper_break < 0) throw error("upper break must be nonnegative");
  // rank of T_pi^{G^y}: 1 on (0, break], 2 beyond; integrate 2 - rank
  Rat integral(0);
  integral += (Rat(2) - 1) * (upper_break - 0);  // over (0, break]
  // beyond the break the integrand 2 - 2 vanishes
  return integral;
}

Rat j_height(const DrinfeldModule& m) {
  RationalFunction j = m.j_invariant();
  Rat h(0);
  for (const Place& v : bad_places(j)) {
    Valuation vj = place_valuation(j, v);
    if (vj.is_infinite()) continue;
    if (vj.value() < 0) h += Rat(v.degree()) * Rat(-vj.value());
  }
  return h;
}

GlobalConductor global_conductor(const DrinfeldModule& m) {
  GlobalConductor g;
  g.value = Rat(0);
  g.supported = true;
  for (const Place& v : bad_places(m.j_invariant())) {
    ValuationProfile pr = profile_at(m, v, /*coprime_pi=*/true);
    LocalConductorResult lc = local_conductor(pr);
    g.per_place.push_back({v, pr, lc});
    if (!lc.supported) {
      g.supported = false;
      if (!g.reason.empty()) g.reason += "; ";
      g.reason += "place " + v.str() + ": " + lc.reason;
      continue;
    }
    g.value += Rat(v.degree()) * lc.value;
  }
  return g;
}

SzpiroReport szpiro_check(const DrinfeldModule& m) {
  SzpiroReport r;
  GlobalConductor g = global_conductor(m);
  r.per_place = g.per_place;
  if (!g.supported) {
    r.supported = false;
    r.reason = g.reason;
    return r;
  }
  long q = static_cast<long>(m.field()->order_ulong());
  r.supported = true;
  r.lhs = j_height(m);
  r.rhs = g.value * Rat(q - 1) + Rat(q);  // [F : F_q(t)] = 1
  r.holds = r.lhs <= r.rhs;
  r.equality = r.lhs == r.rhs;
  // single infinite place of F_q(t), v0 = -1
  ValuationProfile inf = profile_at(m, Place::infinite(m.field()), true);
  Int boundary = Int(inf.v0) * q;
  r.strict_expected = inf.vj.is_infinite() || Int(inf.vj.value()) > boundary;
  r.boundary_equality = !inf.vj.is_infinite() && Int(inf.vj.value()) == boundary;
  return r;
}

}  // namespace drinfeld
