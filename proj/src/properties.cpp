#include "monoalg/properties.hpp"

#include <algorithm>
#include <set>

#include "monoalg/errors.hpp"

namespace monoalg {

namespace {

// false iff some x in B_A has max_k lambda_k(x) above the bound (strictly
// above 1 for seminormality, at least 1 for normality)
LambdaResult lambda_scan(const Decomposition& d, bool inclusive) {
  LambdaResult r;
  for (const auto& x : d.module_generators) {
    const RatVector lam = d.frame.lambda(x);
    const Rational top = *std::max_element(lam.begin(), lam.end());
    if (inclusive ? top >= 1 : top > 1) {
      r.holds = false;
      r.witness = LambdaWitness{x, lam};
      return r;
    }
  }
  return r;
}

}  // namespace

LambdaResult is_seminormal(const Decomposition& d) { return lambda_scan(d, false); }

LambdaResult is_normal(const Decomposition& d) { return lambda_scan(d, true); }

CohenMacaulayResult is_cohen_macaulay(const Decomposition& d) {
  CohenMacaulayResult r;
  for (const auto& s : d.summands)
    if (!s.ideal.is_unit()) {
      r.holds = false;
      r.witness = CohenMacaulayWitness{s.coset, s.shift, s.ideal};
      break;
    }
  return r;
}

BuchsbaumResult is_buchsbaum(const AffineSemigroup& b, const Decomposition& d) {
  BuchsbaumResult r;
  for (const auto& s : d.summands)
    if (!s.ideal.is_unit() && !s.ideal.is_maximal()) {
      r.holds = false;
      r.witness = BuchsbaumWitness{BuchsbaumWitness::Kind::IdealNotUnitOrMaximal, s.coset, s.ideal,
                                   s.shift, {}, {}};
      return r;
    }

  std::set<Point> shifts;  // H
  std::map<Point, const Summand*> owner;
  for (const auto& s : d.summands)
    if (s.ideal.is_maximal()) {
      shifts.insert(s.shift);
      owner.emplace(s.shift, &s);
    }

  std::vector<const Point*> extra;  // C = generators minus {0, e_1..e_d}
  const auto& frame_idx = d.frame.generator_indices();
  for (std::size_t i = 0; i < b.size(); ++i)
    if (std::find(frame_idx.begin(), frame_idx.end(), i) == frame_idx.end() && !is_zero(b.generator(i)))
      extra.push_back(&b.generator(i));

  for (const auto& h : shifts)
    for (const Point* c : extra) {
      Point sum = add_points(h, *c);
      if (shifts.count(sum)) {
        const Summand& s = *owner.at(h);
        r.holds = false;
        r.witness = BuchsbaumWitness{BuchsbaumWitness::Kind::ShiftCollision, s.coset, s.ideal, h, *c,
                                     std::move(sum)};
        return r;
      }
    }
  return r;
}

GorensteinResult is_gorenstein(const Decomposition& d) {
  GorensteinResult r;
  for (const auto& s : d.summands)
    if (!s.ideal.is_unit()) {
      r.holds = false;
      r.witness = GorensteinWitness{GorensteinWitness::Kind::NonUnitIdeal, s.coset, s.ideal, {}, {}};
      return r;
    }

  std::set<Point> h;
  for (const auto& s : d.summands) h.insert(s.shift);

  std::int64_t best = -1;
  std::vector<Point> tops;
  for (const auto& x : h) {
    const auto cs = coordinate_sum(x);
    if (cs > best) {
      best = cs;
      tops.clear();
    }
    if (cs == best) tops.push_back(x);
  }
  if (tops.size() != 1) {
    r.holds = false;
    r.witness = GorensteinWitness{GorensteinWitness::Kind::NonUniqueTop, {}, {}, tops, {}};
    return r;
  }

  const Point top = tops.front();
  while (!h.empty()) {
    const Point hg = *h.begin();
    const Point partner = subtract_points(top, hg);
    if (!h.count(partner)) {
      r.holds = false;
      r.witness = GorensteinWitness{GorensteinWitness::Kind::MissingPartner, {}, {}, {top}, hg};
      return r;
    }
    h.erase(hg);
    h.erase(partner);
  }
  return r;
}

PropertyReport full_report(const AffineSemigroup& b, const Decomposition& d) {
  PropertyReport rep{is_seminormal(d), is_normal(d), is_cohen_macaulay(d), is_buchsbaum(b, d),
                     is_gorenstein(d)};
  const bool n = rep.normal.holds, sn = rep.seminormal.holds, cm = rep.cohen_macaulay.holds,
             bb = rep.buchsbaum.holds, g = rep.gorenstein.holds;
  if ((n && !sn) || (n && !cm) || (g && !cm) || (cm && !bb))
    throw Error(ErrorKind::Internal, "ring property implications violated");
  return rep;
}

LambdaResult is_seminormal(const AffineSemigroup& b) { return is_seminormal(decompose(b)); }
LambdaResult is_normal(const AffineSemigroup& b) { return is_normal(decompose(b)); }
CohenMacaulayResult is_cohen_macaulay(const AffineSemigroup& b) { return is_cohen_macaulay(decompose(b)); }
BuchsbaumResult is_buchsbaum(const AffineSemigroup& b) { return is_buchsbaum(b, decompose(b)); }
GorensteinResult is_gorenstein(const AffineSemigroup& b) { return is_gorenstein(decompose(b)); }
PropertyReport full_report(const AffineSemigroup& b) { return full_report(b, decompose(b)); }

}  // namespace monoalg
