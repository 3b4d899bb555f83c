#include "monoalg/report.hpp"

#include <sstream>

#include "monoalg/input.hpp"

namespace monoalg {

json point_json(const Point& p) {
  json a = json::array();
  for (auto v : p) a.push_back(v);
  return a;
}

json rational_json(const RatVector& v) {
  json a = json::array();
  for (const auto& q : v) a.push_back(to_string(q));
  return a;
}

namespace {

json points_json(const std::vector<Point>& ps) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(point_json(p));
  return a;
}

json label_json(const CosetLabel& c) {
  json a = json::array();
  for (auto v : c) a.push_back(v);
  return a;
}

json ideal_json(const MonomialIdeal& ideal) {
  return {{"generators", points_json(ideal.gens)},
          {"unit", ideal.is_unit()},
          {"maximal", ideal.is_maximal()},
          {"display", ideal.to_string()}};
}

std::string label_text(const CosetLabel& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ']';
  return os.str();
}

std::string rational_text(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string group_text(const FiniteAbelianGroup& g) {
  if (g.invariant_factors().empty()) return "trivial (order 1)";
  std::string s;
  for (std::size_t i = 0; i < g.invariant_factors().size(); ++i)
    s += (i ? " x Z/" : "Z/") + g.invariant_factors()[i].get_str();
  return s + " (order " + g.order().get_str() + ")";
}

}  // namespace

json decomposition_json(const AffineSemigroup& b, const Decomposition& d, bool verbose) {
  json factors = json::array();
  for (const auto& f : d.group.invariant_factors()) factors.push_back(f.get_si());

  json summands = json::array();
  for (const auto& s : d.summands) {
    json js = {{"coset", label_json(s.coset)},
               {"shift", point_json(s.shift)},
               {"ideal", ideal_json(s.ideal)},
               {"gamma", points_json(s.gamma)}};
    if (s.shift_degree) js["shiftDegree"] = *s.shift_degree;
    if (verbose) {
      js["shiftLambda"] = rational_json(s.shift_lambda);
      json lam = json::array();
      for (const auto& x : s.gamma) lam.push_back(rational_json(d.frame.lambda(x)));
      js["gammaLambda"] = std::move(lam);
    }
    summands.push_back(std::move(js));
  }

  json out = {{"generators", points_json(b.generators())},
              {"ambientDim", b.ambient_dim()},
              {"rank", b.rank()},
              {"frame", points_json(d.frame.elements())},
              {"invariantFactors", std::move(factors)},
              {"groupOrder", d.group_order()},
              {"moduleGenerators", points_json(d.module_generators)},
              {"summands", std::move(summands)}};
  const auto f = degree_functional(b);
  out["homogeneous"] = f.has_value();
  if (f) out["degreeFunctional"] = rational_json(f->coefficients);
  return out;
}

namespace {

json lambda_result_json(const LambdaResult& r) {
  json j = {{"holds", r.holds}};
  if (r.witness)
    j["witness"] = {{"element", point_json(r.witness->element)},
                    {"lambda", rational_json(r.witness->lambda)}};
  return j;
}

std::string_view kind_name(BuchsbaumWitness::Kind k) {
  return k == BuchsbaumWitness::Kind::IdealNotUnitOrMaximal ? "IdealNotUnitOrMaximal"
                                                            : "ShiftCollision";
}

std::string_view kind_name(GorensteinWitness::Kind k) {
  switch (k) {
    case GorensteinWitness::Kind::NonUnitIdeal: return "NonUnitIdeal";
    case GorensteinWitness::Kind::NonUniqueTop: return "NonUniqueTop";
    case GorensteinWitness::Kind::MissingPartner: return "MissingPartner";
  }
  return "";
}

}  // namespace

json properties_json(const PropertyReport& p) {
  json cm = {{"holds", p.cohen_macaulay.holds}};
  if (const auto& w = p.cohen_macaulay.witness)
    cm["witness"] = {{"coset", label_json(w->coset)}, {"shift", point_json(w->shift)},
                     {"ideal", ideal_json(w->ideal)}};

  json bb = {{"holds", p.buchsbaum.holds}};
  if (const auto& w = p.buchsbaum.witness) {
    json jw = {{"kind", kind_name(w->kind)}, {"coset", label_json(w->coset)},
               {"ideal", ideal_json(w->ideal)}, {"shift", point_json(w->shift)}};
    if (w->kind == BuchsbaumWitness::Kind::ShiftCollision) {
      jw["generator"] = point_json(w->generator);
      jw["collision"] = point_json(w->collision);
    }
    bb["witness"] = std::move(jw);
  }

  json go = {{"holds", p.gorenstein.holds}};
  if (const auto& w = p.gorenstein.witness) {
    json jw = {{"kind", kind_name(w->kind)}};
    switch (w->kind) {
      case GorensteinWitness::Kind::NonUnitIdeal:
        jw["coset"] = label_json(w->coset);
        jw["ideal"] = ideal_json(w->ideal);
        break;
      case GorensteinWitness::Kind::NonUniqueTop:
        jw["tops"] = points_json(w->tops);
        break;
      case GorensteinWitness::Kind::MissingPartner:
        jw["top"] = point_json(w->tops.front());
        jw["element"] = point_json(w->element);
        break;
    }
    go["witness"] = std::move(jw);
  }

  return {{"seminormal", lambda_result_json(p.seminormal)},
          {"normal", lambda_result_json(p.normal)},
          {"cohenMacaulay", std::move(cm)},
          {"buchsbaum", std::move(bb)},
          {"gorenstein", std::move(go)}};
}

json regularity_json(const RegularityReport& r, Characteristic ch) {
  json w = json::array();
  for (const auto& x : r.witnesses)
    w.push_back({{"coset", label_json(x.coset)},
                 {"idealRegularity", x.ideal_regularity},
                 {"shiftDegree", x.shift_degree}});
  return {{"regularity", r.regularity}, {"witnesses", std::move(w)}, {"degree", r.degree},
          {"codim", r.codim},           {"egBound", r.eg_bound},      {"egHolds", r.eg_holds},
          {"depth", r.depth},           {"characteristic", ch.value}};
}

json eg_json(const RegularityReport& r) {
  return {{"reg", r.regularity}, {"bound", r.eg_bound}, {"holds", r.eg_holds}};
}

json verification_json(const VerificationReport& v) {
  json j = {{"moduleGeneratorsAgree", v.module_generators_agree},
            {"bettiEuler", v.betti_euler},
            {"tmax", v.t_max},
            {"ok", v.ok()}};
  j["hilbert"] = v.hilbert ? json(*v.hilbert) : json(nullptr);
  return j;
}

json sweep_json(const SweepSummary& s) {
  const auto& c = s.config;
  json violations = json::array();
  for (const auto& inst : s.eg_violations)
    violations.push_back({{"generators", points_json(inst.generators)},
                          {"regularity", regularity_json(*inst.regularity, c.characteristic)},
                          {"properties", properties_json(*inst.properties)}});
  json out = {{"config",
               {{"ambientDim", c.ambient_dim},
                {"numGenerators", c.num_generators},
                {"maxEntry", c.max_entry},
                {"count", c.count},
                {"seed", c.seed},
                {"characteristic", c.characteristic.value},
                {"tmax", c.t_max}}},
              {"generated", s.generated},
              {"accepted", s.accepted},
              {"skipped", s.skipped},
              {"propertyCounts",
               {{"seminormal", s.seminormal},
                {"normal", s.normal},
                {"cohenMacaulay", s.cohen_macaulay},
                {"buchsbaum", s.buchsbaum},
                {"gorenstein", s.gorenstein}}},
              {"hilbertFailures", s.hilbert_failures},
              {"egViolations", std::move(violations)}};
  out["minRegularity"] = s.min_regularity ? json(*s.min_regularity) : json(nullptr);
  out["maxRegularity"] = s.max_regularity ? json(*s.max_regularity) : json(nullptr);
  return out;
}

json error_json(const Error& e) {
  json j = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) j["location"] = pe->location();
  return {{"error", std::move(j)}};
}

std::string decomposition_text(const AffineSemigroup& b, const Decomposition& d, bool verbose) {
  std::ostringstream os;
  os << "frame:";
  for (const auto& e : d.frame.elements()) os << ' ' << to_string(e);
  os << "\ngroup: " << group_text(d.group) << '\n';
  const auto f = degree_functional(b);
  if (f) os << "degree: u -> " << rational_text(f->coefficients) << " . u\n";
  else os << "degree: not homogeneous\n";

  std::size_t width = 0;
  for (const auto& s : d.summands) width = std::max(width, label_text(s.coset).size());
  os << "HashTable{";
  for (std::size_t i = 0; i < d.summands.size(); ++i) {
    const auto& s = d.summands[i];
    std::string label = label_text(s.coset);
    label.resize(width, ' ');
    os << (i ? "          " : " ") << label << " => {" << s.ideal.to_string() << ", "
       << to_string(s.shift) << '}';
    if (s.shift_degree) os << "  deg " << *s.shift_degree;
    if (verbose) {
      os << "  lambda " << rational_text(s.shift_lambda) << "  gamma";
      for (const auto& x : s.gamma) os << ' ' << to_string(x);
    }
    os << (i + 1 == d.summands.size() ? " }\n" : "\n");
  }
  return os.str();
}

std::string properties_text(const PropertyReport& p) {
  std::ostringstream os;
  auto yes = [](bool v) { return v ? "true" : "false"; };
  os << "seminormal: " << yes(p.seminormal.holds);
  if (const auto& w = p.seminormal.witness)
    os << "  (x = " << to_string(w->element) << ", lambda = " << rational_text(w->lambda) << ')';
  os << "\nnormal: " << yes(p.normal.holds);
  if (const auto& w = p.normal.witness)
    os << "  (x = " << to_string(w->element) << ", lambda = " << rational_text(w->lambda) << ')';
  os << "\ncohenMacaulay: " << yes(p.cohen_macaulay.holds);
  if (const auto& w = p.cohen_macaulay.witness)
    os << "  (coset " << label_text(w->coset) << ": " << w->ideal.to_string() << ", shift "
       << to_string(w->shift) << ')';
  os << "\nbuchsbaum: " << yes(p.buchsbaum.holds);
  if (const auto& w = p.buchsbaum.witness) {
    if (w->kind == BuchsbaumWitness::Kind::IdealNotUnitOrMaximal)
      os << "  (coset " << label_text(w->coset) << ": " << w->ideal.to_string() << ')';
    else
      os << "  (" << to_string(w->shift) << " + " << to_string(w->generator) << " = "
         << to_string(w->collision) << " is a shift)";
  }
  os << "\ngorenstein: " << yes(p.gorenstein.holds);
  if (const auto& w = p.gorenstein.witness) {
    switch (w->kind) {
      case GorensteinWitness::Kind::NonUnitIdeal:
        os << "  (coset " << label_text(w->coset) << ": " << w->ideal.to_string() << ')';
        break;
      case GorensteinWitness::Kind::NonUniqueTop:
        os << "  (maximal coordinate sum shared by";
        for (const auto& t : w->tops) os << ' ' << to_string(t);
        os << ')';
        break;
      case GorensteinWitness::Kind::MissingPartner:
        os << "  (" << to_string(w->tops.front()) << " - " << to_string(w->element)
           << " is not a shift)";
        break;
    }
  }
  os << '\n';
  return os.str();
}

std::string regularity_text(const RegularityReport& r, Characteristic ch) {
  std::ostringstream os;
  os << "regularity: " << r.regularity << '\n';
  for (const auto& w : r.witnesses)
    os << "  attained at " << label_text(w.coset) << ": reg I_g = " << w.ideal_regularity
       << ", deg h_g = " << w.shift_degree << '\n';
  os << "degree: " << r.degree << "\ncodim: " << r.codim << "\negBound: " << r.eg_bound
     << "\negHolds: " << (r.eg_holds ? "true" : "false") << "\ndepth: " << r.depth
     << "\ncharacteristic: " << ch.value << '\n';
  return os.str();
}

std::string eg_text(const RegularityReport& r) {
  std::ostringstream os;
  os << "reg: " << r.regularity << "\nbound: " << r.eg_bound
     << "\nholds: " << (r.eg_holds ? "true" : "false") << '\n';
  return os.str();
}

std::string verification_text(const VerificationReport& v) {
  std::ostringstream os;
  auto yes = [](bool x) { return x ? "true" : "false"; };
  os << "verify moduleGeneratorsAgree: " << yes(v.module_generators_agree)
     << "\nverify bettiEuler: " << yes(v.betti_euler) << "\nverify hilbert: "
     << (v.hilbert ? yes(*v.hilbert) : "skipped (not homogeneous)") << " (tmax " << v.t_max
     << ")\n";
  return os.str();
}

std::string sweep_text(const SweepSummary& s) {
  std::ostringstream os;
  const auto& c = s.config;
  os << "sweep: dim " << c.ambient_dim << ", generators " << c.num_generators << ", degree "
     << c.max_entry << ", count " << c.count << ", seed " << c.seed << ", char "
     << c.characteristic.value << '\n'
     << "generated: " << s.generated << "\naccepted: " << s.accepted << "\nskipped: " << s.skipped
     << "\nseminormal: " << s.seminormal << "\nnormal: " << s.normal
     << "\ncohenMacaulay: " << s.cohen_macaulay << "\nbuchsbaum: " << s.buchsbaum
     << "\ngorenstein: " << s.gorenstein << "\nhilbertFailures: " << s.hilbert_failures << '\n';
  if (s.min_regularity)
    os << "regularity: min " << *s.min_regularity << ", max " << *s.max_regularity << '\n';
  os << "egViolations: " << s.eg_violations.size() << '\n';
  for (const auto& inst : s.eg_violations) {
    os << "  candidate:";
    for (const auto& g : inst.generators) os << ' ' << to_string(g);
    os << "  reg " << inst.regularity->regularity << " > bound " << inst.regularity->eg_bound << '\n';
  }
  return os.str();
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace monoalg
