#include "tgw/json_io.hpp"

#include "tgw/error.hpp"

namespace tgw {

namespace {

Json labels_of(Subset s, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (int x : members(s)) out.push_back(labels[x]);
  return out;
}

Json violation_json(const Violation& v) {
  return Json{{"law", v.law}, {"witness", v.witness}, {"left", v.left}, {"right", v.right}};
}

}  // namespace

const char* flag_name(Flag f) {
  switch (f) {
    case Flag::yes: return "yes";
    case Flag::no: return "no";
    default: return "unchecked";
  }
}

Json to_json(const Semiring& s, const AxiomReport& r) {
  Json j;
  j["structure"] = s.name();
  j["passed"] = r.passed();
  j["violation_count"] = r.violations.size();
  j["violations"] = Json::array();
  for (const auto& v : r.violations) j["violations"].push_back(violation_json(v));
  j["warnings"] = Json::array();
  for (const auto& v : r.warnings) j["warnings"].push_back(violation_json(v));
  return j;
}

Json to_json(const Semiring& s, const IdealSet& i) {
  return Json{{"members", labels_of(i.members, s.elements())},
              {"is_ideal", flag_name(i.is_ideal)},
              {"is_prime", flag_name(i.is_prime)},
              {"is_maximal", flag_name(i.is_maximal)}};
}

Json to_json(const Semiring& s, const SpectrumSpace& spec, const ZariskiReport& z) {
  Json j;
  j["structure"] = s.name();
  j["points"] = Json::array();
  for (const auto& p : spec.points) j["points"].push_back(labels_of(p.members, s.elements()));
  j["closed_sets"] = Json::array();
  for (std::size_t i = 0; i < spec.ideals.size(); ++i) {
    Json c;
    c["ideal"] = labels_of(spec.ideals[i].members, s.elements());
    c["points"] = members(spec.closed_sets[i]);
    j["closed_sets"].push_back(c);
  }
  j["zariski"] = Json{{"pairs_checked", z.pairs_checked},
                      {"intersection_failures", z.intersection_failures.size()},
                      {"t0_failures", z.t0_failures.size()},
                      {"passed", z.passed()}};
  j["lenient"] = spec.lenient;
  return j;
}

Json to_json(const MonoidPresentation& p) {
  Json j;
  j["classes"] = p.classes;
  j["zero"] = p.zero;
  j["add"] = Json::array();
  for (int x = 0; x < p.size(); ++x) {
    Json row = Json::array();
    for (int y = 0; y < p.size(); ++y) row.push_back(p.sum(x, y));
    j["add"].push_back(row);
  }
  j["structure_tag"] = p.structure_tag;
  j["trivial"] = p.is_trivial();
  j["approximate"] = p.approximate;
  j["well_defined"] = p.well_defined;
  j["backend"] = p.backend;
  j["relations"] = p.relations;
  return j;
}

Json to_json(const GammaModule& m, const DensityReport& d) {
  const Semiring& s = m.base();
  Json j;
  j["module"] = m.name();
  j["dense"] = d.dense;
  j["anchor"] = s.label(d.anchor);
  j["witnesses"] = Json::array();
  for (const auto& w : d.witnesses) {
    j["witnesses"].push_back(Json{{"m", m.label(w.source)},
                                  {"n", m.label(w.target)},
                                  {"a", s.label(w.element)},
                                  {"alpha", s.gamma()[w.alpha]},
                                  {"beta", s.gamma()[w.beta]}});
  }
  if (d.failure) j["failure"] = {m.label(d.failure->first), m.label(d.failure->second)};
  if (d.rank2) j["rank2"] = *d.rank2;
  j["lenient"] = d.lenient;
  return j;
}

Json to_json(const GammaModule& m, const EndReport& e) {
  Json j;
  j["module"] = m.name();
  j["end_size"] = e.endos.size();
  j["maps"] = Json::array();
  for (const auto& f : e.endos) {
    Json row = Json::array();
    for (int x : f.map) row.push_back(m.label(x));
    j["maps"].push_back(row);
  }
  j["closed"] = e.closed;
  j["bijective_count"] = e.bijective_count;
  j["equivariant_map_count"] = e.equivariant_map_count;
  j["simple"] = e.simple;
  if (e.schur) j["schur"] = *e.schur;
  if (e.local) j["local"] = *e.local;
  j["schur_counterexamples"] = e.schur_counterexamples;
  j["lenient"] = e.lenient;
  return j;
}

Json to_json(const GammaModule& m, const FreeResolution& r) {
  auto labels = [](const GammaModule& mod, const std::vector<int>& xs) {
    Json out = Json::array();
    for (int x : xs) out.push_back(mod.label(x));
    return out;
  };
  Json j;
  j["module"] = m.name();
  j["ranks"] = r.ranks;
  j["generators"] = {labels(m, r.generators0), labels(r.modules[0], r.generators1),
                     labels(r.modules[1], r.generators2)};
  j["kernel_pi"] = labels_of(r.kernel0, r.modules[0].carrier());
  j["kernel_d1"] = labels_of(r.kernel1, r.modules[1].carrier());
  j["surjective"] = r.surjective;
  j["exact_at_p0"] = r.exact_at_p0;
  j["exact_at_p1"] = r.exact_at_p1;
  j["maps_are_homs"] = r.maps_are_homs;
  j["lenient"] = r.lenient;
  return j;
}

Json to_json(const ExtReport& e) {
  Json j;
  j["ext1"] = to_json(e.ext1);
  j["hom_sizes"] = {e.hom0, e.hom1, e.hom2};
  j["cycles"] = e.cycles;
  j["boundaries"] = e.boundaries;
  j["ext0"] = e.ext0;
  j["hom_mn"] = e.hom_mn;
  j["ext0_matches"] = e.ext0_matches;
  j["exact"] = e.exact;
  j["lenient"] = e.lenient;
  return j;
}

Json to_json(const TorReport& t) {
  Json j;
  j["tor1"] = to_json(t.tor1);
  j["tor0"] = to_json(t.tor0);
  j["tensor_size"] = t.tensor_size;
  j["tor0_matches"] = t.tor0_matches;
  j["complex_ok"] = t.complex_ok;
  j["maps_well_defined"] = t.maps_well_defined;
  j["backend"] = t.backend;
  j["lenient"] = t.lenient;
  return j;
}

Json to_json(const AdjunctionReport& a) {
  Json j;
  j["lhs"] = a.lhs;
  j["rhs"] = a.rhs;
  j["tensor_well_defined"] = a.tensor_well_defined;
  j["hom_module_closed"] = a.hom_module_closed;
  j["phi_total"] = a.phi_total;
  j["psi_total"] = a.psi_total;
  j["psi_phi_identity"] = a.round_trip_left;
  j["phi_psi_identity"] = a.round_trip_right;
  j["bijection"] = a.bijection();
  j["detail"] = a.detail;
  j["lenient"] = a.lenient;
  return j;
}

Json to_json(const Semiring& s, const RadicalReport& r) {
  Json j;
  j["radical"] = labels_of(r.radical.members, s.elements());
  j["primitive"] = Json::array();
  for (const auto& p : r.primitive) j["primitive"].push_back(labels_of(p.members, s.elements()));
  j["catalog_relative"] = r.catalog_relative;
  j["semiprimitive"] = r.semiprimitive;
  return j;
}

Json to_json(const SemisimplicityReport& r) {
  Json j;
  j["semisimple"] = r.semisimple;
  if (r.witness) j["witness"] = {r.witness->first, r.witness->second};
  j["pairs_checked"] = r.pairs_checked;
  j["radical_zero"] = r.radical_zero;
  j["consistent"] = r.consistent;
  j["lenient"] = r.lenient;
  return j;
}

Json to_json(const Semiring& s, const LocalizedSemiring& l) {
  Json j;
  j["prime"] = labels_of(l.prime, s.elements());
  j["multiplier"] = s.label(l.multiplier);
  j["fractions"] = l.fractions.size();
  j["classes"] = Json::array();
  for (int c = 0; c < l.class_count; ++c) j["classes"].push_back(l.label(c, s));
  j["maximal_ideal"] = Json::array();
  for (int c : l.maximal_ideal) j["maximal_ideal"].push_back(l.label(c, s));
  j["well_defined"] = l.well_defined;
  if (!l.witness.empty()) j["witness"] = l.witness;
  if (l.local) j["local"] = *l.local;
  j["lenient"] = l.lenient;
  return j;
}

Json to_json(const Semiring& s, const GelfandReport& g) {
  Json j;
  j["injective"] = g.injective;
  j["maximal_primes"] = Json::array();
  for (Subset p : g.maximal_primes) j["maximal_primes"].push_back(labels_of(p, s.elements()));
  if (g.witness) j["witness"] = {s.label(g.witness->first), s.label(g.witness->second)};
  j["lenient"] = g.lenient;
  return j;
}

Json to_json(const IsoInstance& i) {
  return Json{{"theorem", i.theorem},
              {"holds", i.holds},
              {"left_size", i.left_size},
              {"right_size", i.right_size},
              {"detail", i.detail}};
}

Json catalog_json(const std::vector<CatalogEntry>& catalog, const Options& opt) {
  Json out = Json::array();
  for (const auto& e : catalog) {
    const Semiring& s = e.module.base();
    Json j;
    j["module"] = e.module.name();
    j["size"] = e.module.size();
    j["simple"] = e.simple;
    j["annihilator"] = labels_of(annihilator(e.module, opt).members, s.elements());
    out.push_back(j);
  }
  return out;
}

Json module_summary(const GammaModule& m, const Options& opt) {
  const Semiring& s = m.base();
  const AxiomReport axioms = check_module_axioms(m);
  Json j;
  j["module"] = m.name();
  j["size"] = m.size();
  j["axioms_passed"] = axioms.passed();
  j["violation_count"] = axioms.violations.size();
  if (!axioms.violations.empty()) j["first_violation"] = violation_json(axioms.violations.front());
  j["base_warning_count"] = axioms.warnings.size();
  const auto subs = enumerate_submodules(m, opt);
  j["submodules"] = Json::array();
  for (Subset x : subs) j["submodules"].push_back(labels_of(x, m.carrier()));
  j["simple"] = is_simple(m, opt);
  const auto ann = annihilator(m, opt);
  j["annihilator"] = labels_of(ann.members, s.elements());
  j["annihilator_is_ideal"] = flag_name(ann.is_ideal);
  j["faithful"] = is_faithful(m, opt).faithful;
  return j;
}

}  // namespace tgw
