#include "medial/reports.hpp"

#include <sstream>

#include "json.hpp"

namespace medial {

using Json = nlohmann::ordered_json;

Analysis analyze(const MedialComplex& c, ChoicePolicy& policy) {
  Analysis a;
  a.input = c;
  a.policy = policy.name();
  a.decomposition = decompose(c, policy);
  const auto& gamma = a.decomposition.gamma.graph;
  std::vector<InvariantRecord> records;
  std::vector<HomologyResult> homologies;
  std::vector<Presentation> presentations;
  a.pi1_trivial = true;
  for (const auto& comp : a.decomposition.components) {
    ComponentReport r;
    r.complex = comp;
    r.lambda = build_component_graph(comp);
    r.invariants = component_invariants(comp, r.lambda);
    r.pi1 = pi1_presentation(comp, r.lambda);
    r.homology = component_homology(attaching_matrix(r.pi1), r.invariants);
    r.oracle = oracle_homology(build_chain_complex(comp));
    r.oracle_agrees = r.homology.same_groups(r.oracle.homology) && r.oracle.chi_cells == r.invariants.chi;
    a.pi1_trivial = a.pi1_trivial && generates_full_group(r.pi1.words(), r.pi1.rank);
    records.push_back(r.invariants);
    homologies.push_back(r.homology);
    presentations.push_back(r.pi1);
    a.components.push_back(std::move(r));
  }
  a.pi1_trivial = a.pi1_trivial && betti1(gamma) == 0;
  a.global = global_invariants(records, gamma);
  a.homology = global_homology(homologies, gamma);
  a.assembled_oracle = oracle_homology(assemble_chain_complex(a.decomposition.components, gamma));
  a.input_oracle = oracle_homology(build_chain_complex(c));
  a.oracle_agrees = a.homology.same_groups(a.assembled_oracle.homology) &&
                    a.homology.same_groups(a.input_oracle.homology) && a.assembled_oracle.chi_cells == a.global.chi;
  for (const auto& r : a.components) a.oracle_agrees = a.oracle_agrees && r.oracle_agrees;
  a.verdict = check_contractible(a.decomposition.components, gamma, records, presentations);
  return a;
}

Analysis analyze(const MedialComplex& c) {
  LowestIdPolicy policy;
  return analyze(c, policy);
}

namespace {

Json homology_object(const HomologyResult& h) {
  return {{"h2", h.h2},
          {"h1_free", h.h1_free},
          {"torsion", h.torsion},
          {"text", h.to_text()},
          {"realizable", h.realizable},
          {"chi", h.chi},
          {"notes", h.notes}};
}

Json invariant_object(const InvariantRecord& r) {
  return {{"s", r.s},   {"c", r.c},   {"lambda", r.lambda}, {"v", r.v},     {"e", r.e},
          {"G", r.G},   {"q", r.q},   {"Q", r.Q},           {"nu", r.nu},   {"s0", r.s0},
          {"s0o", r.s0o}, {"s0n", r.s0n}, {"chi", r.chi}};
}

}  // namespace

std::string validation_json(const ValidationReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back({{"kind", x.kind}, {"location", x.location}, {"message", x.message}});
  return Json{{"valid", r.ok()}, {"violations", v}}.dump(2) + "\n";
}

std::string decomposition_text(const DecompositionResult& d) {
  std::ostringstream os;
  for (const auto& s : d.log) {
    os << s.index << ". " << s.action << " " << s.fin << " at " << s.point << ": " << s.detail << "\n";
  }
  os << d.components.size() << " component" << (d.components.size() == 1 ? "" : "s") << "\n";
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    os << "  M" << k + 1 << ": sheets";
    for (const auto& s : d.components[k].sheets) os << " " << s.id;
    os << "\n";
  }
  for (const auto& at : d.gamma.attachments) {
    os << "  Gamma edge " << at.edge_id << ": M" << at.from_component << " -> M" << at.to_component << " along "
       << at.fin << "\n";
  }
  return os.str();
}

std::string decomposition_json(const DecompositionResult& d) {
  Json log = Json::array();
  for (const auto& s : d.log) {
    log.push_back({{"step", s.index}, {"action", s.action}, {"fin", s.fin}, {"point", s.point}, {"detail", s.detail}});
  }
  Json comps = Json::array();
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    Json sheets = Json::array();
    for (const auto& s : d.components[k].sheets) sheets.push_back(s.id);
    comps.push_back({{"name", "M" + std::to_string(k + 1)}, {"sheets", sheets}});
  }
  Json edges = Json::array();
  for (const auto& at : d.gamma.attachments) {
    edges.push_back({{"id", at.edge_id},
                     {"from", at.from_component},
                     {"to", at.to_component},
                     {"fin", at.fin},
                     {"fin_sheet", at.fin_sheet},
                     {"base_sheet", at.base_sheet}});
  }
  return Json{{"log", log}, {"components", comps}, {"gamma", {{"edges", edges}, {"beta1", betti1(d.gamma.graph)}}}}
             .dump(2) +
         "\n";
}

std::string invariants_json(const GlobalInvariantRecord& g) {
  Json comps = Json::array();
  for (const auto& r : g.components) comps.push_back(invariant_object(r));
  Json total = {{"s", g.s},     {"c", g.c},     {"lambda", g.lambda}, {"v", g.v},       {"e", g.e},
                {"G", g.G},     {"q", g.q},     {"Q", g.Q},           {"nu", g.nu},     {"s0", g.s0},
                {"s0o", g.s0o}, {"s0n", g.s0n}, {"chi", g.chi},       {"beta1", g.beta1}};
  return Json{{"components", comps}, {"global", total}}.dump(2) + "\n";
}

std::string homology_text(const Analysis& a, bool with_oracle) {
  std::ostringstream os;
  os << a.homology.to_text();
  if (with_oracle) os << (a.oracle_agrees ? "; oracle agrees" : "; ORACLE DISAGREES: " + a.input_oracle.homology.to_text());
  os << "\n";
  if (a.components.size() > 1) {
    for (std::size_t k = 0; k < a.components.size(); ++k) {
      os << "  M" << k + 1 << ": " << a.components[k].homology.to_text() << "\n";
    }
    os << "  beta1(Gamma) = " << a.global.beta1 << "\n";
  }
  os << "realizable: " << (a.homology.realizable ? "yes" : "no") << "\n";
  for (const auto& n : a.homology.notes) os << "  " << n << "\n";
  return os.str();
}

std::string homology_json(const Analysis& a, bool with_oracle) {
  Json comps = Json::array();
  for (const auto& r : a.components) comps.push_back(homology_object(r.homology));
  Json out = {{"global", homology_object(a.homology)}, {"components", comps}, {"beta1", a.global.beta1}};
  if (with_oracle) {
    out["oracle"] = {{"agrees", a.oracle_agrees},
                     {"input", homology_object(a.input_oracle.homology)},
                     {"assembled", homology_object(a.assembled_oracle.homology)},
                     {"chi_cells", a.assembled_oracle.chi_cells}};
  }
  return out.dump(2) + "\n";
}

std::string pi1_text(const Analysis& a) {
  std::ostringstream os;
  for (std::size_t k = 0; k < a.components.size(); ++k) {
    os << "M" << k + 1 << ": " << a.components[k].pi1.to_text() << "\n";
  }
  if (a.global.beta1 > 0) os << "free factor of rank " << a.global.beta1 << " from Gamma\n";
  os << "trivial: " << (a.pi1_trivial ? "yes" : "no") << "\n";
  return os.str();
}

std::string pi1_json(const Analysis& a) {
  Json comps = Json::array();
  for (const auto& r : a.components) {
    Json rels = Json::array();
    for (const auto& rel : r.pi1.relations) {
      rels.push_back({{"sheet", rel.sheet_id}, {"word", word_to_string(rel.word, r.pi1.names)}, {"letters", rel.word}});
    }
    comps.push_back({{"generators", r.pi1.names},
                     {"lambda_count", r.pi1.lambda_count},
                     {"y_count", r.pi1.y_count},
                     {"q_count", r.pi1.q_count},
                     {"relations", rels},
                     {"text", r.pi1.to_text()}});
  }
  return Json{{"components", comps}, {"beta1", a.global.beta1}, {"trivial", a.pi1_trivial}}.dump(2) + "\n";
}

std::string verdict_text(const ContractibilityVerdict& v) {
  std::ostringstream os;
  os << "contractible: " << (v.contractible ? "true" : "false") << "\n";
  for (const auto& d : v.diagnostics) os << "  " << d << "\n";
  return os.str();
}

std::string verdict_json(const ContractibilityVerdict& v) {
  return Json{{"contractible", v.contractible},
              {"gamma_tree", v.gamma_tree},
              {"lambda_trees", v.lambda_trees},
              {"sheets_simple", v.sheets_simple},
              {"euler_relation", v.euler_relation},
              {"generation", v.generation},
              {"diagnostics", v.diagnostics}}
             .dump(2) +
         "\n";
}

}  // namespace medial
