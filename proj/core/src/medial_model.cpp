#include "medial/medial_model.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "medial/fins.hpp"
#include "union_find.hpp"

namespace medial {

Walk reverse_walk(const Walk& w) {
  Walk out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->reversed());
  return out;
}

std::string step_label(const Step& s) {
  return std::string(s.forward ? "+" : "-") + (s.kind == StepKind::Arc ? "a" : "") + std::to_string(s.id);
}

int Sheet::edge_count() const {
  return static_cast<int>(std::count_if(boundaries.begin(), boundaries.end(),
                                        [](const Boundary& b) { return b.edge_curve; }));
}

int Sheet::attached_count() const { return static_cast<int>(boundaries.size()) - edge_count(); }

int Sheet::weighted_genus() const { return orientable ? 2 * genus : genus; }

const Sheet* MedialComplex::find_sheet(int id) const {
  for (const auto& s : sheets) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

Sheet* MedialComplex::find_sheet(int id) {
  for (auto& s : sheets) {
    if (s.id == id) return &s;
  }
  return nullptr;
}

const Arc* MedialComplex::find_arc(int id) const {
  for (const auto& a : arcs) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

int MedialComplex::tail(const Step& s) const {
  if (s.kind == StepKind::Arc) {
    const Arc* a = find_arc(s.id);
    if (a == nullptr) throw std::invalid_argument("unknown arc " + std::to_string(s.id));
    return s.forward ? a->from : a->to;
  }
  const auto& e = ynet.edge(s.id);
  return s.forward ? e.u : e.v;
}

int MedialComplex::head(const Step& s) const { return tail(s.reversed()); }

std::vector<int> MedialComplex::fin_points() const {
  std::vector<int> out;
  for (int v : ynet.vertices()) {
    if (!ynet.is_artificial(v) && ynet.valence(v) == 1) out.push_back(v);
  }
  return out;
}

std::vector<int> MedialComplex::junctions() const {
  std::vector<int> out;
  for (int v : ynet.vertices()) {
    if (!ynet.is_artificial(v) && ynet.valence(v) == 4) out.push_back(v);
  }
  return out;
}

std::string ValidationReport::to_text() const {
  if (violations.empty()) return "valid\n";
  std::ostringstream os;
  for (const auto& v : violations) os << v.kind << " at " << v.location << ": " << v.message << "\n";
  return os.str();
}

int ComponentGraph::sheet_vertex(int sheet_id) const {
  for (std::size_t i = 0; i < sheet_ids.size(); ++i) {
    if (sheet_ids[i] == sheet_id) return static_cast<int>(i) + 1;
  }
  throw std::invalid_argument("sheet " + std::to_string(sheet_id) + " not in component graph");
}

namespace {

std::string sheet_loc(const Sheet& s) { return "sheet " + std::to_string(s.id); }

std::string boundary_loc(const Sheet& s, std::size_t b) {
  return "sheet " + std::to_string(s.id) + " boundary " + std::to_string(b);
}

void check_sheets(const MedialComplex& c, ValidationReport& r, bool& steps_ok) {
  if (c.sheets.empty()) r.violations.push_back({"empty", "complex", "no sheets"});
  std::set<int> ids;
  for (const auto& s : c.sheets) {
    if (!ids.insert(s.id).second) {
      r.violations.push_back({"duplicate-id", sheet_loc(s), "sheet id used twice"});
    }
    if (s.genus < 0) r.violations.push_back({"genus", sheet_loc(s), "negative genus"});
    if (!s.orientable && s.genus < 1) {
      r.violations.push_back({"genus", sheet_loc(s), "nonorientable sheet needs genus at least 1"});
    }
    for (std::size_t b = 0; b < s.boundaries.size(); ++b) {
      const auto& bd = s.boundaries[b];
      if (bd.edge_curve) {
        if (!bd.walk.empty()) {
          r.violations.push_back({"mixed-boundary", boundary_loc(s, b), "edge curve carries a walk"});
        }
        continue;
      }
      if (bd.walk.empty()) {
        r.violations.push_back({"empty-walk", boundary_loc(s, b), "attached boundary has an empty walk"});
        continue;
      }
      for (const auto& st : bd.walk) {
        bool known = st.kind == StepKind::Y ? c.ynet.has_edge(st.id) : c.find_arc(st.id) != nullptr;
        if (!known) {
          steps_ok = false;
          r.violations.push_back({"unknown-step", boundary_loc(s, b), "step " + step_label(st) + " names no edge"});
        }
      }
    }
  }
}

void check_walk_closure(const MedialComplex& c, ValidationReport& r) {
  for (const auto& s : c.sheets) {
    for (std::size_t b = 0; b < s.boundaries.size(); ++b) {
      const auto& w = s.boundaries[b].walk;
      for (std::size_t i = 0; i < w.size(); ++i) {
        const auto& next = w[(i + 1) % w.size()];
        if (c.head(w[i]) != c.tail(next)) {
          r.violations.push_back({"walk-break", boundary_loc(s, b),
                                  "step " + std::to_string(i) + " (" + step_label(w[i]) + ") does not meet " +
                                      step_label(next)});
        }
      }
    }
  }
}

void check_cover(const MedialComplex& c, ValidationReport& r) {
  std::map<int, int> ycount;
  std::map<int, int> acount;
  for (const auto& e : c.ynet.edges()) ycount[e.id] = 0;
  for (const auto& a : c.arcs) acount[a.id] = 0;
  for (const auto& s : c.sheets) {
    for (const auto& b : s.boundaries) {
      for (const auto& st : b.walk) {
        if (st.kind == StepKind::Y) {
          ++ycount[st.id];
        } else {
          ++acount[st.id];
        }
      }
    }
  }
  for (const auto& [id, n] : ycount) {
    if (n != 3) {
      r.violations.push_back({"three-cover", "Y-edge " + std::to_string(id),
                              "covered " + std::to_string(n) + " times, expected 3"});
    }
  }
  for (const auto& [id, n] : acount) {
    if (n != 1) {
      r.violations.push_back({"arc-cover", "arc " + std::to_string(id),
                              "covered " + std::to_string(n) + " times, expected 1"});
    }
  }
}

void check_vertices(const MedialComplex& c, ValidationReport& r) {
  std::map<int, int> arc_ends;
  std::set<int> arc_ids;
  for (const auto& a : c.arcs) {
    if (!arc_ids.insert(a.id).second) {
      r.violations.push_back({"duplicate-id", "arc " + std::to_string(a.id), "arc id used twice"});
    }
    if (!c.ynet.has_vertex(a.from) || !c.ynet.has_vertex(a.to)) {
      r.violations.push_back({"arc-end", "arc " + std::to_string(a.id), "endpoint is not a Y vertex"});
      continue;
    }
    if (a.from == a.to) r.violations.push_back({"arc-end", "arc " + std::to_string(a.id), "arc is a loop"});
    ++arc_ends[a.from];
    ++arc_ends[a.to];
  }
  for (int v : c.ynet.vertices()) {
    std::string loc = "vertex " + std::to_string(v);
    int deg = c.ynet.valence(v);
    int ends = arc_ends.count(v) ? arc_ends[v] : 0;
    if (c.ynet.is_artificial(v)) {
      int loops = 0;
      for (const auto& e : c.ynet.edges()) {
        if (e.u == v && e.is_loop()) ++loops;
      }
      if (deg != 2 || loops != 1 || ends != 0) {
        r.violations.push_back({"artificial-vertex", loc, "artificial vertex must carry exactly one loop"});
      }
    } else if (deg == 4) {
      if (ends != 0) r.violations.push_back({"junction", loc, "6-junction carries an arc end"});
    } else if (deg == 1) {
      if (ends != 1) {
        r.violations.push_back({"fin-point", loc, "fin point needs exactly one arc end, found " + std::to_string(ends)});
      }
    } else {
      r.violations.push_back({"valence", loc, "Y-valence " + std::to_string(deg) + " is neither 4 nor a fin point"});
    }
  }
}

void check_fins(const MedialComplex& c, ValidationReport& r) {
  if (c.arcs.empty()) {
    if (!c.fins.empty()) r.violations.push_back({"fin-record", "fins", "fin records without any fin points"});
    return;
  }
  std::vector<FinRecord> derived;
  try {
    derived = fin_records(c);
  } catch (const std::exception& ex) {
    r.violations.push_back({"fin-curve", "fins", ex.what()});
    return;
  }
  std::set<int> ids;
  std::set<int> used;
  for (const auto& f : c.fins) {
    std::string loc = "fin " + std::to_string(f.id);
    if (!ids.insert(f.id).second) r.violations.push_back({"duplicate-id", loc, "fin id used twice"});
    for (int p : {f.p, f.q}) {
      if (!used.insert(p).second) r.violations.push_back({"fin-record", loc, "fin point " + std::to_string(p) + " reused"});
    }
    bool found = std::any_of(derived.begin(), derived.end(), [&](const FinRecord& d) {
      return (d.start_point == f.p && d.end_point == f.q) || (d.start_point == f.q && d.end_point == f.p);
    });
    if (!found) {
      r.violations.push_back({"fin-record", loc,
                              "no fin curve joins " + std::to_string(f.p) + " and " + std::to_string(f.q)});
    }
  }
}

}  // namespace

ValidationReport validate_complex(const MedialComplex& c) {
  ValidationReport r;
  bool steps_ok = true;
  check_sheets(c, r, steps_ok);
  check_vertices(c, r);
  if (!steps_ok) return r;
  bool arcs_ok = std::all_of(c.arcs.begin(), c.arcs.end(), [&](const Arc& a) {
    return c.ynet.has_vertex(a.from) && c.ynet.has_vertex(a.to);
  });
  if (!arcs_ok) return r;
  check_walk_closure(c, r);
  check_cover(c, r);
  if (r.ok()) check_fins(c, r);
  return r;
}

ValidationReport check_six_junction_consistency(const MedialComplex& c) {
  ValidationReport r;
  // An edge end is (edge id, true for the head end). Passages through a
  // vertex pair the end they arrive on with the end they leave by.
  for (int v : c.junctions()) {
    std::map<std::pair<int, bool>, int> end_count;
    int germs = 0;
    int turnarounds = 0;
    for (const auto& s : c.sheets) {
      for (const auto& b : s.boundaries) {
        const auto& w = b.walk;
        for (std::size_t i = 0; i < w.size(); ++i) {
          const auto& in = w[i];
          const auto& out = w[(i + 1) % w.size()];
          if (in.kind != StepKind::Y || out.kind != StepKind::Y || c.head(in) != v) continue;
          std::pair<int, bool> in_end{in.id, in.forward};
          std::pair<int, bool> out_end{out.id, !out.forward};
          ++end_count[in_end];
          ++end_count[out_end];
          ++germs;
          if (in_end == out_end) ++turnarounds;
        }
      }
    }
    std::string loc = "junction " + std::to_string(v);
    if (germs != 6) {
      r.violations.push_back({"germ-count", loc, std::to_string(germs) + " sheet germs, expected 6"});
    }
    for (const auto& e : c.ynet.edges()) {
      for (bool at_head : {false, true}) {
        int endpoint = at_head ? e.v : e.u;
        if (endpoint != v) continue;
        int n = end_count[{e.id, at_head}];
        if (n != 3) {
          r.violations.push_back({"end-passages", loc,
                                  "edge " + std::to_string(e.id) + " end carries " + std::to_string(n) + " passages"});
        }
      }
    }
    if (turnarounds > 0) {
      r.violations.push_back({"turnaround", loc, std::to_string(turnarounds) + " passages turn back along the same edge end"});
    }
  }
  return r;
}

ComponentGraph build_component_graph(const MedialComplex& c) {
  if (!c.fin_free() || !c.fins.empty()) {
    throw std::invalid_argument("component graph needs a fin-free complex");
  }
  ComponentGraph out;
  auto ycomp = components(c.ynet);
  auto yindex = component_index(c.ynet);
  int s = static_cast<int>(c.sheets.size());
  for (int i = 0; i < s; ++i) {
    const auto& sh = c.sheets[i];
    out.sheet_ids.push_back(sh.id);
    out.graph.add_vertex(i + 1);
    out.graph.set_vertex_attr(i + 1, "kind", "sheet");
    out.graph.set_vertex_attr(i + 1, "label",
                              "S" + std::to_string(sh.id) + " (" + std::to_string(sh.genus) + "," +
                                  (sh.orientable ? "o" : "n") + "," + std::to_string(sh.edge_count()) + ")");
  }
  for (std::size_t k = 0; k < ycomp.size(); ++k) {
    int id = s + 1 + static_cast<int>(k);
    out.ynode_roots.push_back(ycomp[k].vertices().front());
    out.ynode_graphs.push_back(ycomp[k]);
    out.graph.add_vertex(id);
    out.graph.set_vertex_attr(id, "kind", "ynode");
    out.graph.set_vertex_attr(id, "label", "Y" + std::to_string(k + 1));
  }
  int next_edge = 1;
  for (int i = 0; i < s; ++i) {
    const auto& sh = c.sheets[i];
    for (std::size_t b = 0; b < sh.boundaries.size(); ++b) {
      const auto& bd = sh.boundaries[b];
      if (bd.edge_curve) continue;
      int k = yindex.at(c.tail(bd.walk.front()));
      out.graph.add_edge(next_edge, i + 1, s + 1 + k);
      out.edge_info[next_edge] = {sh.id, static_cast<int>(b)};
      ++next_edge;
    }
  }
  return out;
}

std::vector<MedialComplex> split_components(const MedialComplex& c) {
  if (!c.fin_free()) throw std::invalid_argument("split_components needs a fin-free complex");
  auto yindex = component_index(c.ynet);
  // Keys: sheets are -(index + 1), Y components are their index.
  detail::UnionFind uf;
  for (std::size_t i = 0; i < c.sheets.size(); ++i) {
    int key = -static_cast<int>(i) - 1;
    uf.add(key);
    for (const auto& b : c.sheets[i].boundaries) {
      if (!b.edge_curve) uf.unite(key, yindex.at(c.tail(b.walk.front())));
    }
  }
  std::map<int, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < c.sheets.size(); ++i) groups[uf.find(-static_cast<int>(i) - 1)].push_back(i);

  std::vector<std::pair<int, std::vector<std::size_t>>> ordered;
  for (auto& [root, members] : groups) {
    int min_id = c.sheets[members.front()].id;
    for (auto m : members) min_id = std::min(min_id, c.sheets[m].id);
    ordered.emplace_back(min_id, members);
  }
  std::sort(ordered.begin(), ordered.end());

  std::vector<MedialComplex> out;
  for (const auto& [min_id, members] : ordered) {
    MedialComplex part;
    part.metadata = c.metadata;
    std::set<int> ycomps;
    for (auto m : members) {
      part.sheets.push_back(c.sheets[m]);
      for (const auto& b : c.sheets[m].boundaries) {
        if (!b.edge_curve) ycomps.insert(yindex.at(c.tail(b.walk.front())));
      }
    }
    for (int v : c.ynet.vertices()) {
      if (ycomps.count(yindex.at(v))) part.ynet.add_vertex(v, c.ynet.is_artificial(v));
    }
    for (const auto& e : c.ynet.edges()) {
      if (ycomps.count(yindex.at(e.u))) part.ynet.add_edge(e.id, e.u, e.v);
    }
    out.push_back(std::move(part));
  }
  return out;
}

}  // namespace medial
