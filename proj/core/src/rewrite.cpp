#include <algorithm>
#include <stdexcept>

#include "rewrite_internal.hpp"

namespace medial::detail {

namespace {

struct Pos {
  std::size_t sheet = 0;
  std::size_t boundary = 0;
  std::size_t index = 0;
};

std::vector<Pos> passages(const MedialComplex& c, StepKind kind, int id) {
  std::vector<Pos> out;
  for (std::size_t s = 0; s < c.sheets.size(); ++s) {
    const auto& bs = c.sheets[s].boundaries;
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const auto& w = bs[b].walk;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].kind == kind && w[i].id == id) out.push_back({s, b, i});
      }
    }
  }
  return out;
}

Walk& walk_at(MedialComplex& c, const Pos& p) { return c.sheets[p.sheet].boundaries[p.boundary].walk; }

Walk rotate(const Walk& w, std::size_t start) {
  Walk out;
  out.reserve(w.size());
  for (std::size_t k = 0; k < w.size(); ++k) out.push_back(w[(start + k) % w.size()]);
  return out;
}

/// Replace len cyclically consecutive steps starting at start.
void replace_range(Walk& w, std::size_t start, std::size_t len, const Walk& repl) {
  Walk r = rotate(w, start);
  Walk out = repl;
  out.insert(out.end(), r.begin() + static_cast<std::ptrdiff_t>(len), r.end());
  w = std::move(out);
}

void append(Walk& w, const Walk& tail) { w.insert(w.end(), tail.begin(), tail.end()); }

void set_surface(Sheet& s, int weighted, bool orientable) {
  s.orientable = orientable;
  if (orientable) {
    if (weighted % 2 != 0) throw std::logic_error("odd weighted genus on an orientable sheet");
    s.genus = weighted / 2;
  } else {
    s.genus = weighted;
  }
}

void flip_sheet(Sheet& s) {
  for (auto& b : s.boundaries) {
    if (!b.edge_curve) b.walk = reverse_walk(b.walk);
  }
}

/// Reverse the circle holding the arc if needed so the arc ends at p. An
/// orientable sheet is flipped as a whole to keep its circles coherent.
Pos orient_to(MedialComplex& c, int arc, int p) {
  auto ps = passages(c, StepKind::Arc, arc);
  if (ps.size() != 1) throw std::runtime_error("arc " + std::to_string(arc) + " is not on exactly one boundary");
  Pos pos = ps.front();
  Sheet& s = c.sheets[pos.sheet];
  Walk& w = s.boundaries[pos.boundary].walk;
  if (c.head(w[pos.index]) == p) return pos;
  if (s.orientable) {
    flip_sheet(s);
  } else {
    w = reverse_walk(w);
  }
  pos.index = w.size() - 1 - pos.index;
  return pos;
}

int fresh_arc(const MedialComplex& c) {
  int m = 0;
  for (const auto& a : c.arcs) m = std::max(m, a.id);
  return m + 1;
}

void erase_arc(MedialComplex& c, int id) {
  c.arcs.erase(std::remove_if(c.arcs.begin(), c.arcs.end(), [id](const Arc& a) { return a.id == id; }),
               c.arcs.end());
}

void add_arc(MedialComplex& c, Arc a) {
  c.arcs.push_back(a);
  std::sort(c.arcs.begin(), c.arcs.end(), [](const Arc& x, const Arc& y) { return x.id < y.id; });
}

std::vector<int> arc_ends_at(const MedialComplex& c, int v) {
  std::vector<int> out;
  for (const auto& a : c.arcs) {
    if (a.from == v) out.push_back(a.id);
    if (a.to == v) out.push_back(a.id);
  }
  return out;
}

struct Split {
  int vertex = 0;
  int first = 0;
  int second = 0;
};

/// Subdivide a Y-edge u->v into u->y and y->v.
Split split_edge(MedialComplex& c, int edge) {
  GraphEdge e = c.ynet.edge(edge);
  Split sp{c.ynet.max_vertex_id() + 1, c.ynet.max_edge_id() + 1, c.ynet.max_edge_id() + 2};
  c.ynet.remove_edge(edge);
  c.ynet.add_vertex(sp.vertex);
  c.ynet.add_edge(sp.first, e.u, sp.vertex);
  c.ynet.add_edge(sp.second, sp.vertex, e.v);
  for (auto& s : c.sheets) {
    for (auto& b : s.boundaries) {
      Walk out;
      for (const auto& st : b.walk) {
        if (st.kind == StepKind::Y && st.id == edge) {
          if (st.forward) {
            out.push_back({StepKind::Y, sp.first, true});
            out.push_back({StepKind::Y, sp.second, true});
          } else {
            out.push_back({StepKind::Y, sp.second, false});
            out.push_back({StepKind::Y, sp.first, false});
          }
        } else {
          out.push_back(st);
        }
      }
      b.walk = std::move(out);
    }
  }
  return sp;
}

void rename_vertex(MedialComplex& c, int from, int to) {
  auto map = [&](int v) { return v == from ? to : v; };
  ExtendedGraph g(c.ynet.directed());
  for (int v : c.ynet.vertices()) g.add_vertex(map(v), c.ynet.is_artificial(v));
  for (const auto& e : c.ynet.edges()) g.add_edge(e.id, map(e.u), map(e.v));
  c.ynet = std::move(g);
  for (auto& a : c.arcs) {
    a.from = map(a.from);
    a.to = map(a.to);
  }
}

void require_tip(const MedialComplex& c, int v, int edge) {
  if (c.ynet.valence(v) != 1 || !arc_ends_at(c, v).empty()) {
    throw std::runtime_error("cannot zip edge " + std::to_string(edge) + ": vertex " + std::to_string(v) +
                             " has other incidences");
  }
}

void fuse_arcs(MedialComplex& c, int v, int a, int b) {
  if (a == b) {
    auto ps = passages(c, StepKind::Arc, a);
    if (ps.size() != 1 || walk_at(c, ps[0]).size() != 1) {
      throw std::runtime_error("loop arc " + std::to_string(a) + " is not a whole boundary circle");
    }
    c.sheets[ps[0].sheet].boundaries[ps[0].boundary] = Boundary::edge();
    erase_arc(c, a);
    c.ynet.remove_vertex(v);
    return;
  }
  auto ps = passages(c, StepKind::Arc, a);
  if (ps.size() != 1) throw std::runtime_error("arc " + std::to_string(a) + " is not on exactly one boundary");
  Walk& w = walk_at(c, ps[0]);
  std::size_t n = w.size();
  std::size_t i = ps[0].index;
  std::size_t start = 0;
  if (c.head(w[i]) == v) {
    const Step& next = w[(i + 1) % n];
    if (next.kind != StepKind::Arc || next.id != b) throw std::runtime_error("arcs at a bare vertex are not adjacent");
    start = i;
  } else {
    const Step& prev = w[(i + n - 1) % n];
    if (prev.kind != StepKind::Arc || prev.id != b) throw std::runtime_error("arcs at a bare vertex are not adjacent");
    start = (i + n - 1) % n;
  }
  int from = c.tail(w[start]);
  int to = c.head(w[(start + 1) % n]);
  int id = std::min(a, b);
  replace_range(w, start, 2, {Step{StepKind::Arc, id, true}});
  erase_arc(c, a);
  erase_arc(c, b);
  add_arc(c, {id, from, to});
  c.ynet.remove_vertex(v);
}

void suppress_vertex(MedialComplex& c, int v) {
  std::vector<GraphEdge> inc;
  for (const auto& e : c.ynet.edges()) {
    if (e.u == v || e.v == v) inc.push_back(e);
  }
  if (inc.size() == 1 && inc[0].is_loop()) {
    c.ynet.set_artificial(v, true);
    return;
  }
  if (inc.size() != 2) throw std::logic_error("suppressing a vertex that is not of valence 2");
  const GraphEdge e1 = inc[0];
  const GraphEdge e2 = inc[1];
  int w1 = e1.u == v ? e1.v : e1.u;
  int w2 = e2.u == v ? e2.v : e2.u;
  auto touches = [&](const Step& st) { return st.kind == StepKind::Y && (st.id == e1.id || st.id == e2.id); };
  for (auto& s : c.sheets) {
    for (auto& b : s.boundaries) {
      auto& w = b.walk;
      if (std::none_of(w.begin(), w.end(), touches)) continue;
      std::size_t n = w.size();
      std::size_t start = 0;
      while (start < n && touches(w[start]) && c.tail(w[start]) == v) ++start;
      if (start == n) throw std::runtime_error("walk through vertex " + std::to_string(v) + " never arrives");
      Walk out;
      for (std::size_t k = 0; k < n;) {
        const Step& st = w[(start + k) % n];
        if (touches(st) && c.head(st) == v) {
          const Step& nx = w[(start + k + 1) % n];
          if (k + 1 >= n || !touches(nx) || nx.id == st.id || c.tail(nx) != v) {
            throw std::runtime_error("passage turns back at vertex " + std::to_string(v));
          }
          out.push_back({StepKind::Y, e1.id, st.id == e1.id});
          k += 2;
        } else if (touches(st)) {
          throw std::runtime_error("passage leaves vertex " + std::to_string(v) + " without arriving");
        } else {
          out.push_back(st);
          ++k;
        }
      }
      w = std::move(out);
    }
  }
  c.ynet.remove_edge(e1.id);
  c.ynet.remove_edge(e2.id);
  c.ynet.remove_vertex(v);
  c.ynet.add_edge(e1.id, w1, w2);
}

}  // namespace

void smooth_edge(MedialComplex& c, int edge, RewriteContext& ctx) {
  auto ps = passages(c, StepKind::Y, edge);
  if (ps.size() != 2) {
    throw std::logic_error("smoothing edge " + std::to_string(edge) + " with " + std::to_string(ps.size()) +
                           " passages");
  }
  const Pos p1 = ps[0];
  Pos p2 = ps[1];
  const bool is_loop = c.ynet.edge(edge).is_loop();

  if (p1.sheet == p2.sheet && p1.boundary == p2.boundary) {
    Sheet& s = c.sheets[p1.sheet];
    Walk w = rotate(s.boundaries[p1.boundary].walk, p1.index);
    std::size_t n = w.size();
    std::size_t j = (p2.index + n - p1.index) % n;
    Walk u(w.begin() + 1, w.begin() + static_cast<std::ptrdiff_t>(j));
    Walk v(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end());
    std::vector<Boundary> repl;
    if (w[0].forward != w[j].forward) {
      // a U a^-1 V splits into U and V.
      if (is_loop && (j == 1 || j == n - 1)) throw std::runtime_error("cannot zip a folded loop edge");
      if (j == 1) require_tip(c, c.head(w[0]), edge);
      if (j == n - 1) require_tip(c, c.tail(w[0]), edge);
      if (!u.empty()) repl.push_back(Boundary::attached(u));
      if (!v.empty()) repl.push_back(Boundary::attached(v));
    } else {
      // a U a V becomes U V^-1 with a crosscap.
      Walk r = u;
      append(r, reverse_walk(v));
      set_surface(s, s.weighted_genus() + 1, false);
      if (!r.empty()) repl.push_back(Boundary::attached(r));
    }
    auto it = s.boundaries.erase(s.boundaries.begin() + static_cast<std::ptrdiff_t>(p1.boundary));
    s.boundaries.insert(it, repl.begin(), repl.end());
  } else if (p1.sheet == p2.sheet) {
    Sheet& s = c.sheets[p1.sheet];
    Walk w1 = rotate(s.boundaries[p1.boundary].walk, p1.index);
    Walk w2 = rotate(s.boundaries[p2.boundary].walk, p2.index);
    bool opposite = w1[0].forward != w2[0].forward;
    Walk merged(w1.begin() + 1, w1.end());
    Walk rest(w2.begin() + 1, w2.end());
    append(merged, opposite ? rest : reverse_walk(rest));
    set_surface(s, s.weighted_genus() + 2, s.orientable && opposite);
    std::size_t hi = std::max(p1.boundary, p2.boundary);
    std::size_t lo = std::min(p1.boundary, p2.boundary);
    s.boundaries.erase(s.boundaries.begin() + static_cast<std::ptrdiff_t>(hi));
    if (merged.empty()) {
      s.boundaries.erase(s.boundaries.begin() + static_cast<std::ptrdiff_t>(lo));
    } else {
      s.boundaries[lo] = Boundary::attached(merged);
    }
  } else {
    Sheet s1 = c.sheets[p1.sheet];
    Sheet s2 = c.sheets[p2.sheet];
    bool same_dir = s1.boundaries[p1.boundary].walk[p1.index].forward ==
                    s2.boundaries[p2.boundary].walk[p2.index].forward;
    if (same_dir) {
      if (s2.orientable) {
        flip_sheet(s2);
      } else {
        auto& w = s2.boundaries[p2.boundary].walk;
        w = reverse_walk(w);
      }
      p2.index = s2.boundaries[p2.boundary].walk.size() - 1 - p2.index;
    }
    Walk w1 = rotate(s1.boundaries[p1.boundary].walk, p1.index);
    Walk w2 = rotate(s2.boundaries[p2.boundary].walk, p2.index);
    Walk merged(w1.begin() + 1, w1.end());
    append(merged, Walk(w2.begin() + 1, w2.end()));

    Sheet m;
    m.id = std::min(s1.id, s2.id);
    set_surface(m, s1.weighted_genus() + s2.weighted_genus(), s1.orientable && s2.orientable);
    for (std::size_t b = 0; b < s1.boundaries.size(); ++b) {
      if (b != p1.boundary) {
        m.boundaries.push_back(s1.boundaries[b]);
      } else if (!merged.empty()) {
        m.boundaries.push_back(Boundary::attached(merged));
      }
    }
    for (std::size_t b = 0; b < s2.boundaries.size(); ++b) {
      if (b != p2.boundary) m.boundaries.push_back(s2.boundaries[b]);
    }
    std::size_t keep = s1.id < s2.id ? p1.sheet : p2.sheet;
    std::size_t drop = s1.id < s2.id ? p2.sheet : p1.sheet;
    c.sheets[keep] = std::move(m);
    c.sheets.erase(c.sheets.begin() + static_cast<std::ptrdiff_t>(drop));
    ctx.sheet_alias.unite(s1.id, s2.id);
  }
  c.ynet.remove_edge(edge);
}

void normalize(MedialComplex& c) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v : std::vector<int>(c.ynet.vertices())) {
      int deg = c.ynet.valence(v);
      auto ends = arc_ends_at(c, v);
      if (deg == 0) {
        if (ends.empty()) {
          c.ynet.remove_vertex(v);
        } else if (ends.size() == 2) {
          fuse_arcs(c, v, ends[0], ends[1]);
        } else {
          throw std::runtime_error("bare vertex " + std::to_string(v) + " with a single arc end");
        }
        changed = true;
        break;
      }
      if (deg == 2 && !c.ynet.is_artificial(v) && ends.empty()) {
        suppress_vertex(c, v);
        changed = true;
        break;
      }
    }
  }
  for (int v : c.ynet.vertices()) {
    if (c.ynet.is_artificial(v)) continue;
    int deg = c.ynet.valence(v);
    auto n = arc_ends_at(c, v).size();
    if (!((deg == 4 && n == 0) || (deg == 1 && n == 1))) {
      throw std::runtime_error("vertex " + std::to_string(v) + " left with Y-valence " + std::to_string(deg) +
                               " and " + std::to_string(n) + " arc ends");
    }
  }
}

MedialComplex unglue_from(MedialComplex c, int p, RewriteContext& ctx) {
  FinRecord f = trace_fin(c, p);
  if (f.junction_free()) throw std::runtime_error("fin trace from " + std::to_string(p) + " crosses no junction");
  const Step s1 = f.support[0];
  const Step s2 = f.support[1];
  if (s1.id == s2.id) throw std::runtime_error("fin trace from " + std::to_string(p) + " doubles back");

  Split sp = split_edge(c, s2.id);
  const Step s2_near = s2.forward ? Step{StepKind::Y, sp.first, true} : Step{StepKind::Y, sp.second, false};
  Pos pos = orient_to(c, f.source_arc, p);
  Walk& w = walk_at(c, pos);
  std::size_t n = w.size();
  std::size_t i = pos.index;
  if (w[(i + 1) % n] != s1 || w[(i + 2) % n] != s2_near) {
    throw std::runtime_error("fin walk from " + std::to_string(p) + " does not follow its trace");
  }
  int from = c.tail(w[i]);
  int arc = fresh_arc(c);
  replace_range(w, i, 3, {Step{StepKind::Arc, arc, true}});
  erase_arc(c, f.source_arc);
  add_arc(c, {arc, from, sp.vertex});

  smooth_edge(c, s1.id, ctx);
  smooth_edge(c, s2_near.id, ctx);
  normalize(c);
  if (!c.ynet.has_vertex(p) && c.ynet.has_vertex(sp.vertex)) rename_vertex(c, sp.vertex, p);
  c.fins.clear();
  return c;
}

MedialComplex cut_essential(MedialComplex c, const FinRecord& f, RewriteContext&, CutInfo& info) {
  if (!f.essential) throw std::invalid_argument("fin " + f.label + " is not essential");
  if (!f.junction_free()) throw std::invalid_argument("fin " + f.label + " crosses a junction");
  const Step s = f.support.front();
  Pos pos = orient_to(c, f.source_arc, f.start_point);
  Walk& w = walk_at(c, pos);
  std::size_t n = w.size();
  std::size_t i = pos.index;
  const Step after = w[(i + 2) % n];
  if (w[(i + 1) % n] != s || after.kind != StepKind::Arc) {
    throw std::runtime_error("fin walk for " + f.label + " does not follow its trace");
  }
  info.fin_sheet = c.sheets[pos.sheet].id;
  if (after.id == f.source_arc) {
    c.sheets[pos.sheet].boundaries[pos.boundary] = Boundary::edge();
    erase_arc(c, f.source_arc);
  } else {
    int from = c.tail(w[i]);
    int to = c.head(after);
    int id = std::min(f.source_arc, after.id);
    replace_range(w, i, 3, {Step{StepKind::Arc, id, true}});
    erase_arc(c, f.source_arc);
    erase_arc(c, after.id);
    add_arc(c, {id, from, to});
  }

  auto slit = passages(c, StepKind::Y, s.id);
  if (slit.size() != 2 || slit[0].sheet != slit[1].sheet || slit[0].boundary != slit[1].boundary ||
      walk_at(c, slit[0]).size() != 2) {
    throw std::runtime_error("base passages along fin " + f.label + " do not form a slit");
  }
  Sheet& base = c.sheets[slit[0].sheet];
  info.base_sheet = base.id;
  base.boundaries.erase(base.boundaries.begin() + static_cast<std::ptrdiff_t>(slit[0].boundary));
  c.ynet.remove_edge(s.id);
  normalize(c);
  c.fins.clear();
  return c;
}

MedialComplex contract_inessential(MedialComplex c, const FinRecord& f, RewriteContext&) {
  if (c.arcs.empty()) throw std::invalid_argument("complex has no fins");
  if (f.essential) throw std::invalid_argument("fin " + f.label + " is essential");
  if (!f.junction_free()) throw std::invalid_argument("fin " + f.label + " crosses a junction");
  const Step s = f.support.front();
  Pos pos = orient_to(c, f.source_arc, f.start_point);
  Walk& w = walk_at(c, pos);
  std::size_t n = w.size();
  std::size_t i = pos.index;
  const Step last = w[(i + 4) % n];
  if (n < 4 || w[(i + 1) % n] != s || w[(i + 2) % n] != s.reversed() || w[(i + 3) % n] != s ||
      last.kind != StepKind::Arc) {
    throw std::runtime_error("fin walk for " + f.label + " is not a notch");
  }
  if (last.id == f.source_arc) {
    if (n != 4) throw std::runtime_error("fin walk for " + f.label + " is not a notch");
    c.sheets[pos.sheet].boundaries[pos.boundary] = Boundary::edge();
    erase_arc(c, f.source_arc);
  } else {
    int from = c.tail(w[i]);
    int to = c.head(last);
    int id = std::min(f.source_arc, last.id);
    replace_range(w, i, 5, {Step{StepKind::Arc, id, true}});
    erase_arc(c, f.source_arc);
    erase_arc(c, last.id);
    add_arc(c, {id, from, to});
  }
  if (!passages(c, StepKind::Y, s.id).empty()) {
    throw std::runtime_error("edge under fin " + f.label + " is still covered");
  }
  c.ynet.remove_edge(s.id);
  normalize(c);
  c.fins.clear();
  return c;
}

}  // namespace medial::detail

namespace medial {

MedialComplex unglue_from(const MedialComplex& c, int p) {
  detail::RewriteContext ctx;
  return detail::unglue_from(c, p, ctx);
}

MedialComplex slide_fin(const MedialComplex& c, const FinRecord& f) {
  detail::RewriteContext ctx;
  MedialComplex out = c;
  std::size_t guard = out.junctions().size() + 1;
  while (!trace_fin(out, f.start_point).junction_free()) {
    if (guard-- == 0) throw std::logic_error("sliding fin " + f.label + " does not terminate");
    out = detail::unglue_from(std::move(out), f.start_point, ctx);
  }
  return out;
}

MedialComplex cut_essential(const MedialComplex& c, const FinRecord& f, CutInfo* info) {
  detail::RewriteContext ctx;
  CutInfo local;
  auto out = detail::cut_essential(c, f, ctx, local);
  if (info != nullptr) *info = local;
  return out;
}

MedialComplex contract_inessential(const MedialComplex& c, const FinRecord& f) {
  detail::RewriteContext ctx;
  return detail::contract_inessential(c, f, ctx);
}

}  // namespace medial
