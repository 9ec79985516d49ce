#include "medial/fins.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace medial {

std::string to_string(FinClass c) {
  switch (c) {
    case FinClass::EssentialType1:
      return "essential-type1";
    case FinClass::EssentialType2:
      return "essential-type2";
    case FinClass::Inessential:
      return "inessential";
  }
  return "?";
}

namespace {

struct ArcPosition {
  std::size_t sheet = 0;
  std::size_t boundary = 0;
  std::size_t index = 0;
};

ArcPosition locate_arc(const MedialComplex& c, int arc_id) {
  for (std::size_t s = 0; s < c.sheets.size(); ++s) {
    const auto& bs = c.sheets[s].boundaries;
    for (std::size_t b = 0; b < bs.size(); ++b) {
      const auto& w = bs[b].walk;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i].kind == StepKind::Arc && w[i].id == arc_id) return {s, b, i};
      }
    }
  }
  throw std::runtime_error("arc " + std::to_string(arc_id) + " is on no boundary");
}

int arc_at(const MedialComplex& c, int point) {
  for (const auto& a : c.arcs) {
    if (a.from == point || a.to == point) return a.id;
  }
  throw std::runtime_error("fin point " + std::to_string(point) + " has no arc");
}

bool is_fin_point(const MedialComplex& c, int v) {
  return !c.ynet.is_artificial(v) && c.ynet.valence(v) == 1;
}

}  // namespace

FinRecord trace_fin(const MedialComplex& c, int fin_point) {
  FinRecord r;
  r.start_point = fin_point;
  r.source_arc = arc_at(c, fin_point);
  auto pos = locate_arc(c, r.source_arc);
  const auto& sheet = c.sheets[pos.sheet];
  Walk w = sheet.boundaries[pos.boundary].walk;
  std::size_t n = w.size();
  std::size_t i = pos.index;
  if (c.head(w[i]) != fin_point) {
    w = reverse_walk(w);
    i = n - 1 - i;
  }
  r.fin_sheet = sheet.id;
  for (std::size_t k = 1; k <= n; ++k) {
    const Step& st = w[(i + k) % n];
    if (st.kind != StepKind::Y) {
      throw std::runtime_error("fin trace from " + std::to_string(fin_point) + " meets an arc before a fin point");
    }
    r.support.push_back(st);
    int h = c.head(st);
    if (is_fin_point(c, h)) {
      r.end_point = h;
      const Step& next = w[(i + k + 1) % n];
      r.essential = next.kind == StepKind::Arc;
      r.end_sheet = c.sheets[locate_arc(c, arc_at(c, h)).sheet].id;
      r.label = std::to_string(r.start_point) + "-" + std::to_string(r.end_point);
      return r;
    }
    r.junctions.push_back(h);
  }
  throw std::runtime_error("fin trace from " + std::to_string(fin_point) + " never reaches a fin point");
}

std::vector<FinRecord> fin_records(const MedialComplex& c) {
  std::map<int, FinRecord> traces;
  for (int p : c.fin_points()) traces[p] = trace_fin(c, p);
  std::vector<FinRecord> out;
  for (const auto& [p, r] : traces) {
    int q = r.end_point;
    if (q < p && traces.at(q).end_point == p) continue;
    out.push_back(r);
  }
  for (std::size_t k = 0; k < out.size(); ++k) out[k].id = static_cast<int>(k) + 1;

  for (auto& r : out) {
    if (!r.essential) {
      r.cls = FinClass::Inessential;
      continue;
    }
    std::set<int> mine;
    for (const auto& st : r.support) mine.insert(st.id);
    bool shares = false;
    for (const auto& other : out) {
      if (other.id == r.id || !other.essential) continue;
      for (const auto& st : other.support) {
        if (mine.count(st.id)) shares = true;
      }
    }
    r.cls = shares ? FinClass::EssentialType2 : FinClass::EssentialType1;
  }
  return out;
}

std::vector<FinRecord> classify_fin_curves(const MedialComplex& c) { return fin_records(c); }

}  // namespace medial
