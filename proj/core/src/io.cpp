#include "medial/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace medial {

using Json = nlohmann::ordered_json;

std::string to_string(ParseErrorKind k) {
  switch (k) {
    case ParseErrorKind::MalformedJson:
      return "malformed-json";
    case ParseErrorKind::UnknownVersion:
      return "unknown-version";
    case ParseErrorKind::Schema:
      return "schema";
    case ParseErrorKind::Validation:
      return "validation";
  }
  return "?";
}

namespace {

std::string describe(ParseErrorKind kind, const std::string& path, const std::string& message, int line, int column) {
  std::string out = to_string(kind) + " error";
  if (line > 0) out += " at line " + std::to_string(line) + ", column " + std::to_string(column);
  if (!path.empty()) out += " at " + path;
  return out + ": " + message;
}

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
  throw ParseError(ParseErrorKind::Schema, path, message);
}

const Json& field(const Json& obj, const char* key, const std::string& path) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_field(const Json& obj, const char* key, const std::string& path) {
  const Json& v = field(obj, key, path);
  if (!v.is_number_integer()) schema_error(path + "/" + key, "expected an integer");
  return v.get<int>();
}

int nonneg_field(const Json& obj, const char* key, const std::string& path) {
  int v = int_field(obj, key, path);
  if (v < 0) schema_error(path + "/" + key, "expected a non-negative integer");
  return v;
}

bool bool_field(const Json& obj, const char* key, const std::string& path, bool fallback) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  if (!it->is_boolean()) schema_error(path + "/" + key, "expected a boolean");
  return it->get<bool>();
}

const Json& array_field(const Json& obj, const char* key, const std::string& path, bool required) {
  static const Json empty = Json::array();
  auto it = obj.find(key);
  if (it == obj.end()) {
    if (required) schema_error(path, std::string("missing field \"") + key + "\"");
    return empty;
  }
  if (!it->is_array()) schema_error(path + "/" + key, "expected an array");
  return *it;
}

void expect_object(const Json& v, const std::string& path) {
  if (!v.is_object()) schema_error(path, "expected an object");
}

void check_unique(std::set<int>& seen, int id, const std::string& what, const std::string& path) {
  if (!seen.insert(id).second) schema_error(path, "duplicate " + what + " id " + std::to_string(id));
}

MedialComplex from_json(const Json& doc) {
  expect_object(doc, "");
  const Json& version = field(doc, "version", "");
  if (!version.is_number_integer()) schema_error("/version", "expected an integer");
  if (version.get<int>() != kFormatVersion) {
    throw ParseError(ParseErrorKind::UnknownVersion, "/version",
                     "version " + version.dump() + " is not supported (expected " + std::to_string(kFormatVersion) + ")");
  }

  MedialComplex c;
  if (auto it = doc.find("metadata"); it != doc.end()) {
    expect_object(*it, "/metadata");
    if (auto n = it->find("name"); n != it->end()) {
      if (!n->is_string()) schema_error("/metadata/name", "expected a string");
      c.metadata.name = n->get<std::string>();
    }
    if (auto d = it->find("description"); d != it->end()) {
      if (!d->is_string()) schema_error("/metadata/description", "expected a string");
      c.metadata.description = d->get<std::string>();
    }
    c.metadata.reconstruction = bool_field(*it, "reconstruction", "/metadata", false);
  }

  const Json& ynet = field(doc, "ynet", "");
  expect_object(ynet, "/ynet");
  std::set<int> vids, eids, aids, sids, fids;
  const Json& vertices = array_field(ynet, "vertices", "/ynet", true);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::string path = "/ynet/vertices/" + std::to_string(i);
    expect_object(vertices[i], path);
    int id = int_field(vertices[i], "id", path);
    check_unique(vids, id, "vertex", path);
    c.ynet.add_vertex(id, bool_field(vertices[i], "artificial", path, false));
  }
  const Json& edges = array_field(ynet, "edges", "/ynet", true);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string path = "/ynet/edges/" + std::to_string(i);
    expect_object(edges[i], path);
    int id = int_field(edges[i], "id", path);
    check_unique(eids, id, "edge", path);
    int u = int_field(edges[i], "u", path), v = int_field(edges[i], "v", path);
    if (!vids.count(u)) schema_error(path + "/u", "unknown vertex " + std::to_string(u));
    if (!vids.count(v)) schema_error(path + "/v", "unknown vertex " + std::to_string(v));
    c.ynet.add_edge(id, u, v);
  }

  const Json& arcs = array_field(doc, "arcs", "", false);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::string path = "/arcs/" + std::to_string(i);
    expect_object(arcs[i], path);
    Arc a{int_field(arcs[i], "id", path), int_field(arcs[i], "from", path), int_field(arcs[i], "to", path)};
    check_unique(aids, a.id, "arc", path);
    if (!vids.count(a.from)) schema_error(path + "/from", "unknown vertex " + std::to_string(a.from));
    if (!vids.count(a.to)) schema_error(path + "/to", "unknown vertex " + std::to_string(a.to));
    c.arcs.push_back(a);
  }

  const Json& sheets = array_field(doc, "sheets", "", true);
  if (sheets.empty()) schema_error("/sheets", "sheet list is empty");
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    std::string path = "/sheets/" + std::to_string(i);
    expect_object(sheets[i], path);
    Sheet s;
    s.id = int_field(sheets[i], "id", path);
    check_unique(sids, s.id, "sheet", path);
    s.genus = nonneg_field(sheets[i], "genus", path);
    const Json& o = field(sheets[i], "orientable", path);
    if (!o.is_boolean()) schema_error(path + "/orientable", "expected a boolean");
    s.orientable = o.get<bool>();
    const Json& bds = array_field(sheets[i], "boundaries", path, true);
    for (std::size_t b = 0; b < bds.size(); ++b) {
      std::string bpath = path + "/boundaries/" + std::to_string(b);
      expect_object(bds[b], bpath);
      bool edge = bool_field(bds[b], "edge_curve", bpath, false);
      auto w = bds[b].find("walk");
      if (edge) {
        if (w != bds[b].end()) schema_error(bpath, "an edge curve has no walk");
        s.boundaries.push_back(Boundary::edge());
        continue;
      }
      if (w == bds[b].end() || !w->is_array() || w->empty()) schema_error(bpath, "expected a non-empty walk");
      Walk walk;
      for (std::size_t k = 0; k < w->size(); ++k) {
        std::string spath = bpath + "/walk/" + std::to_string(k);
        if (!(*w)[k].is_string()) schema_error(spath, "expected a step label");
        Step st;
        try {
          st = parse_step((*w)[k].get<std::string>());
        } catch (const std::invalid_argument& e) {
          schema_error(spath, e.what());
        }
        if (st.kind == StepKind::Y && !eids.count(st.id)) schema_error(spath, "unknown edge " + std::to_string(st.id));
        if (st.kind == StepKind::Arc && !aids.count(st.id)) schema_error(spath, "unknown arc " + std::to_string(st.id));
        walk.push_back(st);
      }
      s.boundaries.push_back(Boundary::attached(std::move(walk)));
    }
    c.sheets.push_back(std::move(s));
  }

  const Json& fins = array_field(doc, "fins", "", false);
  for (std::size_t i = 0; i < fins.size(); ++i) {
    std::string path = "/fins/" + std::to_string(i);
    expect_object(fins[i], path);
    FinDeclaration f{int_field(fins[i], "id", path), int_field(fins[i], "p", path), int_field(fins[i], "q", path)};
    check_unique(fids, f.id, "fin", path);
    c.fins.push_back(f);
  }
  return c;
}

Json to_json(const MedialComplex& c) {
  Json doc;
  doc["version"] = kFormatVersion;
  doc["metadata"] = {{"name", c.metadata.name},
                     {"description", c.metadata.description},
                     {"reconstruction", c.metadata.reconstruction}};
  Json vertices = Json::array();
  for (int v : c.ynet.vertices()) {
    Json jv = {{"id", v}};
    if (c.ynet.is_artificial(v)) jv["artificial"] = true;
    vertices.push_back(jv);
  }
  Json edges = Json::array();
  for (const auto& e : c.ynet.edges()) edges.push_back({{"id", e.id}, {"u", e.u}, {"v", e.v}});
  doc["ynet"] = {{"vertices", vertices}, {"edges", edges}};
  Json arcs = Json::array();
  for (const auto& a : c.arcs) arcs.push_back({{"id", a.id}, {"from", a.from}, {"to", a.to}});
  doc["arcs"] = arcs;
  Json sheets = Json::array();
  for (const auto& s : c.sheets) {
    Json bds = Json::array();
    for (const auto& b : s.boundaries) {
      if (b.edge_curve) {
        bds.push_back({{"edge_curve", true}});
        continue;
      }
      Json walk = Json::array();
      for (const auto& st : b.walk) walk.push_back(step_label(st));
      bds.push_back({{"walk", walk}});
    }
    sheets.push_back({{"id", s.id}, {"genus", s.genus}, {"orientable", s.orientable}, {"boundaries", bds}});
  }
  doc["sheets"] = sheets;
  Json fins = Json::array();
  for (const auto& f : c.fins) fins.push_back({{"id", f.id}, {"p", f.p}, {"q", f.q}});
  doc["fins"] = fins;
  return doc;
}

void line_column(const std::string& text, std::size_t byte, int& line, int& column) {
  line = 1;
  column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
}

}  // namespace

ParseError::ParseError(ParseErrorKind kind, std::string path, std::string message, int line, int column)
    : std::runtime_error(describe(kind, path, message, line, column)),
      kind_(kind),
      path_(std::move(path)),
      line_(line),
      column_(column) {}

Step parse_step(const std::string& label) {
  if (label.size() < 2 || (label[0] != '+' && label[0] != '-')) {
    throw std::invalid_argument("bad step label \"" + label + "\"");
  }
  Step s;
  s.forward = label[0] == '+';
  std::size_t pos = 1;
  if (label[1] == 'a') {
    s.kind = StepKind::Arc;
    pos = 2;
  }
  if (pos >= label.size() || label.find_first_not_of("0123456789", pos) != std::string::npos) {
    throw std::invalid_argument("bad step label \"" + label + "\"");
  }
  s.id = std::stoi(label.substr(pos));
  return s;
}

MedialComplex parse_complex(const std::string& text, const ParseOptions& opts) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    int line = 0, column = 0;
    line_column(text, e.byte > 0 ? e.byte - 1 : 0, line, column);
    throw ParseError(ParseErrorKind::MalformedJson, "", e.what(), line, column);
  }
  MedialComplex c = from_json(doc);
  if (opts.validate) {
    ValidationReport r = validate_complex(c);
    if (!r.ok()) {
      ParseError err(ParseErrorKind::Validation, r.violations.front().location, r.to_text());
      err.set_report(std::move(r));
      throw err;
    }
  }
  return c;
}

MedialComplex load_complex(const std::string& path, const ParseOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str(), opts);
}

std::string serialize_complex(const MedialComplex& c) { return to_json(c).dump(2) + "\n"; }

std::string dot_ynet(const MedialComplex& c) {
  return to_dot(c.ynet, c.metadata.name.empty() ? "ynet" : c.metadata.name + " ynet");
}

std::string dot_lambda(const ComponentGraph& lambda, const std::string& name) {
  ExtendedGraph g = lambda.graph;
  for (int v : g.vertices()) {
    if (lambda.is_sheet_vertex(v)) {
      g.set_vertex_attr(v, "shape", "box");
    } else {
      g.set_vertex_attr(v, "shape", "circle");
      g.set_vertex_attr(v, "style", "filled");
    }
  }
  return to_dot(g, name);
}

std::string dot_gamma(const TopLevelGraph& gamma) { return to_dot(gamma.graph, "Gamma"); }

}  // namespace medial
