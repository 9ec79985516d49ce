#include <sstream>

#include "medial/extended_graph.hpp"

namespace medial {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

void write_attrs(std::ostringstream& os, const std::map<std::string, std::string>& attrs) {
  if (attrs.empty()) return;
  os << " [";
  bool first = true;
  for (const auto& [k, v] : attrs) {
    if (!first) os << ", ";
    first = false;
    os << k << "=" << quote(v);
  }
  os << "]";
}

}  // namespace

std::string to_dot(const ExtendedGraph& g, const std::string& name) {
  std::ostringstream os;
  const char* arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph " : "graph ") << quote(name) << " {\n";
  for (int v : g.vertices()) {
    auto attrs = g.vertex_attrs(v);
    if (g.is_artificial(v)) {
      attrs.try_emplace("shape", "point");
      attrs.try_emplace("style", "dashed");
    }
    os << "  v" << v;
    write_attrs(os, attrs);
    os << ";\n";
  }
  for (const auto& e : g.edges()) {
    auto attrs = g.edge_attrs(e.id);
    attrs.try_emplace("label", std::to_string(e.id));
    os << "  v" << e.u << arrow << "v" << e.v;
    write_attrs(os, attrs);
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ReducedWeightedGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quote(name) << " {\n";
  for (int v : g.vertices) {
    auto it = g.weight.find(v);
    int w = it == g.weight.end() ? 0 : it->second;
    os << "  v" << v << " [label=" << quote(std::to_string(v) + " (w=" + std::to_string(w) + ")") << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  v" << e.u << " -- v" << e.v << " [label=" << quote(std::to_string(e.multiplicity)) << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace medial
