#include "medial/extended_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "union_find.hpp"

namespace medial {

namespace {
const std::map<std::string, std::string> kNoAttrs;
}

void ExtendedGraph::add_vertex(int id, bool artificial) {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it != vertices_.end() && *it == id) {
    throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
  }
  vertices_.insert(it, id);
  if (artificial) artificial_.insert(id);
}

void ExtendedGraph::add_edge(int id, int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) {
    throw std::invalid_argument("edge " + std::to_string(id) + " has an undeclared endpoint");
  }
  if (has_edge(id)) throw std::invalid_argument("duplicate edge id " + std::to_string(id));
  GraphEdge e{id, u, v};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e,
                             [](const GraphEdge& a, const GraphEdge& b) { return a.id < b.id; });
  edges_.insert(it, e);
}

void ExtendedGraph::remove_edge(int id) {
  auto it = std::find_if(edges_.begin(), edges_.end(), [id](const GraphEdge& e) { return e.id == id; });
  if (it == edges_.end()) throw std::invalid_argument("no edge " + std::to_string(id));
  edges_.erase(it);
  edge_attrs_.erase(id);
}

void ExtendedGraph::remove_vertex(int id) {
  for (const auto& e : edges_) {
    if (e.u == id || e.v == id) {
      throw std::invalid_argument("vertex " + std::to_string(id) + " still has edges");
    }
  }
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) throw std::invalid_argument("no vertex " + std::to_string(id));
  vertices_.erase(it);
  artificial_.erase(id);
  vertex_attrs_.erase(id);
}

void ExtendedGraph::set_artificial(int id, bool artificial) {
  if (!has_vertex(id)) throw std::invalid_argument("no vertex " + std::to_string(id));
  if (artificial) {
    artificial_.insert(id);
  } else {
    artificial_.erase(id);
  }
}

bool ExtendedGraph::has_vertex(int id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

bool ExtendedGraph::has_edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const GraphEdge& a, int key) { return a.id < key; });
  return it != edges_.end() && it->id == id;
}

const GraphEdge& ExtendedGraph::edge(int id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const GraphEdge& a, int key) { return a.id < key; });
  if (it == edges_.end() || it->id != id) throw std::invalid_argument("no edge " + std::to_string(id));
  return *it;
}

int ExtendedGraph::valence(int vertex) const {
  int n = 0;
  for (const auto& e : edges_) {
    if (e.u == vertex) ++n;
    if (e.v == vertex) ++n;
  }
  return n;
}

int ExtendedGraph::max_vertex_id() const { return vertices_.empty() ? 0 : vertices_.back(); }

int ExtendedGraph::max_edge_id() const { return edges_.empty() ? 0 : edges_.back().id; }

void ExtendedGraph::set_vertex_attr(int vertex, const std::string& key, const std::string& value) {
  vertex_attrs_[vertex][key] = value;
}

void ExtendedGraph::set_edge_attr(int edge, const std::string& key, const std::string& value) {
  edge_attrs_[edge][key] = value;
}

const std::map<std::string, std::string>& ExtendedGraph::vertex_attrs(int vertex) const {
  auto it = vertex_attrs_.find(vertex);
  return it == vertex_attrs_.end() ? kNoAttrs : it->second;
}

const std::map<std::string, std::string>& ExtendedGraph::edge_attrs(int edge) const {
  auto it = edge_attrs_.find(edge);
  return it == edge_attrs_.end() ? kNoAttrs : it->second;
}

bool ExtendedGraph::operator==(const ExtendedGraph& other) const {
  return directed_ == other.directed_ && vertices_ == other.vertices_ &&
         artificial_ == other.artificial_ && edges_ == other.edges_;
}

bool SpanningForest::is_tree_edge(int edge_id) const {
  for (const auto& t : trees) {
    if (std::find(t.tree_edges.begin(), t.tree_edges.end(), edge_id) != t.tree_edges.end()) return true;
  }
  return false;
}

std::size_t SpanningForest::non_tree_count() const {
  std::size_t n = 0;
  for (const auto& t : trees) n += t.non_tree_edges.size();
  return n;
}

int ReducedWeightedGraph::valence(int vertex) const {
  auto it = weight.find(vertex);
  int n = it == weight.end() ? 0 : it->second;
  for (const auto& e : edges) {
    if (e.u == vertex || e.v == vertex) n += e.multiplicity;
  }
  return n;
}

int ReducedWeightedGraph::betti1() const {
  detail::UnionFind uf;
  for (int v : vertices) uf.add(v);
  long long edge_total = 0;
  for (const auto& [v, w] : weight) edge_total += w / 2;
  for (const auto& e : edges) {
    edge_total += e.multiplicity;
    uf.unite(e.u, e.v);
  }
  std::set<int> roots;
  for (int v : vertices) roots.insert(uf.find(v));
  return static_cast<int>(edge_total - static_cast<long long>(vertices.size()) +
                          static_cast<long long>(roots.size()));
}

std::map<int, int> component_index(const ExtendedGraph& g) {
  detail::UnionFind uf;
  for (int v : g.vertices()) uf.add(v);
  for (const auto& e : g.edges()) uf.unite(e.u, e.v);
  // Roots are the smallest vertex of each component, so ordering by root
  // orders components by smallest vertex id.
  std::map<int, int> root_rank;
  for (int v : g.vertices()) root_rank.try_emplace(uf.find(v), 0);
  int next = 0;
  for (auto& [root, rank] : root_rank) rank = next++;
  std::map<int, int> out;
  for (int v : g.vertices()) out[v] = root_rank[uf.find(v)];
  return out;
}

std::vector<ExtendedGraph> components(const ExtendedGraph& g) {
  auto index = component_index(g);
  int count = 0;
  for (const auto& [v, c] : index) count = std::max(count, c + 1);
  std::vector<ExtendedGraph> out(count, ExtendedGraph(g.directed()));
  for (int v : g.vertices()) {
    auto& part = out[index[v]];
    part.add_vertex(v, g.is_artificial(v));
    for (const auto& [k, val] : g.vertex_attrs(v)) part.set_vertex_attr(v, k, val);
  }
  for (const auto& e : g.edges()) {
    auto& part = out[index[e.u]];
    part.add_edge(e.id, e.u, e.v);
    for (const auto& [k, val] : g.edge_attrs(e.id)) part.set_edge_attr(e.id, k, val);
  }
  return out;
}

int betti1(const ExtendedGraph& g) {
  auto index = component_index(g);
  std::set<int> comps;
  for (const auto& [v, c] : index) comps.insert(c);
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) +
         static_cast<int>(comps.size());
}

SpanningForest maximal_tree(const ExtendedGraph& g) {
  auto index = component_index(g);
  int count = 0;
  for (const auto& [v, c] : index) count = std::max(count, c + 1);
  SpanningForest forest;
  forest.trees.resize(count);
  for (auto& t : forest.trees) t.root = -1;
  for (int v : g.vertices()) {
    auto& t = forest.trees[index[v]];
    if (t.root == -1) t.root = v;
    t.vertices.push_back(v);
  }
  detail::UnionFind uf;
  for (int v : g.vertices()) uf.add(v);
  for (const auto& e : g.edges()) {
    auto& t = forest.trees[index[e.u]];
    if (uf.unite(e.u, e.v)) {
      t.tree_edges.push_back(e.id);
    } else {
      t.non_tree_edges.push_back(e.id);
    }
  }
  return forest;
}

long long free_rank_m_valent(long long k, long long m) {
  if (k < 0 || m < 0) throw std::invalid_argument("vertex count and valence must be nonnegative");
  if (k == 0) return 1;
  if ((k * m) % 2 != 0) {
    throw std::invalid_argument("no graph has " + std::to_string(k) + " vertices of odd valence " +
                                std::to_string(m));
  }
  return k * (m - 2) / 2 + 1;
}

ReducedWeightedGraph reduce_weighted(const ExtendedGraph& g) {
  ReducedWeightedGraph r;
  r.vertices = g.vertices();
  for (int v : g.vertices()) r.weight[v] = 0;
  std::map<std::pair<int, int>, int> bundles;
  for (const auto& e : g.edges()) {
    if (e.is_loop()) {
      r.weight[e.u] += 2;
    } else {
      ++bundles[{std::min(e.u, e.v), std::max(e.u, e.v)}];
    }
  }
  for (const auto& [key, mult] : bundles) r.edges.push_back({key.first, key.second, mult});
  return r;
}

}  // namespace medial
