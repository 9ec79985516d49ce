#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace medial {

struct GraphEdge {
  int id = 0;
  int u = 0;
  int v = 0;

  bool is_loop() const { return u == v; }
  bool operator==(const GraphEdge&) const = default;
};

/**
 * Multigraph allowing loops and parallel edges.
 *
 * Vertices tagged as artificial stand in for bare circles: a circle is
 * encoded as one artificial vertex carrying one loop. Artificial vertices
 * are real 0-cells for Betti numbers and trees, but they are not counted by
 * counted_vertex_count().
 *
 * Directedness only matters for export; every numeric invariant treats the
 * graph as undirected.
 */
class ExtendedGraph {
 public:
  ExtendedGraph() = default;
  explicit ExtendedGraph(bool directed) : directed_(directed) {}

  void add_vertex(int id, bool artificial = false);
  void add_edge(int id, int u, int v);
  void remove_edge(int id);
  void remove_vertex(int id);
  void set_artificial(int id, bool artificial);

  bool directed() const { return directed_; }
  const std::vector<int>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }

  bool has_vertex(int id) const;
  bool has_edge(int id) const;
  bool is_artificial(int id) const { return artificial_.count(id) != 0; }
  const std::set<int>& artificial_vertices() const { return artificial_; }
  const GraphEdge& edge(int id) const;

  /// Non-loop incidences plus two per loop.
  int valence(int vertex) const;
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t counted_vertex_count() const { return vertices_.size() - artificial_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  int max_vertex_id() const;
  int max_edge_id() const;

  void set_vertex_attr(int vertex, const std::string& key, const std::string& value);
  void set_edge_attr(int edge, const std::string& key, const std::string& value);
  const std::map<std::string, std::string>& vertex_attrs(int vertex) const;
  const std::map<std::string, std::string>& edge_attrs(int edge) const;

  bool operator==(const ExtendedGraph& other) const;

 private:
  bool directed_ = false;
  std::vector<int> vertices_;
  std::set<int> artificial_;
  std::vector<GraphEdge> edges_;
  std::map<int, std::map<std::string, std::string>> vertex_attrs_;
  std::map<int, std::map<std::string, std::string>> edge_attrs_;
};

struct SpanningTree {
  int root = 0;
  std::vector<int> vertices;
  std::vector<int> tree_edges;
  std::vector<int> non_tree_edges;
};

struct SpanningForest {
  std::vector<SpanningTree> trees;

  bool is_tree_edge(int edge_id) const;
  std::size_t non_tree_count() const;
};

struct WeightedEdge {
  int u = 0;
  int v = 0;
  int multiplicity = 0;
  bool operator==(const WeightedEdge&) const = default;
};

/// Simple graph obtained by folding loops into vertex weights and parallel
/// bundles into edge multiplicities.
struct ReducedWeightedGraph {
  std::vector<int> vertices;
  std::map<int, int> weight;
  std::vector<WeightedEdge> edges;

  int valence(int vertex) const;
  int betti1() const;
};

/// Connected components ordered by smallest vertex id.
std::vector<ExtendedGraph> components(const ExtendedGraph& g);

/// Component index of every vertex, numbered in the order of components().
std::map<int, int> component_index(const ExtendedGraph& g);

/// First Betti number E - V + C.
int betti1(const ExtendedGraph& g);

/// Kruskal in increasing edge id; root of each tree is its smallest vertex.
SpanningForest maximal_tree(const ExtendedGraph& g);

/// Rank of pi_1 of a connected m-valent graph with k vertices; k == 0 is the
/// bare circle. Throws std::invalid_argument when k*m is odd or inputs are
/// negative.
long long free_rank_m_valent(long long k, long long m);

ReducedWeightedGraph reduce_weighted(const ExtendedGraph& g);

std::string to_dot(const ExtendedGraph& g, const std::string& name = "G");
std::string to_dot(const ReducedWeightedGraph& g, const std::string& name = "G");

}  // namespace medial
