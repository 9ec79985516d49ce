#include "medial/presentation.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace medial {

Word SYPrimeComplex::traverse(int edge, bool forward) const {
  auto it = letter_of_edge.find(edge);
  if (it == letter_of_edge.end()) return {};
  return {forward ? it->second : -it->second};
}

std::vector<std::string> SYPrimeComplex::generator_names() const {
  std::vector<std::string> names;
  int l = 0, y = 0, q = 0;
  for (Block b : generator_blocks) {
    switch (b) {
      case Block::Lambda:
        names.push_back("l" + std::to_string(++l));
        break;
      case Block::Y:
        names.push_back("t" + std::to_string(++y));
        break;
      case Block::Q:
        names.push_back("a" + std::to_string(++q));
        break;
    }
  }
  return names;
}

SYPrimeComplex build_sy_prime(const MedialComplex& c, const ComponentGraph& lambda) {
  (void)lambda;
  if (!c.fin_free()) throw std::invalid_argument("presentation needs a fin-free component");
  SYPrimeComplex out;
  const int hub_base = c.ynet.max_vertex_id() + 1;
  for (int v : c.ynet.vertices()) out.graph.add_vertex(v, c.ynet.is_artificial(v));
  for (std::size_t i = 0; i < c.sheets.size(); ++i) {
    int hub = hub_base + static_cast<int>(i);
    out.graph.add_vertex(hub);
    out.hub_of_sheet[c.sheets[i].id] = hub;
  }
  int next = 1;
  for (const auto& e : c.ynet.edges()) {
    out.graph.add_edge(next, e.u, e.v);
    out.edge_of_yedge[e.id] = next++;
  }
  const int first_spoke = next;
  for (const auto& s : c.sheets) {
    for (std::size_t b = 0; b < s.boundaries.size(); ++b) {
      const auto& bd = s.boundaries[b];
      if (bd.edge_curve) continue;
      out.graph.add_edge(next, out.hub_of_sheet[s.id], c.tail(bd.walk.front()));
      out.spokes.push_back({next, s.id, static_cast<int>(b)});
      ++next;
    }
  }
  const int first_loop = next;
  for (const auto& s : c.sheets) {
    int e = s.edge_count();
    int count = e == 0 ? s.weighted_genus() : s.weighted_genus() + e - 1;
    auto& loops = out.loops_of_sheet[s.id];
    for (int k = 0; k < count; ++k) {
      out.graph.add_edge(next, out.hub_of_sheet[s.id], out.hub_of_sheet[s.id]);
      loops.push_back(next++);
    }
  }

  out.tree = maximal_tree(out.graph);
  if (out.tree.trees.size() > 1) throw std::invalid_argument("component is not connected");
  std::vector<int> non_tree;
  for (const auto& t : out.tree.trees) non_tree.insert(non_tree.end(), t.non_tree_edges.begin(), t.non_tree_edges.end());
  std::sort(non_tree.begin(), non_tree.end());
  auto block_of = [&](int edge) {
    if (edge < first_spoke) return Block::Y;
    if (edge < first_loop) return Block::Lambda;
    return Block::Q;
  };
  for (Block b : {Block::Lambda, Block::Y, Block::Q}) {
    for (int edge : non_tree) {
      if (block_of(edge) != b) continue;
      out.generator_edges.push_back(edge);
      out.generator_blocks.push_back(b);
      out.letter_of_edge[edge] = static_cast<int>(out.generator_edges.size());
    }
  }
  for (Block b : out.generator_blocks) {
    if (b == Block::Lambda) ++out.lambda_count;
    if (b == Block::Y) ++out.y_count;
    if (b == Block::Q) ++out.q_count;
  }
  return out;
}

std::vector<RelationWord> relation_words(const MedialComplex& c, const SYPrimeComplex& syp) {
  std::vector<RelationWord> out;
  for (const auto& s : c.sheets) {
    if (s.edge_count() != 0) continue;
    Word w;
    auto put = [&w](const Word& part) { w.insert(w.end(), part.begin(), part.end()); };
    const auto& loops = syp.loops_of_sheet.at(s.id);
    if (s.orientable) {
      for (std::size_t i = 0; i + 1 < loops.size(); i += 2) {
        put(syp.traverse(loops[i], true));
        put(syp.traverse(loops[i + 1], true));
        put(syp.traverse(loops[i], false));
        put(syp.traverse(loops[i + 1], false));
      }
    } else {
      for (int loop : loops) {
        put(syp.traverse(loop, true));
        put(syp.traverse(loop, true));
      }
    }
    for (const auto& sp : syp.spokes) {
      if (sp.sheet_id != s.id) continue;
      put(syp.traverse(sp.edge, true));
      for (const auto& st : s.boundaries[static_cast<std::size_t>(sp.boundary_index)].walk) {
        put(syp.traverse(syp.edge_of_yedge.at(st.id), st.forward));
      }
      put(syp.traverse(sp.edge, false));
    }
    out.push_back({s.id, free_reduce(w)});
  }
  return out;
}

std::string Presentation::to_text() const {
  std::string out = "⟨";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  out += " | ";
  for (std::size_t i = 0; i < relations.size(); ++i) out += (i ? ", " : "") + word_to_string(relations[i].word, names);
  out += "⟩";
  return out;
}

Word Presentation::lambda_image(const Word& w) const {
  Word out;
  for (int x : w) {
    if (std::abs(x) <= lambda_count) out.push_back(x);
  }
  return free_reduce(out);
}

std::vector<Word> Presentation::words() const {
  std::vector<Word> out;
  for (const auto& r : relations) out.push_back(r.word);
  return out;
}

Presentation pi1_presentation(const MedialComplex& c, const ComponentGraph& lambda) {
  SYPrimeComplex syp = build_sy_prime(c, lambda);
  Presentation p;
  p.rank = syp.rank();
  p.lambda_count = syp.lambda_count;
  p.y_count = syp.y_count;
  p.q_count = syp.q_count;
  p.names = syp.generator_names();
  p.relations = relation_words(c, syp);
  return p;
}

Presentation pi1_presentation(const MedialComplex& c) { return pi1_presentation(c, build_component_graph(c)); }

ContractibilityVerdict check_contractible(const std::vector<MedialComplex>& components, const ExtendedGraph& gamma,
                                          const std::vector<InvariantRecord>& records,
                                          const std::vector<Presentation>& presentations) {
  if (components.size() != records.size() || components.size() != presentations.size()) {
    throw std::invalid_argument("component, record and presentation counts differ");
  }
  ContractibilityVerdict v;
  auto& diag = v.diagnostics;
  const bool many = components.size() > 1;
  auto tag = [many](std::size_t k) { return many ? "M" + std::to_string(k + 1) + ": " : std::string(); };

  v.gamma_tree = gamma.vertex_count() > 0 && medial::components(gamma).size() == 1 && betti1(gamma) == 0;
  if (!v.gamma_tree) diag.push_back("top-level graph is not a tree: beta1 = " + std::to_string(betti1(gamma)));

  v.lambda_trees = true;
  v.sheets_simple = true;
  v.euler_relation = true;
  v.generation = true;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& r = records[k];
    if (r.lambda != 0) {
      v.lambda_trees = false;
      diag.push_back(tag(k) + "sheet graph has a cycle: lambda = " + std::to_string(r.lambda));
    }
    for (const auto& s : components[k].sheets) {
      if (s.genus != 0) {
        v.sheets_simple = false;
        diag.push_back(tag(k) + "sheet " + std::to_string(s.id) + " has genus " + std::to_string(s.genus));
      }
      if (s.edge_count() > 1) {
        v.sheets_simple = false;
        diag.push_back(tag(k) + "sheet " + std::to_string(s.id) + " has " + std::to_string(s.edge_count()) +
                       " edge curves");
      }
    }
    if (!euler_relation_holds(r)) {
      v.euler_relation = false;
      diag.push_back(tag(k) + "Euler relation fails: " + std::to_string(r.s - r.e) + " ≠ " +
                     std::to_string(r.v + r.c));
    }
    const auto& p = presentations[k];
    if (!generates_full_group(p.words(), p.rank)) {
      v.generation = false;
      diag.push_back(tag(k) + "relators do not generate the free group of rank " + std::to_string(p.rank));
    }
    if (r.s0 != p.rank) {
      diag.push_back(tag(k) + "note: " + std::to_string(r.s0) + " relators for " + std::to_string(p.rank) +
                     " generators; generation is tested, not a free basis");
    }
  }
  v.contractible = v.gamma_tree && v.lambda_trees && v.sheets_simple && v.euler_relation && v.generation;
  return v;
}

}  // namespace medial
