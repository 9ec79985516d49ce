#include "medial/free_group.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace medial {

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    if (x == 0) throw std::invalid_argument("letter 0 in word");
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return free_reduce(out);
}

std::vector<long long> exponent_sums(const Word& w, int rank) {
  std::vector<long long> out(static_cast<std::size_t>(rank), 0);
  for (int x : w) {
    int g = std::abs(x);
    if (g < 1 || g > rank) throw std::invalid_argument("letter " + std::to_string(x) + " outside rank");
    out[static_cast<std::size_t>(g - 1)] += x > 0 ? 1 : -1;
  }
  return out;
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    int g = std::abs(w[i]);
    if (i) out += " ";
    out += static_cast<std::size_t>(g) <= names.size() ? names[static_cast<std::size_t>(g - 1)]
                                                        : "x" + std::to_string(g);
    if (w[i] < 0) out += "^-1";
  }
  return out;
}

namespace {

struct Folder {
  std::vector<int> parent;
  struct E {
    int from, to, label;
    bool alive;
  };
  std::vector<E> edges;

  int add_vertex() {
    parent.push_back(static_cast<int>(parent.size()));
    return parent.back();
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }

  /// One pass; returns true if anything was identified.
  bool pass() {
    std::map<std::tuple<int, int, bool>, std::size_t> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto& e = edges[i];
      if (!e.alive) continue;
      int f = find(e.from);
      int t = find(e.to);
      auto out_key = std::make_tuple(f, e.label, true);
      auto in_key = std::make_tuple(t, e.label, false);
      if (auto it = seen.find(out_key); it != seen.end()) {
        merge(edges[it->second].to, t);
        e.alive = false;
        return true;
      }
      if (auto it = seen.find(in_key); it != seen.end()) {
        merge(edges[it->second].from, f);
        e.alive = false;
        return true;
      }
      seen[out_key] = i;
      seen[in_key] = i;
    }
    return false;
  }
};

}  // namespace

FoldedGraph fold_words(const std::vector<Word>& words) {
  Folder fo;
  int base = fo.add_vertex();
  for (const auto& raw : words) {
    Word w = free_reduce(raw);
    if (w.empty()) continue;
    int cur = base;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? base : fo.add_vertex();
      int x = w[i];
      if (x > 0) {
        fo.edges.push_back({cur, next, x, true});
      } else {
        fo.edges.push_back({next, cur, -x, true});
      }
      cur = next;
    }
  }
  while (fo.pass()) {
  }

  // Trim hairs: non-base vertices of degree 1.
  bool trimmed = true;
  while (trimmed) {
    trimmed = false;
    std::map<int, int> degree;
    for (const auto& e : fo.edges) {
      if (!e.alive) continue;
      ++degree[fo.find(e.from)];
      ++degree[fo.find(e.to)];
    }
    for (auto& e : fo.edges) {
      if (!e.alive) continue;
      int f = fo.find(e.from);
      int t = fo.find(e.to);
      if ((f != base && degree[f] == 1) || (t != base && degree[t] == 1)) {
        e.alive = false;
        trimmed = true;
      }
    }
  }

  FoldedGraph g;
  std::map<int, int> ids;
  ids[fo.find(base)] = 0;
  for (const auto& e : fo.edges) {
    if (!e.alive) continue;
    int f = ids.try_emplace(fo.find(e.from), static_cast<int>(ids.size())).first->second;
    int t = ids.try_emplace(fo.find(e.to), static_cast<int>(ids.size())).first->second;
    g.edges.push_back({f, t, e.label});
  }
  g.vertex_count = static_cast<int>(ids.size());
  return g;
}

bool generates_full_group(const std::vector<Word>& words, int rank) {
  for (const auto& w : words) {
    for (int x : w) {
      if (x == 0 || std::abs(x) > rank) throw std::invalid_argument("letter " + std::to_string(x) + " outside rank");
    }
  }
  FoldedGraph g = fold_words(words);
  return g.vertex_count == 1 && static_cast<int>(g.edges.size()) == rank;
}

}  // namespace medial
