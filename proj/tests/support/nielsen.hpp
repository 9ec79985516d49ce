#pragma once

// Generation oracle by Nielsen reduction, independent of the folding code.
//
// Elementary Nielsen moves that never increase total length reach a
// Nielsen-reduced set, and a Nielsen-reduced generating set of the whole
// free group contains every letter. A breadth-first search over such moves
// therefore decides generation. Every state reached from a start set
// generates the same subgroup, so answers are shared through a memo.

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <vector>

#include "medial/free_group.hpp"

namespace medial::testoracle {

using State = std::vector<Word>;

inline Word canonical_word(const Word& w) {
  Word r = free_reduce(w);
  Word inv = free_reduce(inverse(r));
  return std::min(r, inv);
}

inline State canonical_state(const std::vector<Word>& words) {
  State s;
  for (const auto& w : words) {
    Word c = canonical_word(w);
    if (!c.empty()) s.push_back(std::move(c));
  }
  std::sort(s.begin(), s.end());
  return s;
}

inline std::size_t total_length(const State& s) {
  std::size_t n = 0;
  for (const auto& w : s) n += w.size();
  return n;
}

inline bool has_all_letters(const State& s, int rank) {
  for (int k = 1; k <= rank; ++k) {
    if (!std::binary_search(s.begin(), s.end(), Word{-k})) return false;
  }
  return true;
}

class NielsenOracle {
 public:
  explicit NielsenOracle(int rank) : rank_(rank) {}

  bool generates(const std::vector<Word>& words) {
    State start = canonical_state(words);
    if (auto it = memo_.find(start); it != memo_.end()) return it->second;
    std::set<State> seen{start};
    std::deque<State> queue{start};
    int answer = -1;
    while (!queue.empty() && answer < 0) {
      State s = std::move(queue.front());
      queue.pop_front();
      if (has_all_letters(s, rank_)) {
        answer = 1;
        break;
      }
      const std::size_t len = total_length(s);
      for (std::size_t i = 0; i < s.size() && answer < 0; ++i) {
        for (std::size_t j = 0; j < s.size() && answer < 0; ++j) {
          if (i == j) continue;
          for (const Word& y : {s[j], inverse(s[j])}) {
            for (bool left : {false, true}) {
              State t = s;
              t[i] = left ? concat(y, s[i]) : concat(s[i], y);
              t = canonical_state(t);
              if (total_length(t) > len || seen.count(t)) continue;
              if (auto it = memo_.find(t); it != memo_.end()) {
                answer = it->second ? 1 : 0;
                break;
              }
              seen.insert(t);
              queue.push_back(std::move(t));
            }
            if (answer >= 0) break;
          }
        }
      }
    }
    bool result = answer == 1;
    for (const auto& s : seen) memo_[s] = result;
    return result;
  }

 private:
  int rank_;
  std::map<State, bool> memo_;
};

/// Freely reduced nonempty words over the given rank, up to max_len letters.
inline std::vector<Word> reduced_words(int rank, int max_len) {
  std::vector<Word> out;
  std::vector<Word> frontier{Word{}};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int k = -rank; k <= rank; ++k) {
        if (k == 0 || (!w.empty() && w.back() == -k)) continue;
        Word x = w;
        x.push_back(k);
        next.push_back(x);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

/// Calls f on every multiset of reduced words of total length <= max_total,
/// including the empty multiset.
template <typename F>
void for_each_word_multiset(int rank, int max_total, F&& f) {
  std::vector<Word> words = reduced_words(rank, max_total);
  std::vector<Word> current;
  auto rec = [&](auto& self, std::size_t from, int budget) -> void {
    f(static_cast<const std::vector<Word>&>(current));
    for (std::size_t i = from; i < words.size(); ++i) {
      int len = static_cast<int>(words[i].size());
      if (len > budget) continue;
      current.push_back(words[i]);
      self(self, i, budget - len);
      current.pop_back();
    }
  };
  rec(rec, 0, max_total);
}

}  // namespace medial::testoracle
