#pragma once

#include <string>
#include <vector>

namespace medial {

/// Word in a free group; letter +k is generator k (1-based) and -k its inverse.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);

/// Exponent-sum vector of length rank.
std::vector<long long> exponent_sums(const Word& w, int rank);

/// "x1 x2^-1"; empty word prints as "1". names[k-1] replaces "xk" if given.
std::string word_to_string(const Word& w, const std::vector<std::string>& names = {});

/// Subgroup graph after folding the wedge of word loops and trimming hairs.
struct FoldedGraph {
  int base = 0;
  int vertex_count = 0;
  struct Edge {
    int from = 0;
    int to = 0;
    int label = 0;
  };
  std::vector<Edge> edges;
};

FoldedGraph fold_words(const std::vector<Word>& words);

/// True iff the words generate the whole free group of the given rank,
/// tested by folding: the folded graph must be a single vertex carrying one
/// loop per generator. Throws std::invalid_argument for letters out of range.
bool generates_full_group(const std::vector<Word>& words, int rank);

}  // namespace medial
