#pragma once

#include <string>
#include <vector>

#include "medial/extended_graph.hpp"
#include "medial/medial_model.hpp"

namespace medial {

/// Per-component counts. Every field is an integer and the derived fields
/// satisfy q = G + e - (s - s0), Q = λ + v + c + q and ν = s - c - λ.
struct InvariantRecord {
  int s = 0;
  int c = 0;
  int lambda = 0;
  int v = 0;
  int e = 0;
  int G = 0;
  int q = 0;
  int Q = 0;
  int nu = 0;
  int s0 = 0;
  int s0o = 0;
  int s0n = 0;
  int chi = 0;

  bool operator==(const InvariantRecord&) const = default;
};

struct GlobalInvariantRecord {
  std::vector<InvariantRecord> components;
  int beta1 = 0;
  int nu = 0;
  int s = 0;
  int c = 0;
  int v = 0;
  int e = 0;
  int G = 0;
  int q = 0;
  int Q = 0;
  int s0 = 0;
  int s0o = 0;
  int s0n = 0;
  int lambda = 0;
  int chi = 0;
};

/// Throws std::invalid_argument for complexes with fins.
InvariantRecord component_invariants(const MedialComplex& c, const ComponentGraph& lambda);
InvariantRecord component_invariants(const MedialComplex& c);

/// Reduced Euler characteristic s0 - Q, checked against
/// s - (e + v + c + G + λ). Throws std::logic_error when they differ.
int euler_characteristic(const InvariantRecord& r);

/// s - e == v + c.
bool euler_relation_holds(const InvariantRecord& r);

/// Sums over components plus the cycle rank of the top-level graph.
/// Throws std::logic_error when the two global χ̃ formulas differ.
GlobalInvariantRecord global_invariants(const std::vector<InvariantRecord>& components, const ExtendedGraph& gamma);

/// Aligned text table, one column per component and a total column.
std::string invariant_table(const GlobalInvariantRecord& g);

}  // namespace medial
