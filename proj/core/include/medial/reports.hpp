#pragma once

#include <string>
#include <vector>

#include "medial/cw_oracle.hpp"
#include "medial/decomposition.hpp"
#include "medial/homology.hpp"
#include "medial/invariants.hpp"
#include "medial/medial_model.hpp"
#include "medial/presentation.hpp"

namespace medial {

struct ComponentReport {
  MedialComplex complex;
  ComponentGraph lambda;
  InvariantRecord invariants;
  Presentation pi1;
  HomologyResult homology;
  OracleResult oracle;
  bool oracle_agrees = false;
};

/// Everything the pipeline derives from one validated complex.
struct Analysis {
  MedialComplex input;
  std::string policy;
  DecompositionResult decomposition;
  std::vector<ComponentReport> components;
  GlobalInvariantRecord global;
  HomologyResult homology;
  /// Oracle on the components wedged along Γ.
  OracleResult assembled_oracle;
  /// Oracle on the input complex, fins included.
  OracleResult input_oracle;
  bool oracle_agrees = false;
  ContractibilityVerdict verdict;
  /// Folding test on every component presentation.
  bool pi1_trivial = false;
};

Analysis analyze(const MedialComplex& c, ChoicePolicy& policy);
Analysis analyze(const MedialComplex& c);

std::string validation_json(const ValidationReport& r);
std::string decomposition_text(const DecompositionResult& d);
std::string decomposition_json(const DecompositionResult& d);
std::string invariants_json(const GlobalInvariantRecord& g);
std::string homology_text(const Analysis& a, bool with_oracle);
std::string homology_json(const Analysis& a, bool with_oracle);
std::string pi1_text(const Analysis& a);
std::string pi1_json(const Analysis& a);
std::string verdict_text(const ContractibilityVerdict& v);
std::string verdict_json(const ContractibilityVerdict& v);

}  // namespace medial
