#pragma once

#include <memory>
#include <string>
#include <vector>

#include "medial/extended_graph.hpp"
#include "medial/fins.hpp"
#include "medial/medial_model.hpp"

namespace medial {

/// Unglue the fin sheet from fin point p through the first junction on its
/// trace. The new fin point takes p's id. Throws std::runtime_error when the
/// trace from p crosses no junction or the local structure is inconsistent.
MedialComplex unglue_from(const MedialComplex& c, int p);

/// Unglue from f's start point until its trace is junction-free.
MedialComplex slide_fin(const MedialComplex& c, const FinRecord& f);

struct CutInfo {
  int fin_sheet = 0;
  int base_sheet = 0;
};

/// Detach the fin sheet along a junction-free essential fin curve. The slit
/// it leaves in the base sheet closes up and the two fin points disappear.
MedialComplex cut_essential(const MedialComplex& c, const FinRecord& f, CutInfo* info = nullptr);

/// Shrink a junction-free inessential fin curve to a point.
MedialComplex contract_inessential(const MedialComplex& c, const FinRecord& f);

enum class Side { Start, End };

/// Choices left open by the decomposition procedure.
class ChoicePolicy {
 public:
  virtual ~ChoicePolicy() = default;
  virtual std::string name() const = 0;
  /// Candidates are the type-2 essential fins, in id order.
  virtual const FinRecord& pick_type2(const std::vector<FinRecord>& candidates) = 0;
  /// Candidates are the inessential fins crossing a junction, in id order.
  /// Returns the fin point to unglue from.
  virtual int pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) = 0;
};

class LowestIdPolicy : public ChoicePolicy {
 public:
  explicit LowestIdPolicy(Side side = Side::Start) : side_(side) {}
  std::string name() const override;
  const FinRecord& pick_type2(const std::vector<FinRecord>& candidates) override;
  int pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) override;

 private:
  Side side_;
};

class HighestIdPolicy : public ChoicePolicy {
 public:
  std::string name() const override { return "highest"; }
  const FinRecord& pick_type2(const std::vector<FinRecord>& candidates) override;
  int pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) override;
};

/// Replays a list of fin points. Each cut-point choice consumes the next
/// entry and fails if it is not an endpoint of a candidate; type-2 choices
/// consume an entry only when it matches. Once exhausted, behaves like
/// LowestIdPolicy.
class ScriptedPolicy : public ChoicePolicy {
 public:
  explicit ScriptedPolicy(std::vector<int> points) : points_(std::move(points)) {}
  std::string name() const override;
  const FinRecord& pick_type2(const std::vector<FinRecord>& candidates) override;
  int pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) override;

 private:
  std::vector<int> points_;
  std::size_t next_ = 0;
  LowestIdPolicy fallback_;
};

/// "lowest", "lowest:end", "highest", or "script:4,8,4".
std::unique_ptr<ChoicePolicy> make_policy(const std::string& spec);

struct StepRecord {
  int index = 0;
  std::string action;
  std::string fin;
  int point = 0;
  std::string detail;
};

struct GammaAttachment {
  int edge_id = 0;
  int from_component = 0;
  int to_component = 0;
  int fin_sheet = 0;
  int base_sheet = 0;
  std::string fin;
};

/// Directed graph of components; vertex k+1 is component k and every
/// essential cut adds an edge from the fin sheet's component to the base
/// sheet's component. Self-attachments are loops.
struct TopLevelGraph {
  ExtendedGraph graph{true};
  std::vector<GammaAttachment> attachments;
};

struct DecompositionResult {
  std::vector<MedialComplex> components;
  TopLevelGraph gamma;
  std::vector<StepRecord> log;
};

DecompositionResult decompose(const MedialComplex& c, ChoicePolicy& policy);
DecompositionResult decompose(const MedialComplex& c);

struct GlobalInvariantInputs {
  std::vector<MedialComplex> components;
  ExtendedGraph gamma;
  int beta1 = 0;
};

/// Throws std::logic_error when Γ and the component list disagree.
GlobalInvariantInputs assemble_check(const DecompositionResult& r);

}  // namespace medial
