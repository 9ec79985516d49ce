#include "medial/decomposition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "rewrite_internal.hpp"

namespace medial {

namespace {

bool has_endpoint(const std::vector<FinRecord>& fins, int point) {
  return std::any_of(fins.begin(), fins.end(),
                     [point](const FinRecord& f) { return f.start_point == point || f.end_point == point; });
}

std::string label_for_point(const std::vector<FinRecord>& fins, int point) {
  for (const auto& f : fins) {
    if (f.start_point == point || f.end_point == point) return f.label;
  }
  return std::to_string(point);
}

}  // namespace

std::string LowestIdPolicy::name() const { return side_ == Side::Start ? "lowest" : "lowest:end"; }

const FinRecord& LowestIdPolicy::pick_type2(const std::vector<FinRecord>& candidates) { return candidates.front(); }

int LowestIdPolicy::pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) {
  const auto& f = candidates.front();
  if (side_ == Side::End && !trace_fin(c, f.end_point).junction_free()) return f.end_point;
  return f.start_point;
}

const FinRecord& HighestIdPolicy::pick_type2(const std::vector<FinRecord>& candidates) { return candidates.back(); }

int HighestIdPolicy::pick_cut_point(const MedialComplex&, const std::vector<FinRecord>& candidates) {
  return candidates.back().start_point;
}

std::string ScriptedPolicy::name() const {
  std::string out = "script:";
  for (std::size_t i = 0; i < points_.size(); ++i) out += (i ? "," : "") + std::to_string(points_[i]);
  return out;
}

const FinRecord& ScriptedPolicy::pick_type2(const std::vector<FinRecord>& candidates) {
  if (next_ < points_.size()) {
    int p = points_[next_];
    for (const auto& f : candidates) {
      if (f.start_point == p || f.end_point == p) {
        ++next_;
        return f;
      }
    }
  }
  return fallback_.pick_type2(candidates);
}

int ScriptedPolicy::pick_cut_point(const MedialComplex& c, const std::vector<FinRecord>& candidates) {
  if (next_ >= points_.size()) return fallback_.pick_cut_point(c, candidates);
  int p = points_[next_++];
  if (!has_endpoint(candidates, p)) {
    throw std::runtime_error("scripted point " + std::to_string(p) +
                             " is not an end of an inessential fin crossing a junction");
  }
  return p;
}

std::unique_ptr<ChoicePolicy> make_policy(const std::string& spec) {
  if (spec == "lowest" || spec == "lowest:start") return std::make_unique<LowestIdPolicy>(Side::Start);
  if (spec == "lowest:end") return std::make_unique<LowestIdPolicy>(Side::End);
  if (spec == "highest") return std::make_unique<HighestIdPolicy>();
  const std::string prefix = "script:";
  if (spec.rfind(prefix, 0) == 0) {
    std::vector<int> points;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      try {
        std::size_t used = 0;
        points.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad fin point '" + item + "' in policy " + spec);
      }
    }
    return std::make_unique<ScriptedPolicy>(std::move(points));
  }
  throw std::invalid_argument("unknown policy " + spec);
}

DecompositionResult decompose(const MedialComplex& input, ChoicePolicy& policy) {
  MedialComplex c = input;
  c.fins.clear();
  detail::RewriteContext ctx;
  for (const auto& s : c.sheets) ctx.sheet_alias.add(s.id);

  DecompositionResult result;
  struct Cut {
    CutInfo info;
    std::string fin;
  };
  std::vector<Cut> cuts;

  auto records = fin_records(c);
  const std::size_t bound = 10 * records.size();
  std::size_t steps = 0;
  auto bump = [&] {
    if (++steps > bound) {
      throw std::logic_error("decomposition exceeded " + std::to_string(bound) + " steps");
    }
  };
  auto log = [&](std::string action, std::string fin, int point, std::string detail) {
    result.log.push_back({static_cast<int>(result.log.size()) + 1, std::move(action), std::move(fin), point,
                          std::move(detail)});
  };

  while (!records.empty()) {
    std::vector<FinRecord> type1, type2, crossing, flat;
    for (const auto& f : records) {
      if (f.cls == FinClass::EssentialType1) {
        type1.push_back(f);
      } else if (f.cls == FinClass::EssentialType2) {
        type2.push_back(f);
      } else if (!f.junction_free()) {
        crossing.push_back(f);
      } else {
        flat.push_back(f);
      }
    }

    if (!type1.empty() || !type2.empty()) {
      FinRecord f = !type1.empty() ? type1.front() : policy.pick_type2(type2);
      std::string kind = !type1.empty() ? "type-1" : "type-2, chosen by " + policy.name();
      const std::string label = f.label;
      const int p = f.start_point;
      while (!f.junction_free()) {
        bump();
        c = detail::unglue_from(std::move(c), p, ctx);
        log("slide", label, p, "unglued across one junction");
        f = trace_fin(c, p);
        if (!f.essential) break;
      }
      if (!f.essential) {
        log("reclassify", label, p, "inessential after sliding");
        records = fin_records(c);
        continue;
      }
      f.label = label;
      bump();
      CutInfo info;
      c = detail::cut_essential(std::move(c), f, ctx, info);
      cuts.push_back({info, label});
      log("cut", label, p,
          kind + " essential; sheet " + std::to_string(info.fin_sheet) + " detached from sheet " +
              std::to_string(info.base_sheet));
    } else if (!crossing.empty()) {
      int p = policy.pick_cut_point(c, crossing);
      std::string label = label_for_point(crossing, p);
      bump();
      c = detail::unglue_from(std::move(c), p, ctx);
      log("unglue", label, p, "inessential fin cut across one junction, chosen by " + policy.name());
    } else {
      const FinRecord& f = flat.front();
      bump();
      c = detail::contract_inessential(std::move(c), f, ctx);
      log("contract", f.label, f.start_point, "inessential fin shrunk to a point");
    }
    records = fin_records(c);
  }

  result.components = split_components(c);
  std::map<int, int> component_of;
  for (std::size_t k = 0; k < result.components.size(); ++k) {
    auto& comp = result.components[k];
    comp.metadata.name = input.metadata.name + "/M" + std::to_string(k + 1);
    for (const auto& s : comp.sheets) component_of[s.id] = static_cast<int>(k);
    result.gamma.graph.add_vertex(static_cast<int>(k) + 1);
    result.gamma.graph.set_vertex_attr(static_cast<int>(k) + 1, "label", "M" + std::to_string(k + 1));
  }
  int edge_id = 1;
  for (const auto& cut : cuts) {
    int from = component_of.at(ctx.sheet_alias.find(cut.info.fin_sheet));
    int to = component_of.at(ctx.sheet_alias.find(cut.info.base_sheet));
    result.gamma.graph.add_edge(edge_id, from + 1, to + 1);
    result.gamma.graph.set_edge_attr(edge_id, "label", cut.fin);
    result.gamma.attachments.push_back(
        {edge_id, from + 1, to + 1, cut.info.fin_sheet, cut.info.base_sheet, cut.fin});
    ++edge_id;
  }
  return result;
}

DecompositionResult decompose(const MedialComplex& c) {
  LowestIdPolicy policy;
  return decompose(c, policy);
}

GlobalInvariantInputs assemble_check(const DecompositionResult& r) {
  if (r.gamma.graph.vertex_count() != r.components.size()) {
    throw std::logic_error("top-level graph has " + std::to_string(r.gamma.graph.vertex_count()) +
                           " vertices for " + std::to_string(r.components.size()) + " components");
  }
  GlobalInvariantInputs out;
  out.components = r.components;
  out.gamma = r.gamma.graph;
  out.beta1 = betti1(r.gamma.graph);
  return out;
}

}  // namespace medial
