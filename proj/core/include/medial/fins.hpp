#pragma once

#include <string>
#include <vector>

#include "medial/medial_model.hpp"

namespace medial {

enum class FinClass { EssentialType1, EssentialType2, Inessential };

std::string to_string(FinClass c);

/**
 * A fin curve traced from fin point start_point.
 *
 * The trace follows the boundary walk that ends with start_point's arc and
 * keeps going along Y-steps until it reaches another fin point. The fin is
 * essential when that same walk leaves the end point along its arc, which
 * means the fin sheet carries on past both ends; otherwise the walk turns
 * back and the sheet seen at the end point is a different local sheet.
 */
struct FinRecord {
  int id = 0;
  std::string label;
  int start_point = 0;
  int end_point = 0;
  int source_arc = 0;
  int fin_sheet = 0;
  int end_sheet = 0;
  /// Y-steps from start_point to end_point.
  Walk support;
  /// Vertices crossed strictly between the two fin points.
  std::vector<int> junctions;
  bool essential = false;
  FinClass cls = FinClass::Inessential;

  bool junction_free() const { return junctions.empty(); }
};

/// Trace from a single fin point. Throws std::runtime_error when the walk
/// never reaches another fin point.
FinRecord trace_fin(const MedialComplex& c, int fin_point);

/// One record per fin curve, ordered by start point. When the trace from p
/// ends at q and the trace from q ends at p they are the same curve, kept
/// once under the smaller point; the two traces may run along different
/// sheets when the curve crosses junctions. Records are classified.
std::vector<FinRecord> fin_records(const MedialComplex& c);

/// Same records as fin_records; kept as the name used by callers that only
/// want the classification.
std::vector<FinRecord> classify_fin_curves(const MedialComplex& c);

}  // namespace medial
