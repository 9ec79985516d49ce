#pragma once

#include <stdexcept>
#include <string>

#include "medial/decomposition.hpp"
#include "medial/extended_graph.hpp"
#include "medial/medial_model.hpp"

namespace medial {

/// Current document format version.
inline constexpr int kFormatVersion = 1;

enum class ParseErrorKind { MalformedJson, UnknownVersion, Schema, Validation };

std::string to_string(ParseErrorKind k);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::string path, std::string message, int line = 0, int column = 0);

  ParseErrorKind kind() const { return kind_; }
  /// JSON pointer style location, e.g. "/sheets/2/boundaries/0".
  const std::string& path() const { return path_; }
  int line() const { return line_; }
  int column() const { return column_; }
  /// Set for Validation errors.
  const ValidationReport& report() const { return report_; }
  void set_report(ValidationReport r) { report_ = std::move(r); }

 private:
  ParseErrorKind kind_;
  std::string path_;
  int line_;
  int column_;
  ValidationReport report_;
};

struct ParseOptions {
  /// Run validate_complex after the schema checks.
  bool validate = true;
};

/// Throws ParseError; the kinds are distinct for malformed JSON, an unknown
/// version, a schema violation and a failed model validation.
MedialComplex parse_complex(const std::string& text, const ParseOptions& opts = {});
MedialComplex load_complex(const std::string& path, const ParseOptions& opts = {});

/// Canonical form: fixed field order, two-space indent, trailing newline.
std::string serialize_complex(const MedialComplex& c);

/// Parse a step label such as "+3", "-3" or "-a2". Throws std::invalid_argument.
Step parse_step(const std::string& label);

std::string dot_ynet(const MedialComplex& c);
/// Sheets are boxes, Y-nodes are filled circles.
std::string dot_lambda(const ComponentGraph& lambda, const std::string& name = "Lambda");
std::string dot_gamma(const TopLevelGraph& gamma);

}  // namespace medial
