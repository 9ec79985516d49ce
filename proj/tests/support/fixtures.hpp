#pragma once

#include <string>
#include <vector>

#include "medial/io.hpp"

namespace medial::testfix {

inline std::string fixture_path(const std::string& name) { return std::string(MEDIAL_FIXTURE_DIR) + "/" + name + ".json"; }

inline MedialComplex fixture(const std::string& name) { return load_complex(fixture_path(name)); }

/// Every fixture in the corpus; all of them validate.
inline const std::vector<std::string>& corpus() {
  static const std::vector<std::string> names = {
      "fig1", "fig5", "fig7a", "fig7b", "fig8", "fig8c", "fig9a", "fig9b", "fig9c",
      "fig9d", "fig13", "fig13a", "torus", "klein", "unknot", "junction_mismatch"};
  return names;
}

/// Step-4 scripts for fig7a giving 1, 2 and 3 components.
inline const std::vector<std::string>& fig7a_policies() {
  static const std::vector<std::string> p = {"script:1,1,5,5", "script:1,1,5,7", "script:1,3,5,7"};
  return p;
}

}  // namespace medial::testfix
