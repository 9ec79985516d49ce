#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "medial/io.hpp"
#include "medial/reports.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::vector<std::string> files;
  std::string policy = "lowest";
  std::string log_path;
  std::string graph;
  bool oracle = false;
  bool json = false;
};

medial::Analysis run_analysis(const medial::MedialComplex& c, const Options& o) {
  auto policy = medial::make_policy(o.policy);
  return medial::analyze(c, *policy);
}

int cmd_validate(const std::string& file, const Options& o) {
  medial::MedialComplex c = medial::load_complex(file, {false});
  medial::ValidationReport r = medial::validate_complex(c);
  medial::ValidationReport advisory = medial::check_six_junction_consistency(c);
  if (o.json) {
    std::cout << medial::validation_json(r);
  } else {
    std::cout << file << ": " << (r.ok() ? "valid" : "invalid") << "\n";
    if (!r.ok()) std::cout << r.to_text();
    for (const auto& v : advisory.violations) std::cout << "  advisory: " << v.location << ": " << v.message << "\n";
  }
  return r.ok() ? kOk : kInputError;
}

int cmd_decompose(const std::string& file, const Options& o) {
  auto policy = medial::make_policy(o.policy);
  auto d = medial::decompose(medial::load_complex(file), *policy);
  if (!o.log_path.empty()) {
    std::ofstream out(o.log_path);
    if (!out) throw std::runtime_error("cannot write " + o.log_path);
    out << medial::decomposition_json(d);
  }
  std::cout << (o.json ? medial::decomposition_json(d) : medial::decomposition_text(d));
  return kOk;
}

int cmd_invariants(const std::string& file, const Options& o) {
  auto a = run_analysis(medial::load_complex(file), o);
  std::cout << (o.json ? medial::invariants_json(a.global) : medial::invariant_table(a.global));
  return kOk;
}

int cmd_homology(const std::string& file, const Options& o) {
  auto a = run_analysis(medial::load_complex(file), o);
  std::cout << (o.json ? medial::homology_json(a, o.oracle) : medial::homology_text(a, o.oracle));
  return o.oracle && !a.oracle_agrees ? kInternalError : kOk;
}

int cmd_pi1(const std::string& file, const Options& o) {
  auto a = run_analysis(medial::load_complex(file), o);
  std::cout << (o.json ? medial::pi1_json(a) : medial::pi1_text(a));
  return kOk;
}

int cmd_check(const std::string& file, const Options& o) {
  auto a = run_analysis(medial::load_complex(file), o);
  std::cout << (o.json ? medial::verdict_json(a.verdict) : medial::verdict_text(a.verdict));
  return a.verdict.contractible ? kOk : kNegative;
}

int cmd_dot(const std::string& file, const Options& o) {
  medial::MedialComplex c = medial::load_complex(file);
  if (o.graph == "ynet") {
    std::cout << medial::dot_ynet(c);
    return kOk;
  }
  auto policy = medial::make_policy(o.policy);
  auto d = medial::decompose(c, *policy);
  if (o.graph == "gamma") {
    std::cout << medial::dot_gamma(d.gamma);
    return kOk;
  }
  for (std::size_t k = 0; k < d.components.size(); ++k) {
    std::cout << medial::dot_lambda(medial::build_component_graph(d.components[k]),
                                    "Lambda M" + std::to_string(k + 1));
  }
  return kOk;
}

template <typename F>
int each_file(const Options& o, F f) {
  int worst = kOk;
  for (const auto& file : o.files) {
    int rc;
    try {
      rc = f(file, o);
    } catch (const medial::ParseError& e) {
      std::cerr << file << ": " << e.what() << "\n";
      rc = kInputError;
    } catch (const std::invalid_argument& e) {
      std::cerr << file << ": " << e.what() << "\n";
      rc = kInputError;
    } catch (const std::runtime_error& e) {
      std::cerr << file << ": " << e.what() << "\n";
      rc = kInputError;
    } catch (const std::exception& e) {
      std::cerr << file << ": internal error: " << e.what() << "\n";
      rc = kInternalError;
    }
    worst = std::max(worst, rc);
  }
  return worst;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Topology of medial complexes: decomposition, invariants, homology and fundamental group"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "Machine-readable output");

  auto files = [&o](CLI::App* sub) {
    sub->add_option("FILE", o.files, "Complex documents (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto with_policy = [&o](CLI::App* sub) {
    sub->add_option("--policy", o.policy, "Choice policy: lowest, lowest:end, highest, script:P1,P2,...");
  };

  auto* validate = app.add_subcommand("validate", "Check a complex against the model rules");
  files(validate);
  auto* decompose = app.add_subcommand("decompose", "Split into irreducible components and build Gamma");
  files(decompose);
  with_policy(decompose);
  decompose->add_option("--log", o.log_path, "Write the step log as JSON");
  auto* invariants = app.add_subcommand("invariants", "Invariant table per component and in total");
  files(invariants);
  with_policy(invariants);
  auto* homology = app.add_subcommand("homology", "H2 and H1 via the attaching matrix");
  files(homology);
  with_policy(homology);
  homology->add_flag("--oracle", o.oracle, "Cross-check against the cellular chain complex");
  auto* pi1 = app.add_subcommand("pi1", "Presentation of the fundamental group per component");
  files(pi1);
  with_policy(pi1);
  auto* check = app.add_subcommand("check-contractible", "Contractibility verdict with diagnostics");
  files(check);
  with_policy(check);
  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  files(dot);
  with_policy(dot);
  dot->add_option("--graph", o.graph, "Which graph")->required()->check(CLI::IsMember({"gamma", "lambda", "ynet"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  if (*validate) return each_file(o, cmd_validate);
  if (*decompose) {
    if (!o.log_path.empty() && o.files.size() > 1) {
      std::cerr << "--log takes a single FILE\n";
      return kInputError;
    }
    return each_file(o, cmd_decompose);
  }
  if (*invariants) return each_file(o, cmd_invariants);
  if (*homology) return each_file(o, cmd_homology);
  if (*pi1) return each_file(o, cmd_pi1);
  if (*check) return each_file(o, cmd_check);
  if (*dot) return each_file(o, cmd_dot);
  return kInputError;
}
