// One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "medial/cw_oracle.hpp"
#include "medial/decomposition.hpp"
#include "medial/homology.hpp"
#include "medial/io.hpp"
#include "medial/reports.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"
#include "support/nielsen.hpp"

using namespace medial;
using testfix::fixture;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

int run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << "exception: " << e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs >= 5.0) o.expect(false, "took longer than 5 s");
  std::printf("%s %d: %s (%.2f s)", o.pass ? "PASS" : "FAIL", number, title.c_str(), secs);
  if (!o.pass) std::printf(": %s", o.detail.str().c_str());
  std::printf("\n");
  std::fflush(stdout);
  return o.pass ? 0 : 1;
}

bool only_euler_fails(const ContractibilityVerdict& v) {
  return !v.contractible && !v.euler_relation && v.gamma_tree && v.lambda_trees && v.sheets_simple && v.generation;
}

void criterion1(Outcome& o) {
  auto a = analyze(fixture("fig13"));
  const auto& r = a.global;
  o.expect(a.components.size() == 1, "expected one component");
  o.expect(r.s == 5 && r.e == 2 && r.c == 2 && r.v == 0 && r.G == 0 && r.lambda == 0, "counts differ");
  o.expect(r.nu == 3 && r.chi == 1, "nu or reduced Euler characteristic differ");
  o.expect(a.homology.h2 == 1 && a.homology.h1_free == 0 && a.homology.torsion.empty(), "homology differs");
  o.expect(a.pi1_trivial, "fundamental group not trivial");
  o.expect(only_euler_fails(a.verdict), "verdict should fail on the Euler relation alone");
  bool message = false;
  for (const auto& d : a.verdict.diagnostics) message = message || d == "Euler relation fails: 3 ≠ 2";
  o.expect(message, "missing Euler relation diagnostic 3 ≠ 2");
  o.expect(a.oracle_agrees, "oracle disagrees");
}

void criterion2(Outcome& o) {
  auto a = analyze(fixture("fig8c"));
  o.expect(a.decomposition.components.size() == 4, "expected four components");
  const auto& g = a.decomposition.gamma.graph;
  o.expect(components(g).size() == 1 && betti1(g) == 0, "top-level graph is not a tree");
  o.expect(a.components.front().invariants.nu == 3, "nu of the first component is not 3");
  o.expect(a.global.chi == 0, "reduced Euler characteristic is not 0");
  o.expect(a.homology.trivial(), "homology not trivial");
  for (const auto& c : a.components) o.expect(c.homology.trivial(), "component homology not trivial");
  o.expect(a.verdict.contractible, "verdict is not contractible");
}

void criterion3(Outcome& o) {
  auto c = fixture("fig7a");
  const std::vector<std::size_t> expected{1, 2, 3};
  const auto& scripts = testfix::fig7a_policies();
  std::vector<HomologyResult> hs;
  for (std::size_t k = 0; k < scripts.size(); ++k) {
    auto p = make_policy(scripts[k]);
    auto a = analyze(c, *p);
    o.expect(a.decomposition.components.size() == expected[k], scripts[k] + " gave the wrong component count");
    o.expect(a.homology.trivial(), scripts[k] + " gave nontrivial homology");
    o.expect(a.oracle_agrees, scripts[k] + " disagrees with the oracle");
    hs.push_back(a.homology);
  }
  for (const auto& h : hs) o.expect(h.same_groups(hs.front()), "homology depends on the policy");
}

void criterion4(Outcome& o) {
  testgen::Rng rng(20240401);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = trial < 100 ? 4 : 3;
    int k = testgen::uniform(rng, 1, 10);
    if (m == 3 && k % 2 == 1) k = k == 9 ? 10 : k + 1;
    auto g = testgen::random_valent_graph(rng, k, m);
    const int expected = m == 4 ? k + 1 : k / 2 + 1;
    o.expect(betti1(g) == expected, "betti1 " + std::to_string(betti1(g)) + " for k = " + std::to_string(k));
  }
}

void criterion5(Outcome& o) {
  auto check = [&o](const MedialComplex& c, const std::string& what) {
    auto a = analyze(c);
    o.expect(a.oracle_agrees, what + ": oracle disagrees");
    o.expect(a.input_oracle.homology.same_groups(a.homology), what + ": input oracle disagrees");
    for (const auto& comp : a.components) {
      const auto& r = comp.invariants;
      o.expect(r.s0 - r.Q == r.s - (r.e + r.v + r.c + r.G + r.lambda), what + ": Euler formulas differ");
      o.expect(comp.oracle.chi_cells == r.chi, what + ": cell count differs");
    }
  };
  for (const auto& name : testfix::corpus()) check(fixture(name), name);
  testgen::Rng rng(5150);
  for (int trial = 0; trial < 300; ++trial) {
    MedialComplex c;
    if (trial % 3 == 2) {
      do {
        testgen::GermSpec spec;
        spec.junctions = testgen::uniform(rng, 0, 3);
        spec.fin_points = 2 * testgen::uniform(rng, 1, 3);
        spec.circles = testgen::uniform(rng, 0, 1);
        c = testgen::germ_complex(rng, spec);
      } while (c.sheets.size() > 8 || components(c.ynet).size() > 3);
    } else {
      c = testgen::random_fin_free_component(rng);
    }
    check(c, "random sample " + std::to_string(trial));
  }
}

void criterion6(Outcome& o) {
  testgen::Rng rng(606);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = testgen::uniform(rng, 1, 5);
    std::vector<MedialComplex> comps;
    std::vector<HomologyResult> hs;
    int h1 = 0, h2 = 0;
    for (int k = 0; k < n; ++k) {
      comps.push_back(testgen::random_fin_free_component(rng));
      auto a = analyze(comps.back());
      hs.push_back(a.homology);
      h1 += a.homology.h1_free;
      h2 += a.homology.h2;
    }
    auto gamma = testgen::random_gamma(rng, n, trial % 2 == 0);
    auto global = global_homology(hs, gamma);
    o.expect(global.h1_free == h1 + betti1(gamma), "H1 rank is not additive");
    o.expect(global.h2 == h2, "H2 rank is not additive");
    auto oracle = oracle_homology(assemble_chain_complex(comps, gamma));
    o.expect(oracle.homology.same_groups(global), "assembled oracle disagrees");
  }
}

void criterion7(Outcome& o) {
  long sets = 0;
  for (int rank = 1; rank <= 2; ++rank) {
    testoracle::NielsenOracle oracle(rank);
    testoracle::for_each_word_multiset(rank, 8, [&](const std::vector<Word>& ws) {
      ++sets;
      if (generates_full_group(ws, rank) != oracle.generates(ws)) {
        o.expect(false, "disagreement at rank " + std::to_string(rank));
      }
    });
  }
  o.expect(generates_full_group({}, 0), "empty set over rank 0 should generate");
  o.expect(sets == 434 + 219744, "unexpected number of word sets: " + std::to_string(sets));
  o.expect(!generates_full_group({{1, 2, -1, -2}}, 2), "commutator should not generate");
  o.expect(generates_full_group({{1}, {2}, {1, -2}}, 2), "t1, t2, t1 t2^-1 should generate");
}

void criterion8(Outcome& o) {
  testgen::Rng rng(808);
  int passed = 0, converse = 0;
  for (int trial = 0; trial < 200; ++trial) {
    MedialComplex c;
    if (trial % 4 == 3) {
      testgen::GermSpec spec;
      spec.junctions = testgen::uniform(rng, 0, 2);
      spec.fin_points = 2 * testgen::uniform(rng, 1, 3);
      spec.circles = testgen::uniform(rng, 0, 1);
      c = testgen::germ_complex(rng, spec);
    } else {
      c = testgen::tree_like_component(rng);
    }
    auto a = analyze(c);
    if (a.verdict.contractible) {
      ++passed;
      o.expect(a.pi1_trivial, "contractible verdict with nontrivial fundamental group");
      o.expect(a.homology.trivial() && a.input_oracle.h0_reduced == 0, "contractible verdict with nontrivial homology");
      o.expect(a.global.chi == 0, "contractible verdict with nonzero reduced Euler characteristic");
    }
    // Trivial reduced homology includes H0: the raw generator can return disconnected complexes.
    if (a.homology.trivial() && a.input_oracle.h0_reduced == 0 && a.pi1_trivial) {
      ++converse;
      o.expect(a.verdict.contractible, "trivial homology and fundamental group but the verdict fails in sample " +
                                           std::to_string(trial));
    }
  }
  o.expect(passed >= 20, "too few contractible samples: " + std::to_string(passed));
  o.expect(converse >= 20, "too few samples for the converse: " + std::to_string(converse));
}

void criterion9(Outcome& o) {
  auto a = analyze(fixture("klein"));
  o.expect(a.homology.h1_free == 1 && a.homology.torsion == std::vector<long long>{2}, "H1 is not Z + Z/2");
  o.expect(a.homology.h2 == 0, "H2 is not 0");
  o.expect(!a.homology.realizable, "reported as realizable");
  o.expect(a.oracle_agrees, "oracle disagrees");
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "two circles joined by an annulus: exact invariants, H2 = Z, H1 = 0, trivial fundamental group, "
                     "verdict fails only the Euler relation (3 ≠ 2)",
                  criterion1);
  failures += run(2, "three-fin complex: four components on a tree, nu(M1) = 3, reduced Euler characteristic 0, "
                     "trivial homology, contractible",
                  criterion2);
  failures += run(3, "five-fin complex: three documented policies give 1, 2 and 3 components with the same trivial "
                     "homology",
                  criterion3);
  failures += run(4, "200 random 4-valent and 3-valent graphs: betti1 = k + 1 and k/2 + 1", criterion4);
  failures += run(5, "fixtures and 300 random complexes: Smith-form homology equals the cellular oracle and both "
                     "Euler formulas agree",
                  criterion5);
  failures += run(6, "100 random assemblies: H1 rank is the component sum plus betti1 of the top-level graph, H2 "
                     "rank is the sum",
                  criterion6);
  failures += run(7, "folding test equals the Nielsen-reduction oracle on every word set of total length at most 8 "
                     "over ranks 1 and 2, plus the two fixed cases",
                  criterion7);
  failures += run(8, "200 random complexes: contractible verdicts have trivial groups and zero Euler "
                     "characteristic, and trivial groups imply a contractible verdict",
                  criterion8);
  failures += run(9, "Klein bottle: H1 = Z ⊕ Z/2 and not realizable", criterion9);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
