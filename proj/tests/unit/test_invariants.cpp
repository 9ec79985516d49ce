#include "doctest.h"
#include "medial/cw_oracle.hpp"
#include "medial/decomposition.hpp"
#include "medial/invariants.hpp"
#include "medial/io.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace medial;
using testfix::fixture;

namespace {

// Counts taken straight from the complex, without the invariants module.
InvariantRecord direct_counts(const MedialComplex& c) {
  InvariantRecord r;
  r.s = static_cast<int>(c.sheets.size());
  r.c = static_cast<int>(components(c.ynet).size());
  r.lambda = betti1(build_component_graph(c).graph);
  r.v = static_cast<int>(c.junctions().size());
  for (const auto& s : c.sheets) {
    r.e += s.edge_count();
    r.G += s.weighted_genus();
    if (s.edge_count() == 0) {
      ++r.s0;
      (s.orientable ? r.s0o : r.s0n) += 1;
    }
  }
  return r;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("two circles joined by an annulus") {
    auto r = component_invariants(fixture("fig13"));
    CHECK(r == InvariantRecord{5, 2, 0, 0, 2, 0, 0, 2, 3, 3, 3, 0, 1});
    CHECK(euler_characteristic(r) == 1);
    CHECK_FALSE(euler_relation_holds(r));
  }

  TEST_CASE("disk with two fins folded onto a circle") {
    auto r = component_invariants(fixture("fig1"));
    CHECK(r.s == 3);
    CHECK(r.c == 1);
    CHECK(r.e == 2);
    CHECK(r.s0 == 1);
    CHECK(r.q == 0);
    CHECK(r.Q == 1);
    CHECK(r.nu == 2);
    CHECK(r.chi == 0);
    CHECK(euler_relation_holds(r));
  }

  TEST_CASE("closed surfaces") {
    auto t = component_invariants(fixture("torus"));
    CHECK(t.G == 2);
    CHECK(t.q == 2);
    CHECK(t.chi == -1);
    auto k = component_invariants(fixture("klein"));
    CHECK(k.G == 2);
    CHECK(k.s0n == 1);
    CHECK(k.s0o == 0);
    CHECK(k.chi == -1);
    auto d = component_invariants(fixture("fig9a"));
    CHECK(d.s == 1);
    CHECK(d.e == 1);
    CHECK(d.chi == 0);
  }

  TEST_CASE("junction with two loops") {
    auto r = component_invariants(fixture("fig9d"));
    CHECK(r.v == 1);
    CHECK(r.c == 1);
    CHECK(r.s == 4);
    CHECK(r.e == 2);
    CHECK(r.chi == 0);
    CHECK(euler_relation_holds(r));
  }

  TEST_CASE("fins are refused") {
    CHECK_THROWS_AS(component_invariants(fixture("fig8")), std::invalid_argument);
  }

  TEST_CASE("a record whose two formulas differ is refused") {
    InvariantRecord r{1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 0};
    r.Q = 5;
    CHECK_THROWS_AS(euler_characteristic(r), std::logic_error);
  }

  TEST_CASE("global record of fig8c") {
    auto d = decompose(fixture("fig8c"));
    std::vector<InvariantRecord> rs;
    for (const auto& m : d.components) rs.push_back(component_invariants(m));
    CHECK(rs[0].nu == 3);
    auto g = global_invariants(rs, d.gamma.graph);
    CHECK(g.s == 8);
    CHECK(g.beta1 == 0);
    CHECK(g.nu == 6);
    CHECK(g.chi == 0);
    std::string table = invariant_table(g);
    CHECK(table.find("M4") != std::string::npos);
    CHECK(table.find("beta1") != std::string::npos);
  }

  TEST_CASE("a loop in Γ lowers ν and χ̃ by one") {
    auto d = decompose(fixture("unknot"));
    auto r = component_invariants(d.components[0]);
    auto g = global_invariants({r}, d.gamma.graph);
    CHECK(g.beta1 == 1);
    CHECK(g.nu == r.nu - 1);
    CHECK(g.chi == r.chi - 1);
  }

  TEST_CASE("property: counts match the complex and the identities hold") {
    testgen::Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
      auto c = testgen::random_fin_free_component(rng);
      auto r = component_invariants(c);
      auto d = direct_counts(c);
      CHECK(r.s == d.s);
      CHECK(r.c == d.c);
      CHECK(r.lambda == d.lambda);
      CHECK(r.v == d.v);
      CHECK(r.e == d.e);
      CHECK(r.G == d.G);
      CHECK(r.s0 == d.s0);
      CHECK(r.s0o == d.s0o);
      CHECK(r.s0n == d.s0n);
      CHECK(r.q == r.G + r.e - (r.s - r.s0));
      CHECK(r.Q == r.lambda + r.v + r.c + r.q);
      CHECK(r.nu == r.s - r.c - r.lambda);
      CHECK(r.chi == r.s0 - r.Q);
      CHECK(r.chi == r.s - (r.e + r.v + r.c + r.G + r.lambda));
      CHECK(r.chi == r.nu - (r.G + r.e + r.v));
    }
  }

  TEST_CASE("property: χ̃ equals the cell count of the chain complex") {
    testgen::Rng rng(321);
    for (int trial = 0; trial < 200; ++trial) {
      auto c = testgen::random_fin_free_component(rng);
      auto o = oracle_homology(build_chain_complex(c));
      CHECK(component_invariants(c).chi == o.chi_cells);
    }
  }

  TEST_CASE("property: global χ̃ is the component sum minus β1(Γ)") {
    testgen::Rng rng(55);
    for (int trial = 0; trial < 100; ++trial) {
      int n = testgen::uniform(rng, 1, 4);
      std::vector<InvariantRecord> rs;
      int sum = 0;
      for (int k = 0; k < n; ++k) {
        rs.push_back(component_invariants(testgen::random_fin_free_component(rng)));
        sum += rs.back().chi;
      }
      auto gamma = testgen::random_gamma(rng, n, testgen::chance(rng, 0.5));
      auto g = global_invariants(rs, gamma);
      CHECK(g.chi == sum - betti1(gamma));
    }
  }
}
