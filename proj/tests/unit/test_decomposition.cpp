#include <algorithm>
#include <set>

#include "doctest.h"
#include "medial/cw_oracle.hpp"
#include "medial/decomposition.hpp"
#include "medial/fins.hpp"
#include "medial/io.hpp"
#include "medial/reports.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace medial;
using testfix::fixture;

namespace {

HomologyResult oracle_of(const MedialComplex& c) { return oracle_homology(build_chain_complex(c)).homology; }

std::size_t count_action(const DecompositionResult& d, const std::string& action) {
  return static_cast<std::size_t>(
      std::count_if(d.log.begin(), d.log.end(), [&](const StepRecord& s) { return s.action == action; }));
}

MedialComplex random_finned(testgen::Rng& rng, int max_fin_pairs) {
  testgen::GermSpec spec;
  spec.junctions = testgen::uniform(rng, 0, 4);
  spec.fin_points = 2 * testgen::uniform(rng, 1, max_fin_pairs);
  spec.circles = testgen::uniform(rng, 0, 1);
  return testgen::germ_complex(rng, spec);
}

}  // namespace

TEST_SUITE("decomposition") {
  TEST_CASE("fin classification on fixtures") {
    auto b = fin_records(fixture("fig7b"));
    REQUIRE(b.size() == 2);
    for (const auto& f : b) CHECK(f.cls == FinClass::EssentialType2);
    CHECK(b[0].junctions == std::vector<int>{5, 6});

    auto a = fin_records(fixture("fig7a"));
    REQUIRE(a.size() == 5);
    for (const auto& f : a) CHECK(f.cls == FinClass::Inessential);
    CHECK(std::count_if(a.begin(), a.end(), [](const FinRecord& f) { return !f.junction_free(); }) == 2);

    auto m = fin_records(fixture("fig8"));
    REQUIRE(m.size() == 1);
    CHECK(m[0].cls == FinClass::Inessential);
    CHECK(m[0].junction_free());

    auto c = fin_records(fixture("fig8c"));
    REQUIRE(c.size() == 3);
    for (const auto& f : c) CHECK(f.cls == FinClass::EssentialType1);
    CHECK(classify_fin_curves(fixture("fig8c")).size() == 3);
  }

  TEST_CASE("trace from either end of a fin names the same curve") {
    auto c = fixture("fig5");
    auto f = trace_fin(c, 2);
    CHECK(f.end_point == 3);
    CHECK(trace_fin(c, 3).end_point == 2);
    CHECK(f.support == Walk{{StepKind::Y, 2, true}});
  }

  TEST_CASE("unglue moves a fin point past one junction") {
    auto c = fixture("fig7b");
    auto f = trace_fin(c, 1);
    REQUIRE(f.junctions.size() == 2);
    auto d = unglue_from(c, 1);
    CHECK(validate_complex(d).ok());
    CHECK(d.junctions().size() == 1);
    CHECK(trace_fin(d, 1).junctions.size() == 1);
    CHECK(oracle_of(d).same_groups(oracle_of(c)));
  }

  TEST_CASE("unglue on a junction-free fin is refused") {
    CHECK_THROWS_AS(unglue_from(fixture("fig5"), 2), std::runtime_error);
  }

  TEST_CASE("slide makes the trace junction-free") {
    auto c = fixture("fig7b");
    auto f = fin_records(c).front();
    auto d = slide_fin(c, f);
    CHECK(validate_complex(d).ok());
    CHECK(trace_fin(d, f.start_point).junction_free());
    CHECK(oracle_of(d).same_groups(oracle_of(c)));
  }

  TEST_CASE("cut detaches the fin sheet") {
    auto c = fixture("fig5");
    auto f = fin_records(c).front();
    CutInfo info;
    auto d = cut_essential(c, f, &info);
    CHECK(validate_complex(d).ok());
    CHECK(info.fin_sheet == 4);
    CHECK(info.base_sheet == 1);
    REQUIRE(d.arcs.size() == 1);
    auto rest = fin_records(d);
    REQUIRE(rest.size() == 1);
    CHECK(rest[0].label == "4-5");
    auto e = cut_essential(d, rest[0]);
    CHECK(split_components(e).size() == 3);
  }

  TEST_CASE("cut and contract reject the wrong kind of fin") {
    auto c = fixture("fig8");
    auto f = fin_records(c).front();
    CHECK_THROWS_AS(cut_essential(c, f), std::invalid_argument);
    auto e = fixture("fig5");
    CHECK_THROWS_AS(contract_inessential(e, fin_records(e).front()), std::invalid_argument);
    auto b = fixture("fig7b");
    CHECK_THROWS_AS(cut_essential(b, fin_records(b).front()), std::invalid_argument);
  }

  TEST_CASE("contract removes an inessential fin and keeps homology") {
    auto c = fixture("fig8");
    auto d = contract_inessential(c, fin_records(c).front());
    CHECK(validate_complex(d).ok());
    CHECK(d.fin_free());
    CHECK(oracle_of(d).same_groups(oracle_of(c)));
  }

  TEST_CASE("fig8c splits into four components along a tree") {
    auto d = decompose(fixture("fig8c"));
    CHECK(d.components.size() == 4);
    CHECK(d.gamma.graph.edge_count() == 3);
    CHECK(count_action(d, "cut") == 3);
    CHECK(betti1(d.gamma.graph) == 0);
    std::set<std::pair<int, int>> edges;
    for (const auto& e : d.gamma.graph.edges()) edges.insert({e.u, e.v});
    CHECK(edges == std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {4, 2}});
    CHECK(d.components[0].metadata.name == "fig8c/M1");
    auto g = assemble_check(d);
    CHECK(g.beta1 == 0);
    CHECK(g.components.size() == 4);
  }

  TEST_CASE("a self-attachment becomes a loop in Γ") {
    auto d = decompose(fixture("unknot"));
    CHECK(d.components.size() == 1);
    REQUIRE(d.gamma.graph.edge_count() == 1);
    CHECK(d.gamma.graph.edges()[0].is_loop());
    CHECK(assemble_check(d).beta1 == 1);
  }

  TEST_CASE("fin-free input is one component with an empty log") {
    auto d = decompose(fixture("fig13"));
    CHECK(d.components.size() == 1);
    CHECK(d.log.empty());
    CHECK(assemble_check(d).beta1 == 0);
  }

  TEST_CASE("assemble_check refuses a mismatched Γ") {
    auto d = decompose(fixture("fig8c"));
    d.components.pop_back();
    CHECK_THROWS_AS(assemble_check(d), std::logic_error);
  }

  TEST_CASE("type-2 choice decides which fin is cut first") {
    auto c = fixture("fig7b");
    auto low = make_policy("lowest");
    auto high = make_policy("highest");
    auto a = decompose(c, *low);
    auto b = decompose(c, *high);
    auto first_cut = [](const DecompositionResult& d) {
      for (const auto& s : d.log) {
        if (s.action == "cut") return s.fin;
      }
      return std::string();
    };
    CHECK(first_cut(a) == "1-2");
    CHECK(first_cut(b) == "3-4");
    CHECK(a.components.size() == 3);
    CHECK(b.components.size() == 3);
  }

  TEST_CASE("fig7a: unglue choices give one, two or three components") {
    auto c = fixture("fig7a");
    const std::vector<std::size_t> expected{1, 2, 3};
    const auto& scripts = testfix::fig7a_policies();
    for (std::size_t k = 0; k < scripts.size(); ++k) {
      CAPTURE(scripts[k]);
      auto p = make_policy(scripts[k]);
      auto d = decompose(c, *p);
      CHECK(d.components.size() == expected[k]);
      CHECK(d.gamma.graph.edge_count() == expected[k] - 1);
      CHECK(betti1(d.gamma.graph) == 0);
      CHECK(count_action(d, "unglue") == 4);
    }
  }

  TEST_CASE("policy parsing") {
    CHECK(make_policy("lowest")->name() == "lowest");
    CHECK(make_policy("lowest:end")->name() == "lowest:end");
    CHECK(make_policy("highest")->name() == "highest");
    CHECK(make_policy("script:4,8,4")->name() == "script:4,8,4");
    CHECK_THROWS_AS(make_policy("random"), std::invalid_argument);
    CHECK_THROWS_AS(make_policy("script:1,x"), std::invalid_argument);
  }

  TEST_CASE("a scripted point that is not a candidate is refused") {
    auto p = make_policy("script:9");
    CHECK_THROWS_AS(decompose(fixture("fig7a"), *p), std::runtime_error);
  }

  TEST_CASE("property: rewrites preserve homology of the input") {
    testgen::Rng rng(31);
    int checked = 0;
    for (int trial = 0; trial < 150; ++trial) {
      auto c = random_finned(rng, 4);
      auto before = oracle_of(c);
      for (const auto& f : fin_records(c)) {
        MedialComplex d;
        if (!f.junction_free()) {
          d = unglue_from(c, f.start_point);
        } else if (!f.essential) {
          d = contract_inessential(c, f);
        } else {
          continue;
        }
        ++checked;
        CHECK(validate_complex(d).ok());
        CHECK(oracle_of(d).same_groups(before));
      }
    }
    CHECK(checked > 100);
  }

  TEST_CASE("property: Γ has one edge per cut and the result is policy independent") {
    testgen::Rng rng(77);
    for (int trial = 0; trial < 120; ++trial) {
      auto c = random_finned(rng, 5);
      std::vector<HomologyResult> hs;
      std::vector<int> chis;
      for (const std::string spec : {"lowest", "lowest:end", "highest"}) {
        auto p = make_policy(spec);
        auto d = decompose(c, *p);
        CHECK(d.gamma.graph.edge_count() == count_action(d, "cut"));
        CHECK(d.gamma.graph.vertex_count() == d.components.size());
        for (const auto& m : d.components) CHECK(m.fin_free());
        auto p2 = make_policy(spec);
        auto a = analyze(c, *p2);
        CHECK(a.oracle_agrees);
        hs.push_back(a.homology);
        chis.push_back(a.global.chi);
      }
      CHECK(hs[0].same_groups(hs[1]));
      CHECK(hs[0].same_groups(hs[2]));
      CHECK(chis[0] == chis[1]);
      CHECK(chis[0] == chis[2]);
    }
  }

  TEST_CASE("property: decomposition terminates with up to twenty fin points") {
    testgen::Rng rng(4);
    for (int trial = 0; trial < 40; ++trial) {
      testgen::GermSpec spec;
      spec.junctions = testgen::uniform(rng, 0, 6);
      spec.fin_points = 2 * testgen::uniform(rng, 5, 10);
      auto c = testgen::germ_complex(rng, spec);
      auto d = decompose(c);
      CHECK_FALSE(d.components.empty());
      CHECK(d.log.size() <= 10 * fin_records(c).size());
    }
  }
}
