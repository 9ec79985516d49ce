#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "support/fixtures.hpp"

namespace {

struct Run {
  int rc = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  std::string cmd = std::string(MEDIAL_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), static_cast<int>(buf.size()), p)) r.out += buf.data();
  int status = pclose(p);
  r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fx(const std::string& name) { return medial::testfix::fixture_path(name); }

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("the binary was built") { REQUIRE(std::string(MEDIAL_CLI_PATH).size() > 0); }

  TEST_CASE("validate") {
    auto ok = run("validate " + fx("fig13"));
    CHECK(ok.rc == 0);
    CHECK(contains(ok.out, "valid"));
    auto adv = run("validate " + fx("junction_mismatch"));
    CHECK(adv.rc == 0);
    CHECK(contains(adv.out, "advisory"));
  }

  TEST_CASE("invalid input exits with 2") {
    const std::string path = "medial_cli_test_bad.json";
    std::ofstream(path) << "{\"version\": 1, \"sheets\": [";
    auto r = run("homology " + path);
    CHECK(r.rc == 2);
    CHECK(contains(r.out, "malformed"));
    std::remove(path.c_str());
    CHECK(run("homology").rc == 2);
    CHECK(run("decompose --policy nonsense " + fx("fig7b")).rc == 2);
  }

  TEST_CASE("check-contractible exit codes and messages") {
    auto no = run("check-contractible " + fx("fig13"));
    CHECK(no.rc == 1);
    CHECK(contains(no.out, "Euler relation fails: 3 ≠ 2"));
    auto yes = run("check-contractible " + fx("fig8c"));
    CHECK(yes.rc == 0);
    CHECK(contains(yes.out, "contractible: true"));
  }

  TEST_CASE("homology with the oracle") {
    auto r = run("homology --oracle " + fx("fig13"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "H2 = Z, H1 = 0; oracle agrees"));
    auto k = run("homology " + fx("klein"));
    CHECK(contains(k.out, "H1 = Z ⊕ Z/2"));
    CHECK(contains(k.out, "realizable: no"));
  }

  TEST_CASE("json output parses as an object") {
    for (const std::string sub : {"validate", "decompose", "invariants", "homology", "pi1", "check-contractible"}) {
      CAPTURE(sub);
      auto r = run(sub + " --json " + fx("fig8c"));
      CHECK(r.rc == 0);
      CHECK(r.out.rfind("{", 0) == 0);
    }
  }

  TEST_CASE("decompose with a scripted policy") {
    auto r = run("decompose --policy script:1,3,5,7 " + fx("fig7a"));
    CHECK(r.rc == 0);
    CHECK(contains(r.out, "M3"));
  }

  TEST_CASE("export-dot") {
    auto g = run("export-dot --graph gamma " + fx("fig8c"));
    CHECK(g.rc == 0);
    CHECK(contains(g.out, "digraph"));
    auto l = run("export-dot --graph lambda " + fx("fig13"));
    CHECK(contains(l.out, "Lambda M1"));
    CHECK(run("export-dot --graph nope " + fx("fig13")).rc == 2);
  }
}
