#include <doctest.h>

#include "helpers.hpp"
#include "siltkit/cli.hpp"
#include "siltkit/dsl.hpp"

using namespace siltkit;

namespace {

bool same_presentation(const AlgebraPresentation& a, const AlgebraPresentation& b) {
  if (a.quiver.vertex_names != b.quiver.vertex_names) return false;
  if (a.quiver.num_arrows() != b.quiver.num_arrows()) return false;
  for (int i = 0; i < a.quiver.num_arrows(); ++i) {
    const Arrow &x = a.quiver.arrows[i], &y = b.quiver.arrows[i];
    if (x.name != y.name || x.source != y.source || x.target != y.target || x.degree != y.degree) return false;
  }
  if (a.relations.size() != b.relations.size()) return false;
  for (size_t i = 0; i < a.relations.size(); ++i)
    if (!(a.relations[i] == b.relations[i])) return false;
  return true;
}

}  // namespace

TEST_CASE("dsl: the worked examples parse") {
  auto a2 = parse_dsl("algebra a2\nvertex 1 2\narrow a : 1 -> 2\n");
  CHECK(a2.quiver.num_vertices() == 2);
  CHECK(a2.quiver.num_arrows() == 1);
  CHECK(a2.relations.empty());

  auto n23 = parse_dsl(
      "algebra n23\n"
      "vertex 1 2\n"
      "arrow x1 : 1 -> 2\n"
      "arrow x2 : 2 -> 1\n"
      "rel x1*x2*x1\n"
      "rel x2*x1*x2\n");
  CHECK(AlgebraBasis::build(n23)->dimension() == 6);

  auto graded = parse_dsl("algebra g\nvertex 1 2\narrow a : 1 -> 2 deg -1\n");
  CHECK(graded.quiver.arrows[0].degree == -1);

  auto coeffs = parse_dsl(
      "algebra c\nvertex 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\narrow c : 1 -> 2\n"
      "rel 2 a*b - 1/3 c*b\n");
  CHECK(coeffs.relations.size() == 1);
  CHECK(coeffs.relations[0].terms.size() == 2);
}

TEST_CASE("dsl: errors carry positions and kinds") {
  CHECK_THROWS_AS(parse_dsl("vertex 1\nfrob 2\n"), syntax_error);
  CHECK_THROWS_AS(parse_dsl("vertex 1 2\narrow a : 1 -> 3\n"), unknown_identifier);
  CHECK_THROWS_AS(parse_dsl("vertex 1 2 3\narrow a : 1 -> 2\narrow b : 2 -> 3\nrel a - b\n"),
                  non_parallel_relation);
  CHECK_THROWS_AS(parse_dsl("vertex 1 2\narrow a : 1 -> 2\nrel a\n"), non_admissible_relation);
  CHECK_THROWS_AS(parse_dsl("vertex 1 2\narrow a : 1 -> 2\nrel q*a\n"), unknown_identifier);
  try {
    parse_dsl("algebra x\nvertex 1\nbad line\n");
    CHECK(false);
  } catch (const syntax_error& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("dsl: print-parse round trip fixes the parse") {
  for (const auto& f : fixture_registry()) {
    auto p = f.build();
    auto once = parse_dsl(print_dsl(p));
    auto twice = parse_dsl(print_dsl(once));
    CHECK(same_presentation(once, twice));
    CHECK(same_presentation(once, p));
  }
}

TEST_CASE("cli: unknown verbs and options are rejected before compute") {
  Command bad{"frobnicate", {}};
  auto r = run_command(bad);
  CHECK(r.exit_code == 1);

  Command badopt{"basis", {{"fixture", "a2-path"}, {"cap", "3"}}};
  CHECK(run_command(badopt).exit_code == 1);

  Command nosource{"basis", {}};
  CHECK(run_command(nosource).exit_code == 1);
}

TEST_CASE("cli: oracle on the triangle example returns Yes via the clock rule") {
  Command cmd{"oracle", {{"fixture", "example-kronecker"}}};
  auto r = run_command(cmd);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.json.find("\"status\": \"Yes\"") != std::string::npos);
  CHECK(r.report.json.find("\"rule\": \"R3\"") != std::string::npos);
}

TEST_CASE("cli: unknown verdicts exit with code zero") {
  Command cmd{"oracle", {{"standard", "nakayama_cyclic(9,3)"}, {"r10-cap", "0"}}};
  auto r = run_command(cmd);
  CHECK(r.exit_code == 0);
  CHECK(r.report.json.find("\"status\": \"Unknown\"") != std::string::npos);
}

TEST_CASE("cli: enumerate emits the pentagon and its Hasse graph") {
  Command cmd{"enumerate", {{"fixture", "a2-path"}, {"d", "2"}, {"cap", "100"}}};
  auto r = run_command(cmd);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.json.find("\"nodes\": 5") != std::string::npos);
  REQUIRE(r.report.dot.has_value());
  CHECK(std::count(r.report.dot->begin(), r.report.dot->end(), '>') == 5);  // five edges
  CHECK(export_report(r.report, "dot") == *r.report.dot);
  CHECK_THROWS_AS(export_report(run_command(Command{"basis", {{"fixture", "a2-path"}}}).report, "dot"),
                  unsupported_format);
}

TEST_CASE("cli: reports are byte-identical across runs and thread counts") {
  Command cmd{"enumerate", {{"fixture", "a3-path"}, {"d", "2"}, {"cap", "100"}}};
  auto r1 = run_command(cmd);
  auto r2 = run_command(cmd);
  CHECK(r1.report.json == r2.report.json);
  Command cmd4{"enumerate", {{"fixture", "a3-path"}, {"d", "2"}, {"cap", "100"}, {"threads", "4"}}};
  auto r4 = run_command(cmd4);
  CHECK(r1.report.json == r4.report.json);

  Command oc{"oracle", {{"fixture", "extended-canonical-246"}, {"r10-cap", "0"}}};
  CHECK(run_command(oc).report.json == run_command(oc).report.json);
}

TEST_CASE("cli: timing is opt-in so reports stay reproducible") {
  Command plain{"basis", {{"fixture", "a2-path"}}};
  CHECK(run_command(plain).report.json.find("timing_ms") == std::string::npos);
  Command timed{"basis", {{"fixture", "a2-path"}, {"timing", "1"}}};
  CHECK(run_command(timed).report.json.find("timing_ms") != std::string::npos);
}

TEST_CASE("cli: mutate walks from the free module") {
  Command cmd{"mutate", {{"fixture", "n-2-3"}, {"at", "1"}, {"side", "right"}}};
  auto r = run_command(cmd);
  REQUIRE(r.exit_code == 0);
  CHECK(r.report.json.find("\"tilting\": true") != std::string::npos);
  CHECK(r.report.json.find("\"unimodular\": true") != std::string::npos);
}

TEST_CASE("cli: fixture list covers the bundled examples") {
  auto r = run_command(Command{"fixture-list", {}});
  REQUIRE(r.exit_code == 0);
  for (const char* id : {"example-kronecker", "example-y", "gamma-sec2-5", "bongartz-fails",
                         "extended-canonical-246"})
    CHECK(r.report.json.find(id) != std::string::npos);
}

TEST_CASE("cli: internal consistency problems exit with code two") {
  /* a relation set whose basis enumeration cannot terminate is an input
   * error (code 1), not an internal error */
  Command cmd{"basis", {{"algebra-text", "vertex 1\narrow x : 1 -> 1\n"}}};
  auto r = run_command(cmd);
  CHECK(r.exit_code == 1);
}

TEST_CASE("cli: the two-node Hasse graph of the local algebra") {
  Command cmd{"enumerate", {{"fixture", "dual-numbers"}, {"d", "2"}, {"cap", "10"}}};
  auto r = run_command(cmd);
  REQUIRE(r.exit_code == 0);
  REQUIRE(r.report.dot.has_value());
  CHECK(std::count(r.report.dot->begin(), r.report.dot->end(), '>') == 1);
  CHECK(r.report.dot->find("n1") != std::string::npos);
}
