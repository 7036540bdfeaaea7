#include "helpers.hpp"
#include "phax/errors.hpp"
#include "phax/fuzz.hpp"
#include "phax/sequences.hpp"
#include "phax/suite.hpp"

#include <doctest.h>

using namespace phax;
using namespace testing_helpers;

namespace {

RelativeFilteredPair abs(const FilteredSet& X) { return RelativeFilteredPair::absolute(X); }

std::vector<Interval> grid_5x5() {
  std::vector<FiltValue> e{0, FiltValue(1, 2), 1, 2, 3};
  std::vector<Interval> out;
  for (const auto& a : e)
    for (const auto& b : e)
      if (a <= b) out.push_back(Interval::make(a, b));
  return out;
}

}  // namespace

TEST_CASE("axiom ids round-trip") {
  for (auto id : all_axioms()) CHECK(parse_axiom(to_string(id)) == id);
  CHECK(all_axioms().size() == 10);
  CHECK_THROWS(parse_axiom("A8"));
}

TEST_CASE("dimension axiom on points") {
  Field F(2);
  for (FiltValue alpha : {FiltValue(0), FiltValue(1), FiltValue(5, 2)}) {
    InstanceBundle b;
    b.name = "point";
    b.alpha = alpha;
    b.intervals = grid_5x5();
    auto r = verify_axiom(F, AxiomId::A6, b);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.checks == b.intervals.size() * 3);
  }
}

TEST_CASE("excision for two triangles glued along an edge") {
  Field F(3);
  // X' = first triangle, A = second triangle plus the shared edge.
  auto Xp = make_set({{{"a"}, 0}, {{"b"}, 0}, {{"c"}, 0}, {{"a", "b"}, 0}, {{"b", "c"}, 0},
                      {{"a", "c"}, 0}, {{"a", "b", "c"}, 1}});
  auto A = make_set({{{"b"}, 0}, {{"c"}, 0}, {{"d"}, 0}, {{"b", "c"}, 0}, {{"c", "d"}, 1},
                     {{"b", "d"}, 0}, {{"b", "c", "d"}, 2}});
  InstanceBundle b;
  b.name = "glued";
  b.x = Xp;
  b.y = A;
  auto a7 = verify_axiom(F, AxiomId::A7, b);
  auto s1 = verify_axiom(F, AxiomId::S1, b);
  CHECK(a7.verdict == Verdict::Pass);
  CHECK(s1.verdict == Verdict::Pass);
  CHECK(a7.checks > 0);
}

TEST_CASE("homotopy axiom refuses maps that are not contiguous") {
  Field F(2);
  // Two vertex maps of an edge onto the two ends of a hollow triangle's edges: not
  // contiguous, and their induced maps differ in degree 0 is not claimed.
  auto E = abs(make_set({{{"a"}, 0}, {{"b"}, 0}}));
  auto two = abs(make_set({{{"x"}, 0}, {{"y"}, 0}}));
  InstanceBundle b;
  b.name = "non-contiguous";
  b.f = validate_map({{"a", "x"}, {"b", "x"}}, E, two);
  b.g = validate_map({{"a", "y"}, {"b", "y"}}, E, two);
  auto r = verify_axiom(F, AxiomId::A5, b);
  CHECK(r.verdict == Verdict::Skip);
  CHECK(induced_map(F, *b.f, 0, Interval::make(0, 0)).matrix !=
        induced_map(F, *b.g, 0, Interval::make(0, 0)).matrix);
}

TEST_CASE("functoriality and boundary naturality on random instances") {
  Field F(3);
  for (const auto& c : fuzz_cases(9, 15)) {
    if (c.axiom == AxiomId::A4 || c.axiom == AxiomId::S2) continue;
    auto r = verify_axiom(F, c.axiom, c.bundle);
    CHECK_MESSAGE(r.verdict != Verdict::Fail, to_string(c.axiom) << " " << r.instance << " " << r.detail);
  }
}

TEST_CASE("exactness axioms report the non-exact interval with a witness") {
  Field F(2);
  auto P = RelativeFilteredPair::validate(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}}),
                                          make_set({{{"a"}, 0}, {{"b"}, 0}}));
  InstanceBundle b;
  b.name = "late-edge";
  b.pair = P;
  auto r = verify_axiom(F, AxiomId::A4, b);
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(r.witness.has_value());
  REQUIRE(r.witness->interval.has_value());
  CHECK(r.witness->interval->str() == "[0,1]");
  b.intervals = {Interval::make(0, 0), Interval::make(1, 1)};
  CHECK(verify_axiom(F, AxiomId::A4, b).verdict == Verdict::Pass);
  CHECK(verify_axiom(F, AxiomId::S2, b).verdict == Verdict::Pass);
}

TEST_CASE("missing bundle fields are reported") {
  Field F(2);
  InstanceBundle b;
  CHECK_THROWS_AS(verify_axiom(F, AxiomId::A1, b), MalformedInstance);
  CHECK_THROWS_AS(verify_axiom(F, AxiomId::S3, b), MalformedInstance);
}

TEST_CASE("instance hashes") {
  CHECK(instance_hash("") == "cbf29ce484222325");
  CHECK(instance_hash("a") == "af63dc4c8601ec8c");
  CHECK(instance_hash("x").size() == 16);
}

TEST_CASE("suite output is deterministic") {
  Field F(2);
  auto run = [&] {
    std::string out;
    for (const auto& r : run_suite(F, fuzz_cases(7, 20))) out += format_report(r, true) + "\n";
    return out;
  };
  const std::string first = run();
  CHECK(first == run());
  CHECK(first.find("A1\tfuzz0#") == 0);
  // Different seeds give different instances.
  std::string other;
  for (const auto& r : run_suite(F, fuzz_cases(8, 20))) other += format_report(r, true) + "\n";
  CHECK(other != first);
}

TEST_CASE("report formats") {
  AxiomReport r;
  r.axiom = AxiomId::A6;
  r.instance = "point";
  r.checks = 4;
  CHECK(format_report(r, true) == "A6\tpoint\tpass\t4");
  r.verdict = Verdict::Fail;
  r.detail = "why";
  CHECK(format_report(r, false) == "A6  point  fail  (4 checks)  why");
}
