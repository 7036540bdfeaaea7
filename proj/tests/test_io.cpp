#include "helpers.hpp"
#include "phax/errors.hpp"
#include "phax/fuzz.hpp"
#include "phax/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace phax;
using namespace testing_helpers;

namespace {

FilteredSet parse(const std::string& text) {
  std::istringstream in(text);
  return parse_filtration(in, "text");
}

RelativeFilteredPair parse_p(const std::string& text) {
  std::istringstream in(text);
  return parse_pair(in, "text");
}

}  // namespace

TEST_CASE("parse a filtration fragment") {
  auto X = parse("0 a\n0 b\n1 a b\n");
  CHECK(X.support().size() == 3);
  CHECK(X.value({"a", "b"}) == FiltValue(1));
  auto Y = parse("# comment\n\n0 b a   # trailing\n0 a\n0 b\n1/2 c\n");
  CHECK(Y.value({"a", "b"}) == FiltValue(0));
  CHECK(Y.value({"c"}) == FiltValue(1, 2));
}

TEST_CASE("infinite lines are excluded from every finite level") {
  auto X = parse("0 a\n0 b\n0 c\n0 a b\n0 b c\n0 a c\ninf a b c\n");
  CHECK(X.value({"a", "b", "c"}).is_inf());
  CHECK(X.complex_at(100).size() == 6);
}

TEST_CASE("parse errors carry the source line") {
  try {
    parse("1 a\n0 b\n0 a b\n");
    FAIL("expected a monotonicity error");
  } catch (const MonotonicityViolation& e) {
    CHECK(std::string(e.what()).find("text") != std::string::npos);
  }
  CHECK_THROWS_AS(parse("0 a\n0 a b\n"), MissingFace);
  CHECK_THROWS_AS(parse("zero a\n"), ParseError);
  CHECK_THROWS_AS(parse("0\n"), ParseError);
  CHECK_THROWS_AS(parse("0 a\n1 a\n"), ParseError);
  CHECK_THROWS_AS(parse_p("[X]\n0 a\n[X]\n0 b\n"), ParseError);
}

TEST_CASE("pair sections") {
  auto P = parse_p("[X]\n0 a\n0 b\n1 a b\n[A]\n0 a\n");
  CHECK(P.sub().value({"a"}) == FiltValue(0));
  CHECK(P.sub().value({"b"}).is_inf());
  auto abs_pair = parse_p("0 a\n");
  CHECK(abs_pair.sub().support().empty());
  // Subset value below the total value.
  CHECK_THROWS_AS(parse_p("[X]\n1 a\n[A]\n0 a\n"), InvalidPair);
}

TEST_CASE("serialization round-trips") {
  Rng rng(404);
  for (int t = 0; t < 50; ++t) {
    auto P = random_pair(rng);
    const std::string text = serialize(P);
    auto Q = parse_p(text);
    CHECK(Q == P);
    CHECK(serialize(Q) == text);
  }
  auto X = parse("1 b a\n0 b\n0 a\n1/2 c\ninf z\n");
  CHECK(serialize(X) == "inf z\n0 a\n0 b\n1/2 c\n1 a b\n");
}

TEST_CASE("files and maps") {
  auto X = parse_filtration_file("triangle.filt");
  CHECK(X.support().size() == 6);
  auto sections = parse_sections_file("triple.sets");
  CHECK(sections.size() == 3);
  CHECK(sections.count("B") == 1);
  auto f = parse_map_file("collapse.map");
  CHECK(f({"c"}) == "a");
  CHECK_THROWS_AS(parse_filtration_file("no_such_file.filt"), ParseError);
  CHECK_THROWS_AS(parse_filtration_file("nonmonotone.filt"), MonotonicityViolation);
}

TEST_CASE("intervals from text") {
  auto I = parse_interval("1/2, 2");
  CHECK(I.lo == FiltValue(1, 2));
  CHECK(I.hi == FiltValue(2));
  CHECK_THROWS_AS(parse_interval("1"), ParseError);
  CHECK_THROWS_AS(parse_interval("a,b"), ParseError);
  CHECK_THROWS_AS(parse_interval("2,1"), InvalidInterval);
}
