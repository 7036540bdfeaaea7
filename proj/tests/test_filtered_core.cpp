#include "helpers.hpp"
#include "phax/errors.hpp"
#include "phax/fuzz.hpp"

#include <doctest.h>

using namespace phax;
using namespace testing_helpers;

TEST_CASE("filtration values parse and print exactly") {
  CHECK(FiltValue::parse("3") == FiltValue(3));
  CHECK(FiltValue::parse("1/2") == FiltValue(1, 2));
  CHECK(FiltValue::parse("2/4").str() == "1/2");
  CHECK(FiltValue::parse("-1").str() == "-1");
  CHECK(FiltValue::parse("inf").is_inf());
  CHECK(FiltValue(5, 2).str() == "5/2");
  CHECK(FiltValue(2) < FiltValue::inf());
  CHECK_FALSE(FiltValue::inf() < FiltValue::inf());
  CHECK(max(FiltValue(1), FiltValue::inf()).is_inf());
  CHECK_THROWS(FiltValue::parse("x"));
  CHECK_THROWS(FiltValue::parse("1/0"));
}

TEST_CASE("validate accepts monotone downward-closed input") {
  auto X = make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}});
  CHECK(X.support().size() == 3);
  CHECK(X.value(make_simplex({"b", "a"})) == FiltValue(1));
  CHECK(X.dimension() == 1);
}

TEST_CASE("validate rejects a face valued above its coface") {
  CHECK_THROWS_AS(make_set({{{"a"}, 2}, {{"b"}, 0}, {{"a", "b"}, 1}}), MonotonicityViolation);
}

TEST_CASE("validate rejects a missing face") {
  std::map<Simplex, FiltValue> raw{{make_simplex({"a", "b"}), FiltValue(1)}};
  CHECK_THROWS_AS(FilteredSet::validate(raw, {"a", "b"}), MissingFace);
  // Each enumerated face must be present, not just vertices.
  std::map<Simplex, FiltValue> tri{{{"a"}, 0}, {{"b"}, 0}, {{"c"}, 0},
                                  {{"a", "b"}, 0}, {{"a", "c"}, 0}, {make_simplex({"a", "b", "c"}), 1}};
  CHECK_THROWS_AS(FilteredSet::validate(tri, {"a", "b", "c"}), MissingFace);
}

TEST_CASE("validate rejects simplices on undeclared vertices") {
  std::map<Simplex, FiltValue> raw{{{"z"}, FiltValue(0)}};
  CHECK_THROWS_AS(FilteredSet::validate(raw, {"a"}), UnknownVertex);
}

TEST_CASE("infinite entries are unsupported") {
  std::map<Simplex, FiltValue> raw{{{"a"}, 0}, {{"b"}, FiltValue::inf()}, {make_simplex({"a", "b"}), FiltValue::inf()}};
  auto X = FilteredSet::validate(raw, {"a", "b"});
  CHECK(X.support().size() == 1);
  CHECK(X.value({"b"}).is_inf());
  CHECK(X.has_vertex("b"));
}

TEST_CASE("sublevel complexes of the hollow triangle") {
  auto X = triangle_boundary();
  auto at0 = X.complex_at(0);
  CHECK(at0.size() == 3);
  for (const auto& s : at0) CHECK(dim(s) == 0);
  CHECK(X.complex_at(1).size() == 6);
  CHECK(X.simplices(1, 1).size() == 3);
  CHECK(X.complex_at(-1).empty());
}

TEST_CASE("sublevel enumeration matches a direct filter on random sets") {
  Rng rng(11);
  for (int t = 0; t < 30; ++t) {
    auto X = random_filtered_set(rng);
    for (const auto& eps : fuzz_palette()) {
      std::size_t expected = 0;
      for (const auto& [s, v] : X.support())
        if (v <= eps) ++expected;
      CHECK(X.complex_at(eps).size() == expected);
      for (const auto& s : X.complex_at(eps))
        for (std::size_t k = 0; s.size() > 1 && k < s.size(); ++k) CHECK(X.value(facet(s, k)) <= eps);
    }
  }
}

TEST_CASE("union takes the minimum and intersection the maximum") {
  auto X = make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}, {{"c"}, 3}});
  auto Y = make_set({{{"a"}, 0}, {{"b"}, 1}, {{"a", "b"}, 2}, {{"d"}, 0}});
  auto U = filtered_union(X, Y);
  auto N = filtered_intersection(X, Y);
  CHECK(U.value(make_simplex({"a", "b"})) == FiltValue(1));
  CHECK(N.value(make_simplex({"a", "b"})) == FiltValue(2));
  CHECK(U.value({"c"}) == FiltValue(3));
  CHECK(N.value({"c"}).is_inf());
  // Spans both sides but lies in neither.
  CHECK(U.value(make_simplex({"c", "d"})).is_inf());
  CHECK(U.vertices().size() == 4);
}

TEST_CASE("skeleton filters by dimension") {
  auto S = standard_simplex(2, 0);
  auto minus = skeleton(S, -1);
  CHECK(minus.support().empty());
  auto one = skeleton(S, 1);
  CHECK(one.support().size() == 6);
  CHECK(one.value(standard_vertices(2)).is_inf());
  CHECK(skeleton(S, 2) == S);
  CHECK(skeleton(S, 7) == S);
}

TEST_CASE("standard objects") {
  CHECK(standard_vertices(2) == std::vector<Vertex>{"0", "1", "2"});
  CHECK(standard_vertices(10).front() == "00");
  CHECK(standard_simplex(3, 1).support().size() == 15);
  CHECK(standard_boundary(3, 1).support().size() == 14);
  auto C = closed_star(2, 0, "0");
  // Face opposite "0" and the top face are absent.
  CHECK(C.value({"1", "2"}).is_inf());
  CHECK(C.value({"0", "1", "2"}).is_inf());
  CHECK(C.value({"0", "1"}) == FiltValue(0));
  CHECK(point(FiltValue(5, 2)).critical_values() == std::vector<FiltValue>{FiltValue(5, 2)});
}

TEST_CASE("critical values") {
  CHECK(triangle_boundary().critical_values() == std::vector<FiltValue>{0, 1});
  CHECK(point(3).critical_values() == std::vector<FiltValue>{3});
  CHECK(FilteredSet().critical_values().empty());
}

TEST_CASE("relative pairs require the subset to sit above the total") {
  auto X = make_set({{{"a"}, 0}, {{"b"}, 1}});
  auto A_ok = make_set({{{"a"}, 1}});
  auto A_bad = make_set({{{"b"}, 0}});
  CHECK_NOTHROW(RelativeFilteredPair::validate(X, A_ok));
  CHECK_THROWS_AS(RelativeFilteredPair::validate(X, A_bad), InvalidPair);
  CHECK_THROWS_AS(RelativeFilteredPair::validate(X, make_set({{{"z"}, 2}})), InvalidPair);
}

TEST_CASE("intervals") {
  CHECK_THROWS_AS(Interval::make(2, 1), InvalidInterval);
  CHECK_THROWS_AS(Interval::make(0, FiltValue::inf()), InvalidInterval);
  auto I = Interval::make(half(), 2);
  CHECK(I.contains(1));
  CHECK(I.str() == "[1/2,2]");
  CHECK(evaluation_levels(I, {0, 1, 3}) == std::vector<FiltValue>{half(), 1, 2});
}

TEST_CASE("filtration preserving maps") {
  auto X = RelativeFilteredPair::absolute(triangle_boundary());
  CHECK_NOTHROW(identity_map(X));
  auto P = RelativeFilteredPair::absolute(point(0));
  CHECK_NOTHROW(validate_map({{"a", "p"}, {"b", "p"}, {"c", "p"}}, X, P));
  auto late = RelativeFilteredPair::absolute(point(2));
  CHECK_THROWS_AS(validate_map({{"a", "p"}, {"b", "p"}, {"c", "p"}}, X, late), NotFiltrationPreserving);
  CHECK_THROWS_AS(validate_map({{"a", "p"}}, X, P), UnknownVertex);

  auto E = RelativeFilteredPair::validate(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}}),
                                          make_set({{{"a"}, 0}}));
  auto T = RelativeFilteredPair::validate(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}}),
                                          make_set({{{"b"}, 0}}));
  CHECK_THROWS_AS(validate_map({{"a", "a"}, {"b", "b"}}, E, T), SubNotMappedIntoSub);
  auto swap = validate_map({{"a", "b"}, {"b", "a"}}, E, T);
  CHECK(swap.image({"a", "b"}) == Simplex{"a", "b"});
  auto back = validate_map({{"a", "b"}, {"b", "a"}}, T, E);
  auto id = compose(back, swap);
  CHECK(id.vertex_map() == identity_map(E).vertex_map());
}

TEST_CASE("cylinder of a single vertex") {
  auto c = cylinder(point(FiltValue(1), "a"), {"a"});
  const auto& X = c.pair.total();
  CHECK(X.value({"a"}) == FiltValue(1));
  CHECK(X.value({"a'"}) == FiltValue(1));
  CHECK(X.value(make_simplex({"a", "a'"})) == FiltValue(1));
  CHECK(X.support().size() == 3);
  CHECK(c.h0({"a"}) == "a");
  CHECK(c.h1({"a"}) == "a'");
  CHECK(c.k({"a'"}) == "a");
}

TEST_CASE("cylinder of an edge has both prisms at the edge value") {
  auto X = make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 2}});
  auto c = cylinder(X, {"a", "b"});
  const auto& Y = c.pair.total();
  CHECK(Y.value(make_simplex({"a'", "a", "b"})) == FiltValue(2));
  CHECK(Y.value(make_simplex({"a'", "b'", "b"})) == FiltValue(2));
  CHECK(Y.value(make_simplex({"a", "b'"})).is_inf());
  CHECK(Y.value(make_simplex({"a'", "b"})) == FiltValue(2));
  CHECK(Y.value(make_simplex({"a", "a'"})) == FiltValue(0));
  CHECK_THROWS(cylinder(X, {"a"}));
}

TEST_CASE("star-shaped sets") {
  auto I01 = Interval::make(0, 1);
  for (const auto& v : standard_vertices(2)) CHECK(is_star_shaped(standard_simplex(2, 0), v, I01));
  CHECK_FALSE(is_star_shaped(standard_boundary(1, 0), "0", I01));
  CHECK(is_star_shaped(triangle_boundary(), "a", Interval::make(-2, -1)));
  CHECK_FALSE(is_star_shaped(triangle_boundary(), "a", I01));
}
