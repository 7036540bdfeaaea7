#include "helpers.hpp"
#include "oracle.hpp"
#include "phax/errors.hpp"
#include "phax/fuzz.hpp"
#include "phax/sequences.hpp"
#include "phax/skeletal.hpp"

#include <doctest.h>

using namespace phax;
using namespace testing_helpers;

namespace {

std::vector<Interval> degenerate_intervals(const std::vector<FiltValue>& crit) {
  std::vector<Interval> out;
  for (const auto& c : crit) out.push_back(Interval::make(c, c));
  return out;
}

RelativeFilteredPair simplex_pair(int q, const FiltValue& alpha) {
  return RelativeFilteredPair::validate(standard_simplex(q, alpha), standard_boundary(q, alpha));
}

RelativeFilteredPair abs(const FilteredSet& X) { return RelativeFilteredPair::absolute(X); }

}  // namespace

TEST_CASE("skeletal chain groups") {
  Field F(2);
  auto T = abs(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"c"}, 0}, {{"a", "b"}, 0}, {{"b", "c"}, 0}, {{"a", "c"}, 0}}));
  auto I = Interval::make(0, 1);
  CHECK(skeletal_chain_group(F, T, -1, I).dim() == 0);
  auto C1 = skeletal_chain_group(F, T, 1, I);
  CHECK(C1.dim() == 3);
  CHECK(C1.simplices.size() == 3);
  CHECK(is_invertible(F, C1.generators));
  auto inside = RelativeFilteredPair::validate(T.total(), T.total());
  for (int q = 0; q <= 2; ++q) CHECK(skeletal_chain_group(F, inside, q, I).dim() == 0);
}

TEST_CASE("generators under vertex permutations") {
  Field F(3);
  auto P = abs(standard_simplex(2, 0));
  auto I = Interval::make(0, 0);
  auto C = skeletal_chain_group(F, P, 2, I);
  auto g = generator(F, 1, {"0", "1", "2"}, C);
  CHECK_FALSE(is_zero(g));
  CHECK(generator(F, 1, {"1", "2", "0"}, C) == g);
  auto odd = generator(F, 1, {"1", "0", "2"}, C);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(odd[i] == F.neg(g[i]));
  CHECK(is_zero(generator(F, 1, {"0", "0", "1"}, C)));
  CHECK(is_zero(generator(F, 0, {"0", "1", "2"}, C)));
  auto twice = generator(F, 2, {"0", "1", "2"}, C);
  for (std::size_t i = 0; i < g.size(); ++i) CHECK(twice[i] == F.mul(2, g[i]));
  // All vertices inside the subset.
  auto R = RelativeFilteredPair::validate(standard_simplex(2, 0), full_simplex({"0", "1"}, 0));
  CHECK(is_zero(generator(F, 1, {"0", "1"}, R, I)));
  // Over GF(2) odd and even permutations agree.
  Field F2(2);
  auto C2 = skeletal_chain_group(F2, P, 2, I);
  CHECK(generator(F2, 1, {"1", "0", "2"}, C2) == generator(F2, 1, {"0", "1", "2"}, C2));
}

TEST_CASE("boundary of an edge generator") {
  Field F(3);
  auto E = abs(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 0}}));
  auto I = Interval::make(0, 0);
  auto d = skeletal_boundary(F, E, 1, I);
  auto C0 = skeletal_chain_group(F, E, 0, I);
  REQUIRE(C0.simplices == std::vector<Simplex>{{"a"}, {"b"}});
  CHECK(d(0, 0) == F.from_int(-1));
  CHECK(d(1, 0) == 1);
  Field F2(2);
  auto d2 = skeletal_boundary(F2, E, 1, I);
  CHECK(d2(0, 0) == 1);
  CHECK(d2(1, 0) == 1);
}

TEST_CASE("skeletal identities on random pairs") {
  Rng rng(2718);
  for (std::uint32_t p : {2u, 3u}) {
    Field F(p);
    for (int t = 0; t < 25; ++t) {
      auto P = random_pair(rng);
      for (const auto& I : critical_intervals(P.critical_values())) {
        const int top = P.dimension() + 1;
        for (int q = 0; q <= top; ++q) {
          auto Cq = skeletal_chain_group(F, P, q, I);
          auto Cq1 = skeletal_chain_group(F, P, q - 1, I);
          // Generators form a basis: unique decomposition.
          REQUIRE(is_invertible(F, Cq.generators));
          for (std::size_t k = 0; k < Cq.dim(); ++k) {
            Vec e(Cq.dim(), 0);
            e[k] = 1;
            auto c = Cq.decompose(F, e);
            REQUIRE(c.has_value());
            CHECK(Cq.generators.apply(F, *c) == e);
          }
          // Closed boundary formula on every generator.
          Matrix R = skeletal_boundary_reps(F, Cq, Cq1);
          for (std::size_t k = 0; q >= 1 && k < Cq.simplices.size(); ++k) {
            const auto& s = Cq.simplices[k];
            Vec expected(Cq1.dim(), 0);
            for (std::size_t i = 0; i < s.size(); ++i) {
              Vec g = generator(F, F.from_int(i % 2 ? -1 : 1), facet(s, i), Cq1);
              for (std::size_t r = 0; r < g.size(); ++r) expected[r] = F.add(expected[r], g[r]);
            }
            CHECK(R.apply(F, Cq.generators.column(k)) == expected);
          }
          // d d = 0.
          if (q >= 1)
            CHECK(multiply(F, skeletal_boundary(F, P, q - 1, I), skeletal_boundary(F, P, q, I)).is_zero());
          // The skeleton pair only has homology in its own degree.
          auto S = skeleton_pair(P, q);
          for (int p2 = 0; p2 <= top; ++p2)
            if (p2 != q) CHECK(homology(F, S, p2, I)->dim() == 0);
        }
      }
    }
  }
}

TEST_CASE("skeletal homology") {
  Field F(2);
  CHECK(skeletal_homology(F, abs(triangle_boundary()), -1, Interval::make(0, 0)).dim() == 0);
  CHECK(skeletal_homology(F, abs(triangle_boundary()), 1, Interval::make(1, 2)).dim() == 1);
  for (int q = 0; q <= 4; ++q)
    for (FiltValue alpha : {FiltValue(0), FiltValue(1)}) {
      auto P = simplex_pair(q, alpha);
      for (int p2 = 0; p2 <= q + 1; ++p2) {
        auto I = Interval::make(alpha, 2);
        CHECK(skeletal_homology(F, P, p2, I).dim() == (p2 == q ? 1u : 0u));
      }
    }
}

TEST_CASE("skeletal and direct theories agree on degenerate intervals") {
  Rng rng(314);
  Field F(3);
  for (int t = 0; t < 40; ++t) {
    auto P = random_pair(rng);
    for (const auto& I : degenerate_intervals(P.critical_values()))
      for (int q = 0; q <= P.dimension() + 1; ++q) {
        CHECK(skeletal_homology(F, P, q, I).dim() == oracle::homology_dim(P, q, I.lo, I.hi, 3));
        auto th = theta(F, P, q, I);
        CHECK(is_invertible(F, th.matrix));
        auto s = skeletal_short_sequence(F, P, q, I);
        CHECK(s.exact());
        auto ids = preimage_identities(F, P, q, I);
        CHECK(ids.cycles_hold());
        CHECK(ids.boundaries_hold());
      }
  }
}

TEST_CASE("skeletal and direct theories differ on an interval of positive length") {
  // Hollow triangle, degree 0 on [0,1]: three vertices at 0 are joined by 1. The direct
  // group sees one class; the skeletal complex on the 0-skeleton keeps three.
  Field F(2);
  auto T = abs(triangle_boundary());
  auto I = Interval::make(0, 1);
  CHECK(homology(F, T, 0, I)->dim() == 1);
  CHECK(oracle::homology_dim(T, 0, 0, 1) == 1);
  CHECK(skeletal_homology(F, T, 0, I).dim() == 3);
  CHECK_THROWS_AS(theta(F, T, 0, I), OracleMismatch);
}

TEST_CASE("theta") {
  Field F(3);
  auto P = simplex_pair(2, 1);
  auto t = theta(F, P, 2, Interval::make(1, 2));
  CHECK(t.matrix.rows() == 1);
  CHECK(t.matrix.cols() == 1);
  CHECK(is_invertible(F, t.matrix));
  auto z = theta(F, P, 0, Interval::make(1, 2));
  CHECK(z.matrix.rows() == 0);
  CHECK(z.matrix.cols() == 0);
}

TEST_CASE("incidence isomorphisms") {
  for (std::uint32_t p : {2u, 3u, 10007u}) {
    Field F(p);
    for (int q = 1; q <= 4; ++q) {
      auto m = incidence_iso(F, q, 0, Interval::make(0, 1));
      REQUIRE(m.matrix.rows() == 1);
      REQUIRE(m.matrix.cols() == 1);
      CHECK(m.matrix(0, 0) != 0);
    }
  }
  // Degree 1: the relative edge class goes to a vertex class of the face {1}.
  Field F(2);
  auto m = incidence_iso(F, 1, 0, Interval::make(0, 0));
  CHECK(m.target->space().basis == std::vector<Simplex>{{"1"}});
  CHECK_THROWS_AS(incidence_iso(F, 0, 0, Interval::make(0, 0)), MalformedInstance);
  CHECK_THROWS_AS(incidence_iso(F, 1, 2, Interval::make(0, 3)), MalformedInstance);
}

TEST_CASE("short sequence of skeletal chains fails when the subset enters inside the interval") {
  Field F(2);
  auto P = RelativeFilteredPair::validate(make_set({{{"a"}, 0}}), make_set({{{"a"}, 1}}));
  auto I = Interval::make(0, 1);
  auto s = skeletal_short_sequence(F, P, 0, I);
  CHECK(s.CA.dim() == 0);
  CHECK(s.CX.dim() == 1);
  CHECK(s.CXA.dim() == 0);
  CHECK_FALSE(s.middle_exact);
  CHECK_FALSE(s.exact());
  CHECK(skeletal_short_sequence(F, P, 0, Interval::make(1, 1)).exact());
}
