#include "helpers.hpp"
#include "oracle.hpp"
#include "phax/barcode.hpp"
#include "phax/fuzz.hpp"
#include "phax/sequences.hpp"

#include <doctest.h>

#include <algorithm>

using namespace phax;
using namespace testing_helpers;

namespace {

std::size_t count(const std::vector<Bar>& bars, int n, const FiltValue& b, const FiltValue& d) {
  return static_cast<std::size_t>(std::count_if(bars.begin(), bars.end(), [&](const Bar& x) {
    return x.degree == n && x.birth == b && x.death == d;
  }));
}

}  // namespace

TEST_CASE("barcode of the hollow triangle") {
  Field F(2);
  auto bars = barcode(F, RelativeFilteredPair::absolute(triangle_boundary()));
  CHECK(count(bars, 0, 0, FiltValue::inf()) == 1);
  CHECK(count(bars, 0, 0, 1) == 2);
  CHECK(count(bars, 1, 1, FiltValue::inf()) == 1);
  CHECK(bars.size() == 4);
}

TEST_CASE("relative barcode of an edge over its endpoints") {
  Field F(2);
  auto P = RelativeFilteredPair::validate(make_set({{{"a"}, 0}, {{"b"}, 0}, {{"a", "b"}, 1}}),
                                          make_set({{{"a"}, 0}, {{"b"}, 0}}));
  auto bars = barcode(F, P);
  CHECK(count(bars, 1, 1, FiltValue::inf()) == 1);
  CHECK(bars_alive(bars, 0, Interval::make(0, 2)) == 0);
  CHECK(bars_alive(bars, 1, Interval::make(1, 2)) == 1);
}

TEST_CASE("subset entering later kills relative classes") {
  Field F(2);
  auto P = RelativeFilteredPair::validate(make_set({{{"a"}, 0}}), make_set({{{"a"}, 1}}));
  auto bars = barcode(F, P);
  CHECK(count(bars, 0, 0, 1) == 1);
  CHECK(bars.size() == 1);
}

TEST_CASE("bars alive on an interval match the rank oracle") {
  Rng rng(123);
  for (std::uint32_t p : {2u, 3u}) {
    Field F(p);
    for (int t = 0; t < 80; ++t) {
      auto P = random_pair(rng);
      auto bars = barcode(F, P);
      for (const auto& b : bars) CHECK(b.birth < b.death);
      for (const auto& I : critical_intervals(P.critical_values()))
        for (int n = 0; n <= P.dimension() + 1; ++n)
          CHECK(bars_alive(bars, n, I) == oracle::homology_dim(P, n, I.lo, I.hi, p));
    }
  }
}
