#pragma once

#include "phax/filtered_set.hpp"

#include <cstdint>
#include <random>

namespace phax {

// Seeded generator; draws are reduced by modulo so streams are identical on every platform.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t n) { return n == 0 ? 0 : eng_() % n; }
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  template <class T>
  const T& pick(const std::vector<T>& v) { return v[below(v.size())]; }

private:
  std::mt19937_64 eng_;
};

struct FuzzShape {
  int min_vertices = 3;
  int max_vertices = 5;
  int max_simplex_size = 4;   // vertices per simplex
  int max_simplices = 12;
};

// Palette {0, 1/2, 1, 2}; INF entries appear as unsupported simplices and vertices.
const std::vector<FiltValue>& fuzz_palette();

FilteredSet random_filtered_set(Rng& rng, const FuzzShape& shape = {});
// A random sub filtered set of X with values >= F_X (may be empty).
FilteredSet random_subset(Rng& rng, const FilteredSet& X);
RelativeFilteredPair random_pair(Rng& rng, const FuzzShape& shape = {});

// Cone over the pair with an extra apex vertex (also in the subset when A is nonempty).
RelativeFilteredPair cone_pair(const RelativeFilteredPair& pair, const Vertex& apex);
Vertex fresh_vertex(const FilteredSet& X, const std::string& stem = "c");

// Random filtration preserving map out of pair. Either a valid self map or a partial
// collapse onto the apex of cone_pair(pair).
PreservingMap random_map(Rng& rng, const RelativeFilteredPair& pair);

struct MapPair {
  PreservingMap f, g;
};
// A pair of maps that are contiguous at every critical value.
MapPair random_contiguous_pair(Rng& rng, const RelativeFilteredPair& pair);

// X' and A on a common vertex pool (the excision configuration X = X' cup A).
struct ExcisionConfig {
  FilteredSet Xp, A;
};
ExcisionConfig random_excision(Rng& rng, const FuzzShape& shape = {});

// Random total order of the vertices.
std::vector<Vertex> random_order(Rng& rng, const FilteredSet& X);

} // namespace phax
