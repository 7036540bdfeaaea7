#pragma once

#include "phax/filtered_set.hpp"
#include "phax/linalg.hpp"

#include <map>
#include <optional>

namespace phax {

// Basis of C_n(K^eps, A^eps): n-simplices with F_X <= eps < F_A, canonical order.
struct ChainSpace {
  int degree = 0;
  FiltValue level;
  std::vector<Simplex> basis;
  std::map<Simplex, std::size_t> index;

  std::size_t dim() const { return basis.size(); }
  std::optional<std::size_t> find(const Simplex& s) const {
    auto it = index.find(s);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
};

ChainSpace chain_space(const RelativeFilteredPair& pair, int n, const FiltValue& eps);
// Absolute chains of a single filtered set.
ChainSpace chain_space(const FilteredSet& X, int n, const FiltValue& eps);

Matrix boundary_matrix(const Field& F, const RelativeFilteredPair& pair, int n, const FiltValue& eps);
Matrix inclusion_matrix(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I);
Matrix chain_map_matrix(const Field& F, const PreservingMap& f, int n, const FiltValue& eps);

// Sign of the permutation sorting the images of the vertices of s, or 0 when they collide.
int orientation_sign(const std::vector<Vertex>& images);

} // namespace phax
