#pragma once

#include "phax/filtered_set.hpp"
#include "phax/linalg.hpp"

namespace phax {

struct Bar {
  int degree;
  FiltValue birth;
  FiltValue death;  // INF for essential classes
};

// Barcode of the relative persistence module H(K^t, A^t), computed by standard
// column reduction on the mapping cone of A -> X (cone cells at F_A, one degree up).
std::vector<Bar> barcode(const Field& F, const RelativeFilteredPair& pair);

// Number of degree-n bars with birth <= lo and death > hi.
std::size_t bars_alive(const std::vector<Bar>& bars, int n, const Interval& I);

} // namespace phax
