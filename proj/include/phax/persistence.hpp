#pragma once

#include "phax/chains.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

namespace phax {

// H_n^I(X,A) = U / (U cap B) where U is the image of the level-lo relative cycles at
// level hi and B the level-hi boundaries. Representatives live in ChainSpace(n, hi).
class HomologyGroup {
public:
  HomologyGroup(Field F, RelativeFilteredPair pair, int degree, Interval I, ChainSpace space,
                Subspace cycles_image, Subspace boundaries, std::vector<Vec> reps);

  const Field& field() const { return F_; }
  const RelativeFilteredPair& pair() const { return pair_; }
  int degree() const { return degree_; }
  const Interval& interval() const { return I_; }
  const ChainSpace& space() const { return space_; }
  const Subspace& cycles_image() const { return U_; }
  const Subspace& boundaries() const { return B_; }
  Subspace trivial() const { return intersect(F_, U_, B_); }
  const std::vector<Vec>& reps() const { return reps_; }
  std::size_t dim() const { return reps_.size(); }

  // Coordinates over reps of the class of a level-hi chain lying in U + B.
  std::optional<Vec> coordinates(const Vec& chain) const;
  // The chain sum_i c_i reps_i.
  Vec chain_of(const Vec& coords) const;

private:
  Field F_;
  RelativeFilteredPair pair_;
  int degree_;
  Interval I_;
  ChainSpace space_;
  Subspace U_, B_;
  std::vector<Vec> reps_;
  Solver solver_;
};

using GroupPtr = std::shared_ptr<const HomologyGroup>;

struct LinearMap {
  GroupPtr source;
  GroupPtr target;
  Matrix matrix;  // column j = target coordinates of the image of source rep j
  std::string label;
};

struct HomologyOptions {
  // When set, reps are replaced by a random invertible recombination plus random
  // trivial classes (used to check independence of the representative choice).
  std::optional<std::uint64_t> perturb_seed;
};

GroupPtr homology(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I,
                  const HomologyOptions& opts = {});
GroupPtr homology(const Field& F, const FilteredSet& X, int n, const Interval& I);
GroupPtr zero_group(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I);

LinearMap induced_map(const PreservingMap& f, const GroupPtr& source, const GroupPtr& target);
LinearMap induced_map(const Field& F, const PreservingMap& f, int n, const Interval& I);
// H_n^I(X,A) -> H_{n-1}^I(A).
LinearMap connecting(const GroupPtr& source, const GroupPtr& target);
LinearMap connecting(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I);
LinearMap compose(const Field& F, const LinearMap& second, const LinearMap& first);

// Kernel of the map to a point at the minimum filtration value.
GroupPtr reduced_homology(const Field& F, const FilteredSet& X, int n, const Interval& I);
// A subgroup of H given by coordinate vectors, as a group in its own right.
GroupPtr subgroup(const GroupPtr& H, const std::vector<Vec>& coords);

struct CoefficientGroup {
  Interval interval;
  FiltValue birth;
  int dim;
};
CoefficientGroup coefficient_group(const Interval& I, const FiltValue& alpha);

// Image of g under H_0(point at F_X({x})) -> H_0(X), p -> x.
Vec point_class(const Field& F, std::uint32_t g, const Vertex& x, const FilteredSet& X,
                const Interval& I);

struct H0Decomposition {
  std::size_t reduced_dim;
  std::size_t point_dim;
  bool certified;  // dim H_0 = reduced + 1 and the point class avoids the reduced part
};
H0Decomposition h0_decomposition(const Field& F, const FilteredSet& X, const Vertex& x,
                                 const Interval& I);

struct BettiGrid {
  std::vector<FiltValue> values;
  // dims[i][j] for i <= j; -1 below the diagonal.
  std::vector<std::vector<int>> dims;
};
BettiGrid betti_grid(const Field& F, const RelativeFilteredPair& pair, int n);

} // namespace phax
