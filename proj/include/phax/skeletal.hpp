#pragma once

#include "phax/persistence.hpp"

namespace phax {

// (X^(q) cup A, X^(q-1) cup A).
RelativeFilteredPair skeleton_pair(const RelativeFilteredPair& pair, int q);

struct SkeletalChainGroup {
  RelativeFilteredPair pair;  // the skeleton pair
  int degree = 0;
  Interval interval;
  GroupPtr group;
  // q-simplices carrying a nonzero generator (born by lo, outside A through hi).
  std::vector<Simplex> simplices;
  // Column k = generator of simplices[k] in the coordinates of group.
  Matrix generators;

  std::size_t dim() const { return group->dim(); }
  // Unique coordinates over the generators; nullopt if the generators are not a basis.
  std::optional<Vec> decompose(const Field& F, const Vec& element) const;
};

SkeletalChainGroup skeletal_chain_group(const Field& F, const RelativeFilteredPair& pair, int q,
                                        const Interval& I);

// Class of the standard simplex pushed along B^i -> A^i, times g, in the coordinates of
// skeletal_chain_group(pair, q, I).group with q = sequence length - 1.
Vec generator(const Field& F, std::uint32_t g, const std::vector<Vertex>& sequence,
              const RelativeFilteredPair& pair, const Interval& I);
Vec generator(const Field& F, std::uint32_t g, const std::vector<Vertex>& sequence,
              const SkeletalChainGroup& C);

// Boundary of the triple (X^(q) cup A, X^(q-1) cup A, X^(q-2) cup A) in representative
// coordinates of the two chain groups.
Matrix skeletal_boundary_reps(const Field& F, const SkeletalChainGroup& Cq,
                              const SkeletalChainGroup& Cq1);
// Same map over generator bases.
Matrix skeletal_boundary(const Field& F, const RelativeFilteredPair& pair, int q, const Interval& I);

struct SkeletalHomology {
  int degree = 0;
  Subspace cycles;      // in generator coordinates
  Subspace boundaries;  // in generator coordinates
  std::vector<Vec> reps;
  std::size_t dim() const { return reps.size(); }
};

SkeletalHomology skeletal_homology(const Field& F, const RelativeFilteredPair& pair, int q,
                                   const Interval& I);

// H_q^I(X,A) -> skeletal H_q^I(X,A), built as tau . eta^-1 . j_* . l_*^-1.
// Throws OracleMismatch when some step of the construction fails.
struct ThetaMap {
  GroupPtr source;
  SkeletalHomology target;
  Matrix matrix;
};
ThetaMap theta(const Field& F, const RelativeFilteredPair& pair, int q, const Interval& I);

// (j_*)^-1 . i_* . d : H_q(S^q, boundary) -> H_{q-1}(S^{q-1}, boundary), where S^{q-1} is the
// face omitting the first vertex.
LinearMap incidence_iso(const Field& F, int q, const FiltValue& alpha, const Interval& I);

// The chain-level sequence C_q(A) -> C_q(X) -> C_q(X,A) of skeletal groups.
struct SkeletalShortSequence {
  SkeletalChainGroup CA, CX, CXA;
  Matrix i;  // rep coordinates
  Matrix j;
  bool i_injective = false;
  bool j_surjective = false;
  bool middle_exact = false;
  bool exact() const { return i_injective && j_surjective && middle_exact; }
};
SkeletalShortSequence skeletal_short_sequence(const Field& F, const RelativeFilteredPair& pair,
                                              int q, const Interval& I);

// Subspaces of the absolute skeletal chains C_q(X) (rep coordinates):
// preimage_cycles = j_q^-1[cycles(X,A)], preimage_boundaries = j_q^-1[boundaries(X,A)].
struct PreimageIdentities {
  Subspace preimage_cycles, boundary_preimage_of_A;        // should be equal
  Subspace preimage_boundaries, boundaries_plus_image_A;   // should be equal
  bool cycles_hold() const { return preimage_cycles == boundary_preimage_of_A; }
  bool boundaries_hold() const { return preimage_boundaries == boundaries_plus_image_A; }
};
PreimageIdentities preimage_identities(const Field& F, const RelativeFilteredPair& pair, int q,
                                       const Interval& I);

} // namespace phax
