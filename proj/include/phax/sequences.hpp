#pragma once

#include "phax/persistence.hpp"

#include <optional>
#include <string>
#include <vector>

namespace phax {

struct SequenceNode {
  std::string label;
  std::size_t dim = 0;
  GroupPtr group;  // null for direct sums
};

struct SequenceArrow {
  std::string label;
  Matrix matrix;  // nodes[k] -> nodes[k+1]
};

// Finite piece of a long sequence; arrows[k] goes from nodes[k] to nodes[k+1]. The last
// node is followed by an implicit arrow to 0.
struct ExactSequence {
  std::vector<SequenceNode> nodes;
  std::vector<SequenceArrow> arrows;
};

enum class ExactnessFailure { None, ImageNotInKernel, KernelNotInImage };

struct NodeCheck {
  std::size_t node = 0;
  std::size_t image_rank = 0;
  std::size_t kernel_dim = 0;
  ExactnessFailure failure = ExactnessFailure::None;
  // ImageNotInKernel: a vector of nodes[node-1] whose image is not killed.
  // KernelNotInImage: a vector of nodes[node] killed by the outgoing arrow but not hit.
  Vec witness;
};

struct ExactnessReport {
  bool exact = true;
  std::vector<NodeCheck> nodes;
};

ExactnessReport check_exact(const Field& F, const ExactSequence& seq);
// Confirms, from the sequence matrices alone, that a failing node's witness demonstrates
// non-exactness.
bool recheck_witness(const Field& F, const ExactSequence& seq, const NodeCheck& check);

int default_n_max(const RelativeFilteredPair& pair);

ExactSequence les_pair(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                       std::optional<int> n_max = std::nullopt);
// X contains A contains B.
ExactSequence les_triple(const Field& F, const FilteredSet& X, const FilteredSet& A,
                         const FilteredSet& B, const Interval& I,
                         std::optional<int> n_max = std::nullopt);
ExactSequence mayer_vietoris(const Field& F, const FilteredSet& X1, const FilteredSet& X2,
                             const Interval& I, std::optional<int> n_max = std::nullopt);
bool is_proper_triad(const Field& F, const FilteredSet& X, const FilteredSet& X1,
                     const FilteredSet& X2, const Interval& I);
ExactSequence triad_sequence(const Field& F, const FilteredSet& X, const FilteredSet& X1,
                             const FilteredSet& X2, const Interval& I,
                             std::optional<int> n_max = std::nullopt);

// Reduced sequence of a pair with nonempty A: H~ in place of H for the absolute terms.
ExactSequence les_pair_reduced(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                               std::optional<int> n_max = std::nullopt);

bool are_contiguous(const PreservingMap& f, const PreservingMap& g, const Interval& I);
// Contiguous at every critical value of domain and codomain.
bool are_contiguous(const PreservingMap& f, const PreservingMap& g);
bool are_contiguously_equivalent(const PreservingMap& f, const PreservingMap& g);

bool is_homologically_trivial(const Field& F, const FilteredSet& X, const Interval& I, int n_max);
bool is_homologically_trivial(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                              int n_max);

// r: pair -> subpair fixing the subpair's vertices.
bool deformation_retract_check(const RelativeFilteredPair& pair, const RelativeFilteredPair& subpair,
                               const PreservingMap& r);

struct DirectSumVerdict {
  std::size_t total_dim = 0;
  std::vector<std::size_t> piece_dims;
  bool dims_add = false;
  bool full_rank = false;
  bool pass() const { return dims_add && full_rank; }
};

// X = X_1 cup ... cup X_r cup A with pairwise intersections inside A.
DirectSumVerdict direct_sum_check(const Field& F, const std::vector<FilteredSet>& pieces,
                                  const FilteredSet& A, int q, const Interval& I);

// All intervals [c_i, c_j], c_i <= c_j, over the given critical values.
std::vector<Interval> critical_intervals(const std::vector<FiltValue>& values);

} // namespace phax
