#include "phax/sequences.hpp"

#include "phax/errors.hpp"

#include <algorithm>

namespace phax {

namespace {

std::string deg(const std::string& name, int n) { return name + "_" + std::to_string(n); }

SequenceNode node(const std::string& label, const GroupPtr& g) {
  return SequenceNode{label, g->dim(), g};
}

void push(ExactSequence& seq, const std::string& label, const Matrix& m, SequenceNode next) {
  seq.arrows.push_back(SequenceArrow{label, m});
  seq.nodes.push_back(std::move(next));
}

RelativeFilteredPair absolute(const FilteredSet& X) { return RelativeFilteredPair::absolute(X); }

Matrix hstack(const Matrix& A, const Matrix& B) {
  Matrix M(A.rows(), A.cols() + B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i) {
    for (std::size_t j = 0; j < A.cols(); ++j) M(i, j) = A(i, j);
    for (std::size_t j = 0; j < B.cols(); ++j) M(i, A.cols() + j) = B(i, j);
  }
  return M;
}

Matrix vstack(const Matrix& A, const Matrix& B) {
  Matrix M(A.rows() + B.rows(), A.cols());
  for (std::size_t j = 0; j < A.cols(); ++j) {
    for (std::size_t i = 0; i < A.rows(); ++i) M(i, j) = A(i, j);
    for (std::size_t i = 0; i < B.rows(); ++i) M(A.rows() + i, j) = B(i, j);
  }
  return M;
}

void require_subset(const FilteredSet& sub, const FilteredSet& X, const std::string& what) {
  for (const auto& v : sub.vertices())
    if (!X.has_vertex(v)) throw MalformedInstance(what + ": vertex " + v + " outside the total set");
  for (const auto& [s, v] : sub.support())
    if (v < X.value(s)) throw MalformedInstance(what + ": " + to_string(s) + " is born earlier than in the total set");
}

} // namespace

std::vector<Interval> critical_intervals(const std::vector<FiltValue>& values) {
  std::vector<Interval> out;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j) out.push_back(Interval::make(values[i], values[j]));
  return out;
}

ExactnessReport check_exact(const Field& F, const ExactSequence& seq) {
  ExactnessReport rep;
  if (seq.arrows.size() + 1 != seq.nodes.size())
    throw MalformedInstance("sequence needs one arrow between consecutive nodes");
  for (std::size_t k = 1; k < seq.nodes.size(); ++k) {
    const std::size_t d = seq.nodes[k].dim;
    const Matrix& in = seq.arrows[k - 1].matrix;
    Matrix out = k < seq.arrows.size() ? seq.arrows[k].matrix : Matrix(0, d);
    if (in.rows() != d || out.cols() != d) throw DimensionMismatch("arrow shape at node " + seq.nodes[k].label);
    Subspace im = image(F, in);
    Subspace ker = kernel(F, out);
    NodeCheck c;
    c.node = k;
    c.image_rank = im.dim();
    c.kernel_dim = ker.dim();
    Matrix comp = multiply(F, out, in);
    for (std::size_t j = 0; j < comp.cols() && c.failure == ExactnessFailure::None; ++j)
      if (!is_zero(comp.column(j))) {
        c.failure = ExactnessFailure::ImageNotInKernel;
        c.witness = Vec(in.cols(), 0);
        c.witness[j] = 1;
      }
    if (c.failure == ExactnessFailure::None)
      for (const auto& v : ker.basis())
        if (!im.contains(F, v)) {
          c.failure = ExactnessFailure::KernelNotInImage;
          c.witness = v;
          break;
        }
    if (c.failure != ExactnessFailure::None) rep.exact = false;
    rep.nodes.push_back(std::move(c));
  }
  return rep;
}

bool recheck_witness(const Field& F, const ExactSequence& seq, const NodeCheck& c) {
  if (c.node == 0 || c.node >= seq.nodes.size()) return false;
  const Matrix& in = seq.arrows[c.node - 1].matrix;
  const std::size_t d = seq.nodes[c.node].dim;
  Matrix out = c.node < seq.arrows.size() ? seq.arrows[c.node].matrix : Matrix(0, d);
  switch (c.failure) {
    case ExactnessFailure::ImageNotInKernel:
      return c.witness.size() == in.cols() && !is_zero(out.apply(F, in.apply(F, c.witness)));
    case ExactnessFailure::KernelNotInImage: {
      if (c.witness.size() != d || is_zero(c.witness) || !is_zero(out.apply(F, c.witness))) return false;
      // Not in the column span of the incoming arrow: appending it raises the rank.
      std::vector<Vec> cols;
      for (std::size_t j = 0; j < in.cols(); ++j) cols.push_back(in.column(j));
      std::size_t r0 = Subspace::span(F, d, cols).dim();
      cols.push_back(c.witness);
      return Subspace::span(F, d, cols).dim() == r0 + 1;
    }
    case ExactnessFailure::None:
      return false;
  }
  return false;
}

int default_n_max(const RelativeFilteredPair& pair) { return std::max(0, pair.dimension() + 1); }

ExactSequence les_pair(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                       std::optional<int> n_max) {
  const int top = n_max.value_or(default_n_max(pair));
  auto Apair = absolute(pair.sub());
  auto Xpair = absolute(pair.total());
  auto i = inclusion_map(Apair, Xpair);
  auto j = inclusion_map(Xpair, pair);
  ExactSequence seq;
  GroupPtr HA = homology(F, Apair, top, I);
  seq.nodes.push_back(node(deg("H(A)", top), HA));
  for (int n = top; n >= 0; --n) {
    GroupPtr HX = homology(F, Xpair, n, I);
    GroupPtr HXA = homology(F, pair, n, I);
    push(seq, "i*", induced_map(i, HA, HX).matrix, node(deg("H(X)", n), HX));
    push(seq, "j*", induced_map(j, HX, HXA).matrix, node(deg("H(X,A)", n), HXA));
    if (n == 0) break;
    GroupPtr HAnext = homology(F, Apair, n - 1, I);
    push(seq, "d", connecting(HXA, HAnext).matrix, node(deg("H(A)", n - 1), HAnext));
    HA = HAnext;
  }
  return seq;
}

ExactSequence les_pair_reduced(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                               std::optional<int> n_max) {
  if (pair.sub().support().empty()) throw MalformedInstance("reduced sequence needs a nonempty subset");
  const int top = n_max.value_or(default_n_max(pair));
  auto Apair = absolute(pair.sub());
  auto Xpair = absolute(pair.total());
  auto i = inclusion_map(Apair, Xpair);
  auto j = inclusion_map(Xpair, pair);
  ExactSequence seq;
  GroupPtr HA = reduced_homology(F, pair.sub(), top, I);
  seq.nodes.push_back(node(deg("H~(A)", top), HA));
  for (int n = top; n >= 0; --n) {
    GroupPtr HX = reduced_homology(F, pair.total(), n, I);
    GroupPtr HXA = homology(F, pair, n, I);
    push(seq, "i*", induced_map(i, HA, HX).matrix, node(deg("H~(X)", n), HX));
    push(seq, "j*", induced_map(j, HX, HXA).matrix, node(deg("H(X,A)", n), HXA));
    if (n == 0) break;
    GroupPtr HAnext = reduced_homology(F, pair.sub(), n - 1, I);
    push(seq, "d", connecting(HXA, HAnext).matrix, node(deg("H~(A)", n - 1), HAnext));
    HA = HAnext;
  }
  return seq;
}

ExactSequence les_triple(const Field& F, const FilteredSet& X, const FilteredSet& A,
                         const FilteredSet& B, const Interval& I, std::optional<int> n_max) {
  auto AB = RelativeFilteredPair::validate(A, B);
  auto XB = RelativeFilteredPair::validate(X, B);
  auto XA = RelativeFilteredPair::validate(X, A);
  auto Aabs = absolute(A);
  auto ibar = inclusion_map(AB, XB);
  auto jbar = inclusion_map(XB, XA);
  auto jpp = inclusion_map(Aabs, AB);
  const int top = n_max.value_or(default_n_max(XA));
  ExactSequence seq;
  GroupPtr HAB = homology(F, AB, top, I);
  seq.nodes.push_back(node(deg("H(A,B)", top), HAB));
  for (int n = top; n >= 0; --n) {
    GroupPtr HXB = homology(F, XB, n, I);
    GroupPtr HXA = homology(F, XA, n, I);
    push(seq, "i*", induced_map(ibar, HAB, HXB).matrix, node(deg("H(X,B)", n), HXB));
    push(seq, "j*", induced_map(jbar, HXB, HXA).matrix, node(deg("H(X,A)", n), HXA));
    if (n == 0) break;
    GroupPtr HA = homology(F, Aabs, n - 1, I);
    GroupPtr HABnext = homology(F, AB, n - 1, I);
    LinearMap d = compose(F, induced_map(jpp, HA, HABnext), connecting(HXA, HA));
    push(seq, "d", d.matrix, node(deg("H(A,B)", n - 1), HABnext));
    HAB = HABnext;
  }
  return seq;
}

bool is_proper_triad(const Field& F, const FilteredSet& X, const FilteredSet& X1,
                     const FilteredSet& X2, const Interval& I) {
  require_subset(X1, X, "X1");
  require_subset(X2, X, "X2");
  FilteredSet U = filtered_union(X1, X2);
  FilteredSet C = filtered_intersection(X1, X2);
  auto P1 = RelativeFilteredPair::validate(X1, C);
  auto P2 = RelativeFilteredPair::validate(X2, C);
  auto T1 = RelativeFilteredPair::validate(U, X2);
  auto T2 = RelativeFilteredPair::validate(U, X1);
  auto k1 = inclusion_map(P1, T1);
  auto k2 = inclusion_map(P2, T2);
  const int top = std::max(0, X.dimension() + 1);
  for (int n = 0; n <= top; ++n) {
    if (!is_invertible(F, induced_map(F, k1, n, I).matrix)) return false;
    if (!is_invertible(F, induced_map(F, k2, n, I).matrix)) return false;
  }
  return true;
}

ExactSequence mayer_vietoris(const Field& F, const FilteredSet& X1, const FilteredSet& X2,
                             const Interval& I, std::optional<int> n_max) {
  FilteredSet X = filtered_union(X1, X2);
  FilteredSet C = filtered_intersection(X1, X2);
  if (!is_proper_triad(F, X, X1, X2, I)) throw NotProperTriad("cover is not a proper triad in " + I.str());
  auto Xa = absolute(X), X1a = absolute(X1), X2a = absolute(X2), Ca = absolute(C);
  auto i1 = inclusion_map(Ca, X1a), i2 = inclusion_map(Ca, X2a);
  auto j1 = inclusion_map(X1a, Xa), j2 = inclusion_map(X2a, Xa);
  auto P1 = RelativeFilteredPair::validate(X1, C);
  auto T1 = RelativeFilteredPair::validate(X, X2);
  auto k1 = inclusion_map(P1, T1);
  auto l = inclusion_map(Xa, T1);
  const int top = n_max.value_or(std::max(0, X.dimension() + 1));

  ExactSequence seq;
  GroupPtr HC = homology(F, Ca, top, I);
  seq.nodes.push_back(node(deg("H(X1nX2)", top), HC));
  for (int n = top; n >= 0; --n) {
    GroupPtr H1 = homology(F, X1a, n, I), H2 = homology(F, X2a, n, I), HX = homology(F, Xa, n, I);
    Matrix a = vstack(induced_map(i1, HC, H1).matrix,
                      scale(F, induced_map(i2, HC, H2).matrix, F.neg(1)));
    push(seq, "(i1,-i2)", a, SequenceNode{deg("H(X1)+H(X2)", n), H1->dim() + H2->dim(), nullptr});
    Matrix b = hstack(induced_map(j1, H1, HX).matrix, induced_map(j2, H2, HX).matrix);
    push(seq, "j1+j2", b, node(deg("H(X1uX2)", n), HX));
    if (n == 0) break;
    GroupPtr HP1 = homology(F, P1, n, I), HT1 = homology(F, T1, n, I);
    GroupPtr HCnext = homology(F, Ca, n - 1, I);
    Matrix kinv = inverse(F, induced_map(k1, HP1, HT1).matrix);
    Matrix d = multiply(F, connecting(HP1, HCnext).matrix,
                        multiply(F, kinv, induced_map(l, HX, HT1).matrix));
    push(seq, "D", d, node(deg("H(X1nX2)", n - 1), HCnext));
    HC = HCnext;
  }
  return seq;
}

ExactSequence triad_sequence(const Field& F, const FilteredSet& X, const FilteredSet& X1,
                             const FilteredSet& X2, const Interval& I, std::optional<int> n_max) {
  if (!is_proper_triad(F, X, X1, X2, I)) throw NotProperTriad("triad is not proper in " + I.str());
  FilteredSet U = filtered_union(X1, X2);
  FilteredSet C = filtered_intersection(X1, X2);
  auto P1 = RelativeFilteredPair::validate(X1, C);
  auto XX2 = RelativeFilteredPair::validate(X, X2);
  auto XU = RelativeFilteredPair::validate(X, U);
  auto UX2 = RelativeFilteredPair::validate(U, X2);
  auto Ua = absolute(U);
  auto i = inclusion_map(P1, XX2);
  auto j = inclusion_map(XX2, XU);
  auto l2 = inclusion_map(Ua, UX2);
  auto k = inclusion_map(P1, UX2);
  const int top = n_max.value_or(std::max(0, X.dimension() + 1));

  ExactSequence seq;
  GroupPtr HP = homology(F, P1, top, I);
  seq.nodes.push_back(node(deg("H(X1,X1nX2)", top), HP));
  for (int n = top; n >= 0; --n) {
    GroupPtr HXX2 = homology(F, XX2, n, I), HXU = homology(F, XU, n, I);
    push(seq, "i*", induced_map(i, HP, HXX2).matrix, node(deg("H(X,X2)", n), HXX2));
    push(seq, "j*", induced_map(j, HXX2, HXU).matrix, node(deg("H(X,X1uX2)", n), HXU));
    if (n == 0) break;
    GroupPtr HU = homology(F, Ua, n - 1, I);
    GroupPtr HUX2 = homology(F, UX2, n - 1, I);
    GroupPtr HPnext = homology(F, P1, n - 1, I);
    Matrix kinv = inverse(F, induced_map(k, HPnext, HUX2).matrix);
    Matrix d = multiply(F, kinv, multiply(F, induced_map(l2, HU, HUX2).matrix,
                                          connecting(HXU, HU).matrix));
    push(seq, "d", d, node(deg("H(X1,X1nX2)", n - 1), HPnext));
    HP = HPnext;
  }
  return seq;
}

// ---------------------------------------------------------------------------

namespace {

bool contiguous_at(const PreservingMap& f, const PreservingMap& g, const FiltValue& alpha) {
  const auto& X = f.domain().total();
  const auto& A = f.domain().sub();
  const auto& Y = f.codomain().total();
  const auto& B = f.codomain().sub();
  for (const auto& s : X.complex_at(alpha)) {
    std::vector<Vertex> t;
    for (const auto& v : s) {
      t.push_back(f(v));
      t.push_back(g(v));
    }
    Simplex tau = make_simplex(std::move(t));
    if (Y.value(tau) > alpha) return false;
    if (A.value(s) <= alpha && B.value(tau) > alpha) return false;
  }
  return true;
}

void require_same_ends(const PreservingMap& f, const PreservingMap& g) {
  if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain()))
    throw MalformedInstance("contiguity needs maps with the same domain and codomain");
}

} // namespace

bool are_contiguous(const PreservingMap& f, const PreservingMap& g, const Interval& I) {
  require_same_ends(f, g);
  auto crit = merge_values(f.domain().critical_values(), f.codomain().critical_values());
  for (const auto& alpha : evaluation_levels(I, crit))
    if (!contiguous_at(f, g, alpha)) return false;
  return true;
}

bool are_contiguous(const PreservingMap& f, const PreservingMap& g) {
  require_same_ends(f, g);
  for (const auto& alpha : merge_values(f.domain().critical_values(), f.codomain().critical_values()))
    if (!contiguous_at(f, g, alpha)) return false;
  return true;
}

bool are_contiguously_equivalent(const PreservingMap& f, const PreservingMap& g) {
  if (!(f.codomain() == g.domain()) || !(g.codomain() == f.domain()))
    throw MalformedInstance("contiguous equivalence needs f: P -> Q and g: Q -> P");
  return are_contiguous(compose(g, f), identity_map(f.domain())) &&
         are_contiguous(compose(f, g), identity_map(f.codomain()));
}

bool is_homologically_trivial(const Field& F, const FilteredSet& X, const Interval& I, int n_max) {
  for (int n = 0; n <= n_max; ++n)
    if (reduced_homology(F, X, n, I)->dim() != 0) return false;
  return true;
}

bool is_homologically_trivial(const Field& F, const RelativeFilteredPair& pair, const Interval& I,
                              int n_max) {
  if (pair.sub().support().empty()) return is_homologically_trivial(F, pair.total(), I, n_max);
  for (int n = 0; n <= n_max; ++n)
    if (homology(F, pair, n, I)->dim() != 0) return false;
  return true;
}

bool deformation_retract_check(const RelativeFilteredPair& pair, const RelativeFilteredPair& subpair,
                               const PreservingMap& r) {
  if (!(r.domain() == pair) || !(r.codomain() == subpair))
    throw NotARetraction("retraction must map the pair onto the subpair");
  for (const auto& v : subpair.total().vertices())
    if (r(v) != v) throw NotARetraction("vertex " + v + " is moved");
  auto inc = inclusion_map(subpair, pair);
  return are_contiguous(compose(inc, r), identity_map(pair));
}

DirectSumVerdict direct_sum_check(const Field& F, const std::vector<FilteredSet>& pieces,
                                  const FilteredSet& A, int q, const Interval& I) {
  for (std::size_t a = 0; a < pieces.size(); ++a)
    for (std::size_t b = a + 1; b < pieces.size(); ++b) {
      FilteredSet C = filtered_intersection(pieces[a], pieces[b]);
      for (const auto& v : C.vertices())
        if (!A.has_vertex(v)) throw HypothesisViolated("shared vertex " + v + " outside A");
      for (const auto& [s, v] : C.support())
        if (A.value(s) > v) throw HypothesisViolated("shared simplex " + to_string(s) + " outside A");
    }
  FilteredSet X = A;
  for (const auto& P : pieces) X = filtered_union(X, P);
  auto XA = RelativeFilteredPair::validate(X, A);
  GroupPtr H = homology(F, XA, q, I);
  DirectSumVerdict v;
  v.total_dim = H->dim();
  Matrix joint(H->dim(), 0);
  std::size_t total = 0;
  for (const auto& P : pieces) {
    auto PA = RelativeFilteredPair::validate(P, filtered_intersection(P, A));
    LinearMap k = induced_map(inclusion_map(PA, XA), homology(F, PA, q, I), H);
    v.piece_dims.push_back(k.source->dim());
    total += k.source->dim();
    joint = hstack(joint, k.matrix);
  }
  v.dims_add = total == v.total_dim;
  v.full_rank = joint.cols() == joint.rows() && rank(F, joint) == joint.rows();
  return v;
}

} // namespace phax
