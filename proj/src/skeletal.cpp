#include "phax/skeletal.hpp"

#include "phax/errors.hpp"

#include <map>
#include <mutex>

namespace phax {

namespace {

RelativeFilteredPair absolute(const FilteredSet& X) { return RelativeFilteredPair::absolute(X); }

RelativeFilteredPair standard_pair(const std::vector<Vertex>& vs, const FiltValue& alpha) {
  FilteredSet S = full_simplex(vs, alpha);
  auto raw = S.support();
  raw.erase(make_simplex(vs));
  return RelativeFilteredPair::validate(S, FilteredSet::validate(raw, S.vertices()));
}

// Scalar c with: generator of H_q(S^q, boundary) = c * (top simplex class), obtained by
// pulling the point generator back through the incidence isomorphisms.
std::uint32_t standard_coefficient(const Field& F, int q) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, int>, std::uint32_t> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({F.p(), q});
    if (it != memo.end()) return it->second;
  }
  std::uint32_t c = 1;
  if (q > 0) {
    const FiltValue zero(0);
    LinearMap m = incidence_iso(F, q, zero, Interval::make(zero, zero));
    if (m.matrix.rows() != 1 || m.matrix.cols() != 1 || m.matrix(0, 0) == 0)
      throw OracleMismatch("incidence isomorphism is not invertible in degree " + std::to_string(q));
    c = F.mul(standard_coefficient(F, q - 1), F.inv(m.matrix(0, 0)));
  }
  std::lock_guard<std::mutex> lock(mu);
  memo[{F.p(), q}] = c;
  return c;
}

Matrix generator_inverse(const Field& F, const SkeletalChainGroup& C) {
  if (!is_invertible(F, C.generators))
    throw OracleMismatch("generators do not form a basis in degree " + std::to_string(C.degree));
  return inverse(F, C.generators);
}

SkeletalChainGroup zero_chain_group(const Field& F, const RelativeFilteredPair& pair, int q,
                                    const Interval& I) {
  SkeletalChainGroup C;
  C.pair = pair;
  C.degree = q;
  C.interval = I;
  C.group = zero_group(F, pair, q, I);
  return C;
}

} // namespace

RelativeFilteredPair skeleton_pair(const RelativeFilteredPair& pair, int q) {
  const FilteredSet& X = pair.total();
  const FilteredSet& A = pair.sub();
  return RelativeFilteredPair::validate(filtered_union(skeleton(X, q), A),
                                        filtered_union(skeleton(X, q - 1), A));
}

std::optional<Vec> SkeletalChainGroup::decompose(const Field& F, const Vec& element) const {
  if (generators.rows() != generators.cols()) return std::nullopt;
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < generators.cols(); ++j) cols.push_back(generators.column(j));
  if (Subspace::span(F, generators.rows(), cols).dim() != cols.size()) return std::nullopt;
  return Solver(F, generators.rows(), cols).solve(element);
}

SkeletalChainGroup skeletal_chain_group(const Field& F, const RelativeFilteredPair& pair, int q,
                                        const Interval& I) {
  if (q < 0) return zero_chain_group(F, pair, q, I);
  SkeletalChainGroup C;
  C.pair = skeleton_pair(pair, q);
  C.degree = q;
  C.interval = I;
  C.group = homology(F, C.pair, q, I);
  for (const auto& s : pair.total().simplices(q, I.lo))
    if (pair.sub().value(s) > I.hi) C.simplices.push_back(s);
  C.generators = Matrix(C.group->dim(), C.simplices.size());
  for (std::size_t k = 0; k < C.simplices.size(); ++k) {
    Vec g = generator(F, 1, C.simplices[k], C);
    for (std::size_t i = 0; i < g.size(); ++i) C.generators(i, k) = g[i];
  }
  return C;
}

Vec generator(const Field& F, std::uint32_t g, const std::vector<Vertex>& sequence,
              const SkeletalChainGroup& C) {
  const int q = static_cast<int>(sequence.size()) - 1;
  if (q != C.degree) throw MalformedInstance("generator length does not match the chain degree");
  const FilteredSet& X = C.pair.total();
  for (const auto& v : sequence)
    if (!X.has_vertex(v)) throw UnknownVertex(v);
  Vec zero(C.group->dim(), 0);
  FiltValue alpha = X.value(make_simplex(sequence));
  if (alpha.is_inf() || alpha > C.interval.lo || g % F.p() == 0) return zero;

  auto vs = standard_vertices(q);
  auto D = standard_pair(vs, alpha);
  VertexMap m;
  for (int i = 0; i <= q; ++i) m.emplace(vs[i], sequence[i]);
  auto f = validate_map(m, D, C.pair);
  GroupPtr HD = homology(F, D, q, C.interval);
  if (HD->dim() != 1) throw OracleMismatch("standard simplex pair is not one-dimensional");
  LinearMap push = induced_map(f, HD, C.group);
  std::uint32_t c = F.mul(standard_coefficient(F, q), g % F.p());
  Vec out = push.matrix.column(0);
  for (auto& x : out) x = F.mul(x, c);
  return out;
}

Vec generator(const Field& F, std::uint32_t g, const std::vector<Vertex>& sequence,
              const RelativeFilteredPair& pair, const Interval& I) {
  const int q = static_cast<int>(sequence.size()) - 1;
  SkeletalChainGroup C;
  C.pair = skeleton_pair(pair, q);
  C.degree = q;
  C.interval = I;
  C.group = homology(F, C.pair, q, I);
  return generator(F, g, sequence, C);
}

Matrix skeletal_boundary_reps(const Field& F, const SkeletalChainGroup& Cq,
                              const SkeletalChainGroup& Cq1) {
  if (Cq.degree <= 0 || Cq.group->dim() == 0) return Matrix(Cq1.group->dim(), Cq.group->dim());
  auto S = absolute(Cq.pair.sub());
  GroupPtr HS = homology(F, S, Cq.degree - 1, Cq.interval);
  LinearMap a = connecting(Cq.group, HS);
  LinearMap jpp = induced_map(inclusion_map(S, Cq1.pair), HS, Cq1.group);
  return multiply(F, jpp.matrix, a.matrix);
}

Matrix skeletal_boundary(const Field& F, const RelativeFilteredPair& pair, int q, const Interval& I) {
  auto Cq = skeletal_chain_group(F, pair, q, I);
  auto Cq1 = skeletal_chain_group(F, pair, q - 1, I);
  Matrix R = skeletal_boundary_reps(F, Cq, Cq1);
  return multiply(F, generator_inverse(F, Cq1), multiply(F, R, Cq.generators));
}

SkeletalHomology skeletal_homology(const Field& F, const RelativeFilteredPair& pair, int q,
                                   const Interval& I) {
  SkeletalHomology h;
  h.degree = q;
  if (q < 0) return h;
  Matrix dq = skeletal_boundary(F, pair, q, I);
  Matrix dq1 = skeletal_boundary(F, pair, q + 1, I);
  h.cycles = kernel(F, dq);
  h.boundaries = image(F, dq1);
  if (!h.cycles.contains(F, h.boundaries))
    throw OracleMismatch("skeletal boundaries are not cycles in degree " + std::to_string(q));
  h.reps = complement_basis(F, h.cycles, h.boundaries);
  return h;
}

ThetaMap theta(const Field& F, const RelativeFilteredPair& pair, int q, const Interval& I) {
  ThetaMap t;
  t.source = homology(F, pair, q, I);
  t.target = skeletal_homology(F, pair, q, I);
  if (q < 0) {
    t.matrix = Matrix(0, 0);
    return t;
  }
  const FilteredSet& A = pair.sub();
  auto L = RelativeFilteredPair::validate(filtered_union(skeleton(pair.total(), q), A), A);
  auto Cq = skeletal_chain_group(F, pair, q, I);
  GroupPtr HL = homology(F, L, q, I);
  Matrix l = induced_map(inclusion_map(L, pair), HL, t.source).matrix;
  Matrix j = induced_map(inclusion_map(L, Cq.pair), HL, Cq.group).matrix;
  Matrix Ginv = generator_inverse(F, Cq);

  std::vector<Vec> lcols;
  for (std::size_t c = 0; c < l.cols(); ++c) lcols.push_back(l.column(c));
  Solver lift(F, l.rows(), lcols);
  t.matrix = Matrix(t.target.dim(), t.source->dim());
  for (std::size_t k = 0; k < t.source->dim(); ++k) {
    Vec e(t.source->dim(), 0);
    e[k] = 1;
    auto x = lift.solve(e);
    if (!x) throw OracleMismatch("l_* is not onto in degree " + std::to_string(q) + " on " + I.str());
    Vec y = Ginv.apply(F, j.apply(F, *x));
    if (!t.target.cycles.contains(F, y))
      throw OracleMismatch("j_* leaves the skeletal cycles in degree " + std::to_string(q));
    Vec c = coords_in_quotient(F, y, t.target.cycles, t.target.boundaries);
    for (std::size_t i = 0; i < c.size(); ++i) t.matrix(i, k) = c[i];
  }
  if (!is_invertible(F, t.matrix))
    throw OracleMismatch("theta is not bijective in degree " + std::to_string(q) + " on " + I.str() +
                         " (" + std::to_string(t.source->dim()) + " -> " +
                         std::to_string(t.target.dim()) + ")");
  return t;
}

LinearMap incidence_iso(const Field& F, int q, const FiltValue& alpha, const Interval& I) {
  if (q < 1) throw MalformedInstance("incidence isomorphism needs q >= 1");
  if (I.lo < alpha) throw MalformedInstance("incidence isomorphism needs lo >= alpha");
  auto vs = standard_vertices(q);
  auto top = standard_pair(vs, alpha);
  std::vector<Vertex> face(vs.begin() + 1, vs.end());
  auto low = standard_pair(face, alpha);
  auto Sdot = absolute(top.sub());
  auto star = RelativeFilteredPair::validate(top.sub(), closed_star(q, alpha, vs.front()));

  GroupPtr Htop = homology(F, top, q, I);
  GroupPtr Hdot = homology(F, Sdot, q - 1, I);
  GroupPtr Hstar = homology(F, star, q - 1, I);
  GroupPtr Hlow = homology(F, low, q - 1, I);
  LinearMap d = connecting(Htop, Hdot);
  LinearMap i = induced_map(inclusion_map(Sdot, star), Hdot, Hstar);
  LinearMap j = induced_map(inclusion_map(low, star), Hlow, Hstar);
  Matrix m = multiply(F, inverse(F, j.matrix), multiply(F, i.matrix, d.matrix));
  return LinearMap{Htop, Hlow, m, "[S:S']"};
}

SkeletalShortSequence skeletal_short_sequence(const Field& F, const RelativeFilteredPair& pair,
                                              int q, const Interval& I) {
  SkeletalShortSequence s{skeletal_chain_group(F, absolute(pair.sub()), q, I),
                          skeletal_chain_group(F, absolute(pair.total()), q, I),
                          skeletal_chain_group(F, pair, q, I), Matrix(), Matrix()};
  s.i = induced_map(inclusion_map(s.CA.pair, s.CX.pair), s.CA.group, s.CX.group).matrix;
  s.j = induced_map(inclusion_map(s.CX.pair, s.CXA.pair), s.CX.group, s.CXA.group).matrix;
  s.i_injective = rank(F, s.i) == s.i.cols();
  s.j_surjective = rank(F, s.j) == s.j.rows();
  s.middle_exact = image(F, s.i) == kernel(F, s.j);
  return s;
}

PreimageIdentities preimage_identities(const Field& F, const RelativeFilteredPair& pair, int q,
                                       const Interval& I) {
  auto X = absolute(pair.total());
  auto A = absolute(pair.sub());
  auto CXm = skeletal_chain_group(F, X, q - 1, I), CX = skeletal_chain_group(F, X, q, I),
       CXp = skeletal_chain_group(F, X, q + 1, I);
  auto CPm = skeletal_chain_group(F, pair, q - 1, I), CP = skeletal_chain_group(F, pair, q, I),
       CPp = skeletal_chain_group(F, pair, q + 1, I);
  auto CAm = skeletal_chain_group(F, A, q - 1, I), CA = skeletal_chain_group(F, A, q, I);

  Matrix jq = induced_map(inclusion_map(CX.pair, CP.pair), CX.group, CP.group).matrix;
  Subspace Zp = kernel(F, skeletal_boundary_reps(F, CP, CPm));
  Subspace Bp = image(F, skeletal_boundary_reps(F, CPp, CP));
  PreimageIdentities out;
  out.preimage_cycles = preimage(F, jq, Zp);
  out.preimage_boundaries = preimage(F, jq, Bp);

  Matrix dX = skeletal_boundary_reps(F, CX, CXm);
  Matrix dXp = skeletal_boundary_reps(F, CXp, CX);
  Matrix im1 = q >= 1 ? induced_map(inclusion_map(CAm.pair, CXm.pair), CAm.group, CXm.group).matrix
                      : Matrix(CXm.group->dim(), 0);
  Matrix iq = induced_map(inclusion_map(CA.pair, CX.pair), CA.group, CX.group).matrix;
  out.boundary_preimage_of_A = preimage(F, dX, image(F, im1));
  out.boundaries_plus_image_A = sum(F, image(F, dXp), image(F, iq));
  return out;
}

} // namespace phax
