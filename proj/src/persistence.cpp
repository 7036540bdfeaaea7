#include "phax/persistence.hpp"

#include "phax/errors.hpp"
#include "phax/parallel.hpp"

#include <random>

namespace phax {

namespace {

std::vector<Vec> with_boundaries(const std::vector<Vec>& reps, const Subspace& B) {
  std::vector<Vec> cols = reps;
  cols.insert(cols.end(), B.basis().begin(), B.basis().end());
  return cols;
}

std::vector<Vec> perturb(const Field& F, const std::vector<Vec>& reps, const Subspace& V,
                         std::size_t ambient, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t d = reps.size();
  if (d == 0) return reps;
  Matrix P(d, d);
  do {
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) P(i, j) = static_cast<std::uint32_t>(rng() % F.p());
  } while (!is_invertible(F, P));
  std::vector<Vec> out;
  for (std::size_t j = 0; j < d; ++j) {
    Vec v(ambient, 0);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < ambient; ++k) v[k] = F.add(v[k], F.mul(P(i, j), reps[i][k]));
    for (const auto& b : V.basis()) {
      std::uint32_t c = static_cast<std::uint32_t>(rng() % F.p());
      for (std::size_t k = 0; k < ambient; ++k) v[k] = F.add(v[k], F.mul(c, b[k]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

} // namespace

HomologyGroup::HomologyGroup(Field F, RelativeFilteredPair pair, int degree, Interval I,
                             ChainSpace space, Subspace cycles_image, Subspace boundaries,
                             std::vector<Vec> reps)
    : F_(F), pair_(std::move(pair)), degree_(degree), I_(I), space_(std::move(space)),
      U_(std::move(cycles_image)), B_(std::move(boundaries)), reps_(std::move(reps)),
      solver_(F_, space_.dim(), with_boundaries(reps_, B_)) {}

std::optional<Vec> HomologyGroup::coordinates(const Vec& chain) const {
  auto x = solver_.solve(chain);
  if (!x) return std::nullopt;
  x->resize(reps_.size());
  return x;
}

Vec HomologyGroup::chain_of(const Vec& coords) const {
  Vec v(space_.dim(), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i)
    if (coords[i])
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = F_.add(v[k], F_.mul(coords[i], reps_[i][k]));
  return v;
}

GroupPtr zero_group(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I) {
  ChainSpace s;
  s.degree = n;
  s.level = I.hi;
  return std::make_shared<HomologyGroup>(F, pair, n, I, s, Subspace(0), Subspace(0),
                                         std::vector<Vec>{});
}

GroupPtr homology(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I,
                  const HomologyOptions& opts) {
  if (n < 0) return zero_group(F, pair, n, I);
  Subspace Z = kernel(F, boundary_matrix(F, pair, n, I.lo));
  Subspace U = push(F, inclusion_matrix(F, pair, n, I), Z);
  Subspace B = image(F, boundary_matrix(F, pair, n + 1, I.hi));
  Subspace V = intersect(F, U, B);
  auto reps = complement_basis(F, U, V);
  ChainSpace space = chain_space(pair, n, I.hi);
  if (opts.perturb_seed) reps = perturb(F, reps, V, space.dim(), *opts.perturb_seed);
  return std::make_shared<HomologyGroup>(F, pair, n, I, std::move(space), std::move(U),
                                         std::move(B), std::move(reps));
}

GroupPtr homology(const Field& F, const FilteredSet& X, int n, const Interval& I) {
  return homology(F, RelativeFilteredPair::absolute(X), n, I);
}

LinearMap induced_map(const PreservingMap& f, const GroupPtr& source, const GroupPtr& target) {
  const Field& F = source->field();
  LinearMap out{source, target, Matrix(target->dim(), source->dim()), "f_*"};
  if (source->dim() == 0) return out;
  Matrix M = chain_map_matrix(F, f, source->degree(), source->interval().hi);
  for (std::size_t j = 0; j < source->dim(); ++j) {
    auto c = target->coordinates(M.apply(F, source->reps()[j]));
    if (!c) throw ClassNotInTarget("image of rep " + std::to_string(j) + " in degree " +
                                   std::to_string(source->degree()));
    for (std::size_t i = 0; i < target->dim(); ++i) out.matrix(i, j) = (*c)[i];
  }
  return out;
}

LinearMap induced_map(const Field& F, const PreservingMap& f, int n, const Interval& I) {
  return induced_map(f, homology(F, f.domain(), n, I), homology(F, f.codomain(), n, I));
}

LinearMap connecting(const GroupPtr& source, const GroupPtr& target) {
  const Field& F = source->field();
  LinearMap out{source, target, Matrix(target->dim(), source->dim()), "d"};
  const FilteredSet& A = source->pair().sub();
  const FiltValue& hi = source->interval().hi;
  for (std::size_t j = 0; j < source->dim(); ++j) {
    const Vec& d = source->reps()[j];
    Vec w(target->space().dim(), 0);
    for (std::size_t c = 0; c < d.size(); ++c) {
      if (!d[c]) continue;
      const Simplex& s = source->space().basis[c];
      if (s.size() < 2) continue;
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex f = facet(s, k);
        std::uint32_t coef = F.mul(d[c], F.from_int(k % 2 ? -1 : 1));
        if (auto i = target->space().find(f))
          w[*i] = F.add(w[*i], coef);
        else if (A.value(f) <= hi)
          throw DimensionMismatch("connecting: face chain space mismatch");
        // Faces outside A cancel because d is a relative cycle.
      }
    }
    auto cc = target->coordinates(w);
    if (!cc) throw NotRepresentableAtLowerEndpoint("degree " + std::to_string(source->degree()) +
                                                   " interval " + source->interval().str());
    for (std::size_t i = 0; i < target->dim(); ++i) out.matrix(i, j) = (*cc)[i];
  }
  return out;
}

LinearMap connecting(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I) {
  return connecting(homology(F, pair, n, I),
                    homology(F, RelativeFilteredPair::absolute(pair.sub()), n - 1, I));
}

LinearMap compose(const Field& F, const LinearMap& second, const LinearMap& first) {
  return LinearMap{first.source, second.target, multiply(F, second.matrix, first.matrix),
                   second.label + "." + first.label};
}

GroupPtr subgroup(const GroupPtr& H, const std::vector<Vec>& coords) {
  const Field& F = H->field();
  std::vector<Vec> reps;
  for (const auto& c : coords) reps.push_back(H->chain_of(c));
  std::vector<Vec> gens = reps;
  Subspace V = H->trivial();
  gens.insert(gens.end(), V.basis().begin(), V.basis().end());
  Subspace U = Subspace::span(F, H->space().dim(), gens);
  return std::make_shared<HomologyGroup>(F, H->pair(), H->degree(), H->interval(), H->space(),
                                         std::move(U), H->boundaries(), std::move(reps));
}

GroupPtr reduced_homology(const Field& F, const FilteredSet& X, int n, const Interval& I) {
  GroupPtr H = homology(F, X, n, I);
  auto crit = X.critical_values();
  if (n != 0 || crit.empty()) return H;
  auto P = RelativeFilteredPair::absolute(point(crit.front()));
  VertexMap m;
  for (const auto& v : X.vertices()) m.emplace(v, "p");
  auto c = validate_map(m, RelativeFilteredPair::absolute(X), P);
  LinearMap aug = induced_map(c, H, homology(F, P, 0, I));
  return subgroup(H, kernel(F, aug.matrix).basis());
}

CoefficientGroup coefficient_group(const Interval& I, const FiltValue& alpha) {
  return CoefficientGroup{I, alpha, I.lo >= alpha ? 1 : 0};
}

Vec point_class(const Field& F, std::uint32_t g, const Vertex& x, const FilteredSet& X,
                const Interval& I) {
  if (!X.has_vertex(x)) throw UnknownVertex(x);
  FiltValue alpha = X.value({x});
  if (alpha > I.lo) throw VertexNotPresent(x + " is born after " + I.lo.str());
  auto P = RelativeFilteredPair::absolute(point(alpha));
  auto f = validate_map({{"p", x}}, P, RelativeFilteredPair::absolute(X));
  LinearMap m = induced_map(F, f, 0, I);
  Vec v = m.matrix.column(0);
  for (auto& e : v) e = F.mul(e, g % F.p());
  return v;
}

H0Decomposition h0_decomposition(const Field& F, const FilteredSet& X, const Vertex& x,
                                 const Interval& I) {
  Vec pc = point_class(F, 1, x, X, I);
  GroupPtr H = homology(F, X, 0, I);
  GroupPtr R = reduced_homology(F, X, 0, I);
  std::vector<Vec> cols;
  for (const auto& r : R->reps()) {
    auto c = H->coordinates(r);
    if (!c) throw ClassNotInTarget("reduced class outside H_0");
    cols.push_back(*c);
  }
  std::size_t before = Subspace::span(F, H->dim(), cols).dim();
  cols.push_back(pc);
  std::size_t after = Subspace::span(F, H->dim(), cols).dim();
  bool ok = H->dim() == R->dim() + 1 && before == R->dim() && after == before + 1;
  return H0Decomposition{R->dim(), 1, ok};
}

BettiGrid betti_grid(const Field& F, const RelativeFilteredPair& pair, int n) {
  BettiGrid g;
  g.values = pair.critical_values();
  const std::size_t m = g.values.size();
  g.dims.assign(m, std::vector<int>(m, -1));
  parallel_for(m * m, [&](std::size_t k) {
    const std::size_t i = k / m, j = k % m;
    if (j >= i)
      g.dims[i][j] = static_cast<int>(homology(F, pair, n, Interval::make(g.values[i], g.values[j]))->dim());
  });
  return g;
}

} // namespace phax
