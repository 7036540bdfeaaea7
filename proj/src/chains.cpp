#include "phax/chains.hpp"

#include "phax/errors.hpp"

namespace phax {

namespace {

ChainSpace build(std::vector<Simplex> basis, int n, const FiltValue& eps) {
  ChainSpace c;
  c.degree = n;
  c.level = eps;
  c.basis = std::move(basis);
  for (std::size_t i = 0; i < c.basis.size(); ++i) c.index.emplace(c.basis[i], i);
  return c;
}

} // namespace

ChainSpace chain_space(const RelativeFilteredPair& pair, int n, const FiltValue& eps) {
  std::vector<Simplex> basis;
  for (auto& s : pair.total().simplices(n, eps))
    if (pair.sub().value(s) > eps) basis.push_back(std::move(s));
  return build(std::move(basis), n, eps);
}

ChainSpace chain_space(const FilteredSet& X, int n, const FiltValue& eps) {
  return build(X.simplices(n, eps), n, eps);
}

Matrix boundary_matrix(const Field& F, const RelativeFilteredPair& pair, int n, const FiltValue& eps) {
  ChainSpace src = chain_space(pair, n, eps);
  ChainSpace dst = chain_space(pair, n - 1, eps);
  Matrix M(dst.dim(), src.dim());
  if (n <= 0) return M;
  for (std::size_t j = 0; j < src.dim(); ++j) {
    const Simplex& s = src.basis[j];
    for (std::size_t k = 0; k < s.size(); ++k) {
      auto i = dst.find(facet(s, k));
      if (i) M(*i, j) = F.from_int(k % 2 ? -1 : 1);
    }
  }
  return M;
}

Matrix inclusion_matrix(const Field& F, const RelativeFilteredPair& pair, int n, const Interval& I) {
  (void)F;
  ChainSpace src = chain_space(pair, n, I.lo);
  ChainSpace dst = chain_space(pair, n, I.hi);
  Matrix M(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j)
    if (auto i = dst.find(src.basis[j])) M(*i, j) = 1;
  return M;
}

int orientation_sign(const std::vector<Vertex>& images) {
  int sign = 1;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (images[i] == images[j]) return 0;
      if (images[j] < images[i]) sign = -sign;
    }
  return sign;
}

Matrix chain_map_matrix(const Field& F, const PreservingMap& f, int n, const FiltValue& eps) {
  ChainSpace src = chain_space(f.domain(), n, eps);
  ChainSpace dst = chain_space(f.codomain(), n, eps);
  Matrix M(dst.dim(), src.dim());
  for (std::size_t j = 0; j < src.dim(); ++j) {
    std::vector<Vertex> img;
    for (const auto& v : src.basis[j]) img.push_back(f(v));
    int sign = orientation_sign(img);
    if (!sign) continue;
    auto i = dst.find(make_simplex(img));
    // Absent means the image lies in the codomain subcomplex.
    if (i) M(*i, j) = F.from_int(sign);
  }
  return M;
}

} // namespace phax
