#include "phax/linalg.hpp"

#include "phax/errors.hpp"

#include <algorithm>
#include <string>

namespace phax {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// In-place reduced row echelon form; returns pivot column per nonzero row.
// When trans is given, the same row operations are applied to it.
std::vector<std::size_t> rref(const Field& F, std::vector<Vec>& rows, std::size_t ncols,
                              std::vector<Vec>* trans = nullptr) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    if (trans) std::swap((*trans)[r], (*trans)[sel]);
    std::uint32_t iv = F.inv(rows[r][c]);
    if (iv != 1) {
      for (auto& x : rows[r]) x = F.mul(x, iv);
      if (trans)
        for (auto& x : (*trans)[r]) x = F.mul(x, iv);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint32_t f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j)
        if (rows[r][j]) rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[r][j]));
      if (trans) {
        auto& ti = (*trans)[i];
        const auto& tr = (*trans)[r];
        for (std::size_t j = 0; j < ti.size(); ++j)
          if (tr[j]) ti[j] = F.sub(ti[j], F.mul(f, tr[j]));
      }
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

} // namespace

Field::Field(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 31)) throw MalformedInstance("field characteristic " + std::to_string(p) + " is not a supported prime");
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a == 0) throw DimensionMismatch("inverse of zero");
  std::int64_t t = 0, nt = 1, r = p_, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  return static_cast<std::uint32_t>(t < 0 ? t + p_ : t);
}

std::uint32_t Field::from_int(std::int64_t v) const {
  std::int64_t m = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](std::uint32_t x) { return x == 0; });
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw DimensionMismatch("column length");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::column(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::apply(const Field& F, const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length");
  Vec y(rows_, 0);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (!x[j]) continue;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, j)) y[i] = F.add(y[i], F.mul((*this)(i, j), x[j]));
  }
  return y;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](std::uint32_t x) { return x == 0; });
}

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.cols() != B.rows()) throw DimensionMismatch("multiply");
  Matrix C(A.rows(), B.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t k = 0; k < A.cols(); ++k) {
      std::uint32_t a = A(i, k);
      if (!a) continue;
      for (std::size_t j = 0; j < B.cols(); ++j)
        if (B(k, j)) C(i, j) = F.add(C(i, j), F.mul(a, B(k, j)));
    }
  return C;
}

Matrix scale(const Field& F, const Matrix& A, std::uint32_t c) {
  Matrix B = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = F.mul(A(i, j), c);
  return B;
}

Matrix add(const Field& F, const Matrix& A, const Matrix& B) {
  if (A.rows() != B.rows() || A.cols() != B.cols()) throw DimensionMismatch("add");
  Matrix C = A;
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = F.add(A(i, j), B(i, j));
  return C;
}

namespace {

std::vector<Vec> rows_of(const Matrix& M) {
  std::vector<Vec> rows(M.rows(), Vec(M.cols()));
  for (std::size_t i = 0; i < M.rows(); ++i)
    for (std::size_t j = 0; j < M.cols(); ++j) rows[i][j] = M(i, j);
  return rows;
}

} // namespace

std::size_t rank(const Field& F, const Matrix& M) {
  auto rows = rows_of(M);
  return rref(F, rows, M.cols()).size();
}

bool is_invertible(const Field& F, const Matrix& M) {
  return M.rows() == M.cols() && rank(F, M) == M.rows();
}

Matrix inverse(const Field& F, const Matrix& M) {
  if (M.rows() != M.cols()) throw DimensionMismatch("inverse of non-square matrix");
  const std::size_t n = M.rows();
  auto rows = rows_of(M);
  std::vector<Vec> trans(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i) trans[i][i] = 1;
  if (rref(F, rows, n, &trans).size() != n) throw DimensionMismatch("singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = trans[i][j];
  return inv;
}

std::ostream& print(std::ostream& os, const Matrix& M) {
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < M.cols(); ++j) os << (j ? " " : "") << M(i, j);
    os << '\n';
  }
  return os;
}

// ---------------------------------------------------------------------------

Subspace Subspace::span(const Field& F, std::size_t ambient, const std::vector<Vec>& vectors) {
  std::vector<Vec> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw DimensionMismatch("span: vector length");
    if (!is_zero(v)) rows.push_back(v);
  }
  auto piv = rref(F, rows, ambient);
  rows.resize(piv.size());
  Subspace s(ambient);
  s.basis_ = std::move(rows);
  s.pivots_ = std::move(piv);
  return s;
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  for (std::size_t i = 0; i < ambient; ++i) {
    Vec e(ambient, 0);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(const Field& F, Vec v) const {
  if (v.size() != ambient_) throw DimensionMismatch("reduce: vector length");
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    std::uint32_t c = v[pivots_[k]];
    if (!c) continue;
    const Vec& b = basis_[k];
    for (std::size_t j = pivots_[k]; j < ambient_; ++j)
      if (b[j]) v[j] = F.sub(v[j], F.mul(c, b[j]));
  }
  return v;
}

bool Subspace::contains(const Field& F, const Vec& v) const { return is_zero(reduce(F, v)); }

bool Subspace::contains(const Field& F, const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("contains: ambient");
  for (const auto& b : other.basis_)
    if (!contains(F, b)) return false;
  return true;
}

Subspace kernel(const Field& F, const Matrix& M) {
  auto rows = rows_of(M);
  auto piv = rref(F, rows, M.cols());
  std::vector<bool> is_piv(M.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < M.cols(); ++f) {
    if (is_piv[f]) continue;
    Vec v(M.cols(), 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(rows[r][f]);
    out.push_back(std::move(v));
  }
  Subspace K = Subspace::span(F, M.cols(), out);
  if (K.dim() + piv.size() != M.cols()) throw DimensionMismatch("rank-nullity violated");
  return K;
}

Subspace image(const Field& F, const Matrix& M) {
  std::vector<Vec> cols;
  for (std::size_t j = 0; j < M.cols(); ++j) cols.push_back(M.column(j));
  return Subspace::span(F, M.rows(), cols);
}

Subspace sum(const Field& F, const Subspace& U, const Subspace& V) {
  if (U.ambient() != V.ambient()) throw DimensionMismatch("sum: ambient");
  std::vector<Vec> all = U.basis();
  all.insert(all.end(), V.basis().begin(), V.basis().end());
  return Subspace::span(F, U.ambient(), all);
}

Subspace intersect(const Field& F, const Subspace& U, const Subspace& V) {
  if (U.ambient() != V.ambient()) throw DimensionMismatch("intersect: ambient");
  const std::size_t n = U.ambient(), a = U.dim(), b = V.dim();
  if (a == 0 || b == 0) return Subspace(n);
  Matrix M(n, a + b);
  for (std::size_t j = 0; j < a; ++j)
    for (std::size_t i = 0; i < n; ++i) M(i, j) = U.basis()[j][i];
  for (std::size_t j = 0; j < b; ++j)
    for (std::size_t i = 0; i < n; ++i) M(i, a + j) = F.neg(V.basis()[j][i]);
  std::vector<Vec> out;
  const Subspace K = kernel(F, M);
  for (const auto& x : K.basis()) {
    Vec v(n, 0);
    for (std::size_t j = 0; j < a; ++j)
      if (x[j])
        for (std::size_t i = 0; i < n; ++i) v[i] = F.add(v[i], F.mul(x[j], U.basis()[j][i]));
    out.push_back(std::move(v));
  }
  return Subspace::span(F, n, out);
}

Subspace preimage(const Field& F, const Matrix& M, const Subspace& U) {
  if (U.ambient() != M.rows()) throw DimensionMismatch("preimage: ambient");
  const std::size_t m = M.cols(), k = U.dim();
  Matrix A(M.rows(), m + k);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) A(i, j) = M(i, j);
    for (std::size_t j = 0; j < k; ++j) A(i, m + j) = F.neg(U.basis()[j][i]);
  }
  std::vector<Vec> out;
  const Subspace K = kernel(F, A);
  for (const auto& x : K.basis()) out.emplace_back(x.begin(), x.begin() + m);
  return Subspace::span(F, m, out);
}

Subspace push(const Field& F, const Matrix& M, const Subspace& U) {
  if (U.ambient() != M.cols()) throw DimensionMismatch("push: ambient");
  std::vector<Vec> out;
  for (const auto& b : U.basis()) out.push_back(M.apply(F, b));
  return Subspace::span(F, M.rows(), out);
}

std::size_t quotient_dim(const Field& F, const Subspace& U, const Subspace& V) {
  if (!U.contains(F, V)) throw SubspaceNotContained("quotient by a non-subspace");
  return U.dim() - V.dim();
}

std::vector<Vec> complement_basis(const Field& F, const Subspace& U, const Subspace& V) {
  if (!U.contains(F, V)) throw SubspaceNotContained("complement of a non-subspace");
  std::vector<Vec> acc = V.basis();
  std::vector<Vec> out;
  Subspace cur = V;
  for (const auto& u : U.basis()) {
    if (cur.contains(F, u)) continue;
    out.push_back(u);
    acc.push_back(u);
    cur = Subspace::span(F, U.ambient(), acc);
  }
  return out;
}

Vec coords_in_quotient(const Field& F, const Vec& v, const Subspace& U, const Subspace& V) {
  if (!U.contains(F, v)) throw SubspaceNotContained("vector outside U");
  auto W = complement_basis(F, U, V);
  std::vector<Vec> cols = W;
  cols.insert(cols.end(), V.basis().begin(), V.basis().end());
  auto x = Solver(F, U.ambient(), cols).solve(v);
  if (!x) throw SubspaceNotContained("vector outside U");
  x->resize(W.size());
  return *x;
}

// ---------------------------------------------------------------------------

Solver::Solver(const Field& F, std::size_t ambient, const std::vector<Vec>& columns)
    : F_(F), ambient_(ambient), ncols_(columns.size()) {
  rows_ = columns;
  for (const auto& c : rows_)
    if (c.size() != ambient) throw DimensionMismatch("solver: column length");
  trans_.assign(ncols_, Vec(ncols_, 0));
  for (std::size_t i = 0; i < ncols_; ++i) trans_[i][i] = 1;
  piv_ = rref(F_, rows_, ambient_, &trans_);
  rows_.resize(piv_.size());
  trans_.resize(piv_.size());
}

std::optional<Vec> Solver::solve(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("solve: vector length");
  Vec r = v;
  Vec x(ncols_, 0);
  for (std::size_t j = 0; j < piv_.size(); ++j) {
    std::uint32_t c = r[piv_[j]];
    if (!c) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (rows_[j][k]) r[k] = F_.sub(r[k], F_.mul(c, rows_[j][k]));
    for (std::size_t i = 0; i < ncols_; ++i)
      if (trans_[j][i]) x[i] = F_.add(x[i], F_.mul(c, trans_[j][i]));
  }
  if (!is_zero(r)) return std::nullopt;
  return x;
}

} // namespace phax
