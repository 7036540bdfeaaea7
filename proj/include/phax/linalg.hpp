#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace phax {

// Prime field GF(p).
class Field {
public:
  explicit Field(std::uint32_t p = 2);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p_);
  }
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
  std::uint32_t p_;
};

using Vec = std::vector<std::uint32_t>;

bool is_zero(const Vec& v);

// Dense matrix, row-major.
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::uint32_t& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  std::uint32_t operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  Vec column(std::size_t j) const;
  Vec apply(const Field& F, const Vec& x) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::uint32_t> a_;
};

Matrix multiply(const Field& F, const Matrix& A, const Matrix& B);
Matrix scale(const Field& F, const Matrix& A, std::uint32_t c);
Matrix add(const Field& F, const Matrix& A, const Matrix& B);
std::size_t rank(const Field& F, const Matrix& M);
// Throws DimensionMismatch if M is not square and invertible.
Matrix inverse(const Field& F, const Matrix& M);
bool is_invertible(const Field& F, const Matrix& M);
std::ostream& print(std::ostream& os, const Matrix& M);

// Subspace of F^n with a canonical reduced echelon basis: each basis vector has a unit
// pivot at its first nonzero entry, other basis vectors vanish there, sorted by pivot.
class Subspace {
public:
  explicit Subspace(std::size_t ambient = 0) : ambient_(ambient) {}
  static Subspace span(const Field& F, std::size_t ambient, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient);

  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  // Remainder of v after elimination against the basis.
  Vec reduce(const Field& F, Vec v) const;
  bool contains(const Field& F, const Vec& v) const;
  bool contains(const Field& F, const Subspace& other) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
  std::size_t ambient_;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel(const Field& F, const Matrix& M);
Subspace image(const Field& F, const Matrix& M);
Subspace intersect(const Field& F, const Subspace& U, const Subspace& V);
Subspace sum(const Field& F, const Subspace& U, const Subspace& V);
// {x : Mx in U}.
Subspace preimage(const Field& F, const Matrix& M, const Subspace& U);
// Image of a subspace under M.
Subspace push(const Field& F, const Matrix& M, const Subspace& U);
// Throws SubspaceNotContained unless V is inside U.
std::size_t quotient_dim(const Field& F, const Subspace& U, const Subspace& V);
// Basis vectors of U chosen greedily to complement V (V inside U).
std::vector<Vec> complement_basis(const Field& F, const Subspace& U, const Subspace& V);
// Coordinates of v in U over complement_basis(U, V), modulo V.
Vec coords_in_quotient(const Field& F, const Vec& v, const Subspace& U, const Subspace& V);

// Expresses vectors as combinations of fixed columns (first echelon solution).
class Solver {
public:
  Solver() = default;
  Solver(const Field& F, std::size_t ambient, const std::vector<Vec>& columns);
  std::optional<Vec> solve(const Vec& v) const;
  std::size_t columns() const { return ncols_; }

private:
  Field F_{2};
  std::size_t ambient_ = 0, ncols_ = 0;
  std::vector<Vec> rows_;    // reduced rows
  std::vector<Vec> trans_;   // rows_[j] = sum_i trans_[j][i] * column_i
  std::vector<std::size_t> piv_;
};

} // namespace phax
