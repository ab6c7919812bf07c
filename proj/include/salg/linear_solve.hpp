#pragma once

// Exact Gaussian elimination over a field.
//
// Pivoting is canonical so every derived object (rank, nullspace basis,
// particular solution, subspace basis) is reproducible bit-for-bit: columns
// are scanned left to right and the pivot for a column is the first nonzero
// entry at or below the current pivot row.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "salg/dense.hpp"

namespace salg {

template <typename Scalar>
struct RowEchelon {
  Matrix<Scalar> reduced;       // reduced row echelon form, same shape as the input
  std::vector<Index> pivots;    // pivot column of row 0, 1, ..., rank-1

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> row_reduce(Matrix<Scalar> m) {
  RowEchelon<Scalar> out;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));

    const Scalar inv = Scalar(1) / m(row, col);
    for (Index c = col; c < m.cols(); ++c)
      if (m(row, c) != Scalar(0)) m(row, c) *= inv;

    for (Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      for (Index c = col; c < m.cols(); ++c)
        if (m(row, c) != Scalar(0)) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

template <typename Scalar>
Index rank(const Matrix<Scalar>& m) {
  return row_reduce(m).rank();
}

/// Nullspace basis as matrix columns. Column f corresponds to the f-th free
/// variable (ascending) set to 1, other free variables 0.
template <typename Scalar>
Matrix<Scalar> nullspace_from_echelon(const RowEchelon<Scalar>& ech, Index cols) {
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Index> free_cols;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);

  Matrix<Scalar> basis = Matrix<Scalar>::Zero(cols, static_cast<Index>(free_cols.size()));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    const Index fc = free_cols[f];
    const auto col = static_cast<Index>(f);
    basis(fc, col) = Scalar(1);
    for (Index r = 0; r < ech.rank(); ++r) basis(ech.pivots[static_cast<std::size_t>(r)], col) = -ech.reduced(r, fc);
  }
  return basis;
}

template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
  return nullspace_from_echelon(row_reduce(m), m.cols());
}

template <typename T>
struct Unique {
  T solution;
};

template <typename T>
struct Affine {
  T particular;
  std::vector<T> nullspace;
};

struct Inconsistent {};

/// Outcome of a linear system: exactly one solution, an affine family, or none.
template <typename T>
using SolveOutcome = std::variant<Unique<T>, Affine<T>, Inconsistent>;

template <typename Scalar>
SolveOutcome<Vector<Scalar>> linear_solve(const Matrix<Scalar>& m, const Vector<Scalar>& rhs) {
  require_dim(rhs.size(), m.rows(), "linear_solve: right-hand side");
  const Index cols = m.cols();
  Matrix<Scalar> augmented(m.rows(), cols + 1);
  augmented.leftCols(cols) = m;
  augmented.col(cols) = rhs;
  RowEchelon<Scalar> ech = row_reduce(std::move(augmented));

  if (!ech.pivots.empty() && ech.pivots.back() == cols) return Inconsistent{};

  Vector<Scalar> particular = Vector<Scalar>::Zero(cols);
  for (Index r = 0; r < ech.rank(); ++r) particular(ech.pivots[static_cast<std::size_t>(r)]) = ech.reduced(r, cols);

  if (ech.rank() == cols) return Unique<Vector<Scalar>>{std::move(particular)};

  const Matrix<Scalar> null = nullspace_from_echelon(ech, cols);
  Affine<Vector<Scalar>> affine{std::move(particular), {}};
  for (Index c = 0; c < null.cols(); ++c) affine.nullspace.emplace_back(null.col(c));
  return affine;
}

/// Exact inverse, or nullopt when `m` is singular.
template <typename Scalar>
std::optional<Matrix<Scalar>> try_inverse(const Matrix<Scalar>& m) {
  require_dim(m.cols(), m.rows(), "inverse: matrix must be square");
  const Index n = m.rows();
  Matrix<Scalar> augmented(n, 2 * n);
  augmented.leftCols(n) = m;
  augmented.rightCols(n) = Matrix<Scalar>::Identity(n, n);
  RowEchelon<Scalar> ech = row_reduce(std::move(augmented));
  if (ech.rank() < n || ech.pivots[static_cast<std::size_t>(n - 1)] != n - 1) return std::nullopt;
  return Matrix<Scalar>(ech.reduced.rightCols(n));
}

/// A linear subspace of Scalar^d kept as the reduced row echelon form of a
/// spanning set. The nonzero reduced rows are the canonical basis, so two
/// subspaces are equal exactly when their bases are equal.
template <typename Scalar>
class Subspace {
 public:
  explicit Subspace(Index ambient_dim) : reduced_(0, ambient_dim) {}

  /// Span of the rows of `generators`.
  static Subspace from_rows(const Matrix<Scalar>& generators) {
    Subspace s(generators.cols());
    RowEchelon<Scalar> ech = row_reduce(generators);
    s.reduced_ = ech.reduced.topRows(ech.rank());
    s.pivots_ = std::move(ech.pivots);
    return s;
  }

  static Subspace from_columns(const Matrix<Scalar>& generators) { return from_rows(generators.transpose()); }

  static Subspace span(const std::vector<Vector<Scalar>>& vectors, Index ambient_dim) {
    Matrix<Scalar> rows(static_cast<Index>(vectors.size()), ambient_dim);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      require_dim(vectors[i].size(), ambient_dim, "Subspace::span");
      rows.row(static_cast<Index>(i)) = vectors[i].transpose();
    }
    return from_rows(rows);
  }

  static Subspace whole(Index ambient_dim) {
    return from_rows(Matrix<Scalar>::Identity(ambient_dim, ambient_dim));
  }

  Index ambient_dim() const { return reduced_.cols(); }
  Index dim() const { return reduced_.rows(); }

  /// Basis vector i (row i of the reduced form).
  Vector<Scalar> basis(Index i) const { return reduced_.row(i).transpose(); }
  std::vector<Vector<Scalar>> basis() const {
    std::vector<Vector<Scalar>> out;
    for (Index i = 0; i < dim(); ++i) out.push_back(basis(i));
    return out;
  }
  const Matrix<Scalar>& reduced() const { return reduced_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  /// Remainder of `v` after eliminating against the basis; zero iff v is a member.
  Vector<Scalar> residual(Vector<Scalar> v) const {
    require_dim(v.size(), ambient_dim(), "Subspace membership");
    for (Index r = 0; r < dim(); ++r) {
      const Scalar coeff = v(pivots_[static_cast<std::size_t>(r)]);
      if (coeff == Scalar(0)) continue;
      for (Index c = 0; c < ambient_dim(); ++c)
        if (reduced_(r, c) != Scalar(0)) v(c) -= coeff * reduced_(r, c);
    }
    return v;
  }

  bool contains(const Vector<Scalar>& v) const { return is_zero(residual(v)); }

  bool contains(const Subspace& other) const {
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis(i))) return false;
    return true;
  }

  /// Sum of subspaces (span of the union).
  Subspace operator+(const Subspace& other) const {
    require_dim(other.ambient_dim(), ambient_dim(), "Subspace sum");
    Matrix<Scalar> rows(dim() + other.dim(), ambient_dim());
    rows.topRows(dim()) = reduced_;
    rows.bottomRows(other.dim()) = other.reduced_;
    return from_rows(rows);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_dim() == b.ambient_dim() && exactly_equal(a.reduced_, b.reduced_);
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Matrix<Scalar> reduced_;
  std::vector<Index> pivots_;
};

}  // namespace salg
