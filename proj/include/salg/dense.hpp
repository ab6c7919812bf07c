#pragma once

// Dense Eigen aliases shared by every module, the dimension error type, and
// the row-major flattening used for vectorized maps and tensors.

#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace salg {

using Index = Eigen::Index;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Coordinates a^i of an algebra element in the algebra's basis.
template <typename Scalar>
using Element = Vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void require_dim(Index got, Index expected, const char* what) {
  if (got != expected) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(expected) +
                         ", got " + std::to_string(got));
  }
}

/// Flattens rows first: entry (k, m) lands at k * cols + m.
template <typename Derived>
Vector<typename Derived::Scalar> vectorize(const Eigen::MatrixBase<Derived>& m) {
  Vector<typename Derived::Scalar> v(m.rows() * m.cols());
  for (Index k = 0; k < m.rows(); ++k)
    for (Index c = 0; c < m.cols(); ++c) v(k * m.cols() + c) = m(k, c);
  return v;
}

template <typename Derived>
Matrix<typename Derived::Scalar> unvectorize(const Eigen::MatrixBase<Derived>& v, Index rows, Index cols) {
  require_dim(v.size(), rows * cols, "unvectorize");
  Matrix<typename Derived::Scalar> m(rows, cols);
  for (Index k = 0; k < rows; ++k)
    for (Index c = 0; c < cols; ++c) m(k, c) = v(k * cols + c);
  return m;
}

template <typename Scalar>
Element<Scalar> basis_element(Index n, Index i) {
  Element<Scalar> e = Element<Scalar>::Zero(n);
  e(i) = Scalar(1);
  return e;
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      if (m(r, c) != Scalar(0)) return false;
  return true;
}

template <typename A, typename B>
bool exactly_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() && (a.derived().array() == b.derived().array()).all();
}

}  // namespace salg
