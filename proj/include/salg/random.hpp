#pragma once

// Seeded sampling of small exact values for randomized identity checks.
// std::mt19937_64 output is fixed by the standard; values are mapped by
// modulo rather than through std distributions so results agree across
// standard library implementations.

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "salg/algebra.hpp"
#include "salg/dense.hpp"
#include "salg/linear_solve.hpp"

namespace salg {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long long integer(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }

  /// p/q with p in [-bound, bound], q in [1, max_den].
  template <typename Scalar>
  Scalar scalar(long long bound = 5, long long max_den = 3) {
    const long long p = integer(-bound, bound);
    const long long q = integer(1, max_den);
    return Scalar(p) / Scalar(q);
  }

  template <typename Scalar>
  Vector<Scalar> vector(Index n) {
    Vector<Scalar> v(n);
    for (Index i = 0; i < n; ++i) v(i) = scalar<Scalar>();
    return v;
  }

  template <typename Scalar>
  Matrix<Scalar> matrix(Index rows, Index cols) {
    Matrix<Scalar> m(rows, cols);
    for (Index r = 0; r < rows; ++r)
      for (Index c = 0; c < cols; ++c) m(r, c) = scalar<Scalar>();
    return m;
  }

  /// Random invertible matrix (rejection sampling).
  template <typename Scalar>
  Matrix<Scalar> invertible(Index n) {
    for (;;) {
      Matrix<Scalar> m = matrix<Scalar>(n, n);
      if (rank(m) == n) return m;
    }
  }

  /// Random integer matrix with determinant +-1: unit lower times unit upper
  /// triangular factors with entries in [-bound, bound], then a random row
  /// permutation and sign flips. Its inverse is integral too.
  template <typename Scalar>
  Matrix<Scalar> unimodular(Index n, long long bound = 2) {
    Matrix<Scalar> lower = Matrix<Scalar>::Identity(n, n), upper = Matrix<Scalar>::Identity(n, n);
    for (Index r = 0; r < n; ++r)
      for (Index c = 0; c < r; ++c) {
        lower(r, c) = Scalar(integer(-bound, bound));
        upper(c, r) = Scalar(integer(-bound, bound));
      }
    const Matrix<Scalar> m = lower * upper;
    std::vector<Index> order(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
    for (Index i = n - 1; i > 0; --i) std::swap(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(integer(0, i))]);
    Matrix<Scalar> out(n, n);
    for (Index i = 0; i < n; ++i)
      out.row(i) = (integer(0, 1) ? Scalar(-1) : Scalar(1)) * m.row(order[static_cast<std::size_t>(i)]);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace salg
