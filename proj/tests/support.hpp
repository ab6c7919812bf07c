#pragma once

// Shared test helpers and independent oracles. The oracles here only use
// basis products read off the structure constants and plain loops; they
// never call the matrix-based routines they are checking.

#include <string>
#include <vector>

#include "salg/salg.hpp"

namespace salg::test {

using Q = Rational;
using Alg = Algebra<Q>;
using El = Element<Q>;
using Mat = Matrix<Q>;
using Vec = Vector<Q>;
using Map = LinearMap<Q>;
using Ten = Tensor2<Q>;
using Poly = PolyMap<Q>;

inline Alg cat(const std::string& name) { return catalog<Q>(name); }

inline El el(std::initializer_list<long long> xs) {
  El a(static_cast<Index>(xs.size()));
  Index i = 0;
  for (long long x : xs) a(i++) = Q(x);
  return a;
}

inline El e(Index n, Index i) { return basis_element<Q>(n, i); }

inline Mat mat(Index rows, Index cols, std::initializer_list<long long> xs) {
  Mat m(rows, cols);
  Index i = 0;
  for (long long x : xs) {
    m(i / cols, i % cols) = Q(x);
    ++i;
  }
  return m;
}

/// Product straight from the definition (ab)^k = a^i b^j C^k_ij.
inline El naive_mul(const Alg& alg, const El& a, const El& b) {
  const Index n = alg.dim();
  El out = El::Zero(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) out(k) += a(i) * b(j) * alg.constant(i, j, k);
  return out;
}

inline El naive_assoc(const Alg& alg, const El& a, const El& b, const El& c) {
  return naive_mul(alg, naive_mul(alg, a, b), c) - naive_mul(alg, a, naive_mul(alg, b, c));
}

/// Column (p, r) of the B-matrix by brute force: image of every e_m under
/// x -> (e_p x) e_r or e_p (x e_r).
inline Vec naive_b_column(const Alg& alg, Index p, Index r, Convention conv) {
  const Index n = alg.dim();
  Vec col(n * n);
  for (Index m = 0; m < n; ++m) {
    const El img = conv == Convention::left ? naive_mul(alg, naive_mul(alg, e(n, p), e(n, m)), e(n, r))
                                            : naive_mul(alg, e(n, p), naive_mul(alg, e(n, m), e(n, r)));
    for (Index k = 0; k < n; ++k) col(k * n + m) = img(k);
  }
  return col;
}

/// Rank by a separate elimination: pivot on the last nonzero row, no
/// normalization, fraction arithmetic throughout.
inline Index naive_rank(Mat m) {
  Index rank = 0;
  for (Index c = 0; c < m.cols() && rank < m.rows(); ++c) {
    Index piv = -1;
    for (Index r = m.rows() - 1; r >= rank; --r)
      if (m(r, c) != Q(0)) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    m.row(piv).swap(m.row(rank));
    for (Index r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c) == Q(0)) continue;
      const Q f = m(r, c) / m(rank, c);
      for (Index cc = c; cc < m.cols(); ++cc) m(r, cc) -= f * m(rank, cc);
    }
    ++rank;
  }
  return rank;
}

/// Defining identities of the nucleus on all basis pairs.
inline bool naive_in_nucleus(const Alg& alg, const El& a) {
  const Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      if (!is_zero(naive_assoc(alg, a, e(n, i), e(n, j)))) return false;
      if (!is_zero(naive_assoc(alg, e(n, i), a, e(n, j)))) return false;
      if (!is_zero(naive_assoc(alg, e(n, i), e(n, j), a))) return false;
    }
  return true;
}

inline bool naive_in_center(const Alg& alg, const El& a) {
  const Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    if (!is_zero(El(naive_mul(alg, a, e(n, i)) - naive_mul(alg, e(n, i), a)))) return false;
  return naive_in_nucleus(alg, a);
}

/// Random algebra with small integer constants (generally without unit).
inline Alg random_algebra(Sampler& s, Index n) {
  std::vector<StructureConstant<Q>> c;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const long long v = s.integer(-2, 2);
        if (v != 0) c.push_back({i, j, k, Q(v)});
      }
  return make_algebra<Q>("random", n, c);
}

inline const std::vector<std::string>& all_names() { return catalog_names(); }

}  // namespace salg::test
