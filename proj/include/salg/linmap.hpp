#pragma once

// Linear maps between algebras and the action of A (x) A on L(A; A).
//
// A tensor t = sum g^pr e_p (x) e_r acts on a map f by
//     x -> sum g^pr (e_p f(x)) e_r      (Convention::left)
//     x -> sum g^pr e_p (f(x) e_r)      (Convention::right)
// which coincide for associative algebras. Vectorized maps and tensors are
// flattened row first: map entry (k, m) at k*n + m, tensor component (p, r)
// at p*n + r.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "salg/algebra.hpp"
#include "salg/dense.hpp"
#include "salg/linear_solve.hpp"

namespace salg {

enum class Convention { left, right };

inline const char* to_string(Convention c) { return c == Convention::left ? "left" : "right"; }

/// Linear map A1 -> A2 by its coordinates g^k_i: column i is the image of
/// the i-th source basis vector.
template <typename Scalar>
struct LinearMap {
  Matrix<Scalar> matrix;

  Index source_dim() const { return matrix.cols(); }
  Index target_dim() const { return matrix.rows(); }

  static LinearMap zero(Index target, Index source) { return {Matrix<Scalar>::Zero(target, source)}; }
  static LinearMap identity(Index n) { return {Matrix<Scalar>::Identity(n, n)}; }
  /// E^k_m: x -> x^m e_k
  static LinearMap elementary(Index n, Index k, Index m) {
    LinearMap f = zero(n, n);
    f.matrix(k, m) = Scalar(1);
    return f;
  }

  friend bool operator==(const LinearMap& a, const LinearMap& b) { return exactly_equal(a.matrix, b.matrix); }
  friend bool operator!=(const LinearMap& a, const LinearMap& b) { return !(a == b); }

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b);
    return {a.matrix + b.matrix};
  }
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b) {
    require_same_shape(a, b);
    return {a.matrix - b.matrix};
  }
  friend LinearMap operator-(const LinearMap& a) { return {-a.matrix}; }
  friend LinearMap operator*(const Scalar& s, const LinearMap& a) { return {s * a.matrix}; }

 private:
  static void require_same_shape(const LinearMap& a, const LinearMap& b) {
    require_dim(b.target_dim(), a.target_dim(), "linear map target");
    require_dim(b.source_dim(), a.source_dim(), "linear map source");
  }
};

template <typename Scalar>
Element<Scalar> apply_map(const LinearMap<Scalar>& f, const Element<Scalar>& x) {
  require_dim(x.size(), f.source_dim(), "apply_map");
  return f.matrix * x;
}

/// g after f.
template <typename Scalar>
LinearMap<Scalar> compose(const LinearMap<Scalar>& g, const LinearMap<Scalar>& f) {
  require_dim(g.source_dim(), f.target_dim(), "compose");
  return {g.matrix * f.matrix};
}

/// Tensor sum g^pr e_p (x) e_r in A (x) A by its standard components.
template <typename Scalar>
struct Tensor2 {
  Matrix<Scalar> components;

  Index dim() const { return components.rows(); }

  static Tensor2 zero(Index n) { return {Matrix<Scalar>::Zero(n, n)}; }
  static Tensor2 basis(Index n, Index p, Index r) {
    Tensor2 t = zero(n);
    t.components(p, r) = Scalar(1);
    return t;
  }
  /// a (x) b
  static Tensor2 simple(const Element<Scalar>& a, const Element<Scalar>& b) {
    require_dim(b.size(), a.size(), "simple tensor");
    return {a * b.transpose()};
  }

  friend bool operator==(const Tensor2& a, const Tensor2& b) { return exactly_equal(a.components, b.components); }
  friend bool operator!=(const Tensor2& a, const Tensor2& b) { return !(a == b); }
  friend Tensor2 operator+(const Tensor2& a, const Tensor2& b) {
    require_dim(b.dim(), a.dim(), "tensor sum");
    return {a.components + b.components};
  }
  friend Tensor2 operator*(const Scalar& s, const Tensor2& a) { return {s * a.components}; }
};

class NotAssociativeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoUnitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// ---------------------------------------------------------------------------
// The A (x) A action

/// Matrix of y -> (e_p y) e_r, or e_p (y e_r) under the right convention.
template <typename Scalar>
Matrix<Scalar> bracket_operator(const Algebra<Scalar>& alg, Index p, Index r, Convention conv) {
  return conv == Convention::left ? Matrix<Scalar>(alg.right(r) * alg.left(p))
                                  : Matrix<Scalar>(alg.left(p) * alg.right(r));
}

/// Matrix of y -> sum g^pr bracket(e_p, y, e_r).
template <typename Scalar>
Matrix<Scalar> action_operator(const Algebra<Scalar>& alg, const Tensor2<Scalar>& t, Convention conv) {
  require_dim(t.dim(), alg.dim(), "tensor dimension");
  const Index n = alg.dim();
  Matrix<Scalar> op = Matrix<Scalar>::Zero(n, n);
  for (Index p = 0; p < n; ++p)
    for (Index r = 0; r < n; ++r)
      if (t.components(p, r) != Scalar(0)) op += t.components(p, r) * bracket_operator(alg, p, r, conv);
  return op;
}

/// The map x -> sum g^pr (e_p f(x)) e_r.
template <typename Scalar>
LinearMap<Scalar> tensor_apply(const Algebra<Scalar>& alg, const Tensor2<Scalar>& t, const LinearMap<Scalar>& f,
                               Convention conv = Convention::left) {
  require_dim(f.target_dim(), alg.dim(), "tensor_apply: map target");
  return {action_operator(alg, t, conv) * f.matrix};
}

/// The map identified with t: its action on the identity map.
template <typename Scalar>
LinearMap<Scalar> tensor_to_map(const Algebra<Scalar>& alg, const Tensor2<Scalar>& t,
                                Convention conv = Convention::left) {
  return {action_operator(alg, t, conv)};
}

/// Product in A (x) A: (a (x) b)(c (x) d) = (ac) (x) (db). Requires an
/// associative algebra, where it turns tensor_apply into a homomorphism.
template <typename Scalar>
Tensor2<Scalar> tensor_mul(const Algebra<Scalar>& alg, const Tensor2<Scalar>& s, const Tensor2<Scalar>& t) {
  require_dim(s.dim(), alg.dim(), "tensor_mul: left factor");
  require_dim(t.dim(), alg.dim(), "tensor_mul: right factor");
  if (!is_associative(alg)) throw NotAssociativeError("tensor product requires an associative algebra");
  const Index n = alg.dim();
  // result^ab = s^pq t^rs C^a_pr C^b_sq = sum_pq s^pq (L_p T R_q^T)^ab
  Tensor2<Scalar> out = Tensor2<Scalar>::zero(n);
  for (Index p = 0; p < n; ++p)
    for (Index q = 0; q < n; ++q)
      if (s.components(p, q) != Scalar(0))
        out.components += s.components(p, q) * (alg.left(p) * t.components * alg.right(q).transpose());
  return out;
}

// ---------------------------------------------------------------------------
// B-matrix: standard components -> map coordinates

template <typename Scalar>
struct BMatrix {
  Index dim = 0;
  Convention convention = Convention::left;
  /// Row (k, m) at k*n + m, column (p, r) at p*n + r.
  Matrix<Scalar> entries;
};

/// entry((k,m),(p,r)) = sum_l C^l_pm C^k_lr (left) or sum_l C^l_mr C^k_pl (right).
template <typename Scalar>
BMatrix<Scalar> b_matrix(const Algebra<Scalar>& alg, Convention conv = Convention::left) {
  const Index n = alg.dim();
  BMatrix<Scalar> b{n, conv, Matrix<Scalar>::Zero(n * n, n * n)};
  for (Index k = 0; k < n; ++k)
    for (Index m = 0; m < n; ++m)
      for (Index p = 0; p < n; ++p)
        for (Index r = 0; r < n; ++r) {
          Scalar sum(0);
          for (Index l = 0; l < n; ++l) {
            if (conv == Convention::left)
              sum += alg.constant(p, m, l) * alg.constant(l, r, k);
            else
              sum += alg.constant(m, r, l) * alg.constant(p, l, k);
          }
          b.entries(k * n + m, p * n + r) = sum;
        }
  return b;
}

template <typename Scalar>
Index rank(const BMatrix<Scalar>& b) {
  return rank(b.entries);
}

/// Standard components of a tensor representing f, by solving B vec(t) = vec(f).
template <typename Scalar>
SolveOutcome<Tensor2<Scalar>> map_to_tensor(const Algebra<Scalar>& alg, const LinearMap<Scalar>& f,
                                            Convention conv = Convention::left) {
  const Index n = alg.dim();
  require_dim(f.source_dim(), n, "map_to_tensor: map source");
  require_dim(f.target_dim(), n, "map_to_tensor: map target");
  const BMatrix<Scalar> b = b_matrix(alg, conv);
  auto as_tensor = [n](const Vector<Scalar>& v) { return Tensor2<Scalar>{unvectorize(v, n, n)}; };

  const SolveOutcome<Vector<Scalar>> outcome = linear_solve(b.entries, vectorize(f.matrix));
  if (const auto* u = std::get_if<Unique<Vector<Scalar>>>(&outcome))
    return Unique<Tensor2<Scalar>>{as_tensor(u->solution)};
  if (const auto* a = std::get_if<Affine<Vector<Scalar>>>(&outcome)) {
    Affine<Tensor2<Scalar>> out{as_tensor(a->particular), {}};
    for (const auto& v : a->nullspace) out.nullspace.push_back(as_tensor(v));
    return out;
  }
  return Inconsistent{};
}

/// Tensor s with tensor_mul(t, s) = u (x) u, if any.
template <typename Scalar>
std::optional<Tensor2<Scalar>> tensor_inverse(const Algebra<Scalar>& alg, const Tensor2<Scalar>& t) {
  if (!alg.unit()) throw NoUnitError("tensor_inverse requires an algebra with unit");
  if (!is_associative(alg)) throw NotAssociativeError("tensor_inverse requires an associative algebra");
  const Index n = alg.dim();
  Matrix<Scalar> op(n * n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index r = 0; r < n; ++r)
      op.col(p * n + r) = vectorize(tensor_mul(alg, t, Tensor2<Scalar>::basis(n, p, r)).components);
  const Element<Scalar>& u = *alg.unit();
  const SolveOutcome<Vector<Scalar>> outcome =
      linear_solve(op, vectorize(Tensor2<Scalar>::simple(u, u).components));
  if (const auto* unique = std::get_if<Unique<Vector<Scalar>>>(&outcome))
    return Tensor2<Scalar>{unvectorize(unique->solution, n, n)};
  if (const auto* affine = std::get_if<Affine<Vector<Scalar>>>(&outcome))
    return Tensor2<Scalar>{unvectorize(affine->particular, n, n)};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Orbits and the generator set of L(A; A)

/// Span of the maps x -> bracket(e_p, f(x), e_r) in vectorized form.
template <typename Scalar>
Subspace<Scalar> orbit_span(const Algebra<Scalar>& alg, const LinearMap<Scalar>& f,
                            Convention conv = Convention::left) {
  const Index n = alg.dim();
  require_dim(f.source_dim(), n, "orbit_span: map source");
  require_dim(f.target_dim(), n, "orbit_span: map target");
  Matrix<Scalar> rows(n * n, n * n);
  for (Index p = 0; p < n; ++p)
    for (Index r = 0; r < n; ++r)
      rows.row(p * n + r) = vectorize(Matrix<Scalar>(bracket_operator(alg, p, r, conv) * f.matrix)).transpose();
  return Subspace<Scalar>::from_rows(rows);
}

template <typename Scalar>
bool orbits_equal(const Algebra<Scalar>& alg, const LinearMap<Scalar>& f, const LinearMap<Scalar>& g,
                  Convention conv = Convention::left) {
  return orbit_span(alg, f, conv) == orbit_span(alg, g, conv);
}

class GeneratorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <typename Scalar>
struct GeneratorSet {
  /// generators[0] is the identity map.
  std::vector<LinearMap<Scalar>> generators;
  /// Dimension of each generator's own orbit span.
  std::vector<Index> orbit_dims;
  /// Dimension of the span of the first i+1 orbits.
  std::vector<Index> cumulative_dims;
  /// (k, m) of the elementary map E^k_m behind generators[i + 1].
  std::vector<std::pair<Index, Index>> elementary;

  std::size_t size() const { return generators.size(); }
};

/// Greedy generator set: start from the orbit of the identity and append the
/// first elementary map E^k_m (lexicographic in (k, m)) whose orbit enlarges
/// the span, until the span is all of L(A; A).
template <typename Scalar>
GeneratorSet<Scalar> generator_set(const Algebra<Scalar>& alg, Convention conv = Convention::left) {
  const Index n = alg.dim();
  GeneratorSet<Scalar> gens;
  const LinearMap<Scalar> delta = LinearMap<Scalar>::identity(n);
  Subspace<Scalar> span = orbit_span(alg, delta, conv);
  gens.generators.push_back(delta);
  gens.orbit_dims.push_back(span.dim());
  gens.cumulative_dims.push_back(span.dim());

  for (Index k = 0; k < n && span.dim() < n * n; ++k)
    for (Index m = 0; m < n && span.dim() < n * n; ++m) {
      const LinearMap<Scalar> e = LinearMap<Scalar>::elementary(n, k, m);
      if (span.contains(vectorize(e.matrix))) continue;
      const Subspace<Scalar> orbit = orbit_span(alg, e, conv);
      if (span.contains(orbit)) continue;
      span = span + orbit;
      gens.generators.push_back(e);
      gens.orbit_dims.push_back(orbit.dim());
      gens.cumulative_dims.push_back(span.dim());
      gens.elementary.emplace_back(k, m);
    }
  if (span.dim() < n * n)
    throw GeneratorError("orbits span only " + std::to_string(span.dim()) + " of " + std::to_string(n * n) +
                         " dimensions of L(A;A)");
  return gens;
}

}  // namespace salg
