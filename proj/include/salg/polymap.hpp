#pragma once

// Polylinear maps A^m -> A.
//
// A PolyMap stores its coordinate tensor f^j_{i1..im} as an n x n^m matrix:
// row j, column i1*n^(m-1) + ... + im. Evaluation is then a single product
// with the Kronecker product of the arguments.
//
// A PermTensorRep is a sum of terms
//     a0 I_k1(x_s(1)) a1 I_k2(x_s(2)) ... a_m
// where s is a permutation of the argument slots and I_k are maps taken from
// a generator list (typically a GeneratorSet of L(A; A)).

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "salg/algebra.hpp"
#include "salg/dense.hpp"
#include "salg/linear_solve.hpp"
#include "salg/linmap.hpp"

namespace salg {

inline Index int_pow(Index base, Index exp) {
  Index r = 1;
  for (Index i = 0; i < exp; ++i) r *= base;
  return r;
}

template <typename Scalar>
struct PolyMap {
  Index arity = 1;
  Index dim = 1;
  Matrix<Scalar> coords;  // dim x dim^arity

  static PolyMap zero(Index arity, Index dim) {
    if (arity < 1) throw std::invalid_argument("poly map arity must be at least 1");
    if (dim < 1) throw std::invalid_argument("poly map dimension must be positive");
    return {arity, dim, Matrix<Scalar>::Zero(dim, int_pow(dim, arity))};
  }

  /// Column of the argument index tuple (i1, ..., im).
  Index column(std::span<const Index> indices) const {
    require_dim(static_cast<Index>(indices.size()), arity, "poly map index tuple");
    Index c = 0;
    for (Index i : indices) c = c * dim + i;
    return c;
  }

  /// Inverse of column().
  std::vector<Index> indices(Index column) const {
    std::vector<Index> out(static_cast<std::size_t>(arity));
    for (Index s = arity - 1; s >= 0; --s) {
      out[static_cast<std::size_t>(s)] = column % dim;
      column /= dim;
    }
    return out;
  }

  friend bool operator==(const PolyMap& a, const PolyMap& b) {
    return a.arity == b.arity && a.dim == b.dim && exactly_equal(a.coords, b.coords);
  }
  friend bool operator!=(const PolyMap& a, const PolyMap& b) { return !(a == b); }

  friend PolyMap operator+(const PolyMap& a, const PolyMap& b) {
    require_same_shape(a, b);
    return {a.arity, a.dim, a.coords + b.coords};
  }
  friend PolyMap operator-(const PolyMap& a, const PolyMap& b) {
    require_same_shape(a, b);
    return {a.arity, a.dim, a.coords - b.coords};
  }
  friend PolyMap operator*(const Scalar& s, const PolyMap& a) { return {a.arity, a.dim, s * a.coords}; }

 private:
  static void require_same_shape(const PolyMap& a, const PolyMap& b) {
    require_dim(b.arity, a.arity, "poly map arity");
    require_dim(b.dim, a.dim, "poly map dimension");
  }
};

/// x1 (x) x2 (x) ... (x) xm, first factor most significant.
template <typename Scalar>
Vector<Scalar> kronecker(std::span<const Element<Scalar>> xs) {
  Vector<Scalar> acc = Vector<Scalar>::Ones(1);
  for (const auto& x : xs) {
    Vector<Scalar> next(acc.size() * x.size());
    for (Index a = 0; a < acc.size(); ++a)
      for (Index b = 0; b < x.size(); ++b) next(a * x.size() + b) = acc(a) * x(b);
    acc = std::move(next);
  }
  return acc;
}

template <typename Scalar>
Element<Scalar> eval_poly(const PolyMap<Scalar>& f, std::span<const Element<Scalar>> xs) {
  require_dim(static_cast<Index>(xs.size()), f.arity, "eval_poly: argument count");
  for (const auto& x : xs) require_dim(x.size(), f.dim, "eval_poly: argument");
  return f.coords * kronecker(xs);
}

template <typename Scalar>
Element<Scalar> eval_poly(const PolyMap<Scalar>& f, const std::vector<Element<Scalar>>& xs) {
  return eval_poly(f, std::span<const Element<Scalar>>(xs));
}

/// (x, y) -> xy; coordinates are the structure constants.
template <typename Scalar>
PolyMap<Scalar> multiplication_map(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  PolyMap<Scalar> f = PolyMap<Scalar>::zero(2, n);
  for (Index i = 0; i < n; ++i) f.coords.middleCols(i * n, n) = alg.left(i);
  return f;
}

/// (x, y) -> [x, y]
template <typename Scalar>
PolyMap<Scalar> commutator_map(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  PolyMap<Scalar> f = PolyMap<Scalar>::zero(2, n);
  for (Index i = 0; i < n; ++i) f.coords.middleCols(i * n, n) = alg.left(i) - alg.right(i);
  return f;
}

/// (x, y, z) -> (x, y, z)
template <typename Scalar>
PolyMap<Scalar> associator_map(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  PolyMap<Scalar> f = PolyMap<Scalar>::zero(3, n);
  for (Index c = 0; c < f.coords.cols(); ++c) {
    const std::vector<Index> idx = f.indices(c);
    f.coords.col(c) = associator(alg, basis_element<Scalar>(n, idx[0]), basis_element<Scalar>(n, idx[1]),
                                 basis_element<Scalar>(n, idx[2]));
  }
  return f;
}

enum class SymmetryKind { symmetric, skew };

/// Coordinate test: invariance (or sign change) under every adjacent
/// transposition of argument slots, which generate the symmetric group.
template <typename Scalar>
bool poly_symmetry(const PolyMap<Scalar>& f, SymmetryKind kind) {
  for (Index s = 0; s + 1 < f.arity; ++s)
    for (Index c = 0; c < f.coords.cols(); ++c) {
      std::vector<Index> idx = f.indices(c);
      std::swap(idx[static_cast<std::size_t>(s)], idx[static_cast<std::size_t>(s + 1)]);
      const Index swapped = f.column(idx);
      if (swapped < c) continue;
      for (Index j = 0; j < f.dim; ++j) {
        const Scalar& a = f.coords(j, c);
        const Scalar& b = f.coords(j, swapped);
        if (kind == SymmetryKind::symmetric ? a != b : a != -b) return false;
      }
    }
  return true;
}

/// f'^j_{i1..im} = Q^j_c P^{a1}_{i1} ... P^{am}_{im} f^c_{a1..am}
template <typename Scalar>
PolyMap<Scalar> poly_change_basis(const PolyMap<Scalar>& f, const BasisChange<Scalar>& change) {
  require_dim(change.dim(), f.dim, "poly_change_basis");
  const Index n = f.dim;
  const Matrix<Scalar>& p = change.forward();
  Matrix<Scalar> cur = f.coords;
  // Contract one argument slot at a time.
  for (Index s = 0; s < f.arity; ++s) {
    const Index stride = int_pow(n, f.arity - 1 - s);
    Matrix<Scalar> next = Matrix<Scalar>::Zero(n, cur.cols());
    for (Index c = 0; c < cur.cols(); ++c) {
      const Index digit = (c / stride) % n;
      const Index base = c - digit * stride;
      for (Index a = 0; a < n; ++a) {
        const Scalar& w = p(a, digit);
        if (w == Scalar(0)) continue;
        next.col(c) += w * cur.col(base + a * stride);
      }
    }
    cur = std::move(next);
  }
  return {f.arity, n, change.inverse() * cur};
}

// ---------------------------------------------------------------------------
// Permutation-tensor representation

template <typename Scalar>
struct PermTerm {
  std::vector<Element<Scalar>> coefficients;  // a0 .. am
  std::vector<Index> permutation;             // slot s takes argument permutation[s]
  std::vector<Index> generators;              // slot s applies generator generators[s]
};

template <typename Scalar>
struct PermTensorRep {
  Index arity = 1;
  Index dim = 1;
  std::vector<PermTerm<Scalar>> terms;
};

class RepresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

template <typename Scalar>
void validate_rep(const Algebra<Scalar>& alg, const PermTensorRep<Scalar>& rep,
                  std::span<const LinearMap<Scalar>> gens) {
  require_dim(rep.dim, alg.dim(), "permutation-tensor representation");
  const auto m = static_cast<std::size_t>(rep.arity);
  for (const auto& g : gens) {
    require_dim(g.source_dim(), alg.dim(), "generator source");
    require_dim(g.target_dim(), alg.dim(), "generator target");
  }
  for (const auto& term : rep.terms) {
    if (term.coefficients.size() != m + 1)
      throw RepresentationError("term needs " + std::to_string(m + 1) + " coefficients");
    for (const auto& a : term.coefficients) require_dim(a.size(), alg.dim(), "term coefficient");
    if (term.permutation.size() != m || term.generators.size() != m)
      throw RepresentationError("term permutation and generator lists must have arity entries");
    std::vector<bool> hit(m, false);
    for (Index v : term.permutation) {
      if (v < 0 || static_cast<std::size_t>(v) >= m || hit[static_cast<std::size_t>(v)])
        throw RepresentationError("term permutation is not a bijection");
      hit[static_cast<std::size_t>(v)] = true;
    }
    for (Index k : term.generators)
      if (k < 0 || static_cast<std::size_t>(k) >= gens.size())
        throw RepresentationError("generator index " + std::to_string(k) + " out of range");
  }
}

/// Product of the factor sequence, grouped ((f0 f1) f2)... for the left
/// convention and f0 (f1 (f2 ...)) for the right one.
template <typename Scalar>
Element<Scalar> fold_product(const Algebra<Scalar>& alg, const std::vector<Element<Scalar>>& factors, Convention conv) {
  if (conv == Convention::left) {
    Element<Scalar> acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(alg, acc, factors[i]);
    return acc;
  }
  Element<Scalar> acc = factors.back();
  for (std::size_t i = factors.size() - 1; i-- > 0;) acc = mul(alg, factors[i], acc);
  return acc;
}

template <typename Scalar>
Element<Scalar> eval_term(const Algebra<Scalar>& alg, const PermTerm<Scalar>& term,
                          std::span<const LinearMap<Scalar>> gens, std::span<const Element<Scalar>> xs,
                          Convention conv) {
  std::vector<Element<Scalar>> factors;
  factors.push_back(term.coefficients[0]);
  for (std::size_t s = 0; s < term.permutation.size(); ++s) {
    const auto& g = gens[static_cast<std::size_t>(term.generators[s])];
    factors.push_back(apply_map(g, xs[static_cast<std::size_t>(term.permutation[s])]));
    factors.push_back(term.coefficients[s + 1]);
  }
  return fold_product(alg, factors, conv);
}

}  // namespace detail

template <typename Scalar>
Element<Scalar> perm_rep_eval(const Algebra<Scalar>& alg, const PermTensorRep<Scalar>& rep,
                              std::span<const LinearMap<Scalar>> gens, std::span<const Element<Scalar>> xs,
                              Convention conv = Convention::left) {
  detail::validate_rep(alg, rep, gens);
  require_dim(static_cast<Index>(xs.size()), rep.arity, "perm_rep_eval: argument count");
  for (const auto& x : xs) require_dim(x.size(), alg.dim(), "perm_rep_eval: argument");
  Element<Scalar> out = Element<Scalar>::Zero(alg.dim());
  for (const auto& term : rep.terms) out += detail::eval_term(alg, term, gens, xs, conv);
  return out;
}

template <typename Scalar>
Element<Scalar> perm_rep_eval(const Algebra<Scalar>& alg, const PermTensorRep<Scalar>& rep,
                              const GeneratorSet<Scalar>& gens, const std::vector<Element<Scalar>>& xs,
                              Convention conv = Convention::left) {
  return perm_rep_eval(alg, rep, std::span<const LinearMap<Scalar>>(gens.generators),
                       std::span<const Element<Scalar>>(xs), conv);
}

/// Coordinates by evaluation on every basis tuple.
template <typename Scalar>
PolyMap<Scalar> perm_rep_to_coords(const Algebra<Scalar>& alg, const PermTensorRep<Scalar>& rep,
                                   std::span<const LinearMap<Scalar>> gens, Convention conv = Convention::left) {
  detail::validate_rep(alg, rep, gens);
  const Index n = alg.dim();
  PolyMap<Scalar> f = PolyMap<Scalar>::zero(rep.arity, n);
  std::vector<Element<Scalar>> xs(static_cast<std::size_t>(rep.arity));
  for (Index c = 0; c < f.coords.cols(); ++c) {
    const std::vector<Index> idx = f.indices(c);
    for (std::size_t s = 0; s < idx.size(); ++s) xs[s] = basis_element<Scalar>(n, idx[s]);
    for (const auto& term : rep.terms)
      f.coords.col(c) += detail::eval_term(alg, term, gens, std::span<const Element<Scalar>>(xs), conv);
  }
  return f;
}

template <typename Scalar>
PolyMap<Scalar> perm_rep_to_coords(const Algebra<Scalar>& alg, const PermTensorRep<Scalar>& rep,
                                   const GeneratorSet<Scalar>& gens, Convention conv = Convention::left) {
  return perm_rep_to_coords(alg, rep, std::span<const LinearMap<Scalar>>(gens.generators), conv);
}

/// Existence check over a fixed term shape: keeps every term's permutation,
/// generators and coefficients a1..am, and solves for the leading
/// coefficients a0 (which enter linearly) so that the representation equals
/// f. The unknown vector stacks a0 of term 0, term 1, ...
template <typename Scalar>
SolveOutcome<Vector<Scalar>> solve_leading_coefficients(const Algebra<Scalar>& alg, const PolyMap<Scalar>& f,
                                                        const PermTensorRep<Scalar>& shape,
                                                        std::span<const LinearMap<Scalar>> gens,
                                                        Convention conv = Convention::left) {
  detail::validate_rep(alg, shape, gens);
  require_dim(f.arity, shape.arity, "solve_leading_coefficients: arity");
  require_dim(f.dim, alg.dim(), "solve_leading_coefficients: dimension");
  const Index n = alg.dim();
  const auto terms = static_cast<Index>(shape.terms.size());
  Matrix<Scalar> system(f.coords.size(), terms * n);
  for (Index t = 0; t < terms; ++t)
    for (Index b = 0; b < n; ++b) {
      PermTensorRep<Scalar> single{shape.arity, shape.dim, {shape.terms[static_cast<std::size_t>(t)]}};
      single.terms[0].coefficients[0] = basis_element<Scalar>(n, b);
      system.col(t * n + b) = vectorize(perm_rep_to_coords(alg, single, gens, conv).coords);
    }
  return linear_solve(system, vectorize(f.coords));
}

}  // namespace salg
