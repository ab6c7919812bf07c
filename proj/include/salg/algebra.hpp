#pragma once

// Free finite-dimensional algebras given by structure constants.
//
// The product of basis vectors is e_i e_j = C^k_ij e_k, so by bilinearity
// (ab)^k = a^i b^j C^k_ij. The table is stored as left multiplication
// matrices L_i with L_i(k, j) = C^k_ij together with the right multiplication
// matrices R_j with R_j(k, i) = C^k_ij, so that e_i x = L_i x and x e_j = R_j x.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "salg/dense.hpp"
#include "salg/linear_solve.hpp"

namespace salg {

class AlgebraError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One sparse entry of a structure-constant table: e_i e_j gains value * e_k.
template <typename Scalar>
struct StructureConstant {
  Index i = 0;
  Index j = 0;
  Index k = 0;
  Scalar value{};
};

template <typename Scalar>
class Algebra {
 public:
  const std::string& name() const { return name_; }
  Index dim() const { return static_cast<Index>(left_.size()); }

  /// C^k_ij
  const Scalar& constant(Index i, Index j, Index k) const { return left_[static_cast<std::size_t>(i)](k, j); }

  /// Matrix of x -> e_i x.
  const Matrix<Scalar>& left(Index i) const { return left_[static_cast<std::size_t>(i)]; }
  /// Matrix of x -> x e_j.
  const Matrix<Scalar>& right(Index j) const { return right_[static_cast<std::size_t>(j)]; }

  /// Coordinates of e_i e_j.
  Element<Scalar> basis_product(Index i, Index j) const { return left(i).col(j); }

  const std::optional<Element<Scalar>>& unit() const { return unit_; }

  /// Optional display labels of the basis vectors (empty when absent).
  const std::vector<std::string>& labels() const { return labels_; }

  /// Nonzero entries sorted by (i, j, k).
  std::vector<StructureConstant<Scalar>> entries() const {
    std::vector<StructureConstant<Scalar>> out;
    for (Index i = 0; i < dim(); ++i)
      for (Index j = 0; j < dim(); ++j)
        for (Index k = 0; k < dim(); ++k)
          if (constant(i, j, k) != Scalar(0)) out.push_back({i, j, k, constant(i, j, k)});
    return out;
  }

  /// Builds an algebra from left multiplication matrices; the unit is detected.
  static Algebra from_left_matrices(std::string name, std::vector<Matrix<Scalar>> left,
                                    std::vector<std::string> labels = {});

  /// Same structure constants; name and labels are display data.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    if (a.dim() != b.dim()) return false;
    for (Index i = 0; i < a.dim(); ++i)
      if (!exactly_equal(a.left(i), b.left(i))) return false;
    return true;
  }
  friend bool operator!=(const Algebra& a, const Algebra& b) { return !(a == b); }

 private:
  std::string name_;
  std::vector<Matrix<Scalar>> left_;
  std::vector<Matrix<Scalar>> right_;
  std::optional<Element<Scalar>> unit_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Products

template <typename Scalar>
void require_element(const Algebra<Scalar>& alg, const Element<Scalar>& a, const char* what) {
  require_dim(a.size(), alg.dim(), what);
}

template <typename Scalar>
Element<Scalar> mul(const Algebra<Scalar>& alg, const Element<Scalar>& a, const Element<Scalar>& b) {
  require_element(alg, a, "mul: left factor");
  require_element(alg, b, "mul: right factor");
  Element<Scalar> out = Element<Scalar>::Zero(alg.dim());
  for (Index i = 0; i < alg.dim(); ++i) {
    if (a(i) == Scalar(0)) continue;
    for (Index j = 0; j < alg.dim(); ++j) {
      if (b(j) == Scalar(0)) continue;
      const Scalar ab = a(i) * b(j);
      for (Index k = 0; k < alg.dim(); ++k) {
        const Scalar& c = alg.constant(i, j, k);
        if (c != Scalar(0)) out(k) += ab * c;
      }
    }
  }
  return out;
}

/// Matrix of x -> a x.
template <typename Scalar>
Matrix<Scalar> left_multiplication(const Algebra<Scalar>& alg, const Element<Scalar>& a) {
  require_element(alg, a, "left_multiplication");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(alg.dim(), alg.dim());
  for (Index i = 0; i < alg.dim(); ++i)
    if (a(i) != Scalar(0)) out += a(i) * alg.left(i);
  return out;
}

/// Matrix of x -> x b.
template <typename Scalar>
Matrix<Scalar> right_multiplication(const Algebra<Scalar>& alg, const Element<Scalar>& b) {
  require_element(alg, b, "right_multiplication");
  Matrix<Scalar> out = Matrix<Scalar>::Zero(alg.dim(), alg.dim());
  for (Index j = 0; j < alg.dim(); ++j)
    if (b(j) != Scalar(0)) out += b(j) * alg.right(j);
  return out;
}

/// [a, b] = ab - ba
template <typename Scalar>
Element<Scalar> commutator(const Algebra<Scalar>& alg, const Element<Scalar>& a, const Element<Scalar>& b) {
  return mul(alg, a, b) - mul(alg, b, a);
}

/// (a, b, c) = (ab)c - a(bc)
template <typename Scalar>
Element<Scalar> associator(const Algebra<Scalar>& alg, const Element<Scalar>& a, const Element<Scalar>& b,
                           const Element<Scalar>& c) {
  return mul(alg, mul(alg, a, b), c) - mul(alg, a, mul(alg, b, c));
}

/// a(b,c,d) - (ab,c,d) + (a,bc,d) - (a,b,cd) + (a,b,c)d, which vanishes in
/// every algebra (Teichmüller identity).
template <typename Scalar>
Element<Scalar> teichmuller_defect(const Algebra<Scalar>& alg, const Element<Scalar>& a, const Element<Scalar>& b,
                                   const Element<Scalar>& c, const Element<Scalar>& d) {
  return mul(alg, a, associator(alg, b, c, d)) - associator(alg, mul(alg, a, b), c, d) +
         associator(alg, a, mul(alg, b, c), d) - associator(alg, a, b, mul(alg, c, d)) +
         mul(alg, associator(alg, a, b, c), d);
}

// ---------------------------------------------------------------------------
// Properties. Multilinearity reduces each universal statement to basis tuples.

template <typename Scalar>
bool is_commutative(const Algebra<Scalar>& alg) {
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = i + 1; j < alg.dim(); ++j)
      for (Index k = 0; k < alg.dim(); ++k)
        if (alg.constant(i, j, k) != alg.constant(j, i, k)) return false;
  return true;
}

template <typename Scalar>
bool is_associative(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      // (e_i e_j) e_k - e_i (e_j e_k) for all k at once: R_k (e_i e_j) vs L_i R_k e_j
      const Element<Scalar> ij = alg.basis_product(i, j);
      for (Index k = 0; k < n; ++k) {
        const Element<Scalar> lhs = alg.right(k) * ij;
        const Element<Scalar> rhs = alg.left(i) * alg.basis_product(j, k);
        if (!exactly_equal(lhs, rhs)) return false;
      }
    }
  return true;
}

/// The two-sided unit, if any. Solves u^i C^k_ij = delta^k_j and
/// u^i C^k_ji = delta^k_j together.
template <typename Scalar>
std::optional<Element<Scalar>> find_unit(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  Matrix<Scalar> system(2 * n * n, n);
  Vector<Scalar> rhs = Vector<Scalar>::Zero(2 * n * n);
  for (Index j = 0; j < n; ++j)
    for (Index k = 0; k < n; ++k) {
      const Index row = j * n + k;
      for (Index i = 0; i < n; ++i) {
        system(row, i) = alg.constant(i, j, k);
        system(n * n + row, i) = alg.constant(j, i, k);
      }
      if (j == k) {
        rhs(row) = Scalar(1);
        rhs(n * n + row) = Scalar(1);
      }
    }
  const SolveOutcome<Vector<Scalar>> outcome = linear_solve(system, rhs);
  if (std::holds_alternative<Inconsistent>(outcome)) return std::nullopt;
  // Two units u, u' satisfy u = uu' = u', so a consistent system has one solution.
  Element<Scalar> u = std::holds_alternative<Unique<Vector<Scalar>>>(outcome)
                          ? std::get<Unique<Vector<Scalar>>>(outcome).solution
                          : std::get<Affine<Vector<Scalar>>>(outcome).particular;
  return u;
}

template <typename Scalar>
Algebra<Scalar> Algebra<Scalar>::from_left_matrices(std::string name, std::vector<Matrix<Scalar>> left,
                                                    std::vector<std::string> labels) {
  const auto n = static_cast<Index>(left.size());
  if (n == 0) throw AlgebraError("algebra dimension must be positive");
  for (const auto& l : left)
    if (l.rows() != n || l.cols() != n) throw AlgebraError("left multiplication matrices must be n x n");
  if (!labels.empty() && static_cast<Index>(labels.size()) != n)
    throw AlgebraError("expected " + std::to_string(n) + " basis labels, got " + std::to_string(labels.size()));

  Algebra alg;
  alg.name_ = std::move(name);
  alg.left_ = std::move(left);
  alg.labels_ = std::move(labels);
  alg.right_.assign(static_cast<std::size_t>(n), Matrix<Scalar>::Zero(n, n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) alg.right_[static_cast<std::size_t>(j)].col(i) = alg.left(i).col(j);
  alg.unit_ = find_unit(alg);
  return alg;
}

template <typename Scalar>
Algebra<Scalar> make_algebra(std::string name, Index dim, const std::vector<StructureConstant<Scalar>>& constants,
                             std::vector<std::string> labels = {}) {
  if (dim <= 0) throw AlgebraError("algebra dimension must be positive");
  std::vector<Matrix<Scalar>> left(static_cast<std::size_t>(dim), Matrix<Scalar>::Zero(dim, dim));
  std::vector<bool> seen(static_cast<std::size_t>(dim * dim * dim), false);
  for (const auto& c : constants) {
    const std::string triple =
        "(" + std::to_string(c.i) + "," + std::to_string(c.j) + "," + std::to_string(c.k) + ")";
    if (c.i < 0 || c.j < 0 || c.k < 0 || c.i >= dim || c.j >= dim || c.k >= dim)
      throw AlgebraError("structure constant index out of range " + triple);
    const auto slot = static_cast<std::size_t>((c.i * dim + c.j) * dim + c.k);
    if (seen[slot]) throw AlgebraError("duplicate structure constant " + triple);
    seen[slot] = true;
    left[static_cast<std::size_t>(c.i)](c.k, c.j) = c.value;
  }
  return Algebra<Scalar>::from_left_matrices(std::move(name), std::move(left), std::move(labels));
}

/// The algebra with product a o b = b a.
template <typename Scalar>
Algebra<Scalar> opposite(const Algebra<Scalar>& alg) {
  std::vector<Matrix<Scalar>> left;
  for (Index i = 0; i < alg.dim(); ++i) left.push_back(alg.right(i));
  return Algebra<Scalar>::from_left_matrices(alg.name() + "_op", std::move(left), alg.labels());
}

// ---------------------------------------------------------------------------
// Nucleus and center

namespace detail {

/// Columns of `basis` span the candidates; keeps the combinations that `image`
/// sends to zero. Returns false once nothing is left.
template <typename Scalar>
bool restrict_to_kernel(Matrix<Scalar>& basis, const Matrix<Scalar>& image) {
  if (is_zero(image)) return basis.cols() > 0;
  basis = basis * nullspace(image);
  return basis.cols() > 0;
}

}  // namespace detail

namespace detail {

/// Keeps the combinations of the columns of `basis` lying in the nucleus.
/// Each condition on a basis pair is linear in a; the candidates shrink one
/// condition at a time, so later conditions only act on a few columns.
template <typename Scalar>
Matrix<Scalar> nucleus_within(const Algebra<Scalar>& alg, Matrix<Scalar> basis) {
  const Index n = alg.dim();
  std::vector<Matrix<Scalar>> la, ra;  // L_k A and R_k A for the current candidates A
  auto refresh = [&] {
    la.clear();
    ra.clear();
    for (Index k = 0; k < n; ++k) {
      la.push_back(alg.left(k) * basis);
      ra.push_back(alg.right(k) * basis);
    }
  };
  auto combine = [&](const std::vector<Matrix<Scalar>>& parts, const Element<Scalar>& c) {
    Matrix<Scalar> out = Matrix<Scalar>::Zero(n, basis.cols());
    for (Index k = 0; k < n; ++k)
      if (c(k) != Scalar(0)) out += c(k) * parts[static_cast<std::size_t>(k)];
    return out;
  };
  auto apply = [&](const Matrix<Scalar>& image) {
    const Index before = basis.cols();
    if (!restrict_to_kernel(basis, image)) return false;
    if (basis.cols() != before) refresh();
    return true;
  };
  if (basis.cols() == 0) return basis;
  refresh();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Element<Scalar> ij = alg.basis_product(i, j);
      const auto si = static_cast<std::size_t>(i), sj = static_cast<std::size_t>(j);
      // (a, e_i, e_j) = (a e_i) e_j - a (e_i e_j)
      if (!apply(alg.right(j) * ra[si] - combine(ra, ij))) return basis;
      // (e_i, a, e_j) = (e_i a) e_j - e_i (a e_j)
      if (!apply(alg.right(j) * la[si] - alg.left(i) * ra[sj])) return basis;
      // (e_i, e_j, a) = (e_i e_j) a - e_i (e_j a)
      if (!apply(combine(la, ij) - alg.left(i) * la[sj])) return basis;
    }
  return basis;
}

}  // namespace detail

/// Elements a with (a,x,y) = (x,a,y) = (x,y,a) = 0 for all x, y.
template <typename Scalar>
Subspace<Scalar> nucleus(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  const Matrix<Scalar> basis = detail::nucleus_within(alg, Matrix<Scalar>(Matrix<Scalar>::Identity(n, n)));
  return basis.cols() ? Subspace<Scalar>::from_columns(basis) : Subspace<Scalar>(n);
}

/// Nucleus elements that also commute with every element. The commutation
/// conditions go first since they usually cut the candidates down the most.
template <typename Scalar>
Subspace<Scalar> center(const Algebra<Scalar>& alg) {
  const Index n = alg.dim();
  Matrix<Scalar> basis = Matrix<Scalar>::Identity(n, n);
  for (Index i = 0; i < n; ++i)
    if (!detail::restrict_to_kernel(basis, Matrix<Scalar>((alg.right(i) - alg.left(i)) * basis)))
      return Subspace<Scalar>(n);
  basis = detail::nucleus_within(alg, std::move(basis));
  return basis.cols() ? Subspace<Scalar>::from_columns(basis) : Subspace<Scalar>(n);
}

// ---------------------------------------------------------------------------
// Change of basis

/// New basis e'_i = P^j_i e_j (column i of `forward` holds e'_i in old
/// coordinates) together with Q = P^-1.
template <typename Scalar>
class BasisChange {
 public:
  explicit BasisChange(Matrix<Scalar> forward) : forward_(std::move(forward)) {
    std::optional<Matrix<Scalar>> inv = try_inverse(forward_);
    if (!inv) throw AlgebraError("change of basis matrix is singular");
    inverse_ = std::move(*inv);
  }

  Index dim() const { return forward_.rows(); }
  const Matrix<Scalar>& forward() const { return forward_; }
  const Matrix<Scalar>& inverse() const { return inverse_; }

  /// Old coordinates to new: a'^i = Q^i_j a^j.
  Element<Scalar> to_new(const Element<Scalar>& a) const {
    require_dim(a.size(), dim(), "BasisChange::to_new");
    return inverse_ * a;
  }
  Element<Scalar> to_old(const Element<Scalar>& a) const {
    require_dim(a.size(), dim(), "BasisChange::to_old");
    return forward_ * a;
  }

  BasisChange reversed() const { return BasisChange(inverse_, forward_); }

 private:
  BasisChange(Matrix<Scalar> forward, Matrix<Scalar> inverse)
      : forward_(std::move(forward)), inverse_(std::move(inverse)) {}

  Matrix<Scalar> forward_;
  Matrix<Scalar> inverse_;
};

template <typename Scalar>
Element<Scalar> element_change_basis(const Element<Scalar>& a, const BasisChange<Scalar>& change) {
  return change.to_new(a);
}

/// Structure constants in the new basis: C'^k_ij = Q^k_c P^a_i P^b_j C^c_ab.
template <typename Scalar>
Algebra<Scalar> change_basis(const Algebra<Scalar>& alg, const BasisChange<Scalar>& change) {
  const Index n = alg.dim();
  require_dim(change.dim(), n, "change_basis");
  const Matrix<Scalar>& p = change.forward();
  // L'_i = Q (sum_a P^a_i L_a) P
  std::vector<Matrix<Scalar>> left;
  for (Index i = 0; i < n; ++i) {
    Matrix<Scalar> li = Matrix<Scalar>::Zero(n, n);
    for (Index a = 0; a < n; ++a)
      if (p(a, i) != Scalar(0)) li += p(a, i) * alg.left(a);
    left.push_back(change.inverse() * (li * p));
  }
  return Algebra<Scalar>::from_left_matrices(alg.name(), std::move(left));
}

template <typename Scalar>
Algebra<Scalar> change_basis(const Algebra<Scalar>& alg, const Matrix<Scalar>& forward) {
  return change_basis(alg, BasisChange<Scalar>(forward));
}

}  // namespace salg
