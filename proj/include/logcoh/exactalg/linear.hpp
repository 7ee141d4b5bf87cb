#pragma once

#include "logcoh/exactalg/scalar.hpp"

#include <Eigen/Core>

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace logcoh {

using Index = Eigen::Index;

template <class S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using Vector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

/// Sparse vector as (index, coefficient) pairs sorted by index, no zeros.
template <class S>
using SparseVec = std::vector<std::pair<Index, S>>;

class ContainmentViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <class S>
struct RrefResult {
  Index rank = 0;
  std::vector<Index> pivot_columns;
  Matrix<S> reduced;
};

/// Reduced row-echelon form. Pivot search takes the first column with a
/// nonzero entry at or below the current row, and within it the smallest row
/// index, so results are reproducible.
template <class S>
RrefResult<S> rref(Matrix<S> m) {
  RrefResult<S> out;
  const Index rows = m.rows(), cols = m.cols();
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index pivot = -1;
    for (Index r = row; r < rows; ++r)
      if (!is_zero(m(r, col))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != row) m.row(pivot).swap(m.row(row));
    const S inv = S(1) / m(row, col);
    for (Index c = col; c < cols; ++c)
      if (!is_zero(m(row, c))) m(row, c) *= inv;
    for (Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const S f = m(r, col);
      for (Index c = col; c < cols; ++c)
        if (!is_zero(m(row, c))) m(r, c) -= f * m(row, c);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

template <class S>
Index rank(const Matrix<S>& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return rref<S>(m).rank;
}

/// Basis of {v : m v = 0}, one vector per column, in free-variable order.
template <class S>
Matrix<S> kernel_basis(const Matrix<S>& m) {
  const Index cols = m.cols();
  if (m.rows() == 0) return Matrix<S>::Identity(cols, cols);
  const auto r = rref<S>(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index p : r.pivot_columns) is_pivot[static_cast<std::size_t>(p)] = true;
  Matrix<S> basis = Matrix<S>::Zero(cols, cols - r.rank);
  Index out = 0;
  for (Index free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    basis(free, out) = S(1);
    for (Index i = 0; i < r.rank; ++i) {
      const S& c = r.reduced(i, free);
      if (!is_zero(c)) basis(r.pivot_columns[static_cast<std::size_t>(i)], out) = -c;
    }
    ++out;
  }
  return basis;
}

/// Columns of m forming a basis of its column space (earliest columns win).
template <class S>
Matrix<S> column_basis(const Matrix<S>& m) {
  if (m.cols() == 0 || m.rows() == 0) return Matrix<S>(m.rows(), 0);
  const auto r = rref<S>(m);
  Matrix<S> out(m.rows(), r.rank);
  for (Index i = 0; i < r.rank; ++i) out.col(i) = m.col(r.pivot_columns[static_cast<std::size_t>(i)]);
  return out;
}

template <class S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() == 0) return b;
  if (b.cols() == 0) return a;
  Matrix<S> out(a.rows(), a.cols() + b.cols());
  out << a, b;
  return out;
}

/// Some x with a x = b, or nullopt when b is outside the column space.
template <class S>
std::optional<Vector<S>> solve(const Matrix<S>& a, const Vector<S>& b) {
  Matrix<S> aug(a.rows(), a.cols() + 1);
  if (a.cols() > 0) aug.leftCols(a.cols()) = a;
  aug.col(a.cols()) = b;
  const auto r = rref<S>(aug);
  Vector<S> x = Vector<S>::Zero(a.cols());
  for (Index i = 0; i < r.rank; ++i) {
    const Index p = r.pivot_columns[static_cast<std::size_t>(i)];
    if (p == a.cols()) return std::nullopt;
    x(p) = r.reduced(i, a.cols());
  }
  return x;
}

/// Exact test; Eigen's isZero compares against a precision.
template <class Derived>
bool all_zero(const Eigen::DenseBase<Derived>& m) {
  return (m.derived().array() == typename Derived::Scalar(0)).all();
}

template <class S>
bool in_span(const Matrix<S>& spanning, const Vector<S>& v) {
  if (all_zero(v)) return true;
  if (spanning.cols() == 0) return false;
  return rank<S>(hstack<S>(spanning, Matrix<S>(v))) == rank<S>(spanning);
}

/// True when span(a) == span(b) inside a common ambient space.
template <class S>
bool same_span(const Matrix<S>& a, const Matrix<S>& b) {
  const Index ra = rank<S>(a), rb = rank<S>(b);
  return ra == rb && rank<S>(hstack<S>(a, b)) == ra;
}

/// Left inverse L of a full-column-rank matrix a (L a = I).
template <class S>
Matrix<S> left_inverse(const Matrix<S>& a) {
  const Index n = a.rows(), k = a.cols();
  Matrix<S> aug(n, k + n);
  aug.leftCols(k) = a;
  aug.rightCols(n) = Matrix<S>::Identity(n, n);
  const auto r = rref<S>(aug);
  for (Index i = 0; i < k; ++i)
    if (i >= r.rank || r.pivot_columns[static_cast<std::size_t>(i)] != i)
      throw std::invalid_argument("left_inverse: columns are dependent");
  return r.reduced.block(0, k, k, n);
}

/// Basis of span(Z)/span(B) with explicit representatives.
///
/// `representatives` holds ambient vectors whose classes form a basis of the
/// quotient; `projection` (dim x ambient) sends any vector of span(Z) to its
/// coordinates in that basis and kills span(B).
template <class S>
struct SubquotientBasis {
  Index ambient_dim = 0;
  Matrix<S> representatives;
  Matrix<S> projection;
  Matrix<S> denominator;  // basis of span(B)

  Index dim() const { return representatives.cols(); }

  /// Coordinates of z (assumed in span(Z)) in the quotient basis.
  Vector<S> project(const Vector<S>& z) const { return projection * z; }
};

template <class S>
SubquotientBasis<S> subquotient(const Matrix<S>& z, const Matrix<S>& b) {
  const Index n = z.rows();
  if (b.cols() > 0 && b.rows() != n) throw std::invalid_argument("subquotient: ambient mismatch");
  SubquotientBasis<S> out;
  out.ambient_dim = n;
  const Matrix<S> bb = b.cols() > 0 ? column_basis<S>(b) : Matrix<S>(n, 0);
  const Matrix<S> zz = z.cols() > 0 ? column_basis<S>(z) : Matrix<S>(n, 0);
  if (bb.cols() > 0 && rank<S>(hstack<S>(zz, bb)) != zz.cols())
    throw ContainmentViolation("subquotient: span(B) is not contained in span(Z)");
  // Extend a basis of span(B) greedily by the columns of Z in order.
  const Matrix<S> full = column_basis<S>(hstack<S>(bb, z.cols() > 0 ? z : Matrix<S>(n, 0)));
  const Index qdim = full.cols() - bb.cols();
  out.denominator = bb;
  out.representatives = full.rightCols(qdim);
  if (full.cols() == 0) {
    out.projection = Matrix<S>(0, n);
  } else {
    out.projection = left_inverse<S>(full).bottomRows(qdim);
  }
  return out;
}

template <class S>
Vector<S> to_dense(const SparseVec<S>& v, Index n) {
  Vector<S> out = Vector<S>::Zero(n);
  for (const auto& [i, c] : v) out(i) += c;
  return out;
}

template <class S>
SparseVec<S> to_sparse(const Vector<S>& v) {
  SparseVec<S> out;
  for (Index i = 0; i < v.size(); ++i)
    if (!is_zero(v(i))) out.emplace_back(i, v(i));
  return out;
}

}  // namespace logcoh
