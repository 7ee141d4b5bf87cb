#pragma once

#include "logcoh/exactalg/linear.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace logcoh {

class InvalidComplex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ProductNotFiltered : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ComplexBasis {
  std::string name;
  int degree = 0;
  int filt = 0;
};

/// Finite cochain complex with a descending filtration
/// F^p = span{basis elements with filt >= p}.
///
/// d(r, c) is the coefficient of basis element r in d(basis element c). The
/// optional product stores b_i * b_j at mult[i * n + j].
template <class S>
struct FilteredComplex {
  std::vector<ComplexBasis> basis;
  Matrix<S> d;
  std::optional<std::vector<SparseVec<S>>> mult;

  Index dim() const { return static_cast<Index>(basis.size()); }
  int degree(Index i) const { return basis[static_cast<std::size_t>(i)].degree; }
  int filt(Index i) const { return basis[static_cast<std::size_t>(i)].filt; }
  int min_filt() const {
    int m = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) m = i ? std::min(m, basis[i].filt) : basis[i].filt;
    return m;
  }
  int max_filt() const {
    int m = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) m = i ? std::max(m, basis[i].filt) : basis[i].filt;
    return m;
  }
  int min_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) m = i ? std::min(m, basis[i].degree) : basis[i].degree;
    return m;
  }
  int max_degree() const {
    int m = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) m = i ? std::max(m, basis[i].degree) : basis[i].degree;
    return m;
  }
  /// Pages are constant from r = spread + 1 on.
  int spread() const { return basis.empty() ? 0 : max_filt() - min_filt(); }

  const SparseVec<S>& product(Index i, Index j) const { return (*mult)[static_cast<std::size_t>(i * dim() + j)]; }

  Vector<S> multiply(const Vector<S>& x, const Vector<S>& y) const {
    Vector<S> out = Vector<S>::Zero(dim());
    for (Index i = 0; i < dim(); ++i) {
      if (is_zero(x(i))) continue;
      for (Index j = 0; j < dim(); ++j) {
        if (is_zero(y(j))) continue;
        const S c = x(i) * y(j);
        for (const auto& [k, s] : product(i, j)) out(k) += c * s;
      }
    }
    return out;
  }
};

/// Throws InvalidComplex (shape, degree, d^2, filtration) or
/// ProductNotFiltered (product filtration, degree, chain-level Leibniz).
template <class S>
void validate_complex(const FilteredComplex<S>& c) {
  const Index n = c.dim();
  if (c.d.rows() != n || c.d.cols() != n) throw InvalidComplex("differential is not square of the basis size");
  for (Index col = 0; col < n; ++col)
    for (Index row = 0; row < n; ++row) {
      if (is_zero(c.d(row, col))) continue;
      if (c.degree(row) != c.degree(col) + 1)
        throw InvalidComplex("d(" + c.basis[col].name + ") has a term " + c.basis[row].name + " of the wrong degree");
      if (c.filt(row) < c.filt(col))
        throw InvalidComplex("d(" + c.basis[col].name + ") leaves F^" + std::to_string(c.filt(col)));
    }
  if (n > 0 && !all_zero(Matrix<S>(c.d * c.d))) throw InvalidComplex("d^2 != 0");
  if (!c.mult) return;
  if (static_cast<Index>(c.mult->size()) != n * n) throw ProductNotFiltered("product table has the wrong size");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (const auto& [k, s] : c.product(i, j)) {
        if (is_zero(s)) continue;
        if (k < 0 || k >= n) throw ProductNotFiltered("product index out of range");
        if (c.degree(k) != c.degree(i) + c.degree(j))
          throw ProductNotFiltered("product " + c.basis[i].name + "*" + c.basis[j].name + " is not degree-additive");
        if (c.filt(k) < c.filt(i) + c.filt(j))
          throw ProductNotFiltered("product " + c.basis[i].name + "*" + c.basis[j].name + " lowers filtration");
      }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<S> ei = Vector<S>::Unit(n, i), ej = Vector<S>::Unit(n, j);
      const Vector<S> lhs = c.d * c.multiply(ei, ej);
      Vector<S> rhs = c.multiply(c.d.col(i), ej);
      const Vector<S> second = c.multiply(ei, c.d.col(j));
      if (c.degree(i) % 2 != 0)
        rhs -= second;
      else
        rhs += second;
      if (lhs != rhs)
        throw ProductNotFiltered("Leibniz rule fails on " + c.basis[i].name + "," + c.basis[j].name);
    }
}

}  // namespace logcoh
