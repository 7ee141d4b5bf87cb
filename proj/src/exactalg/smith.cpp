#include "logcoh/exactalg/smith.hpp"

#include <stdexcept>

namespace logcoh {
namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void swap_rows(IntMatrix& a, Index i, Index j) {
  if (i != j) a.row(i).swap(a.row(j));
}
void swap_cols(IntMatrix& a, Index i, Index j) {
  if (i != j) a.col(i).swap(a.col(j));
}
// row_i += f * row_j
void add_row(IntMatrix& a, Index i, Index j, const Integer& f) {
  for (Index c = 0; c < a.cols(); ++c) a(i, c) += f * a(j, c);
}
void add_col(IntMatrix& a, Index i, Index j, const Integer& f) {
  for (Index r = 0; r < a.rows(); ++r) a(r, i) += f * a(r, j);
}

}  // namespace

std::vector<Integer> SmithForm::diagonal() const {
  std::vector<Integer> d;
  for (Index i = 0; i < std::min(S.rows(), S.cols()); ++i) d.push_back(S(i, i));
  return d;
}

Index SmithForm::rank() const {
  Index r = 0;
  for (const auto& d : diagonal())
    if (d != 0) ++r;
  return r;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  const Index rows = m.rows(), cols = m.cols();
  SmithForm f{IntMatrix::Identity(rows, rows), m, IntMatrix::Identity(cols, cols)};
  IntMatrix& s = f.S;
  for (Index t = 0; t < std::min(rows, cols); ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block, first in row-major order.
      Index pi = -1, pj = -1;
      Integer best = 0;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (s(i, j) != 0 && (pi < 0 || abs_value(s(i, j)) < best)) {
            best = abs_value(s(i, j));
            pi = i;
            pj = j;
          }
      if (pi < 0) return f;
      swap_rows(s, t, pi);
      swap_rows(f.U, t, pi);
      swap_cols(s, t, pj);
      swap_cols(f.V, t, pj);

      bool dirty = false;
      for (Index i = t + 1; i < rows; ++i) {
        if (s(i, t) == 0) continue;
        const Integer q = s(i, t) / s(t, t);
        add_row(s, i, t, -q);
        add_row(f.U, i, t, -q);
        if (s(i, t) != 0) dirty = true;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (s(t, j) == 0) continue;
        const Integer q = s(t, j) / s(t, t);
        add_col(s, j, t, -q);
        add_col(f.V, j, t, -q);
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Divisibility: fold an offending row into row t and go again.
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (s(i, j) % s(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad >= 0) {
        add_row(s, t, bad, Integer(1));
        add_row(f.U, t, bad, Integer(1));
        continue;
      }
      if (s(t, t) < 0) {
        s.row(t) = -s.row(t);
        f.U.row(t) = -f.U.row(t);
      }
      break;
    }
  }
  return f;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix is not square");
  const Index n = m.rows();
  if (n == 0) return Integer(1);
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Integer(0);
      a.row(k).swap(a.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace logcoh
