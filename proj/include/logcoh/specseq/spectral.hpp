#pragma once

#include "logcoh/specseq/complex.hpp"

#include <optional>
#include <utility>

namespace logcoh {

using Bidegree = std::pair<int, int>;  // (p, q), total degree p + q

template <class S>
struct SSPage {
  int r = 0;
  std::map<Bidegree, SubquotientBasis<S>> cells;  // nonzero cells only
  /// d_r from cell (p, q) to (p + r, q - r + 1), in quotient coordinates.
  std::map<Bidegree, Matrix<S>> differentials;

  Index dim(int p, int q) const {
    const auto it = cells.find({p, q});
    return it == cells.end() ? 0 : it->second.dim();
  }
  Index total_dim(int n) const {
    Index t = 0;
    for (const auto& [pq, cell] : cells)
      if (pq.first + pq.second == n) t += cell.dim();
    return t;
  }
  bool differential_is_zero() const {
    for (const auto& [pq, m] : differentials)
      if (!all_zero(m)) return false;
    return true;
  }
};

namespace detail {

/// Z_r^{p} in total degree n: x in F^p of degree n with dx in F^{p+r},
/// as ambient column vectors.
template <class S>
Matrix<S> cycles_to_level(const FilteredComplex<S>& c, int p, int n, int r) {
  std::vector<Index> cols, rows;
  for (Index i = 0; i < c.dim(); ++i) {
    if (c.degree(i) == n && c.filt(i) >= p) cols.push_back(i);
    if (c.degree(i) == n + 1 && c.filt(i) < p + r) rows.push_back(i);
  }
  const Index N = c.dim();
  if (cols.empty()) return Matrix<S>(N, 0);
  Matrix<S> kernel;
  if (r <= 0 || rows.empty()) {
    kernel = Matrix<S>::Identity(static_cast<Index>(cols.size()), static_cast<Index>(cols.size()));
  } else {
    Matrix<S> sub(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t a = 0; a < rows.size(); ++a)
      for (std::size_t b = 0; b < cols.size(); ++b) sub(static_cast<Index>(a), static_cast<Index>(b)) = c.d(rows[a], cols[b]);
    kernel = kernel_basis<S>(sub);
  }
  Matrix<S> out = Matrix<S>::Zero(N, kernel.cols());
  for (std::size_t b = 0; b < cols.size(); ++b) out.row(cols[b]) = kernel.row(static_cast<Index>(b));
  return out;
}

}  // namespace detail

/// E_r^{p,q} = Z_r^p / (Z_{r-1}^{p+1} + d Z_{r-1}^{p-r+1}) in degree p + q.
template <class S>
SubquotientBasis<S> page_cell(const FilteredComplex<S>& c, int r, int p, int q) {
  const int n = p + q;
  const Matrix<S> z = detail::cycles_to_level(c, p, n, r);
  const Matrix<S> b1 = detail::cycles_to_level(c, p + 1, n, r - 1);
  const Matrix<S> src = detail::cycles_to_level(c, p - r + 1, n - 1, r - 1);
  Matrix<S> b2 = src.cols() > 0 ? Matrix<S>(c.d * src) : Matrix<S>(c.dim(), 0);
  return subquotient<S>(z, hstack<S>(b1, b2));
}

template <class S>
SSPage<S> page(const FilteredComplex<S>& c, int r) {
  validate_complex(c);
  if (r < 0) throw std::invalid_argument("page index must be nonnegative");
  SSPage<S> out;
  out.r = r;
  if (c.dim() == 0) return out;
  for (int n = c.min_degree(); n <= c.max_degree(); ++n)
    for (int p = c.min_filt(); p <= c.max_filt(); ++p) {
      auto cell = page_cell(c, r, p, n - p);
      if (cell.dim() > 0) out.cells.emplace(Bidegree{p, n - p}, std::move(cell));
    }
  for (const auto& [pq, cell] : out.cells) {
    const Bidegree target{pq.first + r, pq.second - r + 1};
    const auto it = out.cells.find(target);
    if (it == out.cells.end()) continue;
    out.differentials.emplace(pq, Matrix<S>(it->second.projection * c.d * cell.representatives));
  }
  return out;
}

/// gr^p H^{p+q} of the total cohomology, (p, q) -> dim (nonzero entries).
template <class S>
std::map<Bidegree, Index> total_cohomology(const FilteredComplex<S>& c) {
  validate_complex(c);
  std::map<Bidegree, Index> out;
  if (c.dim() == 0) return out;
  const int big = c.spread() + 2;
  for (int n = c.min_degree(); n <= c.max_degree(); ++n) {
    const Matrix<S> prev = detail::cycles_to_level(c, c.min_filt(), n - 1, 0);
    const Matrix<S> bound = prev.cols() > 0 ? Matrix<S>(c.d * prev) : Matrix<S>(c.dim(), 0);
    const Index rb = rank<S>(bound);
    Index above = 0;
    for (int p = c.max_filt() + 1; p >= c.min_filt(); --p) {
      const Matrix<S> z = detail::cycles_to_level(c, p, n, big);
      const Index here = rank<S>(hstack<S>(z, bound)) - rb;
      if (here > above) out[{p, n - p}] = here - above;
      above = here;
    }
  }
  return out;
}

template <class S>
std::map<int, Index> cohomology_dims(const FilteredComplex<S>& c) {
  std::map<int, Index> out;
  for (const auto& [pq, d] : total_cohomology(c)) out[pq.first + pq.second] += d;
  return out;
}

struct Degeneration {
  bool degenerates_at_E1 = true;
  std::optional<int> first_nonzero_page;
  bool conclusive = true;  // false when r_max stopped short of the stabilization bound
  int examined_up_to = 0;
};

template <class S>
Degeneration detect_degeneration(const FilteredComplex<S>& c, int r_max) {
  validate_complex(c);
  if (r_max < 1) throw std::invalid_argument("r_max must be at least 1");
  Degeneration out;
  const int bound = c.spread();
  out.examined_up_to = std::min(r_max, bound);
  out.conclusive = r_max >= bound;
  for (int r = 1; r <= out.examined_up_to; ++r)
    if (!page(c, r).differential_is_zero()) {
      out.degenerates_at_E1 = false;
      out.first_nonzero_page = r;
      break;
    }
  return out;
}

/// E_infinity as the page at the stabilization bound.
template <class S>
SSPage<S> infinity_page(const FilteredComplex<S>& c) {
  return page(c, c.spread() + 1);
}

/// Checks that `next` is the cohomology of (`current`, d_r) cell by cell.
template <class S>
std::vector<std::string> successor_mismatches(const SSPage<S>& current, const SSPage<S>& next) {
  std::vector<std::string> out;
  const int r = current.r;
  const auto label = [](Bidegree b) { return "(" + std::to_string(b.first) + "," + std::to_string(b.second) + ")"; };
  for (const auto& [pq, cell] : next.cells)
    if (!current.cells.count(pq)) out.push_back("E_" + std::to_string(r + 1) + label(pq) + " is not a subquotient of E_" + std::to_string(r));
  for (const auto& [pq, cell] : current.cells) {
    const Index n = cell.dim();
    const auto out_it = current.differentials.find(pq);
    const Matrix<S> d_out = out_it != current.differentials.end() ? out_it->second : Matrix<S>(0, n);
    const auto in_it = current.differentials.find({pq.first - r, pq.second + r - 1});
    const Matrix<S> d_in = in_it != current.differentials.end() ? in_it->second : Matrix<S>(n, 0);
    const Index kernel = n - rank<S>(d_out);
    const Index image = rank<S>(d_in);
    const Index expected = kernel - image;
    const auto next_it = next.cells.find(pq);
    const Index got = next_it == next.cells.end() ? 0 : next_it->second.dim();
    if (got != expected) {
      out.push_back("dim E_" + std::to_string(r + 1) + label(pq) + " = " + std::to_string(got) + ", homology of d_" +
                    std::to_string(r) + " gives " + std::to_string(expected));
      continue;
    }
    if (got == 0) continue;
    const Matrix<S> coords = cell.projection * next_it->second.representatives;
    if (d_out.rows() > 0 && !all_zero(Matrix<S>(d_out * coords)))
      out.push_back("representatives of E_" + std::to_string(r + 1) + label(pq) + " are not d_r-cycles");
    else if (rank<S>(hstack<S>(coords, d_in)) != got + image)
      out.push_back("representatives of E_" + std::to_string(r + 1) + label(pq) + " are dependent modulo im d_r");
  }
  return out;
}

template <class S>
struct PageProduct {
  int r = 0;
  /// ((cell a), (cell b)) -> matrix with column a_index * dim(b) + b_index,
  /// rows in the coordinates of the target cell.
  std::map<std::pair<Bidegree, Bidegree>, Matrix<S>> tables;
  long long pairs_checked = 0;
  std::vector<std::string> leibniz_failures;
};

template <class S>
PageProduct<S> page_product(const FilteredComplex<S>& c, int r) {
  if (!c.mult) throw ProductNotFiltered("complex carries no product");
  const SSPage<S> pg = page(c, r);
  PageProduct<S> out;
  out.r = r;
  const auto coords = [&](Bidegree a, Index i, Bidegree b, Index j) -> Vector<S> {
    const Bidegree t{a.first + b.first, a.second + b.second};
    const auto it = pg.cells.find(t);
    if (it == pg.cells.end()) return Vector<S>(0);
    const auto& ca = pg.cells.at(a);
    const auto& cb = pg.cells.at(b);
    return it->second.project(c.multiply(ca.representatives.col(i), cb.representatives.col(j)));
  };
  for (const auto& [a, ca] : pg.cells)
    for (const auto& [b, cb] : pg.cells) {
      const Bidegree t{a.first + b.first, a.second + b.second};
      const Index rows = pg.dim(t.first, t.second);
      if (rows == 0) continue;
      Matrix<S> m(rows, ca.dim() * cb.dim());
      for (Index i = 0; i < ca.dim(); ++i)
        for (Index j = 0; j < cb.dim(); ++j) m.col(i * cb.dim() + j) = coords(a, i, b, j);
      out.tables.emplace(std::make_pair(a, b), std::move(m));
    }
  // d_r of a class, as coordinates in the shifted cell (empty if that cell is zero)
  const auto dr = [&](Bidegree a, const Vector<S>& x) -> Vector<S> {
    const auto it = pg.differentials.find(a);
    if (it == pg.differentials.end()) return Vector<S>(0);
    return it->second * x;
  };
  const auto mult_coords = [&](Bidegree a, const Vector<S>& x, Bidegree b, const Vector<S>& y) -> Vector<S> {
    const Bidegree t{a.first + b.first, a.second + b.second};
    const Index rows = pg.dim(t.first, t.second);
    Vector<S> acc = Vector<S>::Zero(rows);
    if (rows == 0 || x.size() == 0 || y.size() == 0) return acc;
    const auto& m = out.tables.at({a, b});
    for (Index i = 0; i < x.size(); ++i)
      for (Index j = 0; j < y.size(); ++j)
        if (!is_zero(x(i)) && !is_zero(y(j))) acc += (x(i) * y(j)) * m.col(i * y.size() + j);
    return acc;
  };
  for (const auto& [a, ca] : pg.cells)
    for (const auto& [b, cb] : pg.cells) {
      const Bidegree t{a.first + b.first, a.second + b.second};
      const Bidegree target{t.first + r, t.second - r + 1};
      const Index rows = pg.dim(target.first, target.second);
      const Bidegree da{a.first + r, a.second - r + 1}, db{b.first + r, b.second - r + 1};
      const bool odd = (a.first + a.second) % 2 != 0;
      for (Index i = 0; i < ca.dim(); ++i)
        for (Index j = 0; j < cb.dim(); ++j) {
          ++out.pairs_checked;
          const Vector<S> ei = Vector<S>::Unit(ca.dim(), i), ej = Vector<S>::Unit(cb.dim(), j);
          Vector<S> lhs = Vector<S>::Zero(rows);
          const Index tdim = pg.dim(t.first, t.second);
          if (tdim > 0) {
            const Vector<S> ab = out.tables.at({a, b}).col(i * cb.dim() + j);
            const Vector<S> d_ab = dr(t, ab);
            if (d_ab.size() == rows) lhs = d_ab;
          }
          Vector<S> rhs = mult_coords(da, dr(a, ei), b, ej);
          const Vector<S> second = mult_coords(a, ei, db, dr(b, ej));
          if (rhs.size() != rows) rhs = Vector<S>::Zero(rows);
          if (second.size() == rows) {
            if (odd)
              rhs -= second;
            else
              rhs += second;
          }
          if (lhs != rhs)
            out.leibniz_failures.push_back("E_" + std::to_string(r) + " Leibniz fails at cells (" + std::to_string(a.first) +
                                           "," + std::to_string(a.second) + ") x (" + std::to_string(b.first) + "," +
                                           std::to_string(b.second) + ")");
        }
    }
  return out;
}

}  // namespace logcoh
