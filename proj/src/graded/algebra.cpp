#include "logcoh/graded/algebra.hpp"

#include <algorithm>
#include <sstream>

namespace logcoh {
namespace {

// sign of the permutation sorting the concatenation of two disjoint monomials
int merge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned bits = b; bits; bits &= bits - 1) {
    const unsigned low = bits & (~bits + 1);
    // generators of a that sit after this generator of b
    swaps += __builtin_popcount(a & ~((low << 1) - 1));
  }
  return (swaps % 2) ? -1 : 1;
}

bool sparse_equal(const SparseVec<Rational>& a, const SparseVec<Rational>& b) { return a == b; }

SparseVec<Rational> scaled(const SparseVec<Rational>& v, const Rational& c) {
  SparseVec<Rational> out;
  if (c == 0) return out;
  out.reserve(v.size());
  for (const auto& [i, x] : v) out.emplace_back(i, x * c);
  return out;
}

std::string describe_triple(const GradedAlgebra& a, Index i, Index j, Index k) {
  return a.element(i).name + "," + a.element(j).name + (k >= 0 ? "," + a.element(k).name : "");
}

}  // namespace

GradedAlgebra::GradedAlgebra(std::vector<BasisElement> basis, Index unit, std::vector<SparseVec<Rational>> table)
    : basis_(std::move(basis)), unit_(unit), table_(std::move(table)) {
  const auto n = static_cast<std::size_t>(dim());
  if (table_.size() != n * n) throw std::invalid_argument("GradedAlgebra: product table has wrong size");
  if (n > 0 && (unit_ < 0 || unit_ >= dim())) throw std::invalid_argument("GradedAlgebra: unit index out of range");
  for (auto& entry : table_) {
    std::sort(entry.begin(), entry.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseVec<Rational> merged;
    for (const auto& [k, c] : entry) {
      if (k < 0 || k >= dim()) throw std::invalid_argument("GradedAlgebra: product index out of range");
      if (!merged.empty() && merged.back().first == k)
        merged.back().second += c;
      else
        merged.emplace_back(k, c);
    }
    merged.erase(std::remove_if(merged.begin(), merged.end(), [](const auto& p) { return p.second == 0; }),
                 merged.end());
    entry = std::move(merged);
  }
}

GradedAlgebra GradedAlgebra::ground(const std::string& unit_name) {
  return GradedAlgebra({{unit_name, 0}}, 0, {{{0, Rational(1)}}});
}

Vector<Rational> GradedAlgebra::multiply(const Vector<Rational>& x, const Vector<Rational>& y) const {
  Vector<Rational> out = Vector<Rational>::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (y(j) == 0) continue;
      const Rational c = x(i) * y(j);
      for (const auto& [k, s] : product(i, j)) out(k) += c * s;
    }
  }
  return out;
}

Vector<Rational> GradedAlgebra::unit_vector() const {
  Vector<Rational> u = Vector<Rational>::Zero(dim());
  if (dim() > 0) u(unit_) = 1;
  return u;
}

std::vector<Index> GradedAlgebra::degree_indices(int d) const {
  std::vector<Index> out;
  for (Index i = 0; i < dim(); ++i)
    if (degree(i) == d) out.push_back(i);
  return out;
}

std::map<int, Index> GradedAlgebra::betti() const {
  std::map<int, Index> out;
  for (const auto& b : basis_) ++out[b.degree];
  return out;
}

int GradedAlgebra::max_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::max(m, b.degree);
  return m;
}

int GradedAlgebra::min_degree() const {
  int m = 0;
  for (const auto& b : basis_) m = std::min(m, b.degree);
  return m;
}

Index GradedAlgebra::find(const std::string& name) const {
  for (Index i = 0; i < dim(); ++i)
    if (element(i).name == name) return i;
  return -1;
}

Matrix<Rational> GradedAlgebra::left_multiplication(const Vector<Rational>& x) const {
  Matrix<Rational> m = Matrix<Rational>::Zero(dim(), dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i) == 0) continue;
    for (Index j = 0; j < dim(); ++j)
      for (const auto& [k, s] : product(i, j)) m(k, j) += x(i) * s;
  }
  return m;
}

std::vector<std::string> GradedAlgebra::law_violations() const {
  std::vector<std::string> out;
  const Index n = dim();
  if (n == 0) {
    out.emplace_back("algebra has no basis (missing unit)");
    return out;
  }
  if (degree(unit_) != 0) out.emplace_back("unit " + element(unit_).name + " is not in degree 0");
  for (Index i = 0; i < n; ++i) {
    const SparseVec<Rational> self{{i, Rational(1)}};
    if (!sparse_equal(product(unit_, i), self) || !sparse_equal(product(i, unit_), self))
      out.push_back("unit law fails on " + element(i).name);
  }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      for (const auto& [k, c] : product(i, j))
        if (degree(k) != degree(i) + degree(j)) {
          out.push_back("product not degree-additive on " + describe_triple(*this, i, j, -1));
          break;
        }
      const int sign = (degree(i) % 2 != 0 && degree(j) % 2 != 0) ? -1 : 1;
      if (!sparse_equal(product(i, j), scaled(product(j, i), Rational(sign))))
        out.push_back("graded commutativity fails on " + describe_triple(*this, i, j, -1));
    }
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const auto& ij = product(i, j);
      for (Index k = 0; k < n; ++k) {
        Vector<Rational> left = Vector<Rational>::Zero(n), right = Vector<Rational>::Zero(n);
        for (const auto& [m, c] : ij)
          for (const auto& [t, s] : product(m, k)) left(t) += c * s;
        for (const auto& [m, c] : product(j, k))
          for (const auto& [t, s] : product(i, m)) right(t) += c * s;
        if (left != right) out.push_back("associativity fails on " + describe_triple(*this, i, j, k));
      }
    }
  return out;
}

bool operator==(const GradedAlgebra& a, const GradedAlgebra& b) {
  if (a.dim() != b.dim() || a.unit_ != b.unit_ || a.table_ != b.table_) return false;
  for (Index i = 0; i < a.dim(); ++i)
    if (a.element(i).name != b.element(i).name || a.degree(i) != b.degree(i)) return false;
  return true;
}

GradedAlgebra exterior_algebra(const std::vector<std::pair<std::string, int>>& generators) {
  const auto g = generators.size();
  if (g > 20) throw std::invalid_argument("exterior_algebra: too many generators");
  for (const auto& [name, deg] : generators)
    if (deg % 2 == 0) throw EvenDegreeGenerator("generator " + name + " has even degree " + std::to_string(deg));

  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << g); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    // lexicographic on sorted generator lists
    for (unsigned x = a, y = b; x && y; x &= x - 1, y &= y - 1) {
      const int ia = __builtin_ctz(x), ib = __builtin_ctz(y);
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  std::vector<Index> position(masks.size());
  for (std::size_t i = 0; i < masks.size(); ++i) position[masks[i]] = static_cast<Index>(i);

  std::vector<BasisElement> basis;
  for (unsigned m : masks) {
    BasisElement b;
    for (std::size_t i = 0; i < g; ++i)
      if (m & (1u << i)) {
        b.name += generators[i].first;
        b.degree += generators[i].second;
      }
    if (m == 0) b.name = "1";
    basis.push_back(std::move(b));
  }
  const std::size_t n = masks.size();
  std::vector<SparseVec<Rational>> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const unsigned a = masks[i], b = masks[j];
      if (a & b) continue;
      table[i * n + j] = {{position[a | b], Rational(merge_sign(a, b))}};
    }
  return GradedAlgebra(std::move(basis), 0, std::move(table));
}

GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b) {
  const Index na = a.dim(), nb = b.dim(), n = na * nb;
  std::vector<BasisElement> basis;
  basis.reserve(static_cast<std::size_t>(n));
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j) {
      BasisElement e;
      e.degree = a.degree(i) + b.degree(j);
      if (j == b.unit())
        e.name = a.element(i).name;
      else if (i == a.unit())
        e.name = b.element(j).name;
      else
        e.name = a.element(i).name + "*" + b.element(j).name;
      basis.push_back(std::move(e));
    }
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < na; ++i)
    for (Index j = 0; j < nb; ++j)
      for (Index i2 = 0; i2 < na; ++i2)
        for (Index j2 = 0; j2 < nb; ++j2) {
          const auto& pa = a.product(i, i2);
          const auto& pb = b.product(j, j2);
          if (pa.empty() || pb.empty()) continue;
          const bool odd = (b.degree(j) % 2 != 0) && (a.degree(i2) % 2 != 0);
          SparseVec<Rational> entry;
          for (const auto& [ka, ca] : pa)
            for (const auto& [kb, cb] : pb) entry.emplace_back(ka * nb + kb, odd ? Rational(-ca * cb) : ca * cb);
          table[static_cast<std::size_t>((i * nb + j) * n + (i2 * nb + j2))] = std::move(entry);
        }
  return GradedAlgebra(std::move(basis), a.unit() * nb + b.unit(), std::move(table));
}

std::vector<std::string> algebra_map_violations(const GradedAlgebra& source, const GradedAlgebra& target,
                                                const Matrix<Rational>& matrix) {
  std::vector<std::string> out;
  if (matrix.rows() != target.dim() || matrix.cols() != source.dim()) {
    std::ostringstream s;
    s << "matrix is " << matrix.rows() << "x" << matrix.cols() << ", expected " << target.dim() << "x"
      << source.dim();
    out.push_back(s.str());
    return out;
  }
  if (source.dim() == 0 || target.dim() == 0) return out;
  if (Vector<Rational>(matrix.col(source.unit())) != target.unit_vector()) out.emplace_back("map is not unital");
  for (Index c = 0; c < matrix.cols(); ++c)
    for (Index r = 0; r < matrix.rows(); ++r)
      if (matrix(r, c) != 0 && target.degree(r) != source.degree(c)) {
        out.push_back("map does not preserve degree on " + source.element(c).name);
        r = matrix.rows();
      }
  for (Index i = 0; i < source.dim(); ++i)
    for (Index j = 0; j < source.dim(); ++j) {
      const Vector<Rational> lhs = matrix * to_dense(source.product(i, j), source.dim());
      const Vector<Rational> rhs = target.multiply(matrix.col(i), matrix.col(j));
      if (lhs != rhs) out.push_back("map is not multiplicative on " + source.element(i).name + "," + source.element(j).name);
    }
  return out;
}

bool verify_algebra_map(const AlgebraMap& f) {
  if (f.source == nullptr || f.target == nullptr) return false;
  return algebra_map_violations(*f.source, *f.target, f.matrix).empty();
}

}  // namespace logcoh
