#pragma once

#include "logcoh/exactalg/linear.hpp"

#include <map>
#include <string>
#include <vector>

namespace logcoh {

class EvenDegreeGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct BasisElement {
  std::string name;
  int degree = 0;
};

/// Finite-rank graded-commutative algebra over Q given by structure constants.
///
/// product(i, j) is the expansion of b_i * b_j in the basis; it is stored per
/// ordered pair so signs are explicit.
class GradedAlgebra {
 public:
  GradedAlgebra() = default;
  GradedAlgebra(std::vector<BasisElement> basis, Index unit, std::vector<SparseVec<Rational>> table);

  /// The ground field in degree 0.
  static GradedAlgebra ground(const std::string& unit_name = "1");

  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  int degree(Index i) const { return element(i).degree; }
  Index unit() const { return unit_; }

  const SparseVec<Rational>& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  Vector<Rational> multiply(const Vector<Rational>& x, const Vector<Rational>& y) const;
  Vector<Rational> unit_vector() const;

  /// Basis indices of a given degree, in basis order.
  std::vector<Index> degree_indices(int d) const;
  /// degree -> number of basis elements.
  std::map<int, Index> betti() const;
  int max_degree() const;
  int min_degree() const;

  /// Index of the named basis element, or -1.
  Index find(const std::string& name) const;

  /// Every violated algebra law, as readable messages (empty when lawful).
  std::vector<std::string> law_violations() const;

  /// Matrix of left multiplication by x on the whole algebra.
  Matrix<Rational> left_multiplication(const Vector<Rational>& x) const;

  friend bool operator==(const GradedAlgebra& a, const GradedAlgebra& b);

 private:
  std::vector<BasisElement> basis_;
  Index unit_ = 0;
  std::vector<SparseVec<Rational>> table_;
};

/// Exterior algebra on odd-degree generators. Basis is ordered by monomial
/// length, then lexicographically by generator index; names concatenate the
/// generator names ("1" for the unit).
GradedAlgebra exterior_algebra(const std::vector<std::pair<std::string, int>>& generators);

/// A (x) B with the Koszul sign (a(x)b)(a'(x)b') = (-1)^{|b||a'|} aa'(x)bb'.
/// Basis pairs are ordered lexicographically (index of A first).
GradedAlgebra tensor_product(const GradedAlgebra& a, const GradedAlgebra& b);

/// Linear map between algebras; matrix is target.dim() x source.dim().
struct AlgebraMap {
  const GradedAlgebra* source = nullptr;
  const GradedAlgebra* target = nullptr;
  Matrix<Rational> matrix;
};

/// Reasons the map fails to be a unital, degree-preserving algebra map.
std::vector<std::string> algebra_map_violations(const GradedAlgebra& source, const GradedAlgebra& target,
                                                const Matrix<Rational>& matrix);

bool verify_algebra_map(const AlgebraMap& f);

}  // namespace logcoh
