#pragma once

#include "logcoh/exactalg/linear.hpp"

#include <map>
#include <vector>

namespace logcoh {

/// Element of an exterior algebra on at most 32 generators: monomial
/// bitmask -> coefficient, zero coefficients removed.
using ExtElement = std::map<unsigned, Rational>;

/// Monomials of the exterior algebra on g generators ordered by length, then
/// lexicographically (the basis order of exterior_algebra).
std::vector<unsigned> exterior_monomial_order(int g);

/// Sign of m1 ^ m2 relative to the sorted monomial m1 | m2 (m1, m2 disjoint).
int wedge_sign(unsigned m1, unsigned m2);

ExtElement ext_generator(int i);
ExtElement ext_monomial(unsigned mask);
ExtElement ext_add(const ExtElement& a, const ExtElement& b, const Rational& scale = Rational(1));
ExtElement ext_mul(const ExtElement& a, const ExtElement& b);
/// delta(x_i) = 1 extended as a derivation of degree -1.
ExtElement ext_delta(const ExtElement& a);
/// Applies the algebra map sending generator i to images[i].
ExtElement ext_apply(const ExtElement& a, const std::vector<ExtElement>& images);

/// Exterior algebra on g generators modulo the two-sided ideal generated by
/// homogeneous elements; the basis is the greedy set of standard monomials.
class ExteriorQuotient {
 public:
  ExteriorQuotient(int generators, const std::vector<ExtElement>& ideal_generators);

  int generators() const { return generators_; }
  Index dim() const { return static_cast<Index>(standard_.size()); }
  const std::vector<unsigned>& standard_monomials() const { return standard_; }
  /// Quotient coordinates of x.
  Vector<Rational> reduce(const ExtElement& x) const;
  /// The combination of standard monomials with the given coordinates.
  ExtElement lift(const Vector<Rational>& coords) const;
  /// Dimension of the quotient in each degree.
  std::vector<Index> poincare() const;

 private:
  struct Block {
    std::vector<unsigned> monomials;  // ambient monomials of this degree
    std::map<unsigned, Index> position;
    Matrix<Rational> projection;      // quotient coords (this degree) x ambient
    Index offset = 0;                 // first quotient index of this degree
  };
  int generators_;
  std::vector<unsigned> standard_;
  std::vector<Block> blocks_;  // by degree
};

}  // namespace logcoh
