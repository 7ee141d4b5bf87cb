#pragma once

#include "logcoh/exactalg/smith.hpp"
#include "logcoh/graded/algebra.hpp"

namespace logcoh {

class DegreeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Coefficients { Field, Integers };

struct GysinGroup {
  int degree = 0;
  Index rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, empty over a field
};

/// Additive cohomology of the circle bundle with Euler class `euler` over a
/// base whose basis is assumed to be a Z-basis when coefficients are integral.
std::vector<GysinGroup> gysin_circle_bundle(const GradedAlgebra& base, const Vector<Rational>& euler,
                                            Coefficients coefficients = Coefficients::Field);

}  // namespace logcoh
