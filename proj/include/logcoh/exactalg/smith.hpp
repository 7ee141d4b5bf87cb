#pragma once

#include "logcoh/exactalg/linear.hpp"

namespace logcoh {

using IntMatrix = Matrix<Integer>;

/// U * m * V == S with S diagonal, d_i | d_{i+1}, d_i >= 0, U and V unimodular.
struct SmithForm {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  /// Diagonal entries d_0, d_1, ... up to min(rows, cols).
  std::vector<Integer> diagonal() const;
  Index rank() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Exact determinant by fraction-free elimination (square input).
Integer determinant(const IntMatrix& m);

}  // namespace logcoh
