#pragma once

#include "logcoh/arrangements/exterior.hpp"
#include "logcoh/graded/algebra.hpp"
#include "logcoh/io/json.hpp"
#include "logcoh/pairdata/pair.hpp"

#include <memory>
#include <string>
#include <vector>

namespace logcoh {

class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class ArrangementMode { Central, Projective };

/// Hyperplanes given by linear forms in m variables. In projective mode the
/// forms live on C^{n+1} and define hyperplanes of P^n.
struct Arrangement {
  std::vector<std::vector<Rational>> forms;
  ArrangementMode mode = ArrangementMode::Central;
  /// Display labels for the hyperplanes; defaults to "1".."k".
  std::vector<std::string> labels;

  int size() const { return static_cast<int>(forms.size()); }
  int variables() const { return forms.empty() ? 0 : static_cast<int>(forms.front().size()); }
  std::string label(int i) const;
  Matrix<Rational> matrix() const;  // one row per form
};

/// Checks shapes and nonzero forms; throws InvalidParameters.
void check_arrangement(const Arrangement& a);

Arrangement load_arrangement(const std::string& source);
Arrangement arrangement_from_json(const Json& j);
Json arrangement_to_json(const Arrangement& a);

Arrangement boolean_arrangement(int n);
/// k lines through the origin of C^2 with forms (1, l), l = 1..k.
Arrangement generic_central_lines(int k);
/// k hyperplanes of P^n in general position: (1, l, l^2, ..., l^n).
Arrangement generic_projective(int n, int k);

struct Flat {
  Subset subset;
  Index rank = 0;       // rank of the forms in the subset (codimension)
  Subset closure;       // all forms vanishing on the intersection
  bool empty = false;   // empty intersection (projective mode only)
};

/// One entry per subset of the forms, in Subset order.
std::vector<Flat> intersection_lattice(const Arrangement& a);

/// Orlik-Solomon algebra: exterior algebra on B1..Bk (degree 1) modulo the
/// ideal generated by delta(B^J) for every circuit J.
struct OSAlgebra {
  GradedAlgebra algebra;
  Matrix<Rational> delta;  // degree -1 derivation with delta(B_i) = 1
  ExteriorQuotient quotient;
  std::vector<Index> poincare() const;
};

OSAlgebra orlik_solomon(const Arrangement& a);
/// delta(B^J) for each circuit J.
std::vector<ExtElement> os_ideal_generators(const Arrangement& a);

/// Cohomology of the projective complement as ker(delta) in the cone's
/// Orlik-Solomon algebra. Basis: products of b_i = B_i - B_k, greedy in
/// (length, lex) order.
struct ProjectiveComplement {
  OSAlgebra os;
  GradedAlgebra ring;
  Matrix<Rational> inclusion;  // os.dim x ring.dim
  std::vector<Index> betti() const;
};

ProjectiveComplement projective_complement(const Arrangement& a);

/// (P^n, k generic hyperplanes) with kappa = a = 1 and validated output.
NCPairData build_generic_pair(int n, int k);

struct RestrictionKernel {
  Matrix<Rational> kernel;        // basis of ker r*_{{},I} in H^*(X) coordinates
  Matrix<Rational> formula_span;  // ideal generated by the b^J described below
  bool agree = false;
  /// Span of b^J over nonempty J disjoint from I (the unadjusted statement).
  Index literal_dim = 0;
  bool literal_agrees = false;
};

/// Kernel of restriction to S_I for the generic pair, computed by linear
/// algebra and by the span formula: the ideal generated by
/// prod_{l in J} (B_l - B_j) over J in compl(I) - {j} with |J| > n - |I|,
/// where j = max compl(I).
RestrictionKernel restriction_kernel(int n, int k, Subset i);

}  // namespace logcoh
