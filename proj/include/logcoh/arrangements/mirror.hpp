#pragma once

#include "logcoh/arrangements/arrangement.hpp"
#include "logcoh/logring/logring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcoh {

class WeightBoundTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// SH^* presentation of a generic pair, cross-checked against the log ring.
struct ShPresentation {
  Presentation presentation;
  HilbertTable log_table;   // from build_log_ring at the same weight bound
  bool tables_agree = false;
  std::vector<std::string> notes;
};

ShPresentation sh_presentation(int n, int k, long long max_weight = 4);

/// Jac(W) for W = z_1...z_m: k[z] modulo the m products omitting one variable.
struct JacobianRing {
  int m = 0;
  /// Relation i is the product of all variables except z_{i+1}.
  std::vector<Subset> relations;
  /// Normal forms are the monomials whose support has at most m-2 variables.
  std::vector<std::vector<int>> normal_forms(int degree) const;
  std::vector<Index> hilbert(int order) const;  // degrees 0..order
  std::vector<std::string> relation_strings() const;  // "z1*z2"
};

JacobianRing jacobian_ring(int m);

struct SrJacobianIsomorphism {
  bool ok = false;
  std::vector<std::pair<std::string, std::string>> relation_map;  // SR -> Jac
  std::vector<Index> sr_series;
  std::vector<Index> jac_series;
  std::vector<std::string> notes;
};

/// alpha_i -> z_i for the generic pair (P^n, n+2 hyperplanes), to order 6.
SrJacobianIsomorphism sr_jacobian_isomorphism(int n, int order = 6);

/// H^0 and H^1 of polyvector fields on C^m under contraction with dW,
/// graded by polynomial degree minus polyvector degree.
struct MirrorReport {
  int m = 0;
  int bound = 0;
  std::map<long long, Index> h0;
  std::map<long long, Index> h1;
  std::map<long long, Index> sr;      // SR(generic(m-2, m)) by weight
  std::map<long long, Index> log_h1;  // degree-1 log classes by weight, report only
  Index b1 = 0;                       // first Betti number of the complement
  bool h0_matches = false;
  bool h1_weight0_matches = false;
  bool ok() const { return h0_matches && h1_weight0_matches; }
};

MirrorReport mirror_hochschild(int m, int weight_bound);

}  // namespace logcoh
