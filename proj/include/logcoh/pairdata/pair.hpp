#pragma once

#include "logcoh/graded/algebra.hpp"
#include "logcoh/io/json.hpp"
#include "logcoh/pairdata/subset.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace logcoh {

struct Stratum {
  Index components = 1;
  GradedAlgebra ring;  // H^*(S_I); for I = {} this is H^*(X)
};

/// Optional geometric facts supplied with a pair. Absent means unknown.
struct PairFlags {
  std::optional<bool> fano;
  std::optional<bool> anticanonical;
  std::optional<bool> pi2_omega_zero;
  std::optional<std::vector<long long>> same_line_bundle;  // powers n_i
  std::map<Subset, bool> gw_vanishing;
  std::optional<std::vector<std::vector<long long>>> effective_classes;  // A.D_i per class
};

/// Combinatorial model of a normal-crossings pair (M, D = D_1 u ... u D_k).
struct NCPairData {
  int k = 0;
  int dim = 0;
  std::vector<long long> kappa;
  std::vector<long long> pole_orders;
  std::map<Subset, Stratum> strata;
  /// r*_{IK} for I strictly inside K, as target.dim() x source.dim() matrices.
  std::map<std::pair<Subset, Subset>, Matrix<Rational>> restrictions;
  PairFlags flags;
  std::vector<std::vector<long long>> h1_relations;  // rows of length k

  bool has_stratum(Subset s) const { return strata.count(s) > 0; }
  const GradedAlgebra& ring(Subset s) const;
  Index components(Subset s) const;
  /// r*_{IK}; identity when I == K. Throws std::out_of_range when missing.
  Matrix<Rational> restriction(Subset from, Subset to) const;
  /// Nonempty strata other than the empty set, in Subset order.
  std::vector<Subset> positive_strata() const;
  bool all_strata_connected() const;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

struct SimplicialComplex {
  int vertices = 0;
  std::set<Subset> faces;

  bool is_face(Subset s) const { return faces.count(s) > 0; }
  /// Subsets that are not faces but all of whose proper subsets are.
  std::vector<Subset> minimal_nonfaces() const;
  bool downward_closed() const;
};

/// Parses a pair file ("ncpair/1"); `source` is JSON text or a path.
NCPairData load_pair(const std::string& source);
NCPairData pair_from_json(const Json& j);
Json pair_to_json(const NCPairData& p);
/// Deterministic serialization (two-space indent, trailing newline).
std::string serialize_pair(const NCPairData& p);

ValidationReport validate(const NCPairData& p);

SimplicialComplex dual_complex(const NCPairData& p);

}  // namespace logcoh
