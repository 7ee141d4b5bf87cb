#pragma once

#include "logcoh/exactalg/smith.hpp"
#include "logcoh/pairdata/pair.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace logcoh {

class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ValidationRequired : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RestrictionNotSurjective : public std::runtime_error {
 public:
  RestrictionNotSurjective(Subset stratum, const std::string& what) : std::runtime_error(what), stratum_(stratum) {}
  Subset stratum() const { return stratum_; }

 private:
  Subset stratum_;
};

using MultVector = std::vector<long long>;

/// w(v) = sum kappa_i v_i.
long long weight(const MultVector& v, const std::vector<long long>& kappa);
/// deg(alpha t^v) = deg alpha + 2 sum (1 - a_i) v_i.
long long log_degree(long long alpha_degree, const MultVector& v, const std::vector<long long>& pole_orders);
Subset support(const MultVector& v);
/// v_I: 1 on I, 0 elsewhere.
MultVector primitive_vector(Subset s, int k);

/// Basis class alpha t^v of the log cohomology.
struct LogClass {
  MultVector v;
  Index alpha = 0;   // index into the basis of H^*(S_{supp v})
  Subset stratum;
  long long weight = 0;
  long long degree = 0;
};

/// Weight <= W part of the log cohomology ring with its product.
///
/// Classes are ordered by (weight, v lexicographically, alpha). Products of
/// total weight above W are truncated to zero.
class LogRingTruncation {
 public:
  LogRingTruncation(std::shared_ptr<const NCPairData> pair, long long max_weight);

  const NCPairData& pair() const { return *pair_; }
  long long max_weight() const { return max_weight_; }
  Index dim() const { return static_cast<Index>(classes_.size()); }
  const std::vector<LogClass>& classes() const { return classes_; }
  const LogClass& cls(Index i) const { return classes_[static_cast<std::size_t>(i)]; }
  std::string name(Index i) const;

  /// Index of the first class with multiplicity vector v, or -1 if absent.
  Index offset(const MultVector& v) const;
  Index find(const MultVector& v, Index alpha) const;

  /// Expansion of cls(i) * cls(j) in the class basis.
  SparseVec<Rational> product(Index i, Index j) const;

  /// (alpha_1 * alpha_2) computed in H^*(S_{I u J}); empty when I u J is not a stratum.
  const SparseVec<Rational>& star(Subset i, Index a, Subset j, Index b) const;

 private:
  struct StarTable {
    Subset target;
    Index cols = 0;
    std::vector<SparseVec<Rational>> entries;  // a * cols + b
  };
  std::shared_ptr<const NCPairData> pair_;
  long long max_weight_;
  std::vector<LogClass> classes_;
  std::map<MultVector, Index> offsets_;
  std::map<std::pair<Subset, Subset>, StarTable> stars_;
};

/// Validates the pair first; throws ValidationRequired listing the issues.
LogRingTruncation build_log_ring(const NCPairData& p, long long max_weight);
/// Skips validation. For deliberately inconsistent inputs in diagnostics.
LogRingTruncation build_log_ring_unchecked(const NCPairData& p, long long max_weight);

/// Every multiplicity vector with weight <= W whose support is a stratum.
std::vector<MultVector> admissible_vectors(const NCPairData& p, long long max_weight);

struct StanleyReisner {
  int k = 0;
  std::vector<long long> kappa;
  SimplicialComplex complex;
  std::vector<Subset> minimal_nonfaces;
  /// True when every stratum is connected (the classical monomial ring).
  bool classical = true;
  /// One degree-0 generator per (stratum, component) when not classical.
  std::vector<std::string> idempotents;
  /// Hilbert function by weight: sum over v with w(v) = w of #components(supp v).
  std::map<long long, Index> hilbert(long long max_weight, const NCPairData& p) const;
  /// The relations as monomials, e.g. "t1*t2".
  std::vector<std::string> relation_strings() const;
};

StanleyReisner stanley_reisner(const NCPairData& p);

/// (degree, weight) -> dimension.
using HilbertTable = std::map<std::pair<long long, long long>, Index>;
HilbertTable hilbert_table(const LogRingTruncation& l);

struct H1Class {
  std::vector<Integer> coords;
  std::vector<Integer> moduli;  // 0 for a free coordinate
  friend bool operator==(const H1Class&, const H1Class&) = default;
};

/// Class of sum v_i [y_i] in Z^k / rowspan(relations), in Smith coordinates.
H1Class h1_class(const MultVector& v, const std::vector<std::vector<long long>>& relations, int k);

struct FiniteGeneration {
  bool generated = true;
  std::vector<Index> generators;  // class indices
  long long failing_weight = -1;
  Index expected_dim = 0;
  Index spanned_dim = 0;
};

FiniteGeneration check_finite_generation(const LogRingTruncation& l);

struct Presentation {
  std::vector<std::string> generators;  // S-expression lines
  std::vector<std::string> relations;   // S-expression lines
  std::vector<std::string> notes;
  HilbertTable hilbert;                 // computed from the presentation data
  std::string to_sexpr() const;
};

Presentation presentation_topological(const NCPairData& p, long long max_weight);

struct LawReport {
  long long triples_checked = 0;
  long long pairs_checked = 0;
  std::vector<std::string> violations;
};

/// Associativity on basis triples and graded commutativity plus exact weight
/// additivity on basis pairs. Triples with total weight above W multiply to
/// zero on both sides and are skipped.
LawReport check_log_ring_laws(const LogRingTruncation& l, std::size_t max_reported = 20);

}  // namespace logcoh
