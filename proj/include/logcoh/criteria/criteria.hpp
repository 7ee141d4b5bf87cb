#pragma once

#include "logcoh/io/json.hpp"
#include "logcoh/logring/logring.hpp"
#include "logcoh/pairdata/pair.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace logcoh {

class FlagMissing : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class DegenerateInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};
class NotLogCY : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class VerdictStatus { Established, Inconclusive, HypothesisFailed };
std::string to_string(VerdictStatus s);

/// Three valued on purpose: the criteria are all sufficient conditions, so a
/// negative answer is never claimed.
struct Verdict {
  VerdictStatus status = VerdictStatus::Inconclusive;
  std::string rule;
  std::vector<std::string> witnesses;
  std::vector<std::string> assumptions;  // user supplied facts the verdict leans on

  bool established() const { return status == VerdictStatus::Established; }
};

Json verdict_to_json(const Verdict& v);

/// Divisors that are powers n_i of one line bundle: E1 degeneration when some n_i > 1.
Verdict check_easycor(const std::vector<long long>& n);
Verdict check_easycor(const NCPairData& p);  // FlagMissing without same_line_bundle

struct ResolvedP2 {
  std::vector<std::vector<Rational>> lines;       // as given
  std::vector<std::vector<Rational>> points;      // pairwise intersections, normalized
  std::vector<std::vector<int>> lines_through;    // per point
  std::vector<int> blown_up;                      // points with >= 3 lines
  std::vector<std::string> components;            // "L1".., then "E1".. per blown up point
  std::vector<std::pair<int, int>> intersections; // components meeting, i < j
  /// Distinct points where each component meets the others.
  std::vector<int> meeting_points;
  SimplicialComplex complex() const;
};

struct ClassifyResult {
  Verdict topological;
  Verdict multiplicatively_topological;
  std::optional<ResolvedP2> resolution;
};

/// Lines of P^2 as linear forms in 3 variables. Points where at least three
/// lines meet are blown up.
ClassifyResult resolve_p2_arrangement(const std::vector<std::vector<Rational>>& lines);

struct ClassifyInput {
  int k = 0;
  int dim = 0;
  std::optional<bool> pi2_omega_zero;
  bool same_line_bundle = false;
  std::optional<std::vector<std::vector<Rational>>> p2_lines;
};

ClassifyResult classify_pair(const ClassifyInput& in);
ClassifyInput classify_input(const NCPairData& p);

/// sum_i kappa_i (A.D_i) >= w(v) for every supplied class A.
bool check_admissible(const MultVector& v, const std::vector<long long>& kappa,
                      const std::vector<std::vector<long long>>& classes);

Verdict check_condition_A(const NCPairData& p);

struct DegreeZeroReport {
  Verdict verdict;
  std::optional<StanleyReisner> sr;  // claimed gr SH^0 when established
};

DegreeZeroReport degree_zero_report(const NCPairData& p);

/// Uses p.flags.gw_vanishing unless `flags` is given.
Verdict gw_degeneration_report(const NCPairData& p, const std::optional<std::map<Subset, bool>>& flags = std::nullopt);

/// Either {"gw_vanishing": [...]} or the bare list of {"I": [1,2], "value": true}.
std::map<Subset, bool> parse_gw_flags(const Json& j);

}  // namespace logcoh
