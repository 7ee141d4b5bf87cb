#include "logcoh/criteria/criteria.hpp"

#include <algorithm>
#include <set>

namespace logcoh {
namespace {

std::string vector_label(const MultVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

Verdict make(VerdictStatus s, std::string rule) {
  Verdict v;
  v.status = s;
  v.rule = std::move(rule);
  return v;
}

const char* kPi2Rule = "omega vanishes on pi_2(M): no nonconstant holomorphic spheres";
const char* kSameBundleTop = "components are powers of one line bundle and k >= dim + 1";
const char* kSameBundleMult = "components are powers of one line bundle and k >= 2 dim + 1";
const char* kLinesTop = "resolved line arrangement: every component meets the others in at least 2 distinct points";
const char* kLinesMult = "resolved line arrangement: every component meets the others in at least 3 distinct points";

std::vector<Rational> cross(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

bool is_zero_vec(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

std::vector<Rational> normalized(std::vector<Rational> p) {
  const auto lead = std::find_if(p.begin(), p.end(), [](const Rational& x) { return x != 0; });
  const Rational c = *lead;
  for (Rational& x : p) x /= c;
  return p;
}

}  // namespace

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Established: return "Established";
    case VerdictStatus::Inconclusive: return "Inconclusive";
    case VerdictStatus::HypothesisFailed: return "HypothesisFailed";
  }
  return "?";
}

Json verdict_to_json(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["rule"] = v.rule;
  j["witnesses"] = v.witnesses;
  j["assumptions"] = v.assumptions;
  return j;
}

Verdict check_easycor(const std::vector<long long>& n) {
  if (n.empty()) throw std::invalid_argument("check_easycor: empty list of powers");
  for (long long x : n)
    if (x < 1) throw std::invalid_argument("check_easycor: powers must be positive");
  const auto big = std::find_if(n.begin(), n.end(), [](long long x) { return x > 1; });
  if (big == n.end()) {
    Verdict v = make(VerdictStatus::Inconclusive, "powers of one line bundle with some power above one: degenerates at E1");
    v.witnesses.push_back("every power equals 1");
    return v;
  }
  Verdict v = make(VerdictStatus::Established, "powers of one line bundle with some power above one: degenerates at E1");
  v.witnesses.push_back("component " + std::to_string(big - n.begin() + 1) + " has power " + std::to_string(*big));
  return v;
}

Verdict check_easycor(const NCPairData& p) {
  if (!p.flags.same_line_bundle) throw FlagMissing("same_line_bundle is not declared for this pair");
  Verdict v = check_easycor(*p.flags.same_line_bundle);
  v.assumptions.push_back("same_line_bundle supplied");
  return v;
}

SimplicialComplex ResolvedP2::complex() const {
  SimplicialComplex c;
  c.vertices = static_cast<int>(components.size());
  c.faces.insert(Subset());
  for (int i = 0; i < c.vertices; ++i) c.faces.insert(Subset::of({i}));
  for (const auto& [a, b] : intersections) c.faces.insert(Subset::of({a, b}));
  return c;
}

ClassifyResult resolve_p2_arrangement(const std::vector<std::vector<Rational>>& lines) {
  if (lines.size() < 2) throw DegenerateInput("need at least two lines");
  if (lines.size() > 30) throw DegenerateInput("at most 30 lines are supported");
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != 3) throw DegenerateInput("line " + std::to_string(i + 1) + " is not a form in 3 variables");
    if (is_zero_vec(lines[i])) throw DegenerateInput("line " + std::to_string(i + 1) + " is the zero form");
  }
  ResolvedP2 r;
  r.lines = lines;
  const int k = static_cast<int>(lines.size());
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const auto x = cross(lines[static_cast<std::size_t>(i)], lines[static_cast<std::size_t>(j)]);
      if (is_zero_vec(x))
        throw DegenerateInput("lines " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
      const auto p = normalized(x);
      if (std::find(r.points.begin(), r.points.end(), p) == r.points.end()) r.points.push_back(p);
    }
  for (const auto& p : r.points) {
    std::vector<int> through;
    for (int i = 0; i < k; ++i) {
      const auto& l = lines[static_cast<std::size_t>(i)];
      if (l[0] * p[0] + l[1] * p[1] + l[2] * p[2] == 0) through.push_back(i);
    }
    r.lines_through.push_back(through);
  }
  for (int i = 0; i < k; ++i) r.components.push_back("L" + std::to_string(i + 1));
  for (std::size_t q = 0; q < r.points.size(); ++q) {
    const auto& through = r.lines_through[q];
    if (through.size() >= 3) {
      const int e = static_cast<int>(r.components.size());
      r.blown_up.push_back(static_cast<int>(q));
      r.components.push_back("E" + std::to_string(r.blown_up.size()));
      for (int i : through) r.intersections.emplace_back(i, e);
    } else {
      r.intersections.emplace_back(through[0], through[1]);
    }
  }
  std::sort(r.intersections.begin(), r.intersections.end());
  // distinct meeting points: each intersection pair is one point
  r.meeting_points.assign(r.components.size(), 0);
  for (const auto& [a, b] : r.intersections) {
    ++r.meeting_points[static_cast<std::size_t>(a)];
    ++r.meeting_points[static_cast<std::size_t>(b)];
  }
  ClassifyResult out;
  const auto verdict = [&](int need, const char* rule) {
    Verdict v;
    v.rule = rule;
    bool all = true;
    for (std::size_t c = 0; c < r.components.size(); ++c)
      if (r.meeting_points[c] < need) {
        all = false;
        v.witnesses.push_back(r.components[c] + " meets the others in " + std::to_string(r.meeting_points[c]) + " point(s)");
      }
    v.status = all ? VerdictStatus::Established : VerdictStatus::Inconclusive;
    if (all) v.witnesses.push_back(std::to_string(r.components.size()) + " components, " + std::to_string(r.blown_up.size()) + " blowup(s)");
    return v;
  };
  out.topological = verdict(2, kLinesTop);
  out.multiplicatively_topological = verdict(3, kLinesMult);
  out.resolution = std::move(r);
  return out;
}

ClassifyResult classify_pair(const ClassifyInput& in) {
  ClassifyResult out;
  std::optional<ClassifyResult> lines;
  if (in.p2_lines && in.dim == 2) lines = resolve_p2_arrangement(*in.p2_lines);
  const auto decide = [&](long long bound, const char* bundle_rule, bool mult) {
    if (in.pi2_omega_zero.value_or(false)) {
      Verdict v = make(VerdictStatus::Established, kPi2Rule);
      v.assumptions.push_back("pi2_omega_zero supplied");
      return v;
    }
    if (in.same_line_bundle && in.k >= bound) {
      Verdict v = make(VerdictStatus::Established, bundle_rule);
      v.witnesses.push_back("k = " + std::to_string(in.k) + " >= " + std::to_string(bound));
      v.assumptions.push_back("same_line_bundle supplied");
      return v;
    }
    if (lines) {
      const Verdict& v = mult ? lines->multiplicatively_topological : lines->topological;
      if (v.established()) return v;
    }
    Verdict v = make(VerdictStatus::Inconclusive, "no sufficient criterion applies");
    if (!in.pi2_omega_zero) v.witnesses.push_back("pi2_omega_zero not supplied");
    if (!in.same_line_bundle) v.witnesses.push_back("same_line_bundle not supplied");
    else v.witnesses.push_back("k = " + std::to_string(in.k) + " < " + std::to_string(bound));
    return v;
  };
  out.topological = decide(in.dim + 1, kSameBundleTop, false);
  out.multiplicatively_topological = decide(2LL * in.dim + 1, kSameBundleMult, true);
  if (lines) out.resolution = lines->resolution;
  return out;
}

ClassifyInput classify_input(const NCPairData& p) {
  ClassifyInput in;
  in.k = p.k;
  in.dim = p.dim;
  in.pi2_omega_zero = p.flags.pi2_omega_zero;
  in.same_line_bundle = p.flags.same_line_bundle.has_value();
  return in;
}

bool check_admissible(const MultVector& v, const std::vector<long long>& kappa,
                      const std::vector<std::vector<long long>>& classes) {
  const long long w = weight(v, kappa);
  for (const auto& a : classes) {
    if (a.size() != kappa.size()) throw LengthMismatch("check_admissible: class vector has the wrong length");
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += kappa[i] * a[i];
    if (s < w) return false;
  }
  return true;
}

Verdict check_condition_A(const NCPairData& p) {
  Verdict v = make(VerdictStatus::Established, "components in one linear system, k > dim, all strata connected");
  if (!p.flags.same_line_bundle) {
    v.status = VerdictStatus::Inconclusive;
    v.witnesses.push_back("same_line_bundle not supplied");
    return v;
  }
  v.assumptions.push_back("same_line_bundle supplied");
  const auto& n = *p.flags.same_line_bundle;
  if (std::adjacent_find(n.begin(), n.end(), std::not_equal_to<>()) != n.end())
    v.witnesses.push_back("powers differ: " + vector_label(n));
  if (p.k <= p.dim)
    v.witnesses.push_back("k = " + std::to_string(p.k) + " is not greater than dim = " + std::to_string(p.dim));
  for (const auto& [s, st] : p.strata)
    if (st.components != 1)
      v.witnesses.push_back("stratum " + s.label() + " has " + std::to_string(st.components) + " components");
  if (!v.witnesses.empty()) v.status = VerdictStatus::HypothesisFailed;
  return v;
}

DegreeZeroReport degree_zero_report(const NCPairData& p) {
  if (!p.flags.anticanonical) throw NotLogCY("anticanonical flag not supplied");
  DegreeZeroReport out;
  Verdict& v = out.verdict;
  v.assumptions.push_back("anticanonical supplied");
  if (!*p.flags.anticanonical) {
    v = make(VerdictStatus::Inconclusive, "degree zero results need an anticanonical divisor");
    v.witnesses.push_back("D is not anticanonical");
    return out;
  }
  if (std::any_of(p.pole_orders.begin(), p.pole_orders.end(), [](long long a) { return a != 1; })) {
    v = make(VerdictStatus::Inconclusive, "degree zero results need an anticanonical divisor");
    v.witnesses.push_back("pole orders are not all 1: " + vector_label(p.pole_orders));
    return out;
  }
  if (p.flags.fano.value_or(false) && p.all_strata_connected()) {
    v.status = VerdictStatus::Established;
    v.rule = "Fano M with anticanonical D and connected strata: degenerates in degree zero, gr SH^0 is the Stanley-Reisner ring";
    v.assumptions.push_back("fano supplied");
  } else if (p.dim == 2) {
    v.status = VerdictStatus::Established;
    v.rule = "log Calabi-Yau surface: every primitive vector is degree zero admissible";
  } else {
    v.status = VerdictStatus::Inconclusive;
    v.rule = "no degree zero criterion applies";
    if (!p.flags.fano.value_or(false)) v.witnesses.push_back("fano not established");
    if (!p.all_strata_connected()) v.witnesses.push_back("some stratum is disconnected");
    v.witnesses.push_back("dim = " + std::to_string(p.dim) + " is not 2");
    return out;
  }
  out.sr = stanley_reisner(p);
  return out;
}

Verdict gw_degeneration_report(const NCPairData& p, const std::optional<std::map<Subset, bool>>& flags) {
  Verdict v = make(VerdictStatus::Established, "admissible primitive vectors with vanishing obstruction classes: degenerates at E1");
  if (!p.flags.effective_classes) {
    v.status = VerdictStatus::Inconclusive;
    v.witnesses.push_back("no effective curve classes supplied, admissibility unchecked");
    return v;
  }
  v.assumptions.push_back("effective_classes supplied");
  for (Subset s : p.positive_strata()) {
    const MultVector pv = primitive_vector(s, p.k);
    if (!check_admissible(pv, p.kappa, *p.flags.effective_classes))
      v.witnesses.push_back("v_" + s.label() + " = " + vector_label(pv) + " is not admissible");
  }
  if (!v.witnesses.empty()) {
    v.status = VerdictStatus::HypothesisFailed;
    return v;
  }
  const auto& gw = flags ? *flags : p.flags.gw_vanishing;
  for (Subset s : p.positive_strata()) {
    const auto it = gw.find(s);
    if (it == gw.end()) v.witnesses.push_back("no obstruction flag for " + s.label());
    else if (!it->second) v.witnesses.push_back("obstruction for " + s.label() + " not known to vanish");
  }
  if (!v.witnesses.empty()) {
    v.status = VerdictStatus::Inconclusive;
    return v;
  }
  v.assumptions.push_back("obstruction classes vanish for every stratum (user supplied)");
  return v;
}

std::map<Subset, bool> parse_gw_flags(const Json& j) {
  const Json& list = j.is_object() ? require_field(j, "gw_vanishing", "") : j;
  if (!list.is_array()) throw ParseError("gw_vanishing", "expected a list");
  std::map<Subset, bool> out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "gw_vanishing[" + std::to_string(i) + "]";
    const auto idx = require_int_list(require_field(list[i], "I", where), where + ".I");
    for (long long x : idx)
      if (x < 1 || x > 32) throw ParseError(where + ".I", "index out of range");
    const Json& val = require_field(list[i], "value", where);
    if (!val.is_boolean()) throw ParseError(where + ".value", "expected a boolean");
    out[Subset::from_one_based(idx)] = val.get<bool>();
  }
  return out;
}

}  // namespace logcoh
