#include <doctest.h>

#include "logcoh/arrangements/arrangement.hpp"
#include "logcoh/cli/fixtures.hpp"
#include "logcoh/criteria/criteria.hpp"

using namespace logcoh;

namespace {

using Lines = std::vector<std::vector<Rational>>;

Lines lines_of(const std::vector<std::vector<int>>& rows) {
  Lines out;
  for (const auto& r : rows) {
    std::vector<Rational> l;
    for (int x : r) l.emplace_back(x);
    out.push_back(l);
  }
  return out;
}

Lines generic_lines(int count) {
  std::vector<std::vector<int>> rows;
  for (int l = 1; l <= count; ++l) rows.push_back({1, l, l * l});
  return lines_of(rows);
}

int rank_of(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Established: return 2;
    case VerdictStatus::Inconclusive: return 1;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("line bundle powers") {
  CHECK(check_easycor(std::vector<long long>{3}).established());
  CHECK(check_easycor(std::vector<long long>{1, 2}).established());
  CHECK(check_easycor(std::vector<long long>{1, 1, 1}).status == VerdictStatus::Inconclusive);
  CHECK(check_easycor(fixture_pair("cp2_cubic")).established());
  NCPairData p = fixture_pair("cp2_cubic");
  p.flags.same_line_bundle.reset();
  CHECK_THROWS_AS(check_easycor(p), FlagMissing);
  CHECK_FALSE(check_easycor(std::vector<long long>{2}).rule.empty());
}

TEST_CASE("classify_pair rules") {
  ClassifyInput in;
  in.k = 2;
  in.dim = 2;
  auto r = classify_pair(in);
  CHECK(r.topological.status == VerdictStatus::Inconclusive);
  CHECK(r.multiplicatively_topological.status == VerdictStatus::Inconclusive);
  in.pi2_omega_zero = true;
  r = classify_pair(in);
  CHECK(r.topological.established());
  CHECK(r.multiplicatively_topological.established());
  CHECK_FALSE(r.topological.assumptions.empty());
  in.pi2_omega_zero = false;
  in.same_line_bundle = true;
  in.k = 5;
  r = classify_pair(in);
  CHECK(r.topological.established());
  CHECK(r.multiplicatively_topological.established());
  for (int k = 3; k <= 5; ++k) {
    in.k = k;
    r = classify_pair(in);
    CHECK(r.topological.established());
    CHECK(r.multiplicatively_topological.established() == (k >= 5));
  }
  in.k = 2;
  CHECK_FALSE(classify_pair(in).topological.established());
}

TEST_CASE("classify_pair is monotone in k") {
  for (int dim = 1; dim <= 3; ++dim)
    for (int same = 0; same <= 1; ++same)
      for (int pi2 = 0; pi2 <= 2; ++pi2) {
        ClassifyInput in;
        in.dim = dim;
        in.same_line_bundle = same;
        if (pi2 < 2) in.pi2_omega_zero = pi2 == 1;
        int top = -1, mult = -1;
        for (int k = 1; k <= 9; ++k) {
          in.k = k;
          const auto r = classify_pair(in);
          CHECK(rank_of(r.topological.status) >= top);
          CHECK(rank_of(r.multiplicatively_topological.status) >= mult);
          top = rank_of(r.topological.status);
          mult = rank_of(r.multiplicatively_topological.status);
        }
      }
}

TEST_CASE("classify never claims a negative") {
  ClassifyInput in;
  for (int k = 0; k <= 6; ++k)
    for (int dim = 1; dim <= 3; ++dim) {
      in.k = k;
      in.dim = dim;
      const auto r = classify_pair(in);
      CHECK(r.topological.status != VerdictStatus::HypothesisFailed);
      CHECK(r.multiplicatively_topological.status != VerdictStatus::HypothesisFailed);
    }
}

TEST_CASE("generic lines in P2") {
  const auto three = resolve_p2_arrangement(generic_lines(3));
  CHECK(three.topological.established());
  CHECK(three.multiplicatively_topological.status == VerdictStatus::Inconclusive);
  CHECK(three.resolution->blown_up.empty());
  CHECK(three.resolution->points.size() == 3);
  const auto six = resolve_p2_arrangement(generic_lines(6));
  CHECK(six.topological.established());
  CHECK(six.multiplicatively_topological.established());
  for (int m : six.resolution->meeting_points) CHECK(m == 5);
}

TEST_CASE("three concurrent lines and one more") {
  const auto r = resolve_p2_arrangement(lines_of({{1, 0, 0}, {0, 1, 0}, {1, -1, 0}, {0, 0, 1}}));
  const auto& res = *r.resolution;
  CHECK(res.blown_up.size() == 1);
  CHECK(res.components == std::vector<std::string>{"L1", "L2", "L3", "L4", "E1"});
  // E1 meets exactly the lines through its point
  std::vector<int> met;
  for (const auto& [a, b] : res.intersections)
    if (b == 4) met.push_back(a);
  CHECK(met == std::vector<int>{0, 1, 2});
  const auto c = res.complex();
  CHECK(c.downward_closed());
  CHECK_FALSE(c.is_face(Subset::of({0, 1})));  // separated by the blowup
  CHECK(c.is_face(Subset::of({0, 3})));
}

TEST_CASE("degenerate line input") {
  CHECK_THROWS_AS(resolve_p2_arrangement(generic_lines(1)), DegenerateInput);
  CHECK_THROWS_AS(resolve_p2_arrangement(lines_of({{1, 2, 3}, {2, 4, 6}})), DegenerateInput);
  CHECK_THROWS_AS(resolve_p2_arrangement(lines_of({{0, 0, 0}, {1, 0, 0}})), DegenerateInput);
  CHECK_THROWS_AS(resolve_p2_arrangement(lines_of({{1, 0}, {0, 1}})), DegenerateInput);
}

TEST_CASE("a pencil is never topological by this rule") {
  const auto r = resolve_p2_arrangement(lines_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}));
  CHECK(r.topological.status == VerdictStatus::Inconclusive);
}

TEST_CASE("admissibility") {
  CHECK(check_admissible({1, 0, 0}, {1, 1, 1}, {{1, 1, 1}}));
  CHECK(check_admissible({1, 1, 0}, {1, 1, 1}, {{1, 1, 1}}));
  CHECK(check_admissible({1, 1}, {1, 1}, {}));
  CHECK_FALSE(check_admissible({1, 1}, {1, 1}, {{1, 0}}));
  CHECK_THROWS_AS(check_admissible({1, 1}, {1, 1}, {{1, 0, 0}}), LengthMismatch);
  CHECK_THROWS_AS(check_admissible({1}, {1, 1}, {}), LengthMismatch);
}

TEST_CASE("condition A") {
  CHECK(check_condition_A(build_generic_pair(2, 4)).established());
  CHECK(check_condition_A(build_generic_pair(2, 2)).status == VerdictStatus::HypothesisFailed);
  NCPairData split = build_generic_pair(2, 4);
  split.strata.at(Subset::of({0, 1})).components = 2;
  const auto v = check_condition_A(split);
  CHECK(v.status == VerdictStatus::HypothesisFailed);
  CHECK_FALSE(v.witnesses.empty());
  NCPairData unequal = build_generic_pair(2, 4);
  unequal.flags.same_line_bundle = std::vector<long long>{1, 1, 1, 2};
  CHECK(check_condition_A(unequal).status == VerdictStatus::HypothesisFailed);
  NCPairData unknown = build_generic_pair(2, 4);
  unknown.flags.same_line_bundle.reset();
  CHECK(check_condition_A(unknown).status == VerdictStatus::Inconclusive);
}

TEST_CASE("degree zero") {
  const auto lines = degree_zero_report(build_generic_pair(2, 3));
  CHECK(lines.verdict.established());
  REQUIRE(lines.sr);
  CHECK(lines.sr->relation_strings() == std::vector<std::string>{"t1*t2*t3"});
  NCPairData surface = build_generic_pair(2, 3);
  surface.flags.fano = false;
  CHECK(degree_zero_report(surface).verdict.established());
  NCPairData three = build_generic_pair(3, 4);
  three.flags.fano = false;
  CHECK(degree_zero_report(three).verdict.status == VerdictStatus::Inconclusive);
  three.flags.fano.reset();
  CHECK(degree_zero_report(three).verdict.status == VerdictStatus::Inconclusive);
  NCPairData no_flag = build_generic_pair(2, 3);
  no_flag.flags.anticanonical.reset();
  CHECK_THROWS_AS(degree_zero_report(no_flag), NotLogCY);
  // flipping each hypothesis downgrades
  NCPairData fano3 = build_generic_pair(3, 4);
  CHECK(degree_zero_report(fano3).verdict.established());
  fano3.strata.at(Subset::of({0})).components = 2;
  CHECK_FALSE(degree_zero_report(fano3).verdict.established());
  NCPairData poles = build_generic_pair(3, 4);
  poles.pole_orders[0] = 2;
  CHECK_FALSE(degree_zero_report(poles).verdict.established());
  NCPairData not_acan = build_generic_pair(3, 4);
  not_acan.flags.anticanonical = false;
  CHECK_FALSE(degree_zero_report(not_acan).verdict.established());
}

TEST_CASE("obstruction flags") {
  NCPairData p = build_generic_pair(2, 3);
  std::map<Subset, bool> all;
  for (Subset s : p.positive_strata()) all[s] = true;
  CHECK(gw_degeneration_report(p, all).established());
  CHECK_FALSE(gw_degeneration_report(p, all).assumptions.empty());
  auto one_false = all;
  one_false.begin()->second = false;
  CHECK(gw_degeneration_report(p, one_false).status == VerdictStatus::Inconclusive);
  auto missing = all;
  missing.erase(missing.begin());
  CHECK(gw_degeneration_report(p, missing).status == VerdictStatus::Inconclusive);
  NCPairData inadmissible = p;
  inadmissible.flags.effective_classes = std::vector<std::vector<long long>>{{1, 0, 0}};
  const auto v = gw_degeneration_report(inadmissible, all);
  CHECK(v.status == VerdictStatus::HypothesisFailed);
  REQUIRE_FALSE(v.witnesses.empty());
  // flags stored on the pair are used by default
  p.flags.gw_vanishing = all;
  CHECK(gw_degeneration_report(p).established());
}

TEST_CASE("parse obstruction flags") {
  const auto a = parse_gw_flags(Json::parse(R"({"gw_vanishing": [{"I": [1, 2], "value": true}]})"));
  CHECK(a == std::map<Subset, bool>{{Subset::of({0, 1}), true}});
  const auto b = parse_gw_flags(Json::parse(R"([{"I": [3], "value": false}])"));
  CHECK(b == std::map<Subset, bool>{{Subset::of({2}), false}});
  CHECK_THROWS_AS(parse_gw_flags(Json::parse(R"([{"I": [3]}])")), ParseError);
}

TEST_CASE("verdict json") {
  const Json j = verdict_to_json(check_easycor(std::vector<long long>{3}));
  CHECK(j["status"] == "Established");
  CHECK(j.contains("rule"));
  CHECK(j["witnesses"].is_array());
}
