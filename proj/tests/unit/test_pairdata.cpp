#include <doctest.h>

#include "logcoh/arrangements/arrangement.hpp"
#include "logcoh/cli/fixtures.hpp"
#include "logcoh/pairdata/pair.hpp"

#include <algorithm>

using namespace logcoh;

namespace {

// one smooth divisor on a curve: X has H^0 only, the circle bundle adds e
const char* kMinimal = R"({
  "schema": "ncpair/1", "k": 1, "dim": 1, "kappa": [1], "pole_orders": [1],
  "strata": [
    {"I": [], "components": 1, "ring": {"basis": [{"name": "1", "deg": 0}], "unit": 0}},
    {"I": [1], "components": 1, "ring": {"basis": [{"name": "1", "deg": 0}, {"name": "e", "deg": 1}], "unit": 0}}
  ],
  "restrictions": [{"from": [], "to": [1], "matrix": [[1], [0]]}]
})";

bool has_issue(const ValidationReport& r, const std::string& needle) {
  return std::any_of(r.issues.begin(), r.issues.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

std::vector<std::vector<int>> faces_of(const SimplicialComplex& c) {
  std::vector<std::vector<int>> out;
  for (Subset s : c.faces) out.push_back(s.elements());
  return out;
}

}  // namespace

TEST_CASE("subset order and labels") {
  CHECK(Subset::of({0, 2}).label() == "{1,3}");
  CHECK(Subset().label() == "{}");
  CHECK(Subset::from_one_based({2, 1}) == Subset::of({0, 1}));
  CHECK(Subset::of({2}) < Subset::of({0, 1}));
  CHECK(Subset::of({0, 1}) < Subset::of({0, 2}));
  CHECK(subsets_of(Subset::full(3)).size() == 8);
  CHECK(subsets_of(Subset::full(3)).front() == Subset());
}

TEST_CASE("minimal pair loads with two strata") {
  const NCPairData p = load_pair(kMinimal);
  CHECK(p.k == 1);
  CHECK(p.strata.size() == 2);
  CHECK(validate(p).ok());
  CHECK(p.restriction(Subset(), Subset()) == Matrix<Rational>::Identity(1, 1));
}

TEST_CASE("missing restriction is a parse error") {
  std::string text = kMinimal;
  const auto at = text.find("\"restrictions\"");
  text = text.substr(0, at) + "\"restrictions\": []}";
  try {
    load_pair(text);
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("missing restriction") != std::string::npos);
  }
}

TEST_CASE("parse errors name the field") {
  const auto where = [](const std::string& text) {
    try {
      load_pair(text);
    } catch (const ParseError& e) {
      return e.where();
    }
    return std::string("none");
  };
  CHECK(where("{\"schema\": \"ncpair/2\"}") == "schema");
  CHECK(where("{\"schema\": \"ncpair/1\", \"k\": 1, \"dim\": 1, \"kappa\": [1, 2], \"pole_orders\": [1]}") == "kappa");
  CHECK(where("{ not json") == "line 1");
  std::string bad = kMinimal;
  bad.replace(bad.find("[[1], [0]]"), 10, "[[1], [\"x\"]]");
  CHECK(where(bad).find("restrictions[0].matrix[1][0]") != std::string::npos);
}

TEST_CASE("pants fixture shape") {
  const NCPairData p = fixture_pair("pants_n1");
  CHECK(p.k == 3);
  CHECK(p.strata.size() == 4);  // empty set and three points, no pairwise meets on a curve
  const NCPairData q = fixture_pair("pants_n2");
  CHECK(q.k == 4);
  CHECK(q.strata.size() == 11);
}

TEST_CASE("validate accepts builder output") {
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= n + 2; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(validate(build_generic_pair(n, k)).ok());
    }
  for (const auto& name : connected_pair_fixtures()) {
    CAPTURE(name);
    CHECK(validate(fixture_pair(name)).ok());
  }
}

TEST_CASE("validate reports broken multiplicativity and functoriality") {
  NCPairData p = build_generic_pair(2, 3);
  auto& r = p.restrictions.at({Subset(), Subset::of({0})});
  r.setZero();
  r(0, 0) = Rational(1);
  r(1, 0) = Rational(1);  // 1 -> 1 + (something in degree 1): not degree preserving either
  const auto rep = validate(p);
  CHECK_FALSE(rep.ok());
  CHECK(has_issue(rep, "r*_{{},{1}}"));
  CHECK(has_issue(rep, "functoriality"));
}

TEST_CASE("validate reports a closure failure") {
  NCPairData p = build_generic_pair(2, 3);
  p.strata.erase(Subset::of({1}));
  for (auto it = p.restrictions.begin(); it != p.restrictions.end();)
    it = it->first.first == Subset::of({1}) || it->first.second == Subset::of({1}) ? p.restrictions.erase(it) : std::next(it);
  const auto rep = validate(p);
  CHECK(has_issue(rep, "closure: stratum {1,2} present but {2} absent"));
}

TEST_CASE("validate checks component counts and degree bounds") {
  NCPairData p = load_pair(kMinimal);
  p.strata.at(Subset::of({0})).components = 2;
  CHECK(has_issue(validate(p), "components declared"));
  NCPairData q = load_pair(kMinimal);
  q.dim = 0;
  CHECK(has_issue(validate(q), "outside 0.."));
  NCPairData r = load_pair(kMinimal);
  r.kappa = {0};
  CHECK(has_issue(validate(r), "kappa_1 < 1"));
}

TEST_CASE("dual complexes") {
  CHECK(faces_of(dual_complex(fixture_pair("pants_n1"))) == std::vector<std::vector<int>>{{}, {0}, {1}, {2}});
  const auto lines = dual_complex(build_generic_pair(2, 3));
  CHECK(lines.faces.size() == 7);
  CHECK_FALSE(lines.is_face(Subset::full(3)));
  CHECK(lines.minimal_nonfaces() == std::vector<Subset>{Subset::full(3)});
  CHECK(faces_of(dual_complex(load_pair(kMinimal))) == std::vector<std::vector<int>>{{}, {0}});
  for (const auto& name : connected_pair_fixtures()) CHECK(dual_complex(fixture_pair(name)).downward_closed());
}

TEST_CASE("round trip through serialization") {
  for (const auto& name : connected_pair_fixtures()) {
    CAPTURE(name);
    const NCPairData p = fixture_pair(name);
    const std::string text = serialize_pair(p);
    const NCPairData q = load_pair(text);
    CHECK(serialize_pair(q) == text);
    CHECK(q.k == p.k);
    CHECK(q.kappa == p.kappa);
    CHECK(q.restrictions == p.restrictions);
    for (const auto& [s, st] : p.strata) CHECK(q.ring(s) == st.ring);
  }
}

TEST_CASE("round trip keeps flags") {
  NCPairData p = fixture_pair("cp2_cubic");
  p.flags.pi2_omega_zero = false;
  p.flags.gw_vanishing[Subset::of({0})] = true;
  const NCPairData q = load_pair(serialize_pair(p));
  CHECK(q.flags.fano == p.flags.fano);
  CHECK(q.flags.pi2_omega_zero == std::optional<bool>(false));
  CHECK(q.flags.gw_vanishing == p.flags.gw_vanishing);
  CHECK(q.flags.same_line_bundle == p.flags.same_line_bundle);
  CHECK(q.flags.effective_classes == p.flags.effective_classes);
  CHECK(q.h1_relations == p.h1_relations);
}
