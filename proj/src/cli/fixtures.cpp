#include "logcoh/cli/fixtures.hpp"

#include "logcoh/specseq/io.hpp"

#include <optional>

namespace logcoh {
namespace {

struct Product {
  Index a, b;
  SparseVec<Rational> value;
};

// structure constants from the nonzero products of non-unit elements;
// products with the unit (index 0) are filled in
GradedAlgebra algebra(std::vector<BasisElement> basis, const std::vector<Product>& products) {
  const Index n = static_cast<Index>(basis.size());
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(i)] = {{i, Rational(1)}};
    table[static_cast<std::size_t>(i * n)] = {{i, Rational(1)}};
  }
  for (const Product& p : products) table[static_cast<std::size_t>(p.a * n + p.b)] = p.value;
  return GradedAlgebra(std::move(basis), 0, std::move(table));
}

NCPairData cp2_cubic() {
  NCPairData p;
  p.k = 1;
  p.dim = 2;
  p.kappa = {3};
  p.pole_orders = {1};
  // X = CP^2 minus a smooth cubic
  p.strata[Subset()] = Stratum{1, algebra({{"1", 0}, {"x", 2}, {"y", 2}}, {})};
  // circle bundle over the cubic with Euler class 9 pt
  const Rational one(1), minus(-1);
  p.strata[Subset::of({0})] = Stratum{
      1, algebra({{"1", 0}, {"e1", 1}, {"e2", 1}, {"f1", 2}, {"f2", 2}, {"top", 3}},
                 {{1, 4, {{5, one}}}, {4, 1, {{5, one}}}, {2, 3, {{5, minus}}}, {3, 2, {{5, minus}}}})};
  Matrix<Rational> r = Matrix<Rational>::Zero(6, 3);
  r(0, 0) = 1;
  r(3, 1) = 1;
  r(4, 2) = 1;
  p.restrictions[{Subset(), Subset::of({0})}] = r;
  p.flags.fano = true;
  p.flags.anticanonical = true;
  p.flags.same_line_bundle = std::vector<long long>{3};
  p.flags.effective_classes = std::vector<std::vector<long long>>{{3}};
  p.h1_relations = {{3}};
  return p;
}

NCPairData x_equals_c() {
  NCPairData p;
  p.k = 1;
  p.dim = 1;
  p.kappa = {1};
  p.pole_orders = {2};
  p.strata[Subset()] = Stratum{1, GradedAlgebra::ground()};
  p.strata[Subset::of({0})] = Stratum{1, exterior_algebra({{"e", 1}})};
  Matrix<Rational> r = Matrix<Rational>::Zero(2, 1);
  r(0, 0) = 1;
  p.restrictions[{Subset(), Subset::of({0})}] = r;
  p.flags.fano = true;
  p.flags.anticanonical = false;
  p.flags.same_line_bundle = std::vector<long long>{1};
  p.flags.effective_classes = std::vector<std::vector<long long>>{{1}};
  p.h1_relations = {{1}};
  return p;
}

NCPairData broken_zero_restriction() {
  NCPairData p = build_generic_pair(2, 3);
  auto& r = p.restrictions.at({Subset::of({0}), Subset::of({0, 1})});
  r.setZero();
  return p;
}

FilteredComplex<Rational> dx_eq_y() {
  FilteredComplex<Rational> c;
  c.basis = {{"x", 0, 0}, {"y", 1, 1}};
  c.d = Matrix<Rational>::Zero(2, 2);
  c.d(1, 0) = 1;
  return c;
}

FilteredComplex<Rational> d2_only() {
  FilteredComplex<Rational> c;
  c.basis = {{"x", 0, 0}, {"y", 1, 1}, {"z", 1, 2}};
  c.d = Matrix<Rational>::Zero(3, 3);
  c.d(2, 0) = 1;
  return c;
}

std::optional<int> numbered(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (rest.size() > 2 || !std::all_of(rest.begin(), rest.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
    return std::nullopt;
  return std::stoi(rest);
}

std::optional<int> pants(const std::string& name) {
  const auto n = numbered(name, "pants_n");
  return n && *n >= 1 && *n <= 3 ? n : std::nullopt;
}
std::optional<int> lines(const std::string& name) {
  const auto k = numbered(name, "p2_lines");
  return k && *k >= 3 && *k <= 6 ? k : std::nullopt;
}
std::optional<int> boolean(const std::string& name) {
  const auto n = numbered(name, "boolean_");
  return n && *n >= 1 && *n <= 8 ? n : std::nullopt;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"cp2_cubic", "pants_n1", "pants_n2", "pants_n3", "p2_lines3", "p2_lines4", "p2_lines5", "p2_lines6",
          "boolean_2", "boolean_3", "boolean_4", "boolean_5", "dx_eq_y", "d2_only", "x_equals_c",
          "broken_zero_restriction"};
}

FixtureKind fixture_kind(const std::string& name) {
  if (boolean(name)) return FixtureKind::Arrangement;
  if (name == "dx_eq_y" || name == "d2_only") return FixtureKind::Complex;
  if (name == "cp2_cubic" || name == "x_equals_c" || name == "broken_zero_restriction" || pants(name) || lines(name))
    return FixtureKind::Pair;
  throw UnknownFixture("unknown fixture '" + name + "'");
}

NCPairData fixture_pair(const std::string& name) {
  if (name == "cp2_cubic") return cp2_cubic();
  if (name == "x_equals_c") return x_equals_c();
  if (name == "broken_zero_restriction") return broken_zero_restriction();
  if (const auto n = pants(name)) return build_generic_pair(*n, *n + 2);
  if (const auto k = lines(name)) return build_generic_pair(2, *k);
  throw UnknownFixture("'" + name + "' is not a pair fixture");
}

Arrangement fixture_arrangement(const std::string& name) {
  if (const auto n = boolean(name)) return boolean_arrangement(*n);
  throw UnknownFixture("'" + name + "' is not an arrangement fixture");
}

FilteredComplex<Rational> fixture_complex(const std::string& name) {
  if (name == "dx_eq_y") return dx_eq_y();
  if (name == "d2_only") return d2_only();
  throw UnknownFixture("'" + name + "' is not a complex fixture");
}

std::string fixture_text(const std::string& name) {
  switch (fixture_kind(name)) {
    case FixtureKind::Pair: return serialize_pair(fixture_pair(name));
    case FixtureKind::Arrangement: return dump_json(arrangement_to_json(fixture_arrangement(name)));
    case FixtureKind::Complex: return dump_json(complex_to_json(fixture_complex(name)));
  }
  return {};
}

std::vector<std::string> connected_pair_fixtures() {
  std::vector<std::string> out;
  for (const std::string& n : fixture_names())
    if (fixture_kind(n) == FixtureKind::Pair && n != "broken_zero_restriction") out.push_back(n);
  return out;
}

}  // namespace logcoh
