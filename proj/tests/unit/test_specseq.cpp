#include <doctest.h>

#include "generators.hpp"
#include "logcoh/cli/fixtures.hpp"
#include "logcoh/specseq/io.hpp"

using namespace logcoh;
using logcoh::testing::Rng;

namespace {

template <class S>
void check_against_model(const testing::ModelComplex<S>& m) {
  const auto& c = m.complex;
  for (int r = 1; r <= c.spread() + 2; ++r) {
    const SSPage<S> pg = page(c, r);
    for (int p = c.min_filt(); p <= c.max_filt(); ++p)
      for (int q = c.min_degree() - c.max_filt(); q <= c.max_degree() - c.min_filt(); ++q) {
        CAPTURE(r);
        CAPTURE(p);
        CAPTURE(q);
        CHECK(pg.dim(p, q) == m.expected(r, p, q));
      }
  }
}

template <class S>
void check_properties(const FilteredComplex<S>& c) {
  const auto inf = infinity_page(c);
  const auto gr = total_cohomology(c);
  std::map<Bidegree, Index> inf_dims;
  for (const auto& [pq, cell] : inf.cells) inf_dims[pq] = cell.dim();
  CHECK(inf_dims == gr);
  std::map<int, Index> totals;
  for (const auto& [pq, d] : inf_dims) totals[pq.first + pq.second] += d;
  CHECK(totals == cohomology_dims(c));
  for (int r = 1; r <= c.spread() + 1; ++r) CHECK(successor_mismatches(page(c, r), page(c, r + 1)).empty());
}

FilteredComplex<Rational> two_cell(int jump) {
  FilteredComplex<Rational> c;
  c.basis = {{"x", 0, 0}, {"y", 1, jump}};
  c.d = Matrix<Rational>::Zero(2, 2);
  c.d(1, 0) = Rational(1);
  return c;
}

}  // namespace

TEST_CASE("dx = y dies on E2") {
  const auto c = fixture_complex("dx_eq_y");
  const auto e1 = page(c, 1);
  CHECK(e1.dim(0, 0) == 1);
  CHECK(e1.dim(1, 0) == 1);
  CHECK_FALSE(e1.differential_is_zero());
  CHECK(page(c, 2).cells.empty());
  CHECK(cohomology_dims(c).empty());
  const auto deg = detect_degeneration(c, 3);
  CHECK_FALSE(deg.degenerates_at_E1);
  CHECK(deg.first_nonzero_page == std::optional<int>(1));
  CHECK(deg.conclusive);
}

TEST_CASE("a d2 that kills on E3") {
  const auto c = fixture_complex("d2_only");
  CHECK(page(c, 1).differential_is_zero());
  CHECK(page(c, 2).dim(0, 0) == 1);
  CHECK(page(c, 2).dim(2, -1) == 1);
  CHECK_FALSE(page(c, 2).differential_is_zero());
  CHECK(page(c, 3).dim(0, 0) == 0);
  CHECK(page(c, 3).dim(1, 0) == 1);  // y survives
  CHECK(cohomology_dims(c) == std::map<int, Index>{{1, 1}});
  CHECK(detect_degeneration(c, 5).first_nonzero_page == std::optional<int>(2));
  const auto short_run = detect_degeneration(c, 1);
  CHECK(short_run.degenerates_at_E1);
  CHECK_FALSE(short_run.conclusive);
}

TEST_CASE("zero differential degenerates at E1") {
  FilteredComplex<Rational> c;
  c.basis = {{"a", 0, 0}, {"b", 1, 2}, {"c", 2, -1}};
  c.d = Matrix<Rational>::Zero(3, 3);
  CHECK(detect_degeneration(c, 10).degenerates_at_E1);
  CHECK(infinity_page(c).cells.size() == 3);
  CHECK(page(c, 0).cells.size() == 3);
}

TEST_CASE("jump zero pairs cancel on E1") {
  const auto c = two_cell(0);
  CHECK(page(c, 0).dim(0, 0) == 1);
  CHECK(page(c, 1).cells.empty());
}

TEST_CASE("invalid complexes") {
  auto c = two_cell(1);
  c.d(1, 0) = Rational(0);
  c.d(0, 1) = Rational(1);
  CHECK_THROWS_AS(page(c, 1), InvalidComplex);  // wrong degree
  auto lower = two_cell(1);
  lower.basis[1].filt = -1;
  CHECK_THROWS_AS(page(lower, 1), InvalidComplex);
  FilteredComplex<Rational> sq;
  sq.basis = {{"a", 0, 0}, {"b", 1, 0}, {"c", 2, 0}};
  sq.d = Matrix<Rational>::Zero(3, 3);
  sq.d(1, 0) = Rational(1);
  sq.d(2, 1) = Rational(1);
  CHECK_THROWS_WITH_AS(page(sq, 1), "d^2 != 0", InvalidComplex);
  auto bad_shape = two_cell(1);
  bad_shape.d = Matrix<Rational>::Zero(3, 2);
  CHECK_THROWS_AS(validate_complex(bad_shape), InvalidComplex);
}

TEST_CASE("products must respect the filtration") {
  FilteredComplex<Rational> c;
  c.basis = {{"1", 0, 0}, {"a", 1, 1}};
  c.d = Matrix<Rational>::Zero(2, 2);
  c.mult = std::vector<SparseVec<Rational>>{{{0, Rational(1)}}, {{1, Rational(1)}}, {{1, Rational(1)}}, {}};
  CHECK_NOTHROW(validate_complex(c));
  c.basis[1].filt = -1;  // a * a = 0, 1 * a = a is fine
  CHECK_NOTHROW(validate_complex(c));
  FilteredComplex<Rational> bad;
  bad.basis = {{"1", 0, 0}, {"a", 1, 1}, {"b", 2, 1}};
  bad.d = Matrix<Rational>::Zero(3, 3);
  std::vector<SparseVec<Rational>> m(9);
  for (Index i = 0; i < 3; ++i) {
    m[static_cast<std::size_t>(i)] = {{i, Rational(1)}};
    m[static_cast<std::size_t>(3 * i)] = {{i, Rational(1)}};
  }
  m[4] = {{2, Rational(1)}};  // a * a = b lands in F^1, not F^2
  bad.mult = m;
  CHECK_THROWS_AS(validate_complex(bad), ProductNotFiltered);
  CHECK_THROWS_AS(page_product(two_cell(1), 1), ProductNotFiltered);
}

TEST_CASE("model complexes over Q") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    const auto m = testing::random_filtered_complex<Rational>(rng, 14, 4);
    check_against_model(m);
    check_properties(m.complex);
  }
}

TEST_CASE("model complexes over F1009") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    const auto m = testing::random_filtered_complex<F1009>(rng, 14, 4);
    check_against_model(m);
    check_properties(m.complex);
  }
}

TEST_CASE("over F2 a doubled differential vanishes") {
  auto c = two_cell(1);
  c.d(1, 0) = Rational(2);
  CHECK(page(c, 1).differential_is_zero() == false);
  const auto c2 = convert_complex<Zp<2>>(c);
  CHECK(page(c2, 1).differential_is_zero());
  CHECK(cohomology_dims(c2) == std::map<int, Index>{{0, 1}, {1, 1}});
}

TEST_CASE("random DGAs satisfy Leibniz on every page") {
  Rng rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    CAPTURE(trial);
    const auto c = testing::random_filtered_dga<Rational>(rng);
    REQUIRE_NOTHROW(validate_complex(c));
    for (int r = 1; r <= c.spread() + 1; ++r) {
      const auto prod = page_product(c, r);
      CHECK(prod.leibniz_failures.empty());
    }
    check_properties(c);
  }
}

TEST_CASE("chain level Leibniz failure is rejected") {
  // Lambda(x) (x) k[y]/y^2 with dx = y
  FilteredComplex<Rational> c;
  c.basis = {{"1", 0, 0}, {"x", 1, 0}, {"y", 2, 1}, {"xy", 3, 1}};
  c.d = Matrix<Rational>::Zero(4, 4);
  c.d(2, 1) = Rational(1);
  std::vector<SparseVec<Rational>> m(16);
  for (Index i = 0; i < 4; ++i) {
    m[static_cast<std::size_t>(i)] = {{i, Rational(1)}};
    m[static_cast<std::size_t>(4 * i)] = {{i, Rational(1)}};
  }
  m[1 * 4 + 2] = {{3, Rational(1)}};
  m[2 * 4 + 1] = {{3, Rational(1)}};
  c.mult = m;
  CHECK_NOTHROW(validate_complex(c));
  CHECK(page_product(c, 1).leibniz_failures.empty());
  // d(x x) = 0 but dx x - x dx = yx - xy
  auto bad = c;
  bad.mult->at(1 * 4 + 2) = {{3, Rational(2)}};
  CHECK_THROWS_AS(validate_complex(bad), ProductNotFiltered);
}

TEST_CASE("log ring as a complex") {
  const auto l = build_log_ring(fixture_pair("cp2_cubic"), 6);
  const auto c = log_ring_complex(l);
  CHECK(c.dim() == l.dim());
  CHECK(detect_degeneration(c, 10).degenerates_at_E1);
  CHECK(bigrade_log_class({2}, 1, {3}, {1}) == Bidegree{-6, 7});
  CHECK(page_product(c, 1).leibniz_failures.empty());
}

TEST_CASE("complex JSON round trip") {
  for (const char* name : {"dx_eq_y", "d2_only"}) {
    const auto c = fixture_complex(name);
    const auto back = complex_from_json(complex_to_json(c));
    CHECK(back.d == c.d);
    CHECK(back.basis.size() == c.basis.size());
  }
  CHECK_THROWS_AS(load_complex("{\"schema\": \"filtcx/1\", \"basis\": [{\"name\": \"x\"}]}"), ParseError);
}
