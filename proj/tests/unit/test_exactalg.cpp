#include <doctest.h>

#include "generators.hpp"
#include "logcoh/exactalg/smith.hpp"

using namespace logcoh;
using logcoh::testing::Rng;

namespace {

Matrix<Rational> qmat(std::initializer_list<std::initializer_list<int>> rows) {
  Matrix<Rational> m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix imat(std::initializer_list<std::initializer_list<int>> rows) {
  IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Laplace expansion, fine for the tiny matrices used here
Integer laplace(const IntMatrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer det = 0;
  for (Index c = 0; c < n; ++c) {
    IntMatrix minor(n - 1, n - 1);
    for (Index i = 1; i < n; ++i)
      for (Index j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    det += (c % 2 ? -1 : 1) * m(0, c) * laplace(minor);
  }
  return det;
}

// invariant factors from gcds of k x k minors
std::vector<Integer> invariant_factors(const IntMatrix& m) {
  const Index r = m.rows(), c = m.cols(), top = std::min(r, c);
  std::vector<Integer> out;
  Integer prev = 1;
  for (Index k = 1; k <= top; ++k) {
    Integer g = 0;
    for (unsigned rows = 0; rows < (1u << r); ++rows) {
      if (__builtin_popcount(rows) != k) continue;
      for (unsigned cols = 0; cols < (1u << c); ++cols) {
        if (__builtin_popcount(cols) != k) continue;
        IntMatrix sub(k, k);
        Index a = 0;
        for (Index i = 0; i < r; ++i) {
          if (!(rows >> i & 1u)) continue;
          Index b = 0;
          for (Index j = 0; j < c; ++j)
            if (cols >> j & 1u) sub(a, b++) = m(i, j);
          ++a;
        }
        g = boost::multiprecision::gcd(g, Integer(abs(laplace(sub))));
      }
    }
    out.push_back(g == 0 ? Integer(0) : g / prev);
    if (g == 0) {
      while (static_cast<Index>(out.size()) < top) out.push_back(0);
      break;
    }
    prev = g;
  }
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  auto id = rref<Rational>(Matrix<Rational>::Identity(3, 3));
  CHECK(id.rank == 3);
  CHECK(id.pivot_columns == std::vector<Index>{0, 1, 2});
  auto z = rref<Rational>(Matrix<Rational>::Zero(2, 4));
  CHECK(z.rank == 0);
  CHECK(z.pivot_columns.empty());
  CHECK(rank<Rational>(qmat({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis<Rational>(Matrix<Rational>::Identity(4, 4)).cols() == 0);
  CHECK(kernel_basis<Rational>(Matrix<Rational>::Zero(2, 3)).cols() == 3);
  const auto m = qmat({{1, 1, 0}});
  const auto k = kernel_basis<Rational>(m);
  CHECK(k.cols() == 2);
  CHECK(all_zero(Matrix<Rational>(m * k)));
  Vector<Rational> v(3);
  v << 1, -1, 0;
  CHECK(in_span<Rational>(k, v));
}

TEST_CASE("subquotient examples") {
  const Matrix<Rational> e = Matrix<Rational>::Identity(2, 2);
  CHECK(subquotient<Rational>(e, e.leftCols(1)).dim() == 1);
  CHECK(subquotient<Rational>(e, e).dim() == 0);
  const auto z = qmat({{1, 0}, {1, 1}});
  const auto b = qmat({{1}, {2}});
  const auto q = subquotient<Rational>(z, b);
  CHECK(q.dim() == 1);
  CHECK(all_zero(Matrix<Rational>(q.projection * b)));
  CHECK(Matrix<Rational>(q.projection * q.representatives) == Matrix<Rational>::Identity(1, 1));
  CHECK_THROWS_AS(subquotient<Rational>(e.leftCols(1), e.rightCols(1)), ContainmentViolation);
}

TEST_CASE("smith examples") {
  CHECK(smith_normal_form(IntMatrix::Identity(3, 3)).S == IntMatrix::Identity(3, 3));
  CHECK(smith_normal_form(imat({{9}})).S == imat({{9}}));
  CHECK(smith_normal_form(imat({{2, 4}, {6, 8}})).diagonal() == std::vector<Integer>{2, 4});
  CHECK(determinant(imat({{2, 4}, {6, 8}})) == -8);
}

TEST_CASE("rank nullity and subquotient additivity on random matrices") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = testing::uniform(rng, 1, 7), c = testing::uniform(rng, 1, 7);
    const auto m = testing::random_matrix<Rational>(rng, r, c);
    const auto k = kernel_basis<Rational>(m);
    REQUIRE(k.cols() + rank<Rational>(m) == c);
    CHECK(all_zero(Matrix<Rational>(m * k)));
    // Z = columns of m, B = a combination of them
    const auto mix = testing::random_matrix<Rational>(rng, c, testing::uniform(rng, 0, 3));
    const Matrix<Rational> b = mix.cols() ? Matrix<Rational>(m * mix) : Matrix<Rational>(r, 0);
    const auto q = subquotient<Rational>(m, b);
    CHECK(q.dim() == rank<Rational>(m) - (b.cols() ? rank<Rational>(b) : 0));
  }
}

TEST_CASE("rank nullity over F_1009") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const Index r = testing::uniform(rng, 1, 8), c = testing::uniform(rng, 1, 8);
    const auto m = testing::random_matrix<F1009>(rng, r, c, 500);
    const auto k = kernel_basis<F1009>(m);
    CHECK(k.cols() + rank<F1009>(m) == c);
    CHECK(all_zero(Matrix<F1009>(m * k)));
  }
}

TEST_CASE("smith normal form against determinantal divisors") {
  Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const Index r = testing::uniform(rng, 1, 4), c = testing::uniform(rng, 1, 4);
    IntMatrix m(r, c);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j) m(i, j) = testing::uniform(rng, -6, 6) * (testing::uniform(rng, 0, 3) ? 1 : 2);
    const SmithForm f = smith_normal_form(m);
    CAPTURE(trial);
    REQUIRE(IntMatrix(f.U * m * f.V) == f.S);
    CHECK(abs(laplace(f.U)) == 1);
    CHECK(abs(laplace(f.V)) == 1);
    const auto d = f.diagonal();
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    for (Index i = 0; i < r; ++i)
      for (Index j = 0; j < c; ++j)
        if (i != j) CHECK(f.S(i, j) == 0);
    CHECK(d == invariant_factors(m));
    if (r == c) CHECK(determinant(m) == laplace(m));
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("+7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
  CHECK(ScalarTraits<F1009>::from_rational(Rational(1, 2)) * F1009(2) == F1009(1));
}
