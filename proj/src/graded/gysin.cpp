#include "logcoh/graded/gysin.hpp"

namespace logcoh {
namespace {

// cup with e as a map H^{k} -> H^{k+2}
Matrix<Rational> cup_block(const GradedAlgebra& base, const Matrix<Rational>& cup, int k) {
  const auto src = base.degree_indices(k), tgt = base.degree_indices(k + 2);
  Matrix<Rational> m(static_cast<Index>(tgt.size()), static_cast<Index>(src.size()));
  for (std::size_t r = 0; r < tgt.size(); ++r)
    for (std::size_t c = 0; c < src.size(); ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = cup(tgt[r], src[c]);
  return m;
}

}  // namespace

std::vector<GysinGroup> gysin_circle_bundle(const GradedAlgebra& base, const Vector<Rational>& euler,
                                            Coefficients coefficients) {
  if (euler.size() != base.dim()) throw DegreeMismatch("euler class has the wrong length");
  for (Index i = 0; i < euler.size(); ++i)
    if (euler(i) != 0 && base.degree(i) != 2)
      throw DegreeMismatch("euler class has a component of degree " + std::to_string(base.degree(i)));
  const Matrix<Rational> cup = base.left_multiplication(euler);
  const auto count = [&](int k) { return static_cast<Index>(base.degree_indices(k).size()); };

  std::vector<GysinGroup> out;
  for (int k = base.min_degree(); k <= base.max_degree() + 1; ++k) {
    const Matrix<Rational> into = cup_block(base, cup, k - 2);   // H^{k-2} -> H^k
    const Matrix<Rational> out_of = cup_block(base, cup, k - 1); // H^{k-1} -> H^{k+1}
    GysinGroup g;
    g.degree = k;
    g.rank = (count(k) - rank<Rational>(into)) + (count(k - 1) - rank<Rational>(out_of));
    if (coefficients == Coefficients::Integers && into.size() > 0) {
      IntMatrix z(into.rows(), into.cols());
      for (Index r = 0; r < into.rows(); ++r)
        for (Index c = 0; c < into.cols(); ++c) {
          if (boost::multiprecision::denominator(into(r, c)) != 1)
            throw DegreeMismatch("euler class is not integral in the given basis");
          z(r, c) = boost::multiprecision::numerator(into(r, c));
        }
      for (const auto& d : smith_normal_form(z).diagonal())
        if (d > 1) g.torsion.push_back(d);
    }
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace logcoh
