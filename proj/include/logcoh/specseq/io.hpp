#pragma once

#include "logcoh/io/json.hpp"
#include "logcoh/logring/logring.hpp"
#include "logcoh/specseq/spectral.hpp"

namespace logcoh {

/// Parses a "filtcx/1" file; `source` is JSON text or a path.
FilteredComplex<Rational> load_complex(const std::string& source);
FilteredComplex<Rational> complex_from_json(const Json& j);
Json complex_to_json(const FilteredComplex<Rational>& c);

/// Reduces a rational complex into another exact field.
template <class S>
FilteredComplex<S> convert_complex(const FilteredComplex<Rational>& c) {
  FilteredComplex<S> out;
  out.basis = c.basis;
  out.d = Matrix<S>(c.d.rows(), c.d.cols());
  for (Index i = 0; i < c.d.rows(); ++i)
    for (Index j = 0; j < c.d.cols(); ++j) out.d(i, j) = ScalarTraits<S>::from_rational(c.d(i, j));
  if (c.mult) {
    std::vector<SparseVec<S>> m;
    for (const auto& entry : *c.mult) {
      SparseVec<S> e;
      for (const auto& [k, v] : entry) {
        const S x = ScalarTraits<S>::from_rational(v);
        if (!is_zero(x)) e.emplace_back(k, x);
      }
      m.push_back(std::move(e));
    }
    out.mult = std::move(m);
  }
  return out;
}

/// (p, q) = (-w(v), deg(alpha t^v) + w(v)).
Bidegree bigrade_log_class(const MultVector& v, long long alpha_degree, const std::vector<long long>& kappa,
                           const std::vector<long long>& pole_orders);

/// The truncated log ring as a filtered DGA with zero differential, filtered
/// by p = -weight, in the class order of the truncation.
FilteredComplex<Rational> log_ring_complex(const LogRingTruncation& l);

}  // namespace logcoh
