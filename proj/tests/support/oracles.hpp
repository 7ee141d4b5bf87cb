#pragma once

// Independent reference computations for Orlik-Solomon algebras. Nothing here
// goes through ExteriorQuotient.

#include "logcoh/arrangements/arrangement.hpp"

#include <vector>

namespace logcoh::testing {

inline bool dependent(const Arrangement& a, unsigned mask) {
  Matrix<Rational> m(__builtin_popcount(mask), a.variables());
  Index r = 0;
  for (int i = 0; i < a.size(); ++i)
    if (mask >> i & 1u) {
      for (int c = 0; c < a.variables(); ++c) m(r, c) = a.forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      ++r;
    }
  return rank<Rational>(m) < m.rows();
}

/// Brute force: in each degree the ideal is spanned by e_T * delta(e_S) over
/// every dependent S and every T, so the quotient dimension is a rank count.
inline std::vector<Index> os_poincare_brute_force(const Arrangement& a) {
  const int k = a.size();
  const unsigned all = 1u << k;
  std::vector<Index> out;
  for (int deg = 0; deg <= k; ++deg) {
    std::vector<unsigned> monos;
    for (unsigned m = 0; m < all; ++m)
      if (__builtin_popcount(m) == deg) monos.push_back(m);
    std::vector<Vector<Rational>> spanning;
    for (unsigned s = 1; s < all; ++s) {
      if (!dependent(a, s)) continue;
      const ExtElement ds = ext_delta(ext_monomial(s));
      const int rest = deg - (__builtin_popcount(s) - 1);
      if (rest < 0) continue;
      for (unsigned t = 0; t < all; ++t) {
        if (__builtin_popcount(t) != rest) continue;
        const ExtElement x = ext_mul(ext_monomial(t), ds);
        Vector<Rational> v = Vector<Rational>::Zero(static_cast<Index>(monos.size()));
        for (const auto& [mono, c] : x)
          for (std::size_t i = 0; i < monos.size(); ++i)
            if (monos[i] == mono) v(static_cast<Index>(i)) = c;
        spanning.push_back(v);
      }
    }
    Matrix<Rational> span(static_cast<Index>(monos.size()), static_cast<Index>(spanning.size()));
    for (std::size_t i = 0; i < spanning.size(); ++i) span.col(static_cast<Index>(i)) = spanning[i];
    const Index dim = static_cast<Index>(monos.size()) - (spanning.empty() ? 0 : rank<Rational>(span));
    out.push_back(dim);
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

/// Counts no-broken-circuit sets: independent sets containing no circuit
/// minus its smallest element.
inline std::vector<Index> os_poincare_nbc(const Arrangement& a) {
  const int k = a.size();
  const unsigned all = 1u << k;
  std::vector<unsigned> broken;
  for (unsigned c = 1; c < all; ++c) {
    if (!dependent(a, c)) continue;
    bool minimal = true;
    for (int i = 0; i < k && minimal; ++i)
      if ((c >> i & 1u) && dependent(a, c & ~(1u << i))) minimal = false;
    if (minimal) broken.push_back(c & (c - 1));  // drop the lowest index
  }
  std::vector<Index> out(static_cast<std::size_t>(k + 1), 0);
  for (unsigned s = 0; s < all; ++s) {
    if (dependent(a, s)) continue;
    bool ok = true;
    for (unsigned b : broken)
      if ((s & b) == b) ok = false;
    if (ok) ++out[static_cast<std::size_t>(__builtin_popcount(s))];
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace logcoh::testing
