#include "logcoh/arrangements/exterior.hpp"

#include <algorithm>

namespace logcoh {

std::vector<unsigned> exterior_monomial_order(int g) {
  std::vector<unsigned> masks;
  for (unsigned m = 0; m < (1u << g); ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
    const int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa < pb;
    for (unsigned x = a, y = b; x && y; x &= x - 1, y &= y - 1) {
      const int ia = __builtin_ctz(x), ib = __builtin_ctz(y);
      if (ia != ib) return ia < ib;
    }
    return false;
  });
  return masks;
}

int wedge_sign(unsigned m1, unsigned m2) {
  int swaps = 0;
  for (unsigned bits = m2; bits; bits &= bits - 1) {
    const unsigned low = bits & (~bits + 1);
    swaps += __builtin_popcount(m1 & ~((low << 1) - 1));
  }
  return (swaps % 2) ? -1 : 1;
}

ExtElement ext_generator(int i) { return {{1u << i, Rational(1)}}; }

ExtElement ext_monomial(unsigned mask) { return {{mask, Rational(1)}}; }

ExtElement ext_add(const ExtElement& a, const ExtElement& b, const Rational& scale) {
  ExtElement out = a;
  for (const auto& [m, c] : b) {
    Rational& x = out[m];
    x += scale * c;
    if (x == 0) out.erase(m);
  }
  return out;
}

ExtElement ext_mul(const ExtElement& a, const ExtElement& b) {
  ExtElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      Rational& x = out[ma | mb];
      x += wedge_sign(ma, mb) * ca * cb;
    }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

ExtElement ext_delta(const ExtElement& a) {
  ExtElement out;
  for (const auto& [m, c] : a) {
    int position = 0;
    for (unsigned bits = m; bits; bits &= bits - 1, ++position) {
      const unsigned low = bits & (~bits + 1);
      Rational& x = out[m & ~low];
      x += (position % 2 ? -1 : 1) * c;
    }
  }
  std::erase_if(out, [](const auto& e) { return e.second == 0; });
  return out;
}

ExtElement ext_apply(const ExtElement& a, const std::vector<ExtElement>& images) {
  ExtElement out;
  for (const auto& [m, c] : a) {
    ExtElement term{{0u, c}};
    for (unsigned bits = m; bits; bits &= bits - 1) term = ext_mul(term, images[static_cast<std::size_t>(__builtin_ctz(bits))]);
    out = ext_add(out, term);
  }
  return out;
}

ExteriorQuotient::ExteriorQuotient(int generators, const std::vector<ExtElement>& ideal_generators)
    : generators_(generators) {
  if (generators < 0 || generators > 16) throw std::invalid_argument("ExteriorQuotient: unsupported generator count");
  const auto order = exterior_monomial_order(generators);
  blocks_.resize(static_cast<std::size_t>(generators + 1));
  for (unsigned m : order) {
    auto& b = blocks_[static_cast<std::size_t>(__builtin_popcount(m))];
    b.position[m] = static_cast<Index>(b.monomials.size());
    b.monomials.push_back(m);
  }
  // ideal spanned by monomial multiples of the generators, degree by degree
  std::vector<std::vector<ExtElement>> spanning(blocks_.size());
  for (const auto& g : ideal_generators) {
    if (g.empty()) continue;
    const int deg = __builtin_popcount(g.begin()->first);
    for (const auto& [m, c] : g)
      if (__builtin_popcount(m) != deg) throw std::invalid_argument("ExteriorQuotient: ideal generator is not homogeneous");
    for (unsigned m : order) {
      const int d = deg + __builtin_popcount(m);
      if (d > generators) continue;
      ExtElement x = ext_mul(ext_monomial(m), g);
      if (!x.empty()) spanning[static_cast<std::size_t>(d)].push_back(std::move(x));
    }
  }
  Index offset = 0;
  for (std::size_t d = 0; d < blocks_.size(); ++d) {
    auto& b = blocks_[d];
    const Index n = static_cast<Index>(b.monomials.size());
    Matrix<Rational> ideal(n, static_cast<Index>(spanning[d].size()));
    ideal.setZero();
    for (std::size_t c = 0; c < spanning[d].size(); ++c)
      for (const auto& [m, v] : spanning[d][c]) ideal(b.position.at(m), static_cast<Index>(c)) = v;
    const auto q = subquotient<Rational>(Matrix<Rational>::Identity(n, n), ideal);
    b.projection = q.projection;
    b.offset = offset;
    for (Index c = 0; c < q.dim(); ++c)
      for (Index r = 0; r < n; ++r)
        if (q.representatives(r, c) != 0) {
          standard_.push_back(b.monomials[static_cast<std::size_t>(r)]);
          break;
        }
    offset += q.dim();
  }
}

Vector<Rational> ExteriorQuotient::reduce(const ExtElement& x) const {
  Vector<Rational> out = Vector<Rational>::Zero(dim());
  std::vector<Vector<Rational>> parts(blocks_.size());
  for (const auto& [m, c] : x) {
    const auto d = static_cast<std::size_t>(__builtin_popcount(m));
    auto& part = parts[d];
    if (part.size() == 0) part = Vector<Rational>::Zero(static_cast<Index>(blocks_[d].monomials.size()));
    part(blocks_[d].position.at(m)) += c;
  }
  for (std::size_t d = 0; d < blocks_.size(); ++d) {
    if (parts[d].size() == 0 || blocks_[d].projection.rows() == 0) continue;
    out.segment(blocks_[d].offset, blocks_[d].projection.rows()) = blocks_[d].projection * parts[d];
  }
  return out;
}

ExtElement ExteriorQuotient::lift(const Vector<Rational>& coords) const {
  ExtElement out;
  for (Index i = 0; i < coords.size(); ++i)
    if (coords(i) != 0) out[standard_[static_cast<std::size_t>(i)]] += coords(i);
  return out;
}

std::vector<Index> ExteriorQuotient::poincare() const {
  std::vector<Index> out;
  for (const auto& b : blocks_) out.push_back(b.projection.rows());
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace logcoh
