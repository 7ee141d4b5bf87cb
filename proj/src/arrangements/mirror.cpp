#include "logcoh/arrangements/mirror.hpp"

#include <numeric>

namespace logcoh {
namespace {

using Monomial = std::vector<int>;

void monomials_rec(int m, int left, Monomial& cur, std::vector<Monomial>& out) {
  const int i = static_cast<int>(cur.size());
  if (i == m - 1) {
    cur.push_back(left);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.push_back(e);
    monomials_rec(m, left - e, cur, out);
    cur.pop_back();
  }
}

std::vector<Monomial> monomials(int m, long long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial cur;
  monomials_rec(m, static_cast<int>(degree), cur, out);
  return out;
}

int support_size(const Monomial& a) {
  return static_cast<int>(std::count_if(a.begin(), a.end(), [](int e) { return e > 0; }));
}

// basis of polyvector fields z^a d_S with |S| = p and |a| - p = w
struct PolyBasis {
  std::vector<std::pair<Monomial, Subset>> elements;
  std::map<std::pair<Monomial, unsigned>, Index> index;
};

PolyBasis poly_basis(int m, int p, long long w) {
  PolyBasis b;
  std::vector<Subset> fields;
  for (Subset s : subsets_of(Subset::full(m)))
    if (s.size() == p) fields.push_back(s);
  for (const Monomial& a : monomials(m, w + p))
    for (Subset s : fields) {
      b.index[{a, s.bits()}] = static_cast<Index>(b.elements.size());
      b.elements.emplace_back(a, s);
    }
  return b;
}

// contraction with dW = sum_i W_i dz_i, W_i the product of all z_l, l != i
Matrix<Rational> contraction(int m, const PolyBasis& from, const PolyBasis& to) {
  Matrix<Rational> d = Matrix<Rational>::Zero(static_cast<Index>(to.elements.size()),
                                              static_cast<Index>(from.elements.size()));
  for (std::size_t c = 0; c < from.elements.size(); ++c) {
    const auto& [a, s] = from.elements[c];
    const auto idx = s.elements();
    for (std::size_t t = 0; t < idx.size(); ++t) {
      Monomial b = a;
      for (int l = 0; l < m; ++l)
        if (l != idx[t]) ++b[static_cast<std::size_t>(l)];
      const auto it = to.index.find({b, s.without(idx[t]).bits()});
      if (it == to.index.end()) throw std::logic_error("mirror_hochschild: contraction left its weight");
      d(it->second, static_cast<Index>(c)) += Rational(t % 2 == 0 ? 1 : -1);
    }
  }
  return d;
}

Index rank_or_zero(const Matrix<Rational>& d) {
  return d.rows() == 0 || d.cols() == 0 ? 0 : rank<Rational>(d);
}

}  // namespace

ShPresentation sh_presentation(int n, int k, long long max_weight) {
  const NCPairData p = build_generic_pair(n, k);
  ShPresentation out;
  if (k < n + 2)
    out.notes.push_back("k < n+2: outside the range where the presentation is of interest");
  out.presentation = presentation_topological(p, max_weight);
  out.log_table = hilbert_table(build_log_ring(p, max_weight));
  const auto nonzero = [](const HilbertTable& t) {
    HilbertTable r;
    for (const auto& [key, d] : t)
      if (d != 0) r[key] = d;
    return r;
  };
  out.tables_agree = nonzero(out.presentation.hilbert) == nonzero(out.log_table);
  if (!out.tables_agree) out.notes.push_back("presentation Hilbert table differs from the log ring");
  return out;
}

std::vector<std::vector<int>> JacobianRing::normal_forms(int degree) const {
  std::vector<Monomial> out;
  for (Monomial& a : monomials(m, degree))
    if (support_size(a) <= m - 2) out.push_back(std::move(a));
  return out;
}

std::vector<Index> JacobianRing::hilbert(int order) const {
  std::vector<Index> h;
  for (int d = 0; d <= order; ++d) h.push_back(static_cast<Index>(normal_forms(d).size()));
  return h;
}

std::vector<std::string> JacobianRing::relation_strings() const {
  std::vector<std::string> out;
  for (Subset r : relations) {
    std::string s;
    for (int i : r.elements()) s += (s.empty() ? "z" : "*z") + std::to_string(i + 1);
    out.push_back(s.empty() ? "1" : s);
  }
  return out;
}

JacobianRing jacobian_ring(int m) {
  if (m < 2) throw InvalidParameters("jacobian_ring needs at least 2 variables");
  JacobianRing j;
  j.m = m;
  for (int i = 0; i < m; ++i) j.relations.push_back(Subset::full(m).without(i));
  return j;
}

SrJacobianIsomorphism sr_jacobian_isomorphism(int n, int order) {
  if (n < 1) throw InvalidParameters("n must be at least 1");
  const int m = n + 2;
  const NCPairData p = build_generic_pair(n, m);
  const StanleyReisner sr = stanley_reisner(p);
  const JacobianRing jac = jacobian_ring(m);
  SrJacobianIsomorphism out;
  // t_i -> z_i on monomial relations is just the identity on supports
  std::vector<Subset> sr_rel = sr.minimal_nonfaces, jac_rel = jac.relations;
  std::sort(sr_rel.begin(), sr_rel.end());
  std::sort(jac_rel.begin(), jac_rel.end());
  const auto sr_strings = sr.relation_strings();
  bool bijective = sr_rel == jac_rel && sr.classical;
  for (std::size_t i = 0; i < sr.minimal_nonfaces.size(); ++i) {
    const Subset s = sr.minimal_nonfaces[i];
    const auto it = std::find(jac.relations.begin(), jac.relations.end(), s);
    if (it == jac.relations.end()) {
      bijective = false;
      out.notes.push_back("SR relation " + sr_strings[i] + " has no Jacobian counterpart");
      continue;
    }
    out.relation_map.emplace_back(sr_strings[i], jac.relation_strings()[static_cast<std::size_t>(it - jac.relations.begin())]);
  }
  const auto h = sr.hilbert(order, p);
  for (int w = 0; w <= order; ++w) {
    const auto it = h.find(w);
    out.sr_series.push_back(it == h.end() ? 0 : it->second);
  }
  out.jac_series = jac.hilbert(order);
  if (out.sr_series != out.jac_series) out.notes.push_back("Hilbert series differ");
  out.ok = bijective && out.sr_series == out.jac_series;
  return out;
}

MirrorReport mirror_hochschild(int m, int weight_bound) {
  if (m < 3) throw InvalidParameters("mirror_hochschild needs m >= 3");
  if (weight_bound < 1) throw WeightBoundTooSmall("weight bound must be at least 1");
  MirrorReport out;
  out.m = m;
  out.bound = weight_bound;
  for (long long w = 0; w <= weight_bound; ++w) {
    const PolyBasis l0 = poly_basis(m, 0, w), l1 = poly_basis(m, 1, w - m);
    out.h0[w] = static_cast<Index>(l0.elements.size()) - rank_or_zero(contraction(m, l1, l0));
  }
  for (long long w = -1; w <= weight_bound; ++w) {
    const PolyBasis l1 = poly_basis(m, 1, w), l0 = poly_basis(m, 0, w + m), l2 = poly_basis(m, 2, w - m);
    const Index cycles = static_cast<Index>(l1.elements.size()) - rank_or_zero(contraction(m, l1, l0));
    out.h1[w] = cycles - rank_or_zero(contraction(m, l2, l1));
  }
  const NCPairData p = build_generic_pair(m - 2, m);
  const auto sr = stanley_reisner(p).hilbert(weight_bound, p);
  for (long long w = 0; w <= weight_bound; ++w) {
    const auto it = sr.find(w);
    out.sr[w] = it == sr.end() ? 0 : it->second;
  }
  for (const auto& [key, d] : hilbert_table(build_log_ring(p, weight_bound)))
    if (key.first == 1) out.log_h1[key.second] += d;
  const auto betti = p.ring(Subset()).betti();
  const auto b = betti.find(1);
  out.b1 = b == betti.end() ? 0 : b->second;
  out.h0_matches = out.h0 == out.sr;
  out.h1_weight0_matches = out.h1[0] == out.b1;
  return out;
}

}  // namespace logcoh
