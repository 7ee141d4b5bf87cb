#include "logcoh/logring/logring.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace logcoh {

long long weight(const MultVector& v, const std::vector<long long>& kappa) {
  if (v.size() != kappa.size()) throw LengthMismatch("weight: v and kappa differ in length");
  long long w = 0;
  for (std::size_t i = 0; i < v.size(); ++i) w += kappa[i] * v[i];
  return w;
}

long long log_degree(long long alpha_degree, const MultVector& v, const std::vector<long long>& pole_orders) {
  if (v.size() != pole_orders.size()) throw LengthMismatch("log_degree: v and pole orders differ in length");
  long long d = alpha_degree;
  for (std::size_t i = 0; i < v.size(); ++i) d += 2 * (1 - pole_orders[i]) * v[i];
  return d;
}

Subset support(const MultVector& v) {
  std::uint32_t bits = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) bits |= 1u << i;
  return Subset(bits);
}

MultVector primitive_vector(Subset s, int k) {
  MultVector v(static_cast<std::size_t>(k), 0);
  for (int i : s.elements()) v[static_cast<std::size_t>(i)] = 1;
  return v;
}

std::vector<MultVector> admissible_vectors(const NCPairData& p, long long max_weight) {
  std::vector<MultVector> out;
  MultVector v(static_cast<std::size_t>(p.k), 0);
  std::function<void(int, long long)> rec = [&](int i, long long w) {
    if (i == p.k) {
      if (p.has_stratum(support(v))) out.push_back(v);
      return;
    }
    for (long long x = 0; w + x * p.kappa[static_cast<std::size_t>(i)] <= max_weight; ++x) {
      v[static_cast<std::size_t>(i)] = x;
      // prune supports that are already not strata
      if (x == 0 || p.has_stratum(support(MultVector(v.begin(), v.begin() + i + 1)) )) rec(i + 1, w + x * p.kappa[static_cast<std::size_t>(i)]);
    }
    v[static_cast<std::size_t>(i)] = 0;
  };
  if (max_weight >= 0) rec(0, 0);
  std::sort(out.begin(), out.end(), [&](const MultVector& a, const MultVector& b) {
    const long long wa = weight(a, p.kappa), wb = weight(b, p.kappa);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

LogRingTruncation::LogRingTruncation(std::shared_ptr<const NCPairData> pair, long long max_weight)
    : pair_(std::move(pair)), max_weight_(max_weight) {
  const NCPairData& p = *pair_;
  for (const auto& v : admissible_vectors(p, max_weight)) {
    const Subset s = support(v);
    const GradedAlgebra& ring = p.ring(s);
    offsets_[v] = static_cast<Index>(classes_.size());
    const long long w = weight(v, p.kappa);
    for (Index a = 0; a < ring.dim(); ++a)
      classes_.push_back({v, a, s, w, log_degree(ring.degree(a), v, p.pole_orders)});
  }
  const auto minimal_weight = [&](Subset s) { return weight(primitive_vector(s, p.k), p.kappa); };
  for (const auto& [i, si] : p.strata)
    for (const auto& [j, sj] : p.strata) {
      const Subset kk = i | j;
      if (!p.has_stratum(kk) || minimal_weight(i) + minimal_weight(j) > max_weight) continue;
      const GradedAlgebra& target = p.ring(kk);
      const Matrix<Rational> ri = p.restriction(i, kk), rj = p.restriction(j, kk);
      StarTable t;
      t.target = kk;
      t.cols = sj.ring.dim();
      t.entries.resize(static_cast<std::size_t>(si.ring.dim() * t.cols));
      for (Index a = 0; a < si.ring.dim(); ++a)
        for (Index b = 0; b < t.cols; ++b)
          t.entries[static_cast<std::size_t>(a * t.cols + b)] = to_sparse<Rational>(target.multiply(ri.col(a), rj.col(b)));
      stars_.emplace(std::make_pair(i, j), std::move(t));
    }
}

std::string LogRingTruncation::name(Index i) const {
  const LogClass& c = cls(i);
  std::string s = pair_->ring(c.stratum).element(c.alpha).name;
  if (c.stratum.empty()) return s;
  s += "*t^(";
  for (std::size_t x = 0; x < c.v.size(); ++x) s += (x ? "," : "") + std::to_string(c.v[x]);
  return s + ")";
}

Index LogRingTruncation::offset(const MultVector& v) const {
  const auto it = offsets_.find(v);
  return it == offsets_.end() ? -1 : it->second;
}

Index LogRingTruncation::find(const MultVector& v, Index alpha) const {
  const Index o = offset(v);
  return o < 0 ? -1 : o + alpha;
}

const SparseVec<Rational>& LogRingTruncation::star(Subset i, Index a, Subset j, Index b) const {
  static const SparseVec<Rational> empty;
  const auto it = stars_.find({i, j});
  if (it == stars_.end()) return empty;
  return it->second.entries[static_cast<std::size_t>(a * it->second.cols + b)];
}

SparseVec<Rational> LogRingTruncation::product(Index i, Index j) const {
  const LogClass &x = cls(i), &y = cls(j);
  if (x.weight + y.weight > max_weight_) return {};
  const auto& s = star(x.stratum, x.alpha, y.stratum, y.alpha);
  if (s.empty()) return {};
  MultVector v = x.v;
  for (std::size_t t = 0; t < v.size(); ++t) v[t] += y.v[t];
  const Index o = offset(v);
  SparseVec<Rational> out;
  out.reserve(s.size());
  for (const auto& [k, c] : s) out.emplace_back(o + k, c);
  return out;
}

LogRingTruncation build_log_ring(const NCPairData& p, long long max_weight) {
  const ValidationReport rep = validate(p);
  if (!rep.ok()) {
    std::string msg = "pair failed validation:";
    for (const auto& s : rep.issues) msg += "\n  " + s;
    throw ValidationRequired(msg);
  }
  return build_log_ring_unchecked(p, max_weight);
}

LogRingTruncation build_log_ring_unchecked(const NCPairData& p, long long max_weight) {
  if (max_weight < 0) throw std::invalid_argument("weight bound must be nonnegative");
  return LogRingTruncation(std::make_shared<const NCPairData>(p), max_weight);
}

std::map<long long, Index> StanleyReisner::hilbert(long long max_weight, const NCPairData& p) const {
  std::map<long long, Index> out;
  for (long long w = 0; w <= max_weight; ++w) out[w] = 0;
  for (const auto& v : admissible_vectors(p, max_weight)) out[weight(v, kappa)] += p.components(support(v));
  return out;
}

std::vector<std::string> StanleyReisner::relation_strings() const {
  std::vector<std::string> out;
  for (Subset s : minimal_nonfaces) {
    std::string m;
    for (int i : s.elements()) m += (m.empty() ? "t" : "*t") + std::to_string(i + 1);
    out.push_back(m);
  }
  return out;
}

StanleyReisner stanley_reisner(const NCPairData& p) {
  StanleyReisner sr;
  sr.k = p.k;
  sr.kappa = p.kappa;
  sr.complex = dual_complex(p);
  sr.minimal_nonfaces = sr.complex.minimal_nonfaces();
  sr.classical = p.all_strata_connected();
  if (!sr.classical)
    for (const auto& [s, st] : p.strata)
      for (Index c = 0; c < st.components; ++c) sr.idempotents.push_back("h" + s.label() + "#" + std::to_string(c + 1));
  return sr;
}

HilbertTable hilbert_table(const LogRingTruncation& l) {
  HilbertTable t;
  for (const auto& c : l.classes()) ++t[{c.degree, c.weight}];
  return t;
}

H1Class h1_class(const MultVector& v, const std::vector<std::vector<long long>>& relations, int k) {
  if (static_cast<int>(v.size()) != k) throw LengthMismatch("h1_class: v must have k entries");
  H1Class out;
  if (relations.empty()) {
    for (long long x : v) out.coords.emplace_back(x);
    out.moduli.assign(v.size(), Integer(0));
    return out;
  }
  IntMatrix r(static_cast<Index>(relations.size()), k);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    if (static_cast<int>(relations[i].size()) != k) throw LengthMismatch("h1_class: relation rows must have k entries");
    for (int j = 0; j < k; ++j) r(static_cast<Index>(i), j) = relations[i][static_cast<std::size_t>(j)];
  }
  const SmithForm f = smith_normal_form(r);
  const auto diag = f.diagonal();
  for (int j = 0; j < k; ++j) {
    Integer c = 0;
    for (int i = 0; i < k; ++i) c += Integer(v[static_cast<std::size_t>(i)]) * f.V(i, j);
    const Integer d = static_cast<std::size_t>(j) < diag.size() ? diag[static_cast<std::size_t>(j)] : Integer(0);
    if (d != 0) {
      c %= d;
      if (c < 0) c += d;
    }
    out.coords.push_back(c);
    out.moduli.push_back(d);
  }
  return out;
}

FiniteGeneration check_finite_generation(const LogRingTruncation& l) {
  FiniteGeneration out;
  const NCPairData& p = l.pair();
  const int k = p.k;
  std::map<MultVector, Matrix<Rational>> spans;  // v -> spanning columns in local coordinates
  std::vector<Index> positive_generators, weight_zero;
  for (Index i = 0; i < l.dim(); ++i) {
    const LogClass& c = l.cls(i);
    if (c.weight == 0) {
      weight_zero.push_back(i);
      out.generators.push_back(i);
    } else if (c.v == primitive_vector(c.stratum, k)) {
      positive_generators.push_back(i);
      out.generators.push_back(i);
    }
  }
  std::vector<MultVector> vectors;
  for (const auto& v : admissible_vectors(p, l.max_weight())) vectors.push_back(v);

  const auto local = [&](const SparseVec<Rational>& s, Index offset, Index n) {
    Vector<Rational> x = Vector<Rational>::Zero(n);
    for (const auto& [i, c] : s) x(i - offset) += c;
    return x;
  };
  const auto times = [&](Index g, const Vector<Rational>& s, Index s_offset, Index offset, Index n) {
    Vector<Rational> x = Vector<Rational>::Zero(n);
    for (Index t = 0; t < s.size(); ++t)
      if (s(t) != 0) x += s(t) * local(l.product(g, s_offset + t), offset, n);
    return x;
  };

  long long current_weight = -1;
  Index weight_expected = 0, weight_spanned = 0;
  for (const auto& v : vectors) {
    const Subset supp = support(v);
    const Index n = p.ring(supp).dim(), offset = l.offset(v);
    const long long w = weight(v, p.kappa);
    if (w != current_weight) {
      if (current_weight > 0 && weight_spanned < weight_expected && out.generated) {
        out.generated = false;
        out.failing_weight = current_weight;
        out.expected_dim = weight_expected;
        out.spanned_dim = weight_spanned;
      }
      current_weight = w;
      weight_expected = weight_spanned = 0;
    }
    Matrix<Rational> span(n, 0);
    std::vector<Vector<Rational>> cols;
    const auto absorb = [&] {
      Matrix<Rational> m(n, static_cast<Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) m.col(static_cast<Index>(c)) = cols[c];
      span = column_basis<Rational>(hstack<Rational>(span, m));
      cols.clear();
    };
    if (w == 0 || v == primitive_vector(supp, k)) {
      span = Matrix<Rational>::Identity(n, n);
    } else {
      for (Index g : positive_generators) {
        const LogClass& gc = l.cls(g);
        MultVector rest = v;
        bool fits = true;
        for (int t = 0; t < k; ++t) {
          rest[static_cast<std::size_t>(t)] -= gc.v[static_cast<std::size_t>(t)];
          if (rest[static_cast<std::size_t>(t)] < 0) fits = false;
        }
        if (!fits) continue;
        const auto it = spans.find(rest);
        if (it == spans.end()) continue;
        const Index rest_offset = l.offset(rest);
        for (Index c = 0; c < it->second.cols(); ++c) cols.push_back(times(g, it->second.col(c), rest_offset, offset, n));
        // stop as soon as the piece is spanned
        if (static_cast<Index>(cols.size()) >= n) {
          absorb();
          if (span.cols() == n) break;
        }
      }
      absorb();
    }
    // close up under multiplication by H^*(X)
    for (Index before = -1; before != span.cols() && span.cols() < n;) {
      before = span.cols();
      for (Index h : weight_zero) {
        if (h == l.pair().ring(Subset()).unit()) continue;
        for (Index c = 0; c < before; ++c) {
          Vector<Rational> x = Vector<Rational>::Zero(n);
          for (Index t = 0; t < n; ++t)
            if (span(t, c) != 0) x += span(t, c) * local(l.product(h, offset + t), offset, n);
          cols.push_back(x);
        }
      }
      absorb();
    }
    weight_expected += n;
    weight_spanned += span.cols();
    spans[v] = span;
  }
  if (current_weight > 0 && weight_spanned < weight_expected && out.generated) {
    out.generated = false;
    out.failing_weight = current_weight;
    out.expected_dim = weight_expected;
    out.spanned_dim = weight_spanned;
  }
  return out;
}

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string linear_combination(const Vector<Rational>& x, const GradedAlgebra& a) {
  std::string s = "(sum";
  for (Index i = 0; i < x.size(); ++i)
    if (x(i) != 0) s += " (" + x(i).str() + " " + quote(a.element(i).name) + ")";
  return s + ")";
}

std::string vector_atom(const MultVector& v) {
  std::string s = "(t";
  for (long long x : v) s += " " + std::to_string(x);
  return s + ")";
}

}  // namespace

Presentation presentation_topological(const NCPairData& p, long long max_weight) {
  Presentation out;
  const GradedAlgebra& hx = p.ring(Subset());
  std::map<Subset, Matrix<Rational>> kernels;
  std::map<Subset, std::map<long long, Index>> image_ranks;
  for (Subset s : p.positive_strata()) {
    const Matrix<Rational> r = p.restriction(Subset(), s);
    if (rank<Rational>(r) != p.ring(s).dim())
      throw RestrictionNotSurjective(s, "restriction r*_{{}," + s.label() + "} is not surjective");
    kernels[s] = kernel_basis<Rational>(r);
  }
  for (int i = 0; i < p.k; ++i) {
    const MultVector e = primitive_vector(Subset::of({i}), p.k);
    out.generators.push_back("(generator t" + std::to_string(i + 1) + " (deg " +
                             std::to_string(log_degree(0, e, p.pole_orders)) + ") (weight " +
                             std::to_string(p.kappa[static_cast<std::size_t>(i)]) + "))");
  }
  for (Index i = 0; i < hx.dim(); ++i)
    if (i != hx.unit())
      out.generators.push_back("(generator " + quote(hx.element(i).name) + " (deg " + std::to_string(hx.degree(i)) +
                               ") (weight 0))");
  for (Subset s : stanley_reisner(p).minimal_nonfaces) {
    std::string m = "(relation (monomial";
    for (int i : s.elements()) m += " t" + std::to_string(i + 1);
    out.relations.push_back(m + "))");
  }
  for (Index i = 0; i < hx.dim(); ++i)
    for (Index j = i; j < hx.dim(); ++j) {
      if (i == hx.unit() || j == hx.unit()) continue;
      out.relations.push_back("(relation (product " + quote(hx.element(i).name) + " " + quote(hx.element(j).name) + ") " +
                              linear_combination(to_dense(hx.product(i, j), hx.dim()), hx) + ")");
    }
  for (const auto& [s, ker] : kernels)
    for (Index c = 0; c < ker.cols(); ++c)
      out.relations.push_back("(relation (kernel " + vector_atom(primitive_vector(s, p.k)) + " " +
                              linear_combination(ker.col(c), hx) + "))");

  // Hilbert table of the presentation: the t^v piece is H^*(X) modulo the
  // kernel of restriction to the support of v.
  for (const auto& v : admissible_vectors(p, max_weight)) {
    const Subset s = support(v);
    const Matrix<Rational> r = p.restriction(Subset(), s);
    std::map<int, std::vector<Index>> by_degree;
    for (Index i = 0; i < hx.dim(); ++i) by_degree[hx.degree(i)].push_back(i);
    for (const auto& [d, cols] : by_degree) {
      Matrix<Rational> block(r.rows(), static_cast<Index>(cols.size()));
      for (std::size_t c = 0; c < cols.size(); ++c) block.col(static_cast<Index>(c)) = r.col(cols[c]);
      const Index dimension = rank<Rational>(block);
      if (dimension > 0) out.hilbert[{log_degree(d, v, p.pole_orders), weight(v, p.kappa)}] += dimension;
    }
  }
  if (!p.all_strata_connected()) out.notes.emplace_back("some strata are disconnected");
  return out;
}

std::string Presentation::to_sexpr() const {
  std::ostringstream s;
  s << "(presentation\n";
  for (const auto& g : generators) s << "  " << g << "\n";
  for (const auto& r : relations) s << "  " << r << "\n";
  for (const auto& n : notes) s << "  (note " << quote(n) << ")\n";
  s << ")\n";
  return s.str();
}

LawReport check_log_ring_laws(const LogRingTruncation& l, std::size_t max_reported) {
  LawReport rep;
  const Index n = l.dim();
  const long long W = l.max_weight();
  auto report = [&](const std::string& s) {
    if (rep.violations.size() < max_reported) rep.violations.push_back(s);
  };
  // classes are sorted by weight: end[w] = first index with weight > w
  std::vector<Index> end_of(static_cast<std::size_t>(W + 1), 0);
  for (long long w = 0; w <= W; ++w) {
    Index e = 0;
    while (e < n && l.cls(e).weight <= w) ++e;
    end_of[static_cast<std::size_t>(w)] = e;
  }
  std::vector<std::vector<SparseVec<Rational>>> cache(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) {
    const Index limit = end_of[static_cast<std::size_t>(W - l.cls(i).weight)];
    auto& row = cache[static_cast<std::size_t>(i)];
    row.resize(static_cast<std::size_t>(limit));
    for (Index j = 0; j < limit; ++j) row[static_cast<std::size_t>(j)] = l.product(i, j);
  }
  const auto prod = [&](Index i, Index j) -> const SparseVec<Rational>& {
    return cache[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  Index unit = -1;
  for (Index i = 0; i < n; ++i)
    if (l.cls(i).weight == 0 && i == l.pair().ring(Subset()).unit()) unit = i;

  for (Index i = 0; i < n; ++i) {
    const LogClass& x = l.cls(i);
    const Index limit = static_cast<Index>(cache[static_cast<std::size_t>(i)].size());
    for (Index j = 0; j < limit; ++j) {
      ++rep.pairs_checked;
      const LogClass& y = l.cls(j);
      const auto& ij = prod(i, j);
      const auto& ji = prod(j, i);
      const bool odd = (x.degree % 2 != 0) && (y.degree % 2 != 0);
      bool commutes = ij.size() == ji.size();
      for (std::size_t t = 0; commutes && t < ij.size(); ++t)
        commutes = ij[t].first == ji[t].first && ij[t].second == (odd ? Rational(-ji[t].second) : ji[t].second);
      if (!commutes) report("graded commutativity fails on " + l.name(i) + ", " + l.name(j));
      for (const auto& [m, c] : ij) {
        const LogClass& z = l.cls(m);
        bool exact = z.weight == x.weight + y.weight && z.degree == x.degree + y.degree;
        for (std::size_t t = 0; exact && t < z.v.size(); ++t) exact = z.v[t] == x.v[t] + y.v[t];
        if (!exact) report("weight or degree not additive on " + l.name(i) + ", " + l.name(j));
      }
      if (i == unit && !(ij.size() == 1 && ij[0].first == j && ij[0].second == 1))
        report("unit law fails on " + l.name(j));
    }
  }
  std::map<Index, Rational> left, right;
  for (Index i = 0; i < n; ++i) {
    const Index li = static_cast<Index>(cache[static_cast<std::size_t>(i)].size());
    for (Index j = 0; j < li; ++j) {
      const auto& ij = prod(i, j);
      const long long wij = l.cls(i).weight + l.cls(j).weight;
      const Index lk = end_of[static_cast<std::size_t>(W - wij)];
      for (Index k = 0; k < lk; ++k) {
        ++rep.triples_checked;
        const auto& jk = prod(j, k);
        if (ij.empty() && jk.empty()) continue;
        left.clear();
        right.clear();
        for (const auto& [m, c] : ij)
          for (const auto& [t, s] : prod(m, k)) left[t] += c * s;
        for (const auto& [m, c] : jk)
          for (const auto& [t, s] : prod(i, m)) right[t] += c * s;
        std::erase_if(left, [](const auto& e) { return e.second == 0; });
        std::erase_if(right, [](const auto& e) { return e.second == 0; });
        if (left != right) report("associativity fails on " + l.name(i) + ", " + l.name(j) + ", " + l.name(k));
      }
    }
  }
  return rep;
}

}  // namespace logcoh
