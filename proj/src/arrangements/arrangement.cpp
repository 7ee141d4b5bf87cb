#include "logcoh/arrangements/arrangement.hpp"

#include <algorithm>

namespace logcoh {

std::string Arrangement::label(int i) const {
  if (static_cast<std::size_t>(i) < labels.size()) return labels[static_cast<std::size_t>(i)];
  return std::to_string(i + 1);
}

Matrix<Rational> Arrangement::matrix() const {
  Matrix<Rational> m(size(), variables());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < variables(); ++j) m(i, j) = forms[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

void check_arrangement(const Arrangement& a) {
  if (a.forms.empty()) throw InvalidParameters("arrangement has no hyperplanes");
  if (a.size() > 16) throw InvalidParameters("at most 16 hyperplanes are supported");
  for (int i = 0; i < a.size(); ++i) {
    const auto& f = a.forms[static_cast<std::size_t>(i)];
    if (static_cast<int>(f.size()) != a.variables()) throw InvalidParameters("forms have different lengths");
    if (std::all_of(f.begin(), f.end(), [](const Rational& x) { return x == 0; }))
      throw InvalidParameters("form " + a.label(i) + " is zero");
  }
}

Arrangement arrangement_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("(root)", "expected an object");
  const Json& schema = require_field(j, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != "arr/1") throw ParseError("schema", "expected \"arr/1\"");
  Arrangement a;
  const Json& mode = require_field(j, "mode", "");
  if (mode == "central")
    a.mode = ArrangementMode::Central;
  else if (mode == "projective")
    a.mode = ArrangementMode::Projective;
  else
    throw ParseError("mode", "expected \"central\" or \"projective\"");
  const Json& forms = require_field(j, "forms", "");
  if (!forms.is_array() || forms.empty()) throw ParseError("forms", "expected a nonempty list");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const std::string fp = "forms[" + std::to_string(i) + "]";
    if (!forms[i].is_array()) throw ParseError(fp, "expected a list of coefficients");
    std::vector<Rational> f;
    for (std::size_t c = 0; c < forms[i].size(); ++c) f.push_back(rational_from_json(forms[i][c], fp + "[" + std::to_string(c) + "]"));
    a.forms.push_back(std::move(f));
  }
  try {
    check_arrangement(a);
  } catch (const InvalidParameters& e) {
    throw ParseError("forms", e.what());
  }
  return a;
}

Arrangement load_arrangement(const std::string& source) { return arrangement_from_json(load_json_source(source)); }

Json arrangement_to_json(const Arrangement& a) {
  Json j;
  j["schema"] = "arr/1";
  j["mode"] = a.mode == ArrangementMode::Central ? "central" : "projective";
  Json forms = Json::array();
  for (const auto& f : a.forms) {
    Json row = Json::array();
    for (const auto& x : f) row.push_back(rational_to_json(x));
    forms.push_back(std::move(row));
  }
  j["forms"] = std::move(forms);
  return j;
}

Arrangement boolean_arrangement(int n) {
  if (n < 1) throw InvalidParameters("boolean arrangement needs n >= 1");
  Arrangement a;
  for (int i = 0; i < n; ++i) {
    std::vector<Rational> f(static_cast<std::size_t>(n), Rational(0));
    f[static_cast<std::size_t>(i)] = 1;
    a.forms.push_back(std::move(f));
  }
  return a;
}

Arrangement generic_central_lines(int k) {
  if (k < 1) throw InvalidParameters("need at least one line");
  Arrangement a;
  for (int l = 1; l <= k; ++l) a.forms.push_back({Rational(1), Rational(l)});
  return a;
}

Arrangement generic_projective(int n, int k) {
  if (n < 1 || k < 1) throw InvalidParameters("generic arrangement needs n >= 1 and k >= 1");
  Arrangement a;
  a.mode = ArrangementMode::Projective;
  for (int l = 1; l <= k; ++l) {
    std::vector<Rational> f;
    Rational x = 1;
    for (int e = 0; e <= n; ++e, x *= l) f.push_back(x);
    a.forms.push_back(std::move(f));
  }
  return a;
}

std::vector<Flat> intersection_lattice(const Arrangement& a) {
  check_arrangement(a);
  const Matrix<Rational> m = a.matrix();
  std::vector<Flat> out;
  for (Subset s : subsets_of(Subset::full(a.size()))) {
    Flat f;
    f.subset = s;
    const auto elems = s.elements();
    Matrix<Rational> rows(static_cast<Index>(elems.size()), m.cols());
    for (std::size_t r = 0; r < elems.size(); ++r) rows.row(static_cast<Index>(r)) = m.row(elems[r]);
    f.rank = elems.empty() ? 0 : rank<Rational>(rows);
    for (int j = 0; j < a.size(); ++j) {
      Matrix<Rational> with(rows.rows() + 1, m.cols());
      if (rows.rows() > 0) with.topRows(rows.rows()) = rows;
      with.row(rows.rows()) = m.row(j);
      if (rank<Rational>(with) == f.rank) f.closure = f.closure.with(j);
    }
    f.empty = a.mode == ArrangementMode::Projective && f.rank == a.variables();
    out.push_back(f);
  }
  return out;
}

std::vector<Index> OSAlgebra::poincare() const { return quotient.poincare(); }

std::vector<ExtElement> os_ideal_generators(const Arrangement& a) {
  // circuits (minimal dependent subsets) generate the same ideal as all dependent subsets
  std::vector<Subset> dependent;
  for (const auto& f : intersection_lattice(a))
    if (f.rank < f.subset.size()) dependent.push_back(f.subset);
  std::vector<ExtElement> ideal;
  for (Subset s : dependent) {
    bool minimal = true;
    for (Subset t : dependent)
      if (t != s && t.is_subset_of(s)) minimal = false;
    if (minimal) ideal.push_back(ext_delta(ext_monomial(s.bits())));
  }
  return ideal;
}

OSAlgebra orlik_solomon(const Arrangement& a) {
  const int k = a.size();
  ExteriorQuotient q(k, os_ideal_generators(a));
  std::vector<BasisElement> basis;
  for (unsigned m : q.standard_monomials()) {
    BasisElement b{"", __builtin_popcount(m)};
    for (int i = 0; i < k; ++i)
      if (m & (1u << i)) b.name += "B" + a.label(i);
    if (m == 0) b.name = "1";
    basis.push_back(std::move(b));
  }
  const Index n = q.dim();
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  Matrix<Rational> delta = Matrix<Rational>::Zero(n, n);
  const auto& sm = q.standard_monomials();
  for (Index i = 0; i < n; ++i) {
    delta.col(i) = q.reduce(ext_delta(ext_monomial(sm[static_cast<std::size_t>(i)])));
    for (Index j = 0; j < n; ++j)
      table[static_cast<std::size_t>(i * n + j)] =
          to_sparse<Rational>(q.reduce(ext_mul(ext_monomial(sm[static_cast<std::size_t>(i)]), ext_monomial(sm[static_cast<std::size_t>(j)]))));
  }
  return OSAlgebra{GradedAlgebra(std::move(basis), 0, std::move(table)), std::move(delta), std::move(q)};
}

std::vector<Index> ProjectiveComplement::betti() const {
  std::vector<Index> out;
  for (const auto& [d, c] : ring.betti()) {
    if (static_cast<std::size_t>(d) >= out.size()) out.resize(static_cast<std::size_t>(d) + 1, 0);
    out[static_cast<std::size_t>(d)] = c;
  }
  return out;
}

ProjectiveComplement projective_complement(const Arrangement& a) {
  OSAlgebra os = orlik_solomon(a);
  const int k = a.size();
  const Index kernel_dim = os.algebra.dim() - rank<Rational>(os.delta);
  // candidates b^S, S inside {1..k-1}, with b_i = B_i - B_k
  std::vector<ExtElement> b;
  for (int i = 0; i + 1 < k; ++i) b.push_back(ext_add(ext_generator(i), ext_generator(k - 1), Rational(-1)));
  std::vector<unsigned> chosen;
  Matrix<Rational> inclusion(os.algebra.dim(), 0);
  for (unsigned s : exterior_monomial_order(std::max(k - 1, 0))) {
    ExtElement x{{0u, Rational(1)}};
    for (unsigned bits = s; bits; bits &= bits - 1) x = ext_mul(x, b[static_cast<std::size_t>(__builtin_ctz(bits))]);
    const Vector<Rational> v = os.quotient.reduce(x);
    if (all_zero(v)) continue;
    const Matrix<Rational> grown = hstack<Rational>(inclusion, Matrix<Rational>(v));
    if (rank<Rational>(grown) == grown.cols()) {
      inclusion = grown;
      chosen.push_back(s);
    }
  }
  if (inclusion.cols() != kernel_dim) throw std::logic_error("projective_complement: b-monomials do not span ker delta");
  if (!all_zero(Matrix<Rational>(os.delta * inclusion))) throw std::logic_error("projective_complement: b-monomials not in ker delta");

  std::vector<BasisElement> basis;
  for (unsigned s : chosen) {
    BasisElement e{"", __builtin_popcount(s)};
    for (int i = 0; i + 1 < k; ++i)
      if (s & (1u << i)) e.name += "b" + a.label(i);
    if (s == 0) e.name = "1";
    basis.push_back(std::move(e));
  }
  const Index n = inclusion.cols();
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const Vector<Rational> p = os.algebra.multiply(inclusion.col(i), inclusion.col(j));
      const auto x = solve<Rational>(inclusion, p);
      if (!x) throw std::logic_error("projective_complement: ker delta is not closed under products");
      table[static_cast<std::size_t>(i * n + j)] = to_sparse<Rational>(*x);
    }
  GradedAlgebra ring(std::move(basis), 0, std::move(table));
  return ProjectiveComplement{std::move(os), std::move(ring), std::move(inclusion)};
}

}  // namespace logcoh
