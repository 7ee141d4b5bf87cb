#include "logcoh/specseq/io.hpp"

namespace logcoh {

FilteredComplex<Rational> complex_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("(root)", "expected an object");
  const Json& schema = require_field(j, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != "filtcx/1") throw ParseError("schema", "expected \"filtcx/1\"");
  FilteredComplex<Rational> c;
  const Json& basis = require_field(j, "basis", "");
  if (!basis.is_array()) throw ParseError("basis", "expected a list");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string bp = "basis[" + std::to_string(i) + "]";
    const Json& name = require_field(basis[i], "name", bp);
    if (!name.is_string()) throw ParseError(bp + ".name", "expected a string");
    c.basis.push_back({name.get<std::string>(), static_cast<int>(require_int(require_field(basis[i], "deg", bp), bp + ".deg")),
                       static_cast<int>(require_int(require_field(basis[i], "filt", bp), bp + ".filt"))});
  }
  const Index n = c.dim();
  c.d = n > 0 ? matrix_from_json(require_field(j, "d", ""), "d", n, n) : Matrix<Rational>(0, 0);
  if (j.contains("mult") && !j["mult"].is_null()) {
    const Json& mult = j["mult"];
    if (!mult.is_array()) throw ParseError("mult", "expected a list");
    std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
    for (std::size_t e = 0; e < mult.size(); ++e) {
      const std::string mp = "mult[" + std::to_string(e) + "]";
      const Json& entry = mult[e];
      if (!entry.is_array() || entry.size() != 3 || !entry[2].is_array()) throw ParseError(mp, "expected [i, j, terms]");
      const Index a = require_int(entry[0], mp + "[0]"), b = require_int(entry[1], mp + "[1]");
      if (a < 0 || a >= n || b < 0 || b >= n) throw ParseError(mp, "basis index out of range");
      SparseVec<Rational> terms;
      for (std::size_t t = 0; t < entry[2].size(); ++t) {
        const std::string tp = mp + "[2][" + std::to_string(t) + "]";
        const Json& term = entry[2][t];
        if (!term.is_array() || term.size() != 2) throw ParseError(tp, "expected [k, coef]");
        const Index k = require_int(term[0], tp + "[0]");
        if (k < 0 || k >= n) throw ParseError(tp, "basis index out of range");
        terms.emplace_back(k, rational_from_json(term[1], tp + "[1]"));
      }
      table[static_cast<std::size_t>(a * n + b)] = std::move(terms);
    }
    c.mult = std::move(table);
  }
  return c;
}

FilteredComplex<Rational> load_complex(const std::string& source) { return complex_from_json(load_json_source(source)); }

Json complex_to_json(const FilteredComplex<Rational>& c) {
  Json j;
  j["schema"] = "filtcx/1";
  Json basis = Json::array();
  for (const auto& b : c.basis) basis.push_back(Json{{"name", b.name}, {"deg", b.degree}, {"filt", b.filt}});
  j["basis"] = std::move(basis);
  j["d"] = matrix_to_json(c.d);
  if (c.mult) {
    Json mult = Json::array();
    for (Index a = 0; a < c.dim(); ++a)
      for (Index b = 0; b < c.dim(); ++b) {
        const auto& p = c.product(a, b);
        if (p.empty()) continue;
        Json terms = Json::array();
        for (const auto& [k, v] : p) terms.push_back(Json::array({k, rational_to_json(v)}));
        mult.push_back(Json::array({a, b, std::move(terms)}));
      }
    j["mult"] = std::move(mult);
  }
  return j;
}

Bidegree bigrade_log_class(const MultVector& v, long long alpha_degree, const std::vector<long long>& kappa,
                           const std::vector<long long>& pole_orders) {
  const long long w = weight(v, kappa);
  const long long deg = log_degree(alpha_degree, v, pole_orders);
  return {static_cast<int>(-w), static_cast<int>(deg + w)};
}

FilteredComplex<Rational> log_ring_complex(const LogRingTruncation& l) {
  FilteredComplex<Rational> c;
  const Index n = l.dim();
  for (Index i = 0; i < n; ++i)
    c.basis.push_back({l.name(i), static_cast<int>(l.cls(i).degree), static_cast<int>(-l.cls(i).weight)});
  c.d = Matrix<Rational>::Zero(n, n);
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) table[static_cast<std::size_t>(i * n + j)] = l.product(i, j);
  c.mult = std::move(table);
  return c;
}

}  // namespace logcoh
