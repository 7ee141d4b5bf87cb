#include "logcoh/pairdata/pair.hpp"

#include <sstream>

namespace logcoh {

const GradedAlgebra& NCPairData::ring(Subset s) const { return strata.at(s).ring; }

Index NCPairData::components(Subset s) const { return strata.at(s).components; }

Matrix<Rational> NCPairData::restriction(Subset from, Subset to) const {
  if (from == to) {
    const Index n = ring(from).dim();
    return Matrix<Rational>::Identity(n, n);
  }
  const auto it = restrictions.find({from, to});
  if (it == restrictions.end())
    throw std::out_of_range("no restriction " + from.label() + " -> " + to.label());
  return it->second;
}

std::vector<Subset> NCPairData::positive_strata() const {
  std::vector<Subset> out;
  for (const auto& [s, st] : strata)
    if (!s.empty()) out.push_back(s);
  return out;
}

bool NCPairData::all_strata_connected() const {
  for (const auto& [s, st] : strata)
    if (st.components != 1) return false;
  return true;
}

std::vector<Subset> SimplicialComplex::minimal_nonfaces() const {
  std::vector<Subset> out;
  if (vertices <= 0) return out;
  for (std::uint32_t m = 1; m < (1u << vertices); ++m) {
    const Subset s(m);
    if (is_face(s)) continue;
    bool minimal = true;
    for (int i : s.elements())
      if (!is_face(s.without(i))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::downward_closed() const {
  for (Subset f : faces)
    for (int i : f.elements())
      if (!is_face(f.without(i))) return false;
  return true;
}

namespace {

Subset subset_field(const Json& j, const std::string& path, int k) {
  const auto list = require_int_list(j, path);
  for (long long i : list)
    if (i < 1 || i > k) throw ParseError(path, "component index " + std::to_string(i) + " outside 1.." + std::to_string(k));
  return Subset::from_one_based(list);
}

std::optional<bool> bool_flag(const Json& flags, const char* key) {
  if (!flags.contains(key)) return std::nullopt;
  if (!flags[key].is_boolean()) throw ParseError(std::string("flags.") + key, "expected a boolean");
  return flags[key].get<bool>();
}

Json subset_json(Subset s) { return Json(s.one_based()); }

}  // namespace

NCPairData pair_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("(root)", "expected an object");
  const Json& schema = require_field(j, "schema", "");
  if (!schema.is_string() || schema.get<std::string>() != "ncpair/1")
    throw ParseError("schema", "expected \"ncpair/1\"");
  NCPairData p;
  p.k = static_cast<int>(require_int(require_field(j, "k", ""), "k"));
  if (p.k < 0 || p.k > 30) throw ParseError("k", "must lie in 0..30");
  p.dim = static_cast<int>(require_int(require_field(j, "dim", ""), "dim"));
  if (p.dim < 0) throw ParseError("dim", "must be nonnegative");
  p.kappa = require_int_list(require_field(j, "kappa", ""), "kappa");
  p.pole_orders = require_int_list(require_field(j, "pole_orders", ""), "pole_orders");
  if (static_cast<int>(p.kappa.size()) != p.k) throw ParseError("kappa", "expected " + std::to_string(p.k) + " entries");
  if (static_cast<int>(p.pole_orders.size()) != p.k)
    throw ParseError("pole_orders", "expected " + std::to_string(p.k) + " entries");

  const Json& strata = require_field(j, "strata", "");
  if (!strata.is_array()) throw ParseError("strata", "expected a list");
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string sp = "strata[" + std::to_string(i) + "]";
    const Subset s = subset_field(require_field(strata[i], "I", sp), sp + ".I", p.k);
    if (p.strata.count(s)) throw ParseError(sp + ".I", "duplicate stratum " + s.label());
    Stratum st;
    st.components = require_int(require_field(strata[i], "components", sp), sp + ".components");
    st.ring = algebra_from_json(require_field(strata[i], "ring", sp), sp + ".ring");
    p.strata.emplace(s, std::move(st));
  }
  if (!p.has_stratum(Subset())) throw ParseError("strata", "missing the empty stratum (H^*(X))");

  if (j.contains("restrictions")) {
    const Json& rs = j["restrictions"];
    if (!rs.is_array()) throw ParseError("restrictions", "expected a list");
    for (std::size_t i = 0; i < rs.size(); ++i) {
      const std::string rp = "restrictions[" + std::to_string(i) + "]";
      const Subset from = subset_field(require_field(rs[i], "from", rp), rp + ".from", p.k);
      const Subset to = subset_field(require_field(rs[i], "to", rp), rp + ".to", p.k);
      if (!from.is_subset_of(to) || from == to) throw ParseError(rp, "'from' must be a proper subset of 'to'");
      if (!p.has_stratum(from) || !p.has_stratum(to)) throw ParseError(rp, "restriction between undeclared strata");
      if (p.restrictions.count({from, to})) throw ParseError(rp, "duplicate restriction");
      p.restrictions[{from, to}] =
          matrix_from_json(require_field(rs[i], "matrix", rp), rp + ".matrix", p.ring(to).dim(), p.ring(from).dim());
    }
  }
  for (const auto& [i, si] : p.strata)
    for (const auto& [kk, sk] : p.strata)
      if (i != kk && i.is_subset_of(kk) && !p.restrictions.count({i, kk}))
        throw ParseError("restrictions", "missing restriction r*_{" + i.label() + "," + kk.label() + "}");

  if (j.contains("flags")) {
    const Json& f = j["flags"];
    if (!f.is_object()) throw ParseError("flags", "expected an object");
    p.flags.fano = bool_flag(f, "fano");
    p.flags.anticanonical = bool_flag(f, "anticanonical");
    p.flags.pi2_omega_zero = bool_flag(f, "pi2_omega_zero");
    if (f.contains("same_line_bundle"))
      p.flags.same_line_bundle = require_int_list(f["same_line_bundle"], "flags.same_line_bundle");
    if (f.contains("gw_vanishing")) {
      const Json& gw = f["gw_vanishing"];
      if (!gw.is_array()) throw ParseError("flags.gw_vanishing", "expected a list");
      for (std::size_t i = 0; i < gw.size(); ++i) {
        const std::string gp = "flags.gw_vanishing[" + std::to_string(i) + "]";
        const Subset s = subset_field(require_field(gw[i], "I", gp), gp + ".I", p.k);
        const Json& v = require_field(gw[i], "value", gp);
        if (!v.is_boolean()) throw ParseError(gp + ".value", "expected a boolean");
        p.flags.gw_vanishing[s] = v.get<bool>();
      }
    }
    if (f.contains("effective_classes")) {
      const Json& ec = f["effective_classes"];
      if (!ec.is_array()) throw ParseError("flags.effective_classes", "expected a list");
      std::vector<std::vector<long long>> classes;
      for (std::size_t i = 0; i < ec.size(); ++i)
        classes.push_back(require_int_list(ec[i], "flags.effective_classes[" + std::to_string(i) + "]"));
      p.flags.effective_classes = std::move(classes);
    }
  }
  if (j.contains("h1_relations")) {
    const Json& h = j["h1_relations"];
    if (!h.is_array()) throw ParseError("h1_relations", "expected a list of rows");
    for (std::size_t i = 0; i < h.size(); ++i)
      p.h1_relations.push_back(require_int_list(h[i], "h1_relations[" + std::to_string(i) + "]"));
  }
  return p;
}

NCPairData load_pair(const std::string& source) { return pair_from_json(load_json_source(source)); }

Json pair_to_json(const NCPairData& p) {
  Json j;
  j["schema"] = "ncpair/1";
  j["k"] = p.k;
  j["dim"] = p.dim;
  j["kappa"] = p.kappa;
  j["pole_orders"] = p.pole_orders;
  Json strata = Json::array();
  for (const auto& [s, st] : p.strata)
    strata.push_back(Json{{"I", subset_json(s)}, {"components", st.components}, {"ring", algebra_to_json(st.ring)}});
  j["strata"] = std::move(strata);
  Json rs = Json::array();
  for (const auto& [key, m] : p.restrictions)
    rs.push_back(Json{{"from", subset_json(key.first)}, {"to", subset_json(key.second)}, {"matrix", matrix_to_json(m)}});
  j["restrictions"] = std::move(rs);
  Json flags = Json::object();
  if (p.flags.fano) flags["fano"] = *p.flags.fano;
  if (p.flags.anticanonical) flags["anticanonical"] = *p.flags.anticanonical;
  if (p.flags.pi2_omega_zero) flags["pi2_omega_zero"] = *p.flags.pi2_omega_zero;
  if (p.flags.same_line_bundle) flags["same_line_bundle"] = *p.flags.same_line_bundle;
  if (!p.flags.gw_vanishing.empty()) {
    Json gw = Json::array();
    for (const auto& [s, v] : p.flags.gw_vanishing) gw.push_back(Json{{"I", subset_json(s)}, {"value", v}});
    flags["gw_vanishing"] = std::move(gw);
  }
  if (p.flags.effective_classes) flags["effective_classes"] = *p.flags.effective_classes;
  j["flags"] = std::move(flags);
  j["h1_relations"] = p.h1_relations;
  return j;
}

std::string serialize_pair(const NCPairData& p) { return dump_json(pair_to_json(p)); }

ValidationReport validate(const NCPairData& p) {
  ValidationReport rep;
  auto issue = [&](const std::string& s) { rep.issues.push_back(s); };
  if (static_cast<int>(p.kappa.size()) != p.k) issue("kappa has " + std::to_string(p.kappa.size()) + " entries, expected k");
  for (std::size_t i = 0; i < p.kappa.size(); ++i)
    if (p.kappa[i] < 1) issue("kappa_" + std::to_string(i + 1) + " < 1");
  if (static_cast<int>(p.pole_orders.size()) != p.k) issue("pole_orders has the wrong length");
  if (!p.has_stratum(Subset())) issue("empty stratum missing");

  for (const auto& [s, st] : p.strata) {
    const std::string name = "stratum " + s.label();
    if (!s.is_subset_of(Subset::full(p.k))) issue(name + " mentions a component outside 1..k");
    for (int i : s.elements())
      if (!p.has_stratum(s.without(i))) issue("closure: " + name + " present but " + s.without(i).label() + " absent");
    if (st.components < 1) issue(name + " has fewer than one component");
    const Index h0 = static_cast<Index>(st.ring.degree_indices(0).size());
    if (h0 != st.components)
      issue(name + ": H^0 has rank " + std::to_string(h0) + " but " + std::to_string(st.components) + " components declared");
    for (const auto& v : st.ring.law_violations()) issue(name + ": " + v);
    const int bound = 2 * p.dim - s.size();
    for (const auto& b : st.ring.basis())
      if (b.degree < 0 || b.degree > bound) {
        issue(name + ": class " + b.name + " in degree " + std::to_string(b.degree) + " outside 0.." + std::to_string(bound));
        break;
      }
  }

  for (const auto& [key, m] : p.restrictions) {
    const auto& [from, to] = key;
    const std::string name = "r*_{" + from.label() + "," + to.label() + "}";
    if (!p.has_stratum(from) || !p.has_stratum(to)) {
      issue(name + " refers to a missing stratum");
      continue;
    }
    for (const auto& v : algebra_map_violations(p.ring(from), p.ring(to), m)) issue(name + ": " + v);
  }
  for (const auto& [i, si] : p.strata)
    for (const auto& [kk, sk] : p.strata) {
      if (i == kk || !i.is_subset_of(kk)) continue;
      if (!p.restrictions.count({i, kk})) {
        issue("missing restriction r*_{" + i.label() + "," + kk.label() + "}");
        continue;
      }
      for (const auto& [jj, sj] : p.strata) {
        if (jj == i || jj == kk || !i.is_subset_of(jj) || !jj.is_subset_of(kk)) continue;
        if (!p.restrictions.count({i, jj}) || !p.restrictions.count({jj, kk})) continue;
        const auto& ik = p.restrictions.at({i, kk});
        const auto& ij = p.restrictions.at({i, jj});
        const auto& jk = p.restrictions.at({jj, kk});
        if (ij.rows() != jk.cols() || ik.rows() != jk.rows() || ik.cols() != ij.cols()) continue;
        if (Matrix<Rational>(jk * ij) != ik)
          issue("functoriality: r*_{" + jj.label() + "," + kk.label() + "} r*_{" + i.label() + "," + jj.label() +
                "} != r*_{" + i.label() + "," + kk.label() + "}");
      }
    }

  for (std::size_t r = 0; r < p.h1_relations.size(); ++r)
    if (static_cast<int>(p.h1_relations[r].size()) != p.k)
      issue("h1_relations row " + std::to_string(r + 1) + " does not have k entries");
  if (p.flags.same_line_bundle) {
    if (static_cast<int>(p.flags.same_line_bundle->size()) != p.k) issue("same_line_bundle needs k powers");
    for (long long n : *p.flags.same_line_bundle)
      if (n < 1) issue("same_line_bundle powers must be positive");
  }
  if (p.flags.effective_classes)
    for (const auto& c : *p.flags.effective_classes)
      if (static_cast<int>(c.size()) != p.k) issue("effective class with the wrong number of entries");
  for (const auto& [s, v] : p.flags.gw_vanishing)
    if (!p.has_stratum(s) || s.empty()) issue("gw_vanishing flag for " + s.label() + " which is not a nonempty stratum");
  return rep;
}

SimplicialComplex dual_complex(const NCPairData& p) {
  SimplicialComplex c;
  c.vertices = p.k;
  for (const auto& [s, st] : p.strata) c.faces.insert(s);
  return c;
}

}  // namespace logcoh
