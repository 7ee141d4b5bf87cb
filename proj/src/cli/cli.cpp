#include "logcoh/cli/cli.hpp"

#include "logcoh/arrangements/mirror.hpp"
#include "logcoh/cli/fixtures.hpp"
#include "logcoh/criteria/criteria.hpp"
#include "logcoh/specseq/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <variant>

namespace logcoh::cli {
namespace {

enum class Format { Text, Tsv, Json };

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::ostream& out;
  Format format;
};

Format parse_format(const std::string& s, Format fallback) {
  if (s.empty()) return fallback;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  return Format::Text;
}

// left aligned columns separated by two spaces
void print_grid(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (width.size() <= c) width.push_back(0);
      width[c] = std::max(width[c], r[c].size());
    }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      line += r[c];
      if (c + 1 < r.size()) line += std::string(width[c] - r[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_tsv(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) out << (c ? "\t" : "") << r[c];
    out << "\n";
  }
}

std::string str(long long x) { return std::to_string(x); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<long long> as_ll(const std::vector<Index>& v) { return {v.begin(), v.end()}; }

// ---- validate

int cmd_validate(Context& ctx, const std::string& pair, const std::string& complex, const std::string& arrangement) {
  const int given = !pair.empty() + !complex.empty() + !arrangement.empty();
  if (given != 1) throw UsageError("validate needs exactly one of --pair, --complex, --arrangement");
  std::string kind;
  std::vector<std::string> issues;
  std::string summary;
  if (!pair.empty()) {
    kind = "pair";
    const NCPairData p = load_pair(pair);
    issues = validate(p).issues;
    summary = "k=" + str(p.k) + " dim=" + str(p.dim) + " strata=" + str(static_cast<long long>(p.strata.size()));
  } else if (!complex.empty()) {
    kind = "complex";
    const auto c = load_complex(complex);
    try {
      validate_complex(c);
    } catch (const std::invalid_argument& e) {
      issues.push_back(e.what());
    }
    summary = "dim=" + str(c.dim());
  } else {
    kind = "arrangement";
    const Arrangement a = load_arrangement(arrangement);
    try {
      check_arrangement(a);
    } catch (const std::invalid_argument& e) {
      issues.push_back(e.what());
    }
    summary = "forms=" + str(a.size()) + " variables=" + str(a.variables());
  }
  const bool ok = issues.empty();
  if (ctx.format == Format::Json) {
    Json j;
    j["kind"] = kind;
    j["ok"] = ok;
    j["summary"] = summary;
    j["issues"] = issues;
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows{{"kind", kind}, {"ok", ok ? "true" : "false"}};
    for (const auto& i : issues) rows.push_back({"issue", i});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << kind << " " << (ok ? "ok" : "invalid") << " (" << summary << ")\n";
    for (const auto& i : issues) ctx.out << "  - " << i << "\n";
  }
  return ok ? Ok : ValidationFailure;
}

// ---- logcoh

int cmd_logcoh(Context& ctx, const std::string& file, long long max_weight, bool check) {
  if (file.empty()) throw UsageError("logcoh needs --pair");
  if (max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  const NCPairData p = load_pair(file);
  const LogRingTruncation l = build_log_ring(p, max_weight);
  const HilbertTable t = hilbert_table(l);
  std::optional<FiniteGeneration> fg;
  std::optional<LawReport> laws;
  if (check) {
    fg = check_finite_generation(l);
    laws = check_log_ring_laws(l);
  }
  int dmin = 0, dmax = 0;
  for (const auto& [key, d] : t) {
    dmin = std::min<int>(dmin, static_cast<int>(key.first));
    dmax = std::max<int>(dmax, static_cast<int>(key.first));
  }
  const auto dim_at = [&](long long deg, long long w) {
    const auto it = t.find({deg, w});
    return it == t.end() ? Index(0) : it->second;
  };
  if (ctx.format == Format::Json) {
    Json j;
    j["max_weight"] = max_weight;
    j["classes"] = l.dim();
    Json dims = Json::array();
    for (const auto& [key, d] : t) dims.push_back(Json{{"degree", key.first}, {"weight", key.second}, {"dim", d}});
    j["dims"] = dims;
    if (check) {
      j["finitely_generated"] = fg->generated;
      if (!fg->generated) j["failing_weight"] = fg->failing_weight;
      j["generators"] = static_cast<long long>(fg->generators.size());
      j["law_violations"] = laws->violations;
    }
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows{{"degree", "weight", "dim"}};
    for (const auto& [key, d] : t) rows.push_back({str(key.first), str(key.second), str(d)});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << "log cohomology up to weight " << max_weight << " (rows: weight, columns: degree)\n";
    std::vector<std::vector<std::string>> rows{{"w\\deg"}};
    for (int d = dmin; d <= dmax; ++d) rows[0].push_back(str(d));
    std::set<long long> weights;
    for (const auto& [key, d] : t) weights.insert(key.second);
    for (long long w : weights) {
      rows.push_back({str(w)});
      for (int d = dmin; d <= dmax; ++d) rows.back().push_back(str(dim_at(d, w)));
    }
    print_grid(ctx.out, rows);
    if (check) {
      ctx.out << "finitely generated: " << (fg->generated ? "yes" : "no");
      if (!fg->generated) ctx.out << " (fails at weight " << fg->failing_weight << ")";
      ctx.out << "\nlaw violations: " << laws->violations.size() << "\n";
      for (const auto& v : laws->violations) ctx.out << "  - " << v << "\n";
    }
  }
  if (check && (!fg->generated || !laws->violations.empty())) return ValidationFailure;
  return Ok;
}

// ---- sr

int cmd_sr(Context& ctx, const std::string& file, long long max_weight) {
  if (file.empty()) throw UsageError("sr needs --pair");
  if (max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  const NCPairData p = load_pair(file);
  const ValidationReport rep = validate(p);
  if (!rep.ok()) throw ValidationRequired("pair failed validation: " + rep.issues.front());
  const StanleyReisner sr = stanley_reisner(p);
  const auto h = sr.hilbert(max_weight, p);
  const auto rel = sr.relation_strings();
  std::vector<std::string> vars;
  for (int i = 1; i <= p.k; ++i) vars.push_back("t" + str(i));
  if (ctx.format == Format::Json) {
    Json j;
    j["variables"] = vars;
    j["weights"] = p.kappa;
    j["classical"] = sr.classical;
    j["relations"] = rel;
    j["idempotents"] = sr.idempotents;
    Json hj = Json::array();
    for (const auto& [w, d] : h) hj.push_back(Json{{"weight", w}, {"dim", d}});
    j["hilbert"] = hj;
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : rel) rows.push_back({"relation", r});
    for (const auto& i : sr.idempotents) rows.push_back({"idempotent", i});
    for (const auto& [w, d] : h) rows.push_back({"hilbert", str(w), str(d)});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << "k[" << join(vars, ",") << "]";
    if (!rel.empty()) ctx.out << "/(" << join(rel, ", ") << ")";
    ctx.out << "\n";
    ctx.out << "weights: " << join([&] {
      std::vector<std::string> s;
      for (std::size_t i = 0; i < vars.size(); ++i) s.push_back(vars[i] + "=" + str(p.kappa[i]));
      return s;
    }(), " ") << "\n";
    if (!sr.classical) ctx.out << "disconnected strata, idempotents: " << join(sr.idempotents, " ") << "\n";
    ctx.out << "hilbert by weight:";
    for (const auto& [w, d] : h) ctx.out << " " << w << ":" << d;
    ctx.out << "\n";
  }
  return Ok;
}

// ---- present

void emit_presentation(Context& ctx, const Presentation& pr, const std::vector<std::string>& extra_notes = {}) {
  if (ctx.format == Format::Json) {
    Json j;
    j["generators"] = pr.generators;
    j["relations"] = pr.relations;
    std::vector<std::string> notes = pr.notes;
    notes.insert(notes.end(), extra_notes.begin(), extra_notes.end());
    j["notes"] = notes;
    Json h = Json::array();
    for (const auto& [key, d] : pr.hilbert) h.push_back(Json{{"degree", key.first}, {"weight", key.second}, {"dim", d}});
    j["hilbert"] = h;
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& g : pr.generators) rows.push_back({"generator", g});
    for (const auto& r : pr.relations) rows.push_back({"relation", r});
    for (const auto& n : pr.notes) rows.push_back({"note", n});
    for (const auto& n : extra_notes) rows.push_back({"note", n});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << pr.to_sexpr();
    for (const auto& n : extra_notes) ctx.out << "; " << n << "\n";
  }
}

int cmd_present(Context& ctx, const std::string& file, long long max_weight) {
  if (file.empty()) throw UsageError("present needs --pair");
  if (max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  const NCPairData p = load_pair(file);
  const ValidationReport rep = validate(p);
  if (!rep.ok()) throw ValidationRequired("pair failed validation: " + rep.issues.front());
  emit_presentation(ctx, presentation_topological(p, max_weight));
  return Ok;
}

// ---- sspages

template <class S>
void grid_for(std::ostream& out, const std::map<Bidegree, Index>& cells, int pmin, int pmax, int qmin, int qmax) {
  std::vector<std::vector<std::string>> rows{{"q\\p"}};
  for (int p = pmin; p <= pmax; ++p) rows[0].push_back(str(p));
  for (int q = qmax; q >= qmin; --q) {
    rows.push_back({str(q)});
    for (int p = pmin; p <= pmax; ++p) {
      const auto it = cells.find({p, q});
      rows.back().push_back(it == cells.end() ? "." : str(it->second));
    }
  }
  print_grid(out, rows);
}

template <class S>
int sspages_in(Context& ctx, const FilteredComplex<Rational>& source, int max_page) {
  const FilteredComplex<S> c = convert_complex<S>(source);
  validate_complex(c);
  const int last = max_page > 0 ? max_page : c.spread() + 1;
  std::vector<std::pair<std::string, std::map<Bidegree, Index>>> pages;
  std::vector<bool> zero_differential;
  for (int r = 1; r <= last; ++r) {
    const SSPage<S> pg = page(c, r);
    std::map<Bidegree, Index> dims;
    for (const auto& [pq, cell] : pg.cells) dims[pq] = cell.dim();
    pages.emplace_back("E" + str(r), dims);
    zero_differential.push_back(pg.differential_is_zero());
  }
  std::map<Bidegree, Index> inf;
  for (const auto& [pq, cell] : infinity_page(c).cells) inf[pq] = cell.dim();
  pages.emplace_back("Einf", inf);
  const auto h = cohomology_dims(c);
  const Degeneration deg = detect_degeneration(c, std::max(1, c.spread()));
  int pmin = 0, pmax = 0, qmin = 0, qmax = 0;
  bool first = true;
  for (const auto& [name, cells] : pages)
    for (const auto& [pq, d] : cells) {
      if (first) {
        pmin = pmax = pq.first;
        qmin = qmax = pq.second;
        first = false;
      }
      pmin = std::min(pmin, pq.first);
      pmax = std::max(pmax, pq.first);
      qmin = std::min(qmin, pq.second);
      qmax = std::max(qmax, pq.second);
    }
  if (ctx.format == Format::Json) {
    Json j;
    j["field"] = ScalarTraits<S>::name();
    Json pj = Json::array();
    for (std::size_t i = 0; i < pages.size(); ++i) {
      Json cells = Json::array();
      for (const auto& [pq, d] : pages[i].second) cells.push_back(Json{{"p", pq.first}, {"q", pq.second}, {"dim", d}});
      Json e{{"page", pages[i].first}, {"cells", cells}};
      if (i < zero_differential.size()) e["differential_zero"] = static_cast<bool>(zero_differential[i]);
      pj.push_back(e);
    }
    j["pages"] = pj;
    Json hj = Json::array();
    for (const auto& [n, d] : h) hj.push_back(Json{{"degree", n}, {"dim", d}});
    j["cohomology"] = hj;
    j["degenerates_at_E1"] = deg.degenerates_at_E1;
    if (deg.first_nonzero_page) j["first_nonzero_differential"] = *deg.first_nonzero_page;
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows{{"page", "p", "q", "dim"}};
    for (const auto& [name, cells] : pages)
      for (const auto& [pq, d] : cells) rows.push_back({name, str(pq.first), str(pq.second), str(d)});
    for (const auto& [n, d] : h) rows.push_back({"H", "", str(n), str(d)});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << "field " << ScalarTraits<S>::name() << ", " << c.dim() << " basis elements, spread " << c.spread() << "\n";
    for (std::size_t i = 0; i < pages.size(); ++i) {
      ctx.out << pages[i].first;
      if (pages[i].second.empty()) ctx.out << " = 0";
      if (i < zero_differential.size()) ctx.out << (zero_differential[i] ? "  (d zero)" : "  (d nonzero)");
      ctx.out << "\n";
      if (!pages[i].second.empty()) grid_for<S>(ctx.out, pages[i].second, pmin, pmax, qmin, qmax);
    }
    ctx.out << "H:";
    if (h.empty()) ctx.out << " 0";
    for (const auto& [n, d] : h) ctx.out << " " << n << ":" << d;
    ctx.out << "\n";
    ctx.out << (deg.degenerates_at_E1 ? "degenerates at E1\n"
                                      : "first nonzero differential on E" + str(*deg.first_nonzero_page) + "\n");
  }
  return Ok;
}

std::uint32_t parse_field(const std::string& f) {
  if (f.empty() || f == "q") return 0;
  if (f.rfind("fp:", 0) == 0) {
    const std::string n = f.substr(3);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 1009u, 32003u})
      if (n == std::to_string(p)) return p;
    throw UsageError("unsupported prime '" + n + "' (supported: 2 3 5 7 11 13 1009 32003)");
  }
  if (f == "z") throw UsageError("integer coefficients are not supported for spectral sequence pages");
  throw UsageError("field must be q or fp:<prime>, got '" + f + "'");
}

int cmd_sspages(Context& ctx, const std::string& file, std::string field, int max_page) {
  if (file.empty()) throw UsageError("sspages needs --complex");
  if (field.empty()) {
    const char* env = std::getenv("LOGCOH_FIELD");
    field = env ? env : "q";
  }
  const std::uint32_t p = parse_field(field);
  const auto c = load_complex(file);
  switch (p) {
    case 0: return sspages_in<Rational>(ctx, c, max_page);
    case 2: return sspages_in<Zp<2>>(ctx, c, max_page);
    case 3: return sspages_in<Zp<3>>(ctx, c, max_page);
    case 5: return sspages_in<Zp<5>>(ctx, c, max_page);
    case 7: return sspages_in<Zp<7>>(ctx, c, max_page);
    case 11: return sspages_in<Zp<11>>(ctx, c, max_page);
    case 13: return sspages_in<Zp<13>>(ctx, c, max_page);
    case 1009: return sspages_in<Zp<1009>>(ctx, c, max_page);
    default: return sspages_in<Zp<32003>>(ctx, c, max_page);
  }
}

// ---- classify

std::vector<std::vector<Rational>> lines_from_file(const std::string& file) {
  const Arrangement a = load_arrangement(file);
  check_arrangement(a);
  if (a.variables() != 3) throw ParseError("forms", "lines of P^2 need 3 coefficients");
  return a.forms;
}

void text_verdict(std::ostream& out, const std::string& name, const Verdict& v) {
  out << name << ": " << to_string(v.status) << "\n  rule: " << v.rule << "\n";
  for (const auto& w : v.witnesses) out << "  - " << w << "\n";
  for (const auto& a : v.assumptions) out << "  assumes: " << a << "\n";
}

int cmd_classify(Context& ctx, const std::string& file, const std::string& gw_file, const std::string& lines_file) {
  if (file.empty()) throw UsageError("classify needs --pair");
  const NCPairData p = load_pair(file);
  const ValidationReport rep = validate(p);
  if (!rep.ok()) throw ValidationRequired("pair failed validation: " + rep.issues.front());
  std::optional<std::map<Subset, bool>> gw;
  if (!gw_file.empty()) gw = parse_gw_flags(load_json_source(gw_file));
  ClassifyInput in = classify_input(p);
  if (!lines_file.empty()) {
    if (p.dim != 2) throw UsageError("--lines only applies to pairs of dimension 2");
    in.p2_lines = lines_from_file(lines_file);
  }
  const ClassifyResult cls = classify_pair(in);
  std::vector<std::pair<std::string, std::variant<Verdict, std::string>>> rows;
  if (p.flags.same_line_bundle) rows.emplace_back("easycor", check_easycor(p));
  else rows.emplace_back("easycor", std::string("same_line_bundle not supplied"));
  rows.emplace_back("topological", cls.topological);
  rows.emplace_back("multiplicatively_topological", cls.multiplicatively_topological);
  rows.emplace_back("condition_A", check_condition_A(p));
  std::optional<StanleyReisner> sr;
  if (p.flags.anticanonical) {
    DegreeZeroReport d = degree_zero_report(p);
    sr = d.sr;
    rows.emplace_back("degree_zero", d.verdict);
  } else {
    rows.emplace_back("degree_zero", std::string("anticanonical flag not supplied"));
  }
  rows.emplace_back("gw_degeneration", gw_degeneration_report(p, gw));
  if (ctx.format == Format::Json) {
    Json j;
    j["pair"] = Json{{"k", p.k}, {"dim", p.dim}};
    Json v = Json::object();
    for (const auto& [name, r] : rows) {
      if (const auto* verdict = std::get_if<Verdict>(&r)) v[name] = verdict_to_json(*verdict);
      else v[name] = Json{{"skipped", std::get<std::string>(r)}};
    }
    j["verdicts"] = v;
    if (sr) j["sr_relations"] = sr->relation_strings();
    if (cls.resolution) {
      j["resolution"] = Json{{"components", cls.resolution->components},
                             {"blowups", static_cast<long long>(cls.resolution->blown_up.size())}};
    }
    ctx.out << dump_json(j);
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> t{{"criterion", "status", "rule"}};
    for (const auto& [name, r] : rows) {
      if (const auto* verdict = std::get_if<Verdict>(&r)) t.push_back({name, to_string(verdict->status), verdict->rule});
      else t.push_back({name, "skipped", std::get<std::string>(r)});
    }
    print_tsv(ctx.out, t);
  } else {
    for (const auto& [name, r] : rows) {
      if (const auto* verdict = std::get_if<Verdict>(&r)) text_verdict(ctx.out, name, *verdict);
      else ctx.out << name << ": skipped (" << std::get<std::string>(r) << ")\n";
    }
    if (sr) ctx.out << "gr SH^0 relations: " << join(sr->relation_strings(), ", ") << "\n";
  }
  return Ok;
}

// ---- arrangement

std::string poly_string(const std::vector<Index>& coeffs) {
  std::string s;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string term = i == 0 ? str(coeffs[i]) : (coeffs[i] == 1 ? "" : str(coeffs[i])) + (i == 1 ? "t" : "t^" + str(static_cast<long long>(i)));
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

int emit_betti(Context& ctx, const std::string& what, const std::vector<Index>& b) {
  if (ctx.format == Format::Json) {
    ctx.out << dump_json(Json{{what, as_ll(b)}});
  } else if (ctx.format == Format::Tsv) {
    std::vector<std::vector<std::string>> rows{{"degree", "dim"}};
    for (std::size_t i = 0; i < b.size(); ++i) rows.push_back({str(static_cast<long long>(i)), str(b[i])});
    print_tsv(ctx.out, rows);
  } else {
    ctx.out << what << ": " << poly_string(b) << "\n";
  }
  return Ok;
}

// n and k from --n/--k or from a projective arrangement file in general position
std::pair<int, int> generic_parameters(const std::string& file, int n, int k) {
  if (file.empty()) {
    if (n < 0 || k < 0) throw UsageError("give --file or both --n and --k");
    return {n, k};
  }
  const Arrangement a = load_arrangement(file);
  check_arrangement(a);
  if (a.mode != ArrangementMode::Projective) throw ParseError("mode", "a projective arrangement is required");
  const int dim = a.variables() - 1;
  for (const Flat& f : intersection_lattice(a))
    if (f.subset.size() <= dim + 1 && f.rank != f.subset.size())
      throw ValidationRequired("arrangement is not in general position at " + f.subset.label());
  return {dim, a.size()};
}

int cmd_arrangement(Context& ctx, const std::string& which, const std::string& file, int n, int k, int m,
                    long long max_weight) {
  if (which == "os") {
    if (file.empty()) throw UsageError("arrangement os needs --file");
    const Arrangement a = load_arrangement(file);
    check_arrangement(a);
    return emit_betti(ctx, "poincare", orlik_solomon(a).poincare());
  }
  if (which == "complement") {
    if (file.empty()) {
      if (n < 0 || k < 0) throw UsageError("arrangement complement needs --file or both --n and --k");
      if (n < 1 || k < 1 || k > 12) throw InvalidParameters("need n >= 1 and 1 <= k <= 12");
      return emit_betti(ctx, "betti", projective_complement(generic_projective(n, k)).betti());
    }
    const Arrangement a = load_arrangement(file);
    check_arrangement(a);
    if (a.mode != ArrangementMode::Projective) throw ParseError("mode", "complement needs a projective arrangement");
    return emit_betti(ctx, "betti", projective_complement(a).betti());
  }
  if (which == "pair") {
    const auto [nn, kk] = generic_parameters(file, n, k);
    ctx.out << serialize_pair(build_generic_pair(nn, kk));
    return Ok;
  }
  if (which == "sh") {
    const auto [nn, kk] = generic_parameters(file, n, k);
    const ShPresentation sh = sh_presentation(nn, kk, max_weight);
    std::vector<std::string> notes = sh.notes;
    notes.push_back(std::string("hilbert table ") + (sh.tables_agree ? "agrees" : "disagrees") + " with the log ring");
    emit_presentation(ctx, sh.presentation, notes);
    return sh.tables_agree ? Ok : ValidationFailure;
  }
  // mirror
  const int mm = m >= 0 ? m : (file.empty() ? -1 : generic_parameters(file, 0, 0).second);
  if (mm < 0) throw UsageError("arrangement mirror needs --m or --file");
  const MirrorReport r = mirror_hochschild(mm, static_cast<int>(max_weight));
  if (ctx.format == Format::Json) {
    const auto to_j = [](const std::map<long long, Index>& x) {
      Json a = Json::array();
      for (const auto& [w, d] : x) a.push_back(Json{{"weight", w}, {"dim", d}});
      return a;
    };
    ctx.out << dump_json(Json{{"m", r.m}, {"bound", r.bound}, {"h0", to_j(r.h0)}, {"sr", to_j(r.sr)}, {"h1", to_j(r.h1)},
                              {"log_h1", to_j(r.log_h1)}, {"b1", r.b1}, {"h0_matches", r.h0_matches},
                              {"h1_weight0_matches", r.h1_weight0_matches}});
  } else {
    std::vector<std::vector<std::string>> rows{{"weight", "H0", "SR", "H1", "logH1"}};
    for (long long w = -1; w <= r.bound; ++w) {
      const auto get = [&](const std::map<long long, Index>& x) {
        const auto it = x.find(w);
        return it == x.end() ? std::string("-") : str(it->second);
      };
      rows.push_back({str(w), get(r.h0), get(r.sr), get(r.h1), get(r.log_h1)});
    }
    if (ctx.format == Format::Tsv) {
      print_tsv(ctx.out, rows);
    } else {
      ctx.out << "polyvector fields on C^" << r.m << " under contraction with dW, W = z1...z" << r.m << "\n";
      print_grid(ctx.out, rows);
      ctx.out << "H0 = SR by weight: " << (r.h0_matches ? "yes" : "no") << "\n";
      ctx.out << "H1 weight 0 = b1 = " << r.b1 << ": " << (r.h1_weight0_matches ? "yes" : "no") << "\n";
    }
  }
  return r.ok() ? Ok : ValidationFailure;
}

// ---- mirror-check

int cmd_mirror_check(Context& ctx, int only_n, long long max_weight) {
  if (only_n == 0 || only_n < -1) throw InvalidParameters("--n must be at least 1");
  std::vector<int> ns = only_n > 0 ? std::vector<int>{only_n} : std::vector<int>{1, 2, 3};
  bool all = true;
  Json j = Json::array();
  std::vector<std::vector<std::string>> rows{{"n", "iso", "sr_series", "jac_series", "mirror_m", "mirror_ok"}};
  for (int n : ns) {
    const SrJacobianIsomorphism iso = sr_jacobian_isomorphism(n);
    const auto series = [](const std::vector<Index>& s) {
      std::vector<std::string> v;
      for (Index x : s) v.push_back(str(x));
      return join(v, ",");
    };
    std::optional<MirrorReport> mr;
    if (n <= 2) mr = mirror_hochschild(n + 2, static_cast<int>(max_weight));
    all = all && iso.ok && (!mr || mr->ok());
    Json e{{"n", n}, {"isomorphism", iso.ok}, {"sr_series", as_ll(iso.sr_series)}, {"jac_series", as_ll(iso.jac_series)}};
    Json map = Json::array();
    for (const auto& [a, b] : iso.relation_map) map.push_back(Json::array({a, b}));
    e["relation_map"] = map;
    if (mr) e["mirror_ok"] = mr->ok();
    j.push_back(e);
    rows.push_back({str(n), iso.ok ? "yes" : "no", series(iso.sr_series), series(iso.jac_series),
                    mr ? str(mr->m) : "-", mr ? (mr->ok() ? "yes" : "no") : "-"});
  }
  if (ctx.format == Format::Json) ctx.out << dump_json(Json{{"checks", j}, {"ok", all}});
  else if (ctx.format == Format::Tsv) print_tsv(ctx.out, rows);
  else print_grid(ctx.out, rows);
  return all ? Ok : ValidationFailure;
}

// ---- fixtures

int cmd_fixtures(Context& ctx, const std::string& name, bool list, const std::string& out_file, const std::string& dir) {
  if (list) {
    for (const auto& n : fixture_names()) ctx.out << n << "\n";
    return Ok;
  }
  if (!dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);  // a failure shows up as an unwritable file
    for (const auto& n : fixture_names()) {
      const std::string path = dir + "/" + n + ".json";
      std::ofstream f(path, std::ios::binary);
      if (!f) throw std::runtime_error("cannot write " + path);
      f << fixture_text(n);
    }
    ctx.out << "wrote " << fixture_names().size() << " fixtures to " << dir << "\n";
    return Ok;
  }
  if (name.empty()) throw UsageError("fixtures needs a name, --list or --dir");
  const std::string text = fixture_text(name);
  if (out_file.empty()) {
    ctx.out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + out_file);
    f << text;
  }
  return Ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Log cohomology, spectral sequences and hyperplane arrangements", "logcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv", "text"}));

  std::string pair, complex, arrangement_file, gw_file, lines_file, field, fixture, out_file, dir;
  long long max_weight = 6;
  int max_page = 0, n = -1, k = -1, m = -1;
  bool check = false, list = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a pair, complex or arrangement file");
  validate_cmd->add_option("--pair", pair, "Pair file");
  validate_cmd->add_option("--complex", complex, "Filtered complex file");
  validate_cmd->add_option("--arrangement", arrangement_file, "Arrangement file");

  auto* logcoh_cmd = app.add_subcommand("logcoh", "Bigraded dimensions of the log cohomology ring");
  logcoh_cmd->add_option("--pair", pair, "Pair file")->required();
  logcoh_cmd->add_option("--max-weight", max_weight, "Weight truncation")->required();
  logcoh_cmd->add_flag("--check", check, "Also check finite generation and ring laws");

  auto* sr_cmd = app.add_subcommand("sr", "Stanley-Reisner ring of the dual complex");
  sr_cmd->add_option("--pair", pair, "Pair file")->required();
  sr_cmd->add_option("--max-weight", max_weight, "Hilbert function up to this weight");

  auto* present_cmd = app.add_subcommand("present", "Presentation of a topological pair's log ring");
  present_cmd->add_option("--pair", pair, "Pair file")->required();
  present_cmd->add_option("--max-weight", max_weight, "Weight truncation")->required();

  auto* ss_cmd = app.add_subcommand("sspages", "Spectral sequence pages of a filtered complex");
  ss_cmd->add_option("--complex", complex, "Filtered complex file")->required();
  ss_cmd->add_option("--field", field, "q or fp:<prime> (default from LOGCOH_FIELD, else q)");
  ss_cmd->add_option("--max-page", max_page, "Last page to print (default: stabilization)");

  auto* classify_cmd = app.add_subcommand("classify", "Degeneration and classification verdicts");
  classify_cmd->add_option("--pair", pair, "Pair file")->required();
  classify_cmd->add_option("--gw-flags", gw_file, "Obstruction vanishing flags");
  classify_cmd->add_option("--lines", lines_file, "Line arrangement in P^2 to resolve (arr/1)");

  auto* arr_cmd = app.add_subcommand("arrangement", "Hyperplane arrangement computations");
  arr_cmd->require_subcommand(1);
  std::string which;
  for (const char* sub : {"os", "complement", "pair", "sh", "mirror"}) {
    auto* s = arr_cmd->add_subcommand(sub);
    s->add_option("--file", arrangement_file, "Arrangement file");
    s->add_option("--max-weight", max_weight, "Weight truncation");
    s->add_option("--n", n, "Dimension of P^n");
    s->add_option("--k", k, "Number of hyperplanes");
    s->add_option("--m", m, "Number of variables (mirror)");
    s->callback([&which, sub] { which = sub; });
  }
  arr_cmd->get_subcommand("os")->description("Poincare polynomial of the Orlik-Solomon algebra");
  arr_cmd->get_subcommand("complement")->description("Betti numbers of a projective complement");
  arr_cmd->get_subcommand("pair")->description("Pair file of a generic arrangement");
  arr_cmd->get_subcommand("sh")->description("SH presentation of a generic arrangement");
  arr_cmd->get_subcommand("mirror")->description("Polyvector field cohomology against the log ring");

  auto* mirror_cmd = app.add_subcommand("mirror-check", "Stanley-Reisner versus Jacobian ring checks");
  mirror_cmd->add_option("--n", n, "Only this n (default 1, 2, 3)");
  mirror_cmd->add_option("--max-weight", max_weight, "Weight bound for the polyvector check");

  auto* fixtures_cmd = app.add_subcommand("fixtures", "Emit built-in fixture files");
  fixtures_cmd->add_option("name", fixture, "Fixture name");
  fixtures_cmd->add_flag("--list", list, "List fixture names");
  fixtures_cmd->add_option("--out", out_file, "Write to this file");
  fixtures_cmd->add_option("--dir", dir, "Write every fixture into this directory");

  std::vector<std::string> argv_store{"logcoh"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? Ok : Usage;
  }

  try {
    Context ctx{out, Format::Text};
    const auto fmt = [&](Format fallback) { ctx.format = parse_format(format, fallback); };
    if (validate_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_validate(ctx, pair, complex, arrangement_file);
    }
    if (logcoh_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_logcoh(ctx, pair, max_weight, check);
    }
    if (sr_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_sr(ctx, pair, max_weight);
    }
    if (present_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_present(ctx, pair, max_weight);
    }
    if (ss_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_sspages(ctx, complex, field, max_page);
    }
    if (classify_cmd->parsed()) {
      fmt(Format::Json);
      return cmd_classify(ctx, pair, gw_file, lines_file);
    }
    if (arr_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_arrangement(ctx, which, arrangement_file, n, k, m, max_weight);
    }
    if (mirror_cmd->parsed()) {
      fmt(Format::Text);
      return cmd_mirror_check(ctx, n, max_weight);
    }
    fmt(Format::Text);
    return cmd_fixtures(ctx, fixture, list, out_file, dir);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const UnknownFixture& e) {
    err << "usage error: " << e.what() << "\n";
    return Usage;
  } catch (const ParseError& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const ValidationRequired& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const InvalidComplex& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const ProductNotFiltered& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const InvalidParameters& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const LengthMismatch& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const DegenerateInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const RestrictionNotSurjective& e) {
    err << "hypothesis not met: " << e.what() << "\n";
    return ValidationFailure;
  } catch (const std::exception& e) {
    err << "computation error: " << e.what() << "\n";
    return ComputationError;
  }
}

}  // namespace logcoh::cli
