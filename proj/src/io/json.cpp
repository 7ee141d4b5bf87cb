#include "logcoh/io/json.hpp"

#include <fstream>
#include <sstream>

namespace logcoh {

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < std::min(e.byte, text.size()); ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("line " + std::to_string(line), "invalid JSON");
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json load_json_source(const std::string& source) {
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_json_text(source);
  return parse_json_text(read_text_file(source));
}

Json rational_to_json(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    const Integer n = boost::multiprecision::numerator(q);
    if (n >= Integer(std::numeric_limits<long long>::min()) && n <= Integer(std::numeric_limits<long long>::max()))
      return n.convert_to<long long>();
  }
  return q.str();
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ParseError(path, e.what());
    }
  }
  throw ParseError(path, "expected an integer or a rational string");
}

Json matrix_to_json(const Matrix<Rational>& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(rational_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix<Rational> matrix_from_json(const Json& j, const std::string& path, Index rows, Index cols) {
  if (!j.is_array()) throw ParseError(path, "expected a list of rows");
  const Index r = static_cast<Index>(j.size());
  if (rows >= 0 && r != rows)
    throw ParseError(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(r));
  Index c = cols;
  if (c < 0) c = r > 0 && j[0].is_array() ? static_cast<Index>(j[0].size()) : 0;
  Matrix<Rational> m(r, c);
  for (Index i = 0; i < r; ++i) {
    const std::string rp = path + "[" + std::to_string(i) + "]";
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != c)
      throw ParseError(rp, "expected a row of length " + std::to_string(c));
    for (Index k = 0; k < c; ++k)
      m(i, k) = rational_from_json(row[static_cast<std::size_t>(k)], rp + "[" + std::to_string(k) + "]");
  }
  return m;
}

Json algebra_to_json(const GradedAlgebra& a) {
  Json j;
  Json basis = Json::array();
  for (const auto& b : a.basis()) basis.push_back(Json{{"name", b.name}, {"deg", b.degree}});
  j["basis"] = std::move(basis);
  j["unit"] = a.unit();
  Json mult = Json::array();
  for (Index i = 0; i < a.dim(); ++i)
    for (Index k = 0; k < a.dim(); ++k) {
      const auto& p = a.product(i, k);
      if (p.empty() || i == a.unit() || k == a.unit()) continue;
      Json terms = Json::array();
      for (const auto& [t, c] : p) terms.push_back(Json::array({t, rational_to_json(c)}));
      mult.push_back(Json::array({i, k, std::move(terms)}));
    }
  j["mult"] = std::move(mult);
  return j;
}

GradedAlgebra algebra_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an algebra object");
  const Json& basis = require_field(j, "basis", path);
  if (!basis.is_array() || basis.empty()) throw ParseError(path + ".basis", "expected a nonempty list");
  std::vector<BasisElement> elems;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string bp = path + ".basis[" + std::to_string(i) + "]";
    const Json& name = require_field(basis[i], "name", bp);
    if (!name.is_string()) throw ParseError(bp + ".name", "expected a string");
    elems.push_back({name.get<std::string>(), static_cast<int>(require_int(require_field(basis[i], "deg", bp), bp + ".deg"))});
  }
  const Index n = static_cast<Index>(elems.size());
  const Index unit = require_int(require_field(j, "unit", path), path + ".unit");
  if (unit < 0 || unit >= n) throw ParseError(path + ".unit", "unit index out of range");
  std::vector<SparseVec<Rational>> table(static_cast<std::size_t>(n * n));
  for (Index i = 0; i < n; ++i) {
    table[static_cast<std::size_t>(unit * n + i)] = {{i, Rational(1)}};
    table[static_cast<std::size_t>(i * n + unit)] = {{i, Rational(1)}};
  }
  if (j.contains("mult")) {
    const Json& mult = j["mult"];
    if (!mult.is_array()) throw ParseError(path + ".mult", "expected a list");
    for (std::size_t e = 0; e < mult.size(); ++e) {
      const std::string mp = path + ".mult[" + std::to_string(e) + "]";
      const Json& entry = mult[e];
      if (!entry.is_array() || entry.size() != 3) throw ParseError(mp, "expected [i, j, terms]");
      const Index i = require_int(entry[0], mp + "[0]"), k = require_int(entry[1], mp + "[1]");
      if (i < 0 || i >= n || k < 0 || k >= n) throw ParseError(mp, "basis index out of range");
      if (i == unit || k == unit) throw ParseError(mp, "products with the unit are implicit");
      if (!entry[2].is_array()) throw ParseError(mp + "[2]", "expected a list of [k, coef]");
      SparseVec<Rational> terms;
      for (std::size_t t = 0; t < entry[2].size(); ++t) {
        const std::string tp = mp + "[2][" + std::to_string(t) + "]";
        const Json& term = entry[2][t];
        if (!term.is_array() || term.size() != 2) throw ParseError(tp, "expected [k, coef]");
        const Index target = require_int(term[0], tp + "[0]");
        if (target < 0 || target >= n) throw ParseError(tp, "basis index out of range");
        terms.emplace_back(target, rational_from_json(term[1], tp + "[1]"));
      }
      table[static_cast<std::size_t>(i * n + k)] = std::move(terms);
    }
  }
  return GradedAlgebra(std::move(elems), unit, std::move(table));
}

const Json& require_field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(path.empty() ? key : path + "." + key, "missing field");
  return j.at(key);
}

long long require_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path, "expected an integer");
  return j.get<long long>();
}

std::vector<long long> require_int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path, "expected a list of integers");
  std::vector<long long> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(require_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

namespace {

// [1,2] -> [1, 2] and {"a":1} -> {"a": 1}, leaving string contents alone
std::string spaced(const std::string& raw) {
  std::string out;
  bool in_string = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const char ch = raw[i];
    if (ch == '"' && (i == 0 || raw[i - 1] != '\\')) in_string = !in_string;
    out += ch;
    if ((ch == ',' || ch == ':') && !in_string) out += ' ';
  }
  return out;
}

bool inline_ok(const Json& j, int indent) { return indent > 0 && j.dump().size() <= 80; }

// short containers inline, the rest one entry per line
void write_json(std::string& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
  if (j.is_structured() && inline_ok(j, indent)) {
    out += spaced(j.dump());
    return;
  }
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(it.key()).dump() + ": ";
      write_json(out, it.value(), indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_json(out, j[i], indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_json(const Json& j) {
  std::string out;
  write_json(out, j, 0);
  return out + "\n";
}

}  // namespace logcoh
