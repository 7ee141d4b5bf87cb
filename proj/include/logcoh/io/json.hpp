#pragma once

#include "logcoh/graded/algebra.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace logcoh {

using Json = nlohmann::ordered_json;

/// Malformed input file. `where` is "line N" for syntax errors or a field
/// path such as "strata[2].ring.unit" for schema errors.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses JSON text, translating syntax errors into ParseError("line N").
Json parse_json_text(const std::string& text);
/// Reads text from a path; throws ParseError if unreadable.
std::string read_text_file(const std::string& path);
/// Treats `source` as JSON text if it starts with '{' (after blanks), else as a path.
Json load_json_source(const std::string& source);

/// Integers as JSON numbers, other rationals as "a/b" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j, const std::string& path);

Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j, const std::string& path, Index rows = -1, Index cols = -1);

Json algebra_to_json(const GradedAlgebra& a);
GradedAlgebra algebra_from_json(const Json& j, const std::string& path);

/// Field accessors raising ParseError with the field path.
const Json& require_field(const Json& j, const std::string& key, const std::string& path);
long long require_int(const Json& j, const std::string& path);
std::vector<long long> require_int_list(const Json& j, const std::string& path);

/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace logcoh
