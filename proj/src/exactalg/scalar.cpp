#include "logcoh/exactalg/scalar.hpp"

#include <cctype>

namespace logcoh {

Rational parse_rational(const std::string& text) {
  const auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw std::invalid_argument("not a rational: '" + text + "'");
  const Integer d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  return Rational(Integer(num[0] == '+' ? num.substr(1) : num)) / Rational(d);
}

}  // namespace logcoh
