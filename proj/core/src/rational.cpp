#include "sobczyk/rational.hpp"

#include <cctype>
#include <iomanip>
#include <sstream>

#include "sobczyk/error.hpp"

namespace sobczyk {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-') {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
  mpz_class d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) {
  Rational copy(value);
  copy.canonicalize();
  return copy.get_str(10);
}

std::string to_decimal(const Rational& value, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << value.get_d();
  return os.str();
}

}  // namespace sobczyk
