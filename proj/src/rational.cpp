#include "blowcone/rational.hpp"

#include <cctype>

#include "blowcone/errors.hpp"

namespace blowcone {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);

  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "' (expected p or p/q)");
  }

  mpz_class q(std::string(den), 10);
  if (q == 0) {
    throw ParseError("zero denominator in '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num), 10);
  if (text.front() == '-') p = -p;

  Rational value(p, q);
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

}  // namespace blowcone
