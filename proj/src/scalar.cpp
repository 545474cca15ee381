#include "shg/scalar.hpp"

#include <cctype>
#include <sstream>

#include "shg/measure.hpp"

namespace shg {

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
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto slash = s.find('/');
  std::string_view num = s.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw InputError("malformed rational '" + std::string(text) + "'");
  }
  using Int = boost::multiprecision::mpz_int;
  Int n{std::string(num)}, d{std::string(den)};
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  return negative ? Rational(-q) : q;
}

std::string to_string(Rational const& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::signed_measure:
      return "signed";
    case MeasureKind::nonnegative:
      return "nonnegative";
    case MeasureKind::probability:
      return "probability";
    case MeasureKind::dirac:
      return "dirac";
  }
  return "signed";
}

}  // namespace shg
