#include <cctype>
#include <string>

#include "shg/measure.hpp"

namespace shg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Measure parse_measure(SpacePtr const& space, std::string_view text) {
  auto out = Measure::zero(space);
  VectorQ coeffs = VectorQ::Zero(static_cast<Eigen::Index>(space->size()));
  std::string_view rest = trim(text);
  if (rest.empty()) throw InputError("empty measure literal");
  bool negative = false;
  if (rest.front() == '-' || rest.front() == '+') {
    negative = rest.front() == '-';
    rest = trim(rest.substr(1));
  }
  while (true) {
    // Point names never contain + or -, so the next sign ends the term.
    auto cut = rest.find_first_of("+-");
    std::string_view term = trim(rest.substr(0, cut));
    if (term.empty()) throw InputError("empty term in measure literal '" + std::string(text) + "'");
    Rational c(1);
    std::string_view point = term;
    if (auto star = term.find('*'); star != std::string_view::npos) {
      c = parse_rational(trim(term.substr(0, star)));
      point = trim(term.substr(star + 1));
    }
    if (negative) c = -c;
    coeffs(static_cast<Eigen::Index>(space->index(point))) += c;
    if (cut == std::string_view::npos) break;
    negative = rest[cut] == '-';
    rest = trim(rest.substr(cut + 1));
  }
  return Measure(space, std::move(coeffs));
}

}  // namespace shg
