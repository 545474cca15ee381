#ifndef SHG_ERRORS_HPP_
#define SHG_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace shg {

// Malformed input: unknown point, mismatched spaces, bad literal, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A mathematical check failed on well-formed input. Carries the failing
// axiom's name and the counterexample, already rendered with point names.
class AxiomViolation : public std::runtime_error {
 public:
  AxiomViolation(std::string axiom, std::vector<std::string> witness_points, std::string detail)
      : std::runtime_error(axiom + " fails at (" + join(witness_points) + "): " + detail),
        axiom_(std::move(axiom)),
        witness_(std::move(witness_points)),
        detail_(std::move(detail)) {}

  std::string const& axiom() const noexcept { return axiom_; }
  std::vector<std::string> const& witness() const noexcept { return witness_; }
  std::string const& detail() const noexcept { return detail_; }

 private:
  static std::string join(std::vector<std::string> const& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ", ";
      out += parts[i];
    }
    return out;
  }

  std::string axiom_;
  std::vector<std::string> witness_;
  std::string detail_;
};

}  // namespace shg

#endif  // SHG_ERRORS_HPP_
