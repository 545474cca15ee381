#ifndef SHG_MEASURE_HPP_
#define SHG_MEASURE_HPP_

#include <cstddef>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shg/scalar.hpp"
#include "shg/space.hpp"

namespace shg {

enum class MeasureKind { signed_measure, nonnegative, probability, dirac };

std::string_view to_string(MeasureKind kind);

// A finitely supported signed measure, stored densely: one coefficient per
// point of the underlying space.
template <typename Scalar>
class BasicMeasure {
 public:
  using scalar_type = Scalar;

  BasicMeasure(SpacePtr space, Vector<Scalar> coeffs)
      : space_(std::move(space)), coeffs_(std::move(coeffs)) {
    if (!space_) throw InputError("measure needs a space");
    if (static_cast<std::size_t>(coeffs_.size()) != space_->size()) {
      throw InputError("measure has " + std::to_string(coeffs_.size()) +
                       " coefficients for a space of " + std::to_string(space_->size()) +
                       " points");
    }
  }

  static BasicMeasure zero(SpacePtr space) {
    auto n = static_cast<Eigen::Index>(space->size());
    return BasicMeasure(std::move(space), Vector<Scalar>::Zero(n));
  }

  SpacePtr const& space() const noexcept { return space_; }
  Vector<Scalar> const& coeffs() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return space_->size(); }

  Scalar const& operator[](std::size_t i) const { return coeffs_(static_cast<Eigen::Index>(i)); }
  Scalar const& at(std::string_view point) const {
    return coeffs_(static_cast<Eigen::Index>(space_->index(point)));
  }

  Scalar total_mass() const { return coeffs_.sum(); }

  std::vector<std::size_t> support_indices() const {
    std::vector<std::size_t> out;
    for (Eigen::Index i = 0; i < coeffs_.size(); ++i) {
      if (coeffs_(i) != Scalar(0)) out.push_back(static_cast<std::size_t>(i));
    }
    return out;
  }

  std::set<std::string> support() const {
    std::set<std::string> out;
    for (auto i : support_indices()) out.insert(space_->name(i));
    return out;
  }

  bool is_nonnegative() const { return (coeffs_.array() >= Scalar(0)).all(); }
  bool is_probability() const { return is_nonnegative() && total_mass() == Scalar(1); }

  // The most specific class the measure belongs to.
  MeasureKind classify() const {
    if (!is_nonnegative()) return MeasureKind::signed_measure;
    if (total_mass() != Scalar(1)) return MeasureKind::nonnegative;
    return support_indices().size() == 1 ? MeasureKind::dirac : MeasureKind::probability;
  }

  bool operator==(BasicMeasure const& other) const {
    return same_space(space_, other.space_) && coeffs_ == other.coeffs_;
  }
  bool operator!=(BasicMeasure const& other) const { return !(*this == other); }

  BasicMeasure& operator+=(BasicMeasure const& other) {
    require_same_space(other);
    coeffs_ += other.coeffs_;
    return *this;
  }
  BasicMeasure& operator-=(BasicMeasure const& other) {
    require_same_space(other);
    coeffs_ -= other.coeffs_;
    return *this;
  }
  BasicMeasure& operator*=(Scalar const& c) {
    coeffs_ *= c;
    return *this;
  }

  friend BasicMeasure operator+(BasicMeasure a, BasicMeasure const& b) { return a += b; }
  friend BasicMeasure operator-(BasicMeasure a, BasicMeasure const& b) { return a -= b; }
  friend BasicMeasure operator*(Scalar const& c, BasicMeasure a) { return a *= c; }

  void require_same_space(BasicMeasure const& other) const {
    if (!same_space(space_, other.space_)) throw InputError("measures live on different spaces");
  }

 private:
  SpacePtr space_;
  Vector<Scalar> coeffs_;
};

using Measure = BasicMeasure<Rational>;

template <typename Scalar = Rational>
BasicMeasure<Scalar> dirac(SpacePtr const& space, std::size_t index) {
  Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(space->size()));
  v(static_cast<Eigen::Index>(index)) = Scalar(1);
  return BasicMeasure<Scalar>(space, std::move(v));
}

// Point mass at the named point; unknown names raise InputError.
template <typename Scalar = Rational>
BasicMeasure<Scalar> dirac(SpacePtr const& space, std::string_view point) {
  return dirac<Scalar>(space, space->index(point));
}

// Exact linear combination sum_i c_i * mu_i. All measures must share a space.
template <typename Scalar>
BasicMeasure<Scalar> combine(std::vector<std::pair<Scalar, BasicMeasure<Scalar>>> const& terms) {
  if (terms.empty()) throw InputError("combine needs at least one term");
  auto out = BasicMeasure<Scalar>::zero(terms.front().second.space());
  for (auto const& [c, mu] : terms) out += c * mu;
  return out;
}

template <typename Scalar>
BasicMeasure<Scalar> uniform(SpacePtr const& space) {
  auto n = static_cast<Eigen::Index>(space->size());
  return BasicMeasure<Scalar>(space, Vector<Scalar>::Constant(n, Scalar(1) / Scalar(n)));
}

// Literal form used in files and reports: "1/2*a + 1/2*b". A unit coefficient
// prints as the bare point name, zero terms are skipped, and the zero measure
// prints as "0*<first point>" (a bare "0" could be a point name).
template <typename Scalar>
std::string to_literal(BasicMeasure<Scalar> const& mu) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    Scalar c = mu[i];
    if (c == Scalar(0)) continue;
    bool negative = c < Scalar(0);
    if (negative) c = -c;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    if (c != Scalar(1)) out << c << '*';
    out << mu.space()->name(i);
    first = false;
  }
  if (first && mu.size() > 0) out << "0*" << mu.space()->name(0);
  return out.str();
}

// Inverse of to_literal. Terms are "[coef*]point" joined by + or -, where coef
// is an integer or p/q. Throws InputError on unknown points or bad tokens.
Measure parse_measure(SpacePtr const& space, std::string_view text);

}  // namespace shg

#endif  // SHG_MEASURE_HPP_
