#ifndef SHG_CONV_TABLE_HPP_
#define SHG_CONV_TABLE_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/measure.hpp"

namespace shg {

// The structure constants of a finite (semi)hypergroup. Column x*n + y of the
// n-by-n^2 matrix holds the coefficients of p_x * p_y; convolution of two
// measures is then structure() * vec(nu mu^T).
template <typename Scalar>
class BasicConvTable {
 public:
  using scalar_type = Scalar;

  BasicConvTable(SpacePtr space, Matrix<Scalar> structure)
      : space_(std::move(space)), structure_(std::move(structure)) {
    auto n = static_cast<Eigen::Index>(space_->size());
    if (structure_.rows() != n || structure_.cols() != n * n) {
      throw InputError("convolution table must be " + std::to_string(n) + " x " +
                       std::to_string(n * n));
    }
  }

  // Builds the table from a callback returning p_x * p_y as a coefficient
  // vector.
  static BasicConvTable from_entries(
      SpacePtr space, std::function<Vector<Scalar>(std::size_t, std::size_t)> const& entry) {
    auto n = space->size();
    Matrix<Scalar> s(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n * n));
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        Vector<Scalar> v = entry(x, y);
        if (static_cast<std::size_t>(v.size()) != n) throw InputError("table entry has wrong length");
        s.col(static_cast<Eigen::Index>(x * n + y)) = v;
      }
    }
    return BasicConvTable(std::move(space), std::move(s));
  }

  SpacePtr const& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return space_->size(); }
  Matrix<Scalar> const& structure() const noexcept { return structure_; }

  auto column(std::size_t x, std::size_t y) const {
    return structure_.col(static_cast<Eigen::Index>(x * size() + y));
  }

  // (p_x * p_y)({z})
  Scalar const& coefficient(std::size_t z, std::size_t x, std::size_t y) const {
    return structure_(static_cast<Eigen::Index>(z), static_cast<Eigen::Index>(x * size() + y));
  }

  BasicMeasure<Scalar> entry(std::size_t x, std::size_t y) const {
    return BasicMeasure<Scalar>(space_, column(x, y));
  }

  BasicMeasure<Scalar> entry(std::string_view x, std::string_view y) const {
    return entry(space_->index(x), space_->index(y));
  }

  // mu * nu = sum_x sum_y mu(x) nu(y) (p_x * p_y), bilinear and exact.
  Vector<Scalar> convolve(Vector<Scalar> const& mu, Vector<Scalar> const& nu) const {
    auto n = static_cast<Eigen::Index>(size());
    if (mu.size() != n || nu.size() != n) throw InputError("measure length does not match table");
    Matrix<Scalar> outer = nu * mu.transpose();
    return structure_ * outer.reshaped();
  }

  BasicMeasure<Scalar> convolve(BasicMeasure<Scalar> const& mu, BasicMeasure<Scalar> const& nu) const {
    require_space(mu);
    require_space(nu);
    return BasicMeasure<Scalar>(space_, convolve(mu.coeffs(), nu.coeffs()));
  }

  void require_space(BasicMeasure<Scalar> const& mu) const {
    if (!same_space(space_, mu.space())) throw InputError("measure is not on the table's space");
  }

  bool operator==(BasicConvTable const& other) const {
    return same_space(space_, other.space_) && structure_ == other.structure_;
  }

 private:
  SpacePtr space_;
  Matrix<Scalar> structure_;
};

using ConvTable = BasicConvTable<Rational>;

struct ProbabilityCheck {
  enum class Defect { none, negative, mass };
  bool passed = true;
  std::optional<std::pair<std::size_t, std::size_t>> cell;
  Defect defect = Defect::none;
  explicit operator bool() const noexcept { return passed; }
};

// Every entry p_x * p_y must be nonnegative with total mass exactly one.
// Reports the first failing cell in (x, y) order.
template <typename Scalar>
ProbabilityCheck check_probability_axiom(BasicConvTable<Scalar> const& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = 0; y < t.size(); ++y) {
      Vector<Scalar> v = t.column(x, y);
      if (!(v.array() >= Scalar(0)).all()) {
        return {false, std::make_pair(x, y), ProbabilityCheck::Defect::negative};
      }
      if (v.sum() != Scalar(1)) return {false, std::make_pair(x, y), ProbabilityCheck::Defect::mass};
    }
  }
  return {};
}

template <typename Scalar>
struct AssociativityWitness {
  std::size_t x, y, z;
  BasicMeasure<Scalar> lhs;  // (p_x * p_y) * p_z
  BasicMeasure<Scalar> rhs;  // p_x * (p_y * p_z)
};

template <typename Scalar>
struct AssociativityCheck {
  std::optional<AssociativityWitness<Scalar>> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

// Checks (p_x * p_y) * p_z = p_x * (p_y * p_z) on every Dirac triple; by
// bilinearity this is associativity on all measures. The first failing triple
// in lexicographic order is returned.
template <typename Scalar>
AssociativityCheck<Scalar> check_associativity(BasicConvTable<Scalar> const& t) {
  auto const n = t.size();
  auto const rows = static_cast<Eigen::Index>(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      Vector<Scalar> xy = t.column(x, y);
      for (std::size_t z = 0; z < n; ++z) {
        Vector<Scalar> yz = t.column(y, z);
        // Dirac on one side reduces the double sum to a single one.
        Vector<Scalar> lhs = Vector<Scalar>::Zero(rows);
        Vector<Scalar> rhs = Vector<Scalar>::Zero(rows);
        for (std::size_t w = 0; w < n; ++w) {
          auto wi = static_cast<Eigen::Index>(w);
          if (xy(wi) != Scalar(0)) lhs += xy(wi) * t.column(w, z);
          if (yz(wi) != Scalar(0)) rhs += yz(wi) * t.column(x, w);
        }
        if (lhs != rhs) {
          return {AssociativityWitness<Scalar>{x, y, z, BasicMeasure<Scalar>(t.space(), lhs),
                                               BasicMeasure<Scalar>(t.space(), rhs)}};
        }
      }
    }
  }
  return {};
}

}  // namespace shg

#endif  // SHG_CONV_TABLE_HPP_
