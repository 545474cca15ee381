#ifndef SHG_FUNCTION_SPACE_HPP_
#define SHG_FUNCTION_SPACE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/random.hpp"
#include "shg/semihypergroup.hpp"

namespace shg {

// A function K -> Scalar. On a finite space every function is bounded,
// continuous and almost periodic, so this one type covers C(K) = AP(K).
template <typename Scalar>
class BasicFunction {
 public:
  BasicFunction(SpacePtr space, Vector<Scalar> values) : space_(std::move(space)), values_(std::move(values)) {
    if (static_cast<std::size_t>(values_.size()) != space_->size()) {
      throw InputError("function has " + std::to_string(values_.size()) + " values for a space of " +
                       std::to_string(space_->size()) + " points");
    }
  }

  static BasicFunction constant(SpacePtr space, Scalar c) {
    auto n = static_cast<Eigen::Index>(space->size());
    return BasicFunction(std::move(space), Vector<Scalar>::Constant(n, c));
  }

  static BasicFunction indicator(SpacePtr space, std::size_t point) {
    auto n = static_cast<Eigen::Index>(space->size());
    Vector<Scalar> v = Vector<Scalar>::Zero(n);
    v(static_cast<Eigen::Index>(point)) = Scalar(1);
    return BasicFunction(std::move(space), std::move(v));
  }

  SpacePtr const& space() const noexcept { return space_; }
  Vector<Scalar> const& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return space_->size(); }
  Scalar const& operator()(std::size_t x) const { return values_(static_cast<Eigen::Index>(x)); }

  bool operator==(BasicFunction const& other) const {
    return same_space(space_, other.space_) && values_ == other.values_;
  }

 private:
  SpacePtr space_;
  Vector<Scalar> values_;
};

// omega(f) = sum_x weights[x] f(x). In finite dimension every element of
// C(K)* has this form; means are exactly the probability weight vectors.
template <typename Scalar>
class BasicFunctional {
 public:
  BasicFunctional(SpacePtr space, Vector<Scalar> weights) : space_(std::move(space)), weights_(std::move(weights)) {
    if (static_cast<std::size_t>(weights_.size()) != space_->size()) {
      throw InputError("functional has " + std::to_string(weights_.size()) + " weights for a space of " +
                       std::to_string(space_->size()) + " points");
    }
  }

  SpacePtr const& space() const noexcept { return space_; }
  Vector<Scalar> const& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return space_->size(); }

  Scalar operator()(BasicFunction<Scalar> const& f) const {
    if (!same_space(space_, f.space())) throw InputError("function is not on the functional's space");
    return weights_.dot(f.values());
  }

  // Dual norm of the sup norm.
  Scalar norm() const { return l1_norm<Scalar>(weights_); }
  bool is_mean() const { return is_probability_vector<Scalar>(weights_); }

  bool operator==(BasicFunctional const& other) const {
    return same_space(space_, other.space_) && weights_ == other.weights_;
  }

 private:
  SpacePtr space_;
  Vector<Scalar> weights_;
};

using Function = BasicFunction<Rational>;
using Functional = BasicFunctional<Rational>;

enum class Side { left, right };

namespace detail {

template <typename Scalar>
void require_on(BasicSemihypergroup<Scalar> const& s, SpacePtr const& space, char const* what) {
  if (!same_space(s.space(), space)) throw InputError(std::string(what) + " is not on the semihypergroup's space");
}

}  // namespace detail

// Matrix of f -> L_x f: row y holds the coefficients of p_x * p_y.
template <typename Scalar>
Matrix<Scalar> left_translation_matrix(BasicSemihypergroup<Scalar> const& s, std::size_t x) {
  auto n = static_cast<Eigen::Index>(s.size());
  return s.table().structure().middleCols(static_cast<Eigen::Index>(x) * n, n).transpose();
}

// Matrix of f -> R_y f: row x holds the coefficients of p_x * p_y.
template <typename Scalar>
Matrix<Scalar> right_translation_matrix(BasicSemihypergroup<Scalar> const& s, std::size_t y) {
  auto n = s.size();
  Matrix<Scalar> r(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t x = 0; x < n; ++x) r.row(static_cast<Eigen::Index>(x)) = s.table().column(x, y).transpose();
  return r;
}

// (L_x f)(y) = f(x * y) = integral of f against p_x * p_y.
template <typename Scalar>
BasicFunction<Scalar> left_translate(BasicSemihypergroup<Scalar> const& s, std::size_t x,
                                     BasicFunction<Scalar> const& f) {
  detail::require_on(s, f.space(), "function");
  if (x >= s.size()) throw InputError("point index out of range");
  return BasicFunction<Scalar>(f.space(), left_translation_matrix(s, x) * f.values());
}

// (R_y f)(x) = f(x * y).
template <typename Scalar>
BasicFunction<Scalar> right_translate(BasicSemihypergroup<Scalar> const& s, std::size_t y,
                                      BasicFunction<Scalar> const& f) {
  detail::require_on(s, f.space(), "function");
  if (y >= s.size()) throw InputError("point index out of range");
  return BasicFunction<Scalar>(f.space(), right_translation_matrix(s, y) * f.values());
}

template <typename Scalar>
BasicFunction<Scalar> left_translate(BasicSemihypergroup<Scalar> const& s, std::string_view x,
                                     BasicFunction<Scalar> const& f) {
  return left_translate(s, s.space()->index(x), f);
}

template <typename Scalar>
BasicFunction<Scalar> right_translate(BasicSemihypergroup<Scalar> const& s, std::string_view y,
                                      BasicFunction<Scalar> const& f) {
  return right_translate(s, s.space()->index(y), f);
}

// The distinct translates {L_x f} (or {R_x f}), in order of first appearance.
template <typename Scalar>
std::vector<BasicFunction<Scalar>> orbit(BasicSemihypergroup<Scalar> const& s, BasicFunction<Scalar> const& f,
                                         Side side) {
  std::vector<BasicFunction<Scalar>> out;
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto g = side == Side::left ? left_translate(s, x, f) : right_translate(s, x, f);
    bool seen = false;
    for (auto const& h : out) seen = seen || h == g;
    if (!seen) out.push_back(std::move(g));
  }
  return out;
}

// epsilon_mu: f -> integral of f d mu. epsilon_{p_x} is evaluation at x.
template <typename Scalar>
BasicFunctional<Scalar> evaluation(BasicMeasure<Scalar> const& mu) {
  return BasicFunctional<Scalar>(mu.space(), mu.coeffs());
}

// T_omega f (x) = omega(L_x f).
template <typename Scalar>
BasicFunction<Scalar> introversion_left(BasicSemihypergroup<Scalar> const& s, BasicFunctional<Scalar> const& omega,
                                        BasicFunction<Scalar> const& f) {
  detail::require_on(s, omega.space(), "functional");
  Vector<Scalar> v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t x = 0; x < s.size(); ++x) v(static_cast<Eigen::Index>(x)) = omega(left_translate(s, x, f));
  return BasicFunction<Scalar>(f.space(), std::move(v));
}

// U_omega f (x) = omega(R_x f).
template <typename Scalar>
BasicFunction<Scalar> introversion_right(BasicSemihypergroup<Scalar> const& s, BasicFunctional<Scalar> const& omega,
                                         BasicFunction<Scalar> const& f) {
  detail::require_on(s, omega.space(), "functional");
  Vector<Scalar> v(static_cast<Eigen::Index>(s.size()));
  for (std::size_t x = 0; x < s.size(); ++x) v(static_cast<Eigen::Index>(x)) = omega(right_translate(s, x, f));
  return BasicFunction<Scalar>(f.space(), std::move(v));
}

// Left: (m <> n)(f) = m(T_n f). Right: (m [] n)(f) = n(U_m f). The product is
// materialized by evaluating on the indicator basis.
template <typename Scalar>
BasicFunctional<Scalar> arens(BasicSemihypergroup<Scalar> const& s, BasicFunctional<Scalar> const& m,
                              BasicFunctional<Scalar> const& n, Side side) {
  detail::require_on(s, m.space(), "functional");
  detail::require_on(s, n.space(), "functional");
  Vector<Scalar> w(static_cast<Eigen::Index>(s.size()));
  for (std::size_t z = 0; z < s.size(); ++z) {
    auto chi = BasicFunction<Scalar>::indicator(s.space(), z);
    w(static_cast<Eigen::Index>(z)) =
        side == Side::left ? m(introversion_left(s, n, chi)) : n(introversion_right(s, m, chi));
  }
  return BasicFunctional<Scalar>(s.space(), std::move(w));
}

template <typename Scalar>
struct ArensWitness {
  BasicFunctional<Scalar> m, n, left, right;
};

template <typename Scalar>
struct ArensRegularity {
  std::size_t pairs_checked = 0;
  std::optional<ArensWitness<Scalar>> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

// m <> n = m [] n on every Dirac pair and on `trials` random pairs of signed
// functionals (weights uniform on a grid with denominator 6).
template <typename Scalar>
ArensRegularity<Scalar> check_arens_regularity(BasicSemihypergroup<Scalar> const& s, int trials,
                                               std::uint64_t seed) {
  ArensRegularity<Scalar> out;
  auto check = [&](BasicFunctional<Scalar> const& m, BasicFunctional<Scalar> const& n) {
    auto l = arens(s, m, n, Side::left);
    auto r = arens(s, m, n, Side::right);
    ++out.pairs_checked;
    if (l != r) out.witness = ArensWitness<Scalar>{m, n, l, r};
    return l == r;
  };
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (!check(evaluation(dirac<Scalar>(s.space(), x)), evaluation(dirac<Scalar>(s.space(), y)))) return out;
    }
  }
  Rng rng(seed);
  auto n = static_cast<Eigen::Index>(s.size());
  for (int t = 0; t < trials; ++t) {
    BasicFunctional<Scalar> m(s.space(), random_signed_vector<Scalar>(n, rng));
    BasicFunctional<Scalar> k(s.space(), random_signed_vector<Scalar>(n, rng));
    if (!check(m, k)) return out;
  }
  return out;
}

}  // namespace shg

#endif  // SHG_FUNCTION_SPACE_HPP_
