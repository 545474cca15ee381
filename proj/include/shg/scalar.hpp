#ifndef SHG_SCALAR_HPP_
#define SHG_SCALAR_HPP_

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "shg/errors.hpp"

#include <string>
#include <string_view>

namespace shg {

// Exact rational scalar: arbitrary precision, always in lowest terms with a
// positive denominator. Expression templates are off so that values compose
// cleanly inside Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using VectorQ = Vector<Rational>;
using MatrixQ = Matrix<Rational>;

// Parses "p/q", "-p/q" or an integer. Throws InputError otherwise.
Rational parse_rational(std::string_view text);

// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(Rational const& q);

template <typename Scalar>
bool is_zero(Vector<Scalar> const& v) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) != Scalar(0)) return false;
  }
  return true;
}

template <typename Scalar>
bool is_probability_vector(Vector<Scalar> const& v) {
  Scalar sum(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v(i) < Scalar(0)) return false;
    sum += v(i);
  }
  return sum == Scalar(1);
}

// Column sums are all one and every entry is nonnegative.
template <typename Scalar>
bool is_column_stochastic(Matrix<Scalar> const& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    if (!is_probability_vector<Scalar>(a.col(j))) return false;
  }
  return true;
}

template <typename Scalar>
bool is_row_stochastic(Matrix<Scalar> const& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    if (!is_probability_vector<Scalar>(a.row(i).transpose())) return false;
  }
  return true;
}

// Plain l1 norm; Eigen's lpNorm<1> goes through abs() on the real type, which
// is fine, but this keeps the result exact and explicit.
template <typename Scalar>
Scalar l1_norm(Vector<Scalar> const& v) {
  Scalar total(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) total += v(i) < Scalar(0) ? Scalar(-v(i)) : v(i);
  return total;
}

template <typename Scalar>
Scalar sup_norm(Vector<Scalar> const& v) {
  Scalar best(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    Scalar a = v(i) < Scalar(0) ? Scalar(-v(i)) : v(i);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace shg

#endif  // SHG_SCALAR_HPP_
