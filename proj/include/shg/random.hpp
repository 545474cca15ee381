#ifndef SHG_RANDOM_HPP_
#define SHG_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "shg/measure.hpp"

namespace shg {

// Every randomized routine takes an explicit engine so results are
// reproducible from the seed alone.
using Rng = std::mt19937_64;

constexpr std::uint64_t kDefaultSeed = 20260101;

// Random probability vector on a rational grid: integer weights drawn
// uniformly from {0, ..., max_den} (redrawn if all zero), then normalized.
// Roughly a 1/(max_den+1) share of coordinates come out exactly zero.
template <typename Scalar = Rational>
Vector<Scalar> random_probability_vector(Eigen::Index n, Rng& rng, int max_den = 6) {
  std::uniform_int_distribution<int> draw(0, max_den);
  Vector<Scalar> v(n);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      int w = draw(rng);
      v(i) = Scalar(w);
      total += w;
    }
  }
  return v / Scalar(total);
}

// Uniform on {-max_den, ..., max_den} / max_den, coordinatewise.
template <typename Scalar = Rational>
Vector<Scalar> random_signed_vector(Eigen::Index n, Rng& rng, int max_den = 6) {
  std::uniform_int_distribution<int> draw(-max_den, max_den);
  Vector<Scalar> v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = Scalar(draw(rng)) / Scalar(max_den);
  return v;
}

// A signed vector rescaled, when needed, so that its l1 norm is at most one.
template <typename Scalar = Rational>
Vector<Scalar> random_unit_ball_vector(Eigen::Index n, Rng& rng, int max_den = 6) {
  Vector<Scalar> v = random_signed_vector<Scalar>(n, rng, max_den);
  Scalar norm = l1_norm<Scalar>(v);
  if (norm > Scalar(1)) v /= norm;
  return v;
}

template <typename Scalar = Rational>
BasicMeasure<Scalar> random_probability(SpacePtr const& space, Rng& rng, int max_den = 6) {
  return BasicMeasure<Scalar>(space,
                              random_probability_vector<Scalar>(static_cast<Eigen::Index>(space->size()), rng, max_den));
}

template <typename Scalar = Rational>
BasicMeasure<Scalar> random_signed_measure(SpacePtr const& space, Rng& rng, int max_den = 6) {
  return BasicMeasure<Scalar>(space,
                              random_signed_vector<Scalar>(static_cast<Eigen::Index>(space->size()), rng, max_den));
}

// Column-stochastic matrix with independent random_probability_vector columns.
template <typename Scalar = Rational>
Matrix<Scalar> random_stochastic_matrix(Eigen::Index n, Rng& rng, int max_den = 4) {
  Matrix<Scalar> a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a.col(j) = random_probability_vector<Scalar>(n, rng, max_den);
  return a;
}

}  // namespace shg

#endif  // SHG_RANDOM_HPP_
