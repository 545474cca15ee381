#ifndef SHG_AMENABILITY_HPP_
#define SHG_AMENABILITY_HPP_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "shg/function_space.hpp"
#include "shg/lp.hpp"

namespace shg {

// A norm-one functional with m(1) = 1, i.e. a probability weight vector.
template <typename Scalar>
class BasicMean {
 public:
  explicit BasicMean(BasicFunctional<Scalar> f) : f_(std::move(f)) {
    if (!f_.is_mean()) throw InputError("functional is not a mean (weights must be a probability vector)");
  }
  BasicMean(SpacePtr space, Vector<Scalar> weights) : BasicMean(BasicFunctional<Scalar>(std::move(space), std::move(weights))) {}

  BasicFunctional<Scalar> const& functional() const noexcept { return f_; }
  Vector<Scalar> const& weights() const noexcept { return f_.weights(); }
  SpacePtr const& space() const noexcept { return f_.space(); }
  BasicMeasure<Scalar> measure() const { return BasicMeasure<Scalar>(f_.space(), f_.weights()); }
  Scalar operator()(BasicFunction<Scalar> const& g) const { return f_(g); }
  bool operator==(BasicMean const& other) const { return f_ == other.f_; }

 private:
  BasicFunctional<Scalar> f_;
};

using Mean = BasicMean<Rational>;

// The three linear systems below all say "p_x * m = m for every x", but each
// is assembled through a different layer so the equivalence suite compares
// independent computations. Rows are indexed (x, y) as x * n + y and every
// system is homogeneous in the weights of m.

// m(L_x 1_y) - m(1_y): left translates of indicator functions. Indicators
// span C(K), so this is the whole invariance condition.
template <typename Scalar>
Matrix<Scalar> lim_system(BasicSemihypergroup<Scalar> const& s) {
  auto const n = static_cast<Eigen::Index>(s.size());
  Matrix<Scalar> a(n * n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    for (Eigen::Index y = 0; y < n; ++y) {
      auto lf = left_translate(s, static_cast<std::size_t>(x), BasicFunction<Scalar>::indicator(s.space(), y));
      a.row(x * n + y) = lf.values().transpose();
      a(x * n + y, y) -= Scalar(1);
    }
  }
  return a;
}

// (eps_{p_x} <> m)(1_y) - m(1_y), with column k read off the Arens product
// against the k-th coordinate functional.
template <typename Scalar>
Matrix<Scalar> condition2_system(BasicSemihypergroup<Scalar> const& s) {
  auto const n = static_cast<Eigen::Index>(s.size());
  Matrix<Scalar> a(n * n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    auto ex = evaluation(dirac<Scalar>(s.space(), static_cast<std::size_t>(x)));
    for (Eigen::Index k = 0; k < n; ++k) {
      BasicFunctional<Scalar> ek(s.space(), Vector<Scalar>::Unit(n, k));
      a.block(x * n, k, n, 1) = arens(s, ex, ek, Side::left).weights();
    }
    a.block(x * n, 0, n, n) -= Matrix<Scalar>::Identity(n, n);
  }
  return a;
}

// (p_x * m)({y}) - m({y}), from measure convolution.
template <typename Scalar>
Matrix<Scalar> condition3_system(BasicSemihypergroup<Scalar> const& s) {
  auto const n = static_cast<Eigen::Index>(s.size());
  Matrix<Scalar> a(n * n, n);
  for (Eigen::Index x = 0; x < n; ++x) {
    auto px = dirac<Scalar>(s.space(), static_cast<std::size_t>(x));
    for (Eigen::Index k = 0; k < n; ++k) {
      a.block(x * n, k, n, 1) = s.convolve(px, dirac<Scalar>(s.space(), static_cast<std::size_t>(k))).coeffs();
    }
    a.block(x * n, 0, n, n) -= Matrix<Scalar>::Identity(n, n);
  }
  return a;
}

template <typename Scalar>
struct BasicLimReport {
  BasicSimplexPolytope<Scalar> polytope;
  std::optional<BasicMean<Scalar>> mean;  // a vertex of the LIM polytope
  bool exists() const noexcept { return mean.has_value(); }
};

using LimReport = BasicLimReport<Rational>;

// Left-invariant means as the polytope {m in P(K) : m(L_x f) = m(f)}. The
// condition is imposed on indicator functions only, which is exact by
// linearity.
template <typename Scalar>
BasicLimReport<Scalar> lim_solve(BasicSemihypergroup<Scalar> const& s, bool with_dimension = true) {
  BasicLimReport<Scalar> out{analyze_simplex_polytope(lim_system(s), with_dimension), std::nullopt};
  if (out.polytope.feasible) out.mean.emplace(s.space(), out.polytope.witness);
  return out;
}

template <typename Scalar>
bool is_lim(BasicSemihypergroup<Scalar> const& s, BasicMean<Scalar> const& m) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      auto chi = BasicFunction<Scalar>::indicator(s.space(), y);
      if (m(left_translate(s, x, chi)) != m(chi)) return false;
    }
  }
  return true;
}

// eps_{p_x} <> m = m for every x. By bilinearity of the Arens product this
// extends to eps_mu <> m = m for every mu in P(K).
struct Condition2Check {
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (x, index of the basis indicator)
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

template <typename Scalar>
Condition2Check check_condition2(BasicSemihypergroup<Scalar> const& s, BasicMean<Scalar> const& m) {
  for (std::size_t x = 0; x < s.size(); ++x) {
    auto prod = arens(s, evaluation(dirac<Scalar>(s.space(), x)), m.functional(), Side::left);
    for (std::size_t j = 0; j < s.size(); ++j) {
      auto ji = static_cast<Eigen::Index>(j);
      if (prod.weights()(ji) != m.weights()(ji)) return {std::make_pair(x, j)};
    }
  }
  return {};
}

// p_x * m = m for every x: the constant net at m, which is what the net
// condition amounts to in finite dimension.
struct Condition3Check {
  std::optional<std::size_t> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

template <typename Scalar>
Condition3Check check_condition3(BasicSemihypergroup<Scalar> const& s, BasicMean<Scalar> const& m) {
  auto mu = m.measure();
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (s.convolve(dirac<Scalar>(s.space(), x), mu) != mu) return {x};
  }
  return {};
}

template <typename Scalar>
struct BasicEquivalenceReport {
  BasicSimplexPolytope<Scalar> lim, condition2, condition3;
  // Forward directions on the LIM vertex, when there is one.
  std::optional<bool> lim_witness_satisfies_2, lim_witness_satisfies_3;

  bool agree() const noexcept {
    return lim.feasible == condition2.feasible && lim.feasible == condition3.feasible &&
           lim_witness_satisfies_2.value_or(true) && lim_witness_satisfies_3.value_or(true);
  }
};

using EquivalenceReport = BasicEquivalenceReport<Rational>;

// Decides existence of (1) a LIM, (2) a mean with eps_mu <> m = m and (3) a
// probability measure with p_x * m = m, each by its own program.
template <typename Scalar>
BasicEquivalenceReport<Scalar> equivalence_suite(BasicSemihypergroup<Scalar> const& s, bool with_dimension = false) {
  BasicEquivalenceReport<Scalar> out{analyze_simplex_polytope(lim_system(s), with_dimension),
                                     analyze_simplex_polytope(condition2_system(s), with_dimension),
                                     analyze_simplex_polytope(condition3_system(s), with_dimension),
                                     std::nullopt, std::nullopt};
  if (out.lim.feasible) {
    BasicMean<Scalar> m(s.space(), out.lim.witness);
    out.lim_witness_satisfies_2 = check_condition2(s, m).passed();
    out.lim_witness_satisfies_3 = check_condition3(s, m).passed();
  }
  return out;
}

template <typename Scalar>
using Decomposition = std::vector<std::pair<Scalar, std::size_t>>;

// m = sum_x m(x) eps_x, dropping zero weights.
template <typename Scalar>
Decomposition<Scalar> mean_decomposition(BasicMean<Scalar> const& m) {
  Decomposition<Scalar> out;
  for (Eigen::Index x = 0; x < m.weights().size(); ++x) {
    if (m.weights()(x) != Scalar(0)) out.emplace_back(m.weights()(x), static_cast<std::size_t>(x));
  }
  return out;
}

// omega = sum_i alpha_i eps_{x_i} with sum |alpha_i| = ||omega|| <= 1.
template <typename Scalar>
Decomposition<Scalar> balanced_decomposition(BasicFunctional<Scalar> const& omega) {
  if (omega.norm() > Scalar(1)) throw InputError("functional has norm greater than 1");
  Decomposition<Scalar> out;
  for (Eigen::Index x = 0; x < omega.weights().size(); ++x) {
    if (omega.weights()(x) != Scalar(0)) out.emplace_back(omega.weights()(x), static_cast<std::size_t>(x));
  }
  return out;
}

// sum_i c_i eps_{x_i}, built from point evaluations.
template <typename Scalar>
BasicFunctional<Scalar> recombine(SpacePtr const& space, Decomposition<Scalar> const& terms) {
  Vector<Scalar> w = Vector<Scalar>::Zero(static_cast<Eigen::Index>(space->size()));
  for (auto const& [c, x] : terms) w += c * evaluation(dirac<Scalar>(space, x)).weights();
  return BasicFunctional<Scalar>(space, std::move(w));
}

}  // namespace shg

#endif  // SHG_AMENABILITY_HPP_
