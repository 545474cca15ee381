#ifndef SHG_LP_HPP_
#define SHG_LP_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "shg/scalar.hpp"

namespace shg {

enum class Relation { le, eq, ge };

// A linear program over exact scalars: rows a_i . x (<=|=|>=) b_i, an optional
// objective to maximize, and a per-variable sign restriction (x_j >= 0 by
// default, or free).
template <typename Scalar>
class BasicLinearProgram {
 public:
  struct Row {
    Vector<Scalar> coeffs;
    Relation relation;
    Scalar rhs;
  };

  explicit BasicLinearProgram(Eigen::Index variables)
      : variables_(variables), nonneg_(static_cast<std::size_t>(variables), true) {}

  Eigen::Index variables() const noexcept { return variables_; }
  std::size_t constraints() const noexcept { return rows_.size(); }
  Row const& row(std::size_t i) const { return rows_.at(i); }
  std::vector<Row> const& rows() const noexcept { return rows_; }
  std::optional<Vector<Scalar>> const& objective() const noexcept { return objective_; }
  bool nonneg(Eigen::Index j) const { return nonneg_.at(static_cast<std::size_t>(j)); }

  BasicLinearProgram& add_constraint(Vector<Scalar> coeffs, Relation relation, Scalar rhs) {
    if (coeffs.size() != variables_) {
      throw InputError("constraint row has " + std::to_string(coeffs.size()) + " coefficients for " +
                       std::to_string(variables_) + " variables");
    }
    rows_.push_back(Row{std::move(coeffs), relation, std::move(rhs)});
    return *this;
  }

  // One constraint per row of a.
  BasicLinearProgram& add_constraints(Matrix<Scalar> const& a, Relation relation, Vector<Scalar> const& b) {
    if (a.rows() != b.size()) throw InputError("constraint block and right-hand side disagree in length");
    for (Eigen::Index i = 0; i < a.rows(); ++i) add_constraint(a.row(i).transpose(), relation, b(i));
    return *this;
  }

  BasicLinearProgram& set_free(Eigen::Index j) {
    nonneg_.at(static_cast<std::size_t>(j)) = false;
    return *this;
  }

  BasicLinearProgram& maximize(Vector<Scalar> c) {
    if (c.size() != variables_) throw InputError("objective has the wrong length");
    objective_ = std::move(c);
    return *this;
  }

 private:
  Eigen::Index variables_;
  std::vector<Row> rows_;
  std::vector<bool> nonneg_;
  std::optional<Vector<Scalar>> objective_;
};

enum class LPStatus { feasible, infeasible, optimal, unbounded };

inline char const* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::feasible: return "feasible";
    case LPStatus::infeasible: return "infeasible";
    case LPStatus::optimal: return "optimal";
    case LPStatus::unbounded: return "unbounded";
  }
  return "?";
}

template <typename Scalar>
struct BasicLPOutcome {
  LPStatus status = LPStatus::infeasible;
  Vector<Scalar> point;        // feasible, optimal, unbounded: a feasible point
  Scalar value{};              // optimal: objective at point
  Vector<Scalar> certificate;  // infeasible: one multiplier per constraint
  Vector<Scalar> ray;          // unbounded: improving direction
  std::size_t pivots = 0;

  bool has_point() const noexcept { return status != LPStatus::infeasible; }
};

using LinearProgram = BasicLinearProgram<Rational>;
using LPOutcome = BasicLPOutcome<Rational>;

// x satisfies every constraint and sign restriction exactly.
template <typename Scalar>
bool satisfies(BasicLinearProgram<Scalar> const& lp, Vector<Scalar> const& x) {
  if (x.size() != lp.variables()) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (lp.nonneg(j) && x(j) < Scalar(0)) return false;
  }
  for (auto const& r : lp.rows()) {
    Scalar lhs = r.coeffs.dot(x);
    bool ok = r.relation == Relation::le ? lhs <= r.rhs : r.relation == Relation::ge ? lhs >= r.rhs : lhs == r.rhs;
    if (!ok) return false;
  }
  return true;
}

// Farkas check. With y_i >= 0 on >= rows, y_i <= 0 on <= rows (free on =
// rows), every feasible x would give y^T A x >= y^T b. If moreover
// (y^T A)_j <= 0 on sign-restricted variables, = 0 on free ones, and
// y^T b > 0, then y^T A x <= 0 < y^T b and no feasible x exists.
template <typename Scalar>
bool verifies_infeasibility(BasicLinearProgram<Scalar> const& lp, Vector<Scalar> const& y) {
  if (static_cast<std::size_t>(y.size()) != lp.constraints()) return false;
  Vector<Scalar> combo = Vector<Scalar>::Zero(lp.variables());
  Scalar rhs(0);
  for (std::size_t i = 0; i < lp.constraints(); ++i) {
    auto const& r = lp.row(i);
    Scalar const& yi = y(static_cast<Eigen::Index>(i));
    if (r.relation == Relation::ge && yi < Scalar(0)) return false;
    if (r.relation == Relation::le && yi > Scalar(0)) return false;
    if (yi == Scalar(0)) continue;
    combo += yi * r.coeffs;
    rhs += yi * r.rhs;
  }
  for (Eigen::Index j = 0; j < combo.size(); ++j) {
    if (lp.nonneg(j) ? combo(j) > Scalar(0) : combo(j) != Scalar(0)) return false;
  }
  return rhs > Scalar(0);
}

// x feasible, and x + t r stays feasible for all t >= 0 while the objective
// grows without bound.
template <typename Scalar>
bool verifies_unboundedness(BasicLinearProgram<Scalar> const& lp, Vector<Scalar> const& x, Vector<Scalar> const& r) {
  if (!lp.objective() || !satisfies(lp, x) || r.size() != lp.variables()) return false;
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    if (lp.nonneg(j) && r(j) < Scalar(0)) return false;
  }
  for (auto const& row : lp.rows()) {
    Scalar d = row.coeffs.dot(r);
    bool ok = row.relation == Relation::le ? d <= Scalar(0) : row.relation == Relation::ge ? d >= Scalar(0)
                                                                                            : d == Scalar(0);
    if (!ok) return false;
  }
  return lp.objective()->dot(r) > Scalar(0);
}

namespace detail {

// Dense two-phase tableau simplex with Bland's rule. Columns are laid out as
// [split structural | slack and surplus | artificial]; the initial basis is
// the unit column of each row (its slack for <= rows, else an artificial).
template <typename Scalar>
class Tableau {
 public:
  explicit Tableau(BasicLinearProgram<Scalar> const& lp) : lp_(lp) {
    auto const n = lp.variables();
    for (Eigen::Index j = 0; j < n; ++j) {
      pos_.push_back(structural_++);
      neg_.push_back(lp.nonneg(j) ? -1 : structural_++);
    }
    m_ = static_cast<Eigen::Index>(lp.constraints());

    // Normalize to b >= 0; a zero right-hand side >= row becomes <= so that
    // its slack can start in the basis.
    std::vector<Relation> rel;
    for (auto const& r : lp.rows()) {
      bool flip = r.rhs < Scalar(0) || (r.rhs == Scalar(0) && r.relation == Relation::ge);
      flipped_.push_back(flip);
      Relation x = r.relation;
      if (flip && x == Relation::le) {
        x = Relation::ge;
      } else if (flip && x == Relation::ge) {
        x = Relation::le;
      }
      rel.push_back(x);
    }
    Eigen::Index slacks = 0, artificials = 0;
    for (auto r : rel) {
      slacks += r != Relation::eq;
      artificials += r != Relation::le;
    }
    art_start_ = structural_ + slacks;
    cols_ = art_start_ + artificials;
    t_ = Matrix<Scalar>::Zero(m_, cols_ + 1);
    basis_.resize(static_cast<std::size_t>(m_));
    init_.resize(static_cast<std::size_t>(m_));

    Eigen::Index s = structural_, a = art_start_;
    for (Eigen::Index i = 0; i < m_; ++i) {
      auto const& r = lp.row(static_cast<std::size_t>(i));
      Scalar sign = flipped_[static_cast<std::size_t>(i)] ? Scalar(-1) : Scalar(1);
      for (Eigen::Index j = 0; j < n; ++j) {
        if (r.coeffs(j) == Scalar(0)) continue;
        t_(i, pos_[static_cast<std::size_t>(j)]) = sign * r.coeffs(j);
        if (neg_[static_cast<std::size_t>(j)] >= 0) t_(i, neg_[static_cast<std::size_t>(j)]) = -sign * r.coeffs(j);
      }
      t_(i, cols_) = sign * r.rhs;
      Eigen::Index unit;
      switch (rel[static_cast<std::size_t>(i)]) {
        case Relation::le:
          unit = s++;
          break;
        case Relation::ge:
          t_(i, s++) = Scalar(-1);
          unit = a++;
          break;
        default:
          unit = a++;
      }
      t_(i, unit) = Scalar(1);
      basis_[static_cast<std::size_t>(i)] = init_[static_cast<std::size_t>(i)] = unit;
    }
  }

  BasicLPOutcome<Scalar> solve() {
    BasicLPOutcome<Scalar> out;
    if (art_start_ < cols_) {
      Vector<Scalar> c = Vector<Scalar>::Zero(cols_);
      c.tail(cols_ - art_start_).setOnes();
      run(c, cols_);
      if (objective_value() > Scalar(0)) {
        out.status = LPStatus::infeasible;
        out.certificate = farkas(c);
        out.pivots = pivots_;
        return out;
      }
      drive_out_artificials();
    }
    if (!lp_.objective()) {
      out.status = LPStatus::feasible;
      out.point = solution();
      out.pivots = pivots_;
      return out;
    }
    Vector<Scalar> c = Vector<Scalar>::Zero(cols_);
    auto const& obj = *lp_.objective();
    for (Eigen::Index j = 0; j < lp_.variables(); ++j) {
      c(pos_[static_cast<std::size_t>(j)]) = -obj(j);
      if (neg_[static_cast<std::size_t>(j)] >= 0) c(neg_[static_cast<std::size_t>(j)]) = obj(j);
    }
    auto blocked = run(c, art_start_);
    out.point = solution();
    out.pivots = pivots_;
    if (blocked) {
      out.status = LPStatus::unbounded;
      out.ray = ray(*blocked);
    } else {
      out.status = LPStatus::optimal;
      out.value = obj.dot(out.point);
    }
    return out;
  }

 private:
  // Minimizes c^T x over entering columns [0, limit). Returns the entering
  // column when the problem is unbounded in its direction.
  std::optional<Eigen::Index> run(Vector<Scalar> const& c, Eigen::Index limit) {
    d_ = Vector<Scalar>::Zero(cols_ + 1);
    d_.head(cols_) = c;
    for (Eigen::Index i = 0; i < m_; ++i) {
      Scalar cb = c(basis_[static_cast<std::size_t>(i)]);
      if (cb != Scalar(0)) d_ -= cb * t_.row(i).transpose();
    }
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < limit && enter < 0; ++j) {
        if (d_(j) < Scalar(0)) enter = j;
      }
      if (enter < 0) return std::nullopt;
      Eigen::Index leave = -1;
      Scalar best;
      for (Eigen::Index i = 0; i < m_; ++i) {
        if (t_(i, enter) <= Scalar(0)) continue;
        Scalar ratio = t_(i, cols_) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[static_cast<std::size_t>(i)] < basis_[static_cast<std::size_t>(leave)])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return enter;
      pivot(leave, enter);
    }
  }

  void pivot(Eigen::Index r, Eigen::Index e) {
    ++pivots_;
    Scalar p = t_(r, e);
    t_.row(r) /= p;
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (i == r || t_(i, e) == Scalar(0)) continue;
      Scalar f = t_(i, e);
      t_.row(i) -= f * t_.row(r);
    }
    if (d_.size() > 0 && d_(e) != Scalar(0)) {
      Scalar f = d_(e);
      d_ -= f * t_.row(r).transpose();
    }
    basis_[static_cast<std::size_t>(r)] = e;
  }

  // A basic artificial at level zero is swapped for any non-artificial column
  // with a nonzero entry in its row; if there is none the row is redundant
  // and the artificial stays, pinned at zero.
  void drive_out_artificials() {
    for (Eigen::Index i = 0; i < m_; ++i) {
      if (basis_[static_cast<std::size_t>(i)] < art_start_) continue;
      for (Eigen::Index j = 0; j < art_start_; ++j) {
        if (t_(i, j) != Scalar(0)) {
          pivot(i, j);
          break;
        }
      }
    }
  }

  Scalar objective_value() const { return -d_(cols_); }

  // y_i = c_{init(i)} - d_{init(i)}, the phase-one duals, mapped back through
  // the row normalization.
  Vector<Scalar> farkas(Vector<Scalar> const& c) const {
    Vector<Scalar> y(m_);
    for (Eigen::Index i = 0; i < m_; ++i) {
      auto k = init_[static_cast<std::size_t>(i)];
      Scalar v = c(k) - d_(k);
      y(i) = flipped_[static_cast<std::size_t>(i)] ? Scalar(-v) : v;
    }
    return y;
  }

  Vector<Scalar> split_values() const {
    Vector<Scalar> v = Vector<Scalar>::Zero(cols_);
    for (Eigen::Index i = 0; i < m_; ++i) v(basis_[static_cast<std::size_t>(i)]) = t_(i, cols_);
    return v;
  }

  Vector<Scalar> merge(Vector<Scalar> const& v) const {
    Vector<Scalar> x(lp_.variables());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      x(j) = v(pos_[static_cast<std::size_t>(j)]);
      if (neg_[static_cast<std::size_t>(j)] >= 0) x(j) -= v(neg_[static_cast<std::size_t>(j)]);
    }
    return x;
  }

  Vector<Scalar> solution() const { return merge(split_values()); }

  Vector<Scalar> ray(Eigen::Index enter) const {
    Vector<Scalar> v = Vector<Scalar>::Zero(cols_);
    v(enter) = Scalar(1);
    for (Eigen::Index i = 0; i < m_; ++i) v(basis_[static_cast<std::size_t>(i)]) = -t_(i, enter);
    return merge(v);
  }

  BasicLinearProgram<Scalar> const& lp_;
  Eigen::Index structural_ = 0, art_start_ = 0, cols_ = 0, m_ = 0;
  std::vector<Eigen::Index> pos_, neg_;
  std::vector<bool> flipped_;
  Matrix<Scalar> t_;
  Vector<Scalar> d_;
  std::vector<Eigen::Index> basis_, init_;
  std::size_t pivots_ = 0;
};

}  // namespace detail

// Phase one only: a feasible point or a Farkas certificate. Any objective is
// ignored.
template <typename Scalar>
BasicLPOutcome<Scalar> solve_feasibility(BasicLinearProgram<Scalar> const& lp) {
  BasicLinearProgram<Scalar> plain(lp.variables());
  for (auto const& r : lp.rows()) plain.add_constraint(r.coeffs, r.relation, r.rhs);
  for (Eigen::Index j = 0; j < lp.variables(); ++j) {
    if (!lp.nonneg(j)) plain.set_free(j);
  }
  return detail::Tableau<Scalar>(plain).solve();
}

// Maximizes the objective. Optimal, unbounded (with a ray) or infeasible
// (with a certificate).
template <typename Scalar>
BasicLPOutcome<Scalar> solve_lp(BasicLinearProgram<Scalar> const& lp) {
  if (!lp.objective()) throw InputError("solve_lp needs an objective");
  return detail::Tableau<Scalar>(lp).solve();
}

// Rank by Gaussian elimination over the exact field.
template <typename Scalar>
Eigen::Index exact_rank(Matrix<Scalar> a) {
  Eigen::Index rank = 0;
  for (Eigen::Index c = 0; c < a.cols() && rank < a.rows(); ++c) {
    Eigen::Index p = rank;
    while (p < a.rows() && a(p, c) == Scalar(0)) ++p;
    if (p == a.rows()) continue;
    a.row(p).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < a.rows(); ++i) {
      if (a(i, c) == Scalar(0)) continue;
      Scalar f = a(i, c) / a(rank, c);
      a.row(i) -= f * a.row(rank);
    }
    ++rank;
  }
  return rank;
}

// The polytope {v >= 0 : sum v = 1, A v = 0}, which is how both the
// invariant-mean and the fixed-point questions present themselves.
template <typename Scalar>
struct BasicSimplexPolytope {
  explicit BasicSimplexPolytope(BasicLinearProgram<Scalar> p) : program(std::move(p)) {}

  BasicLinearProgram<Scalar> program;  // rows of A (= 0), then sum v = 1
  bool feasible = false;
  Vector<Scalar> witness;      // a vertex, when feasible
  Vector<Scalar> certificate;  // Farkas multipliers, when not
  Eigen::Index dimension = -1;
  Vector<Scalar> lower, upper;  // coordinate ranges over the polytope
};

using SimplexPolytope = BasicSimplexPolytope<Rational>;

template <typename Scalar>
BasicLinearProgram<Scalar> simplex_program(Matrix<Scalar> const& a) {
  BasicLinearProgram<Scalar> lp(a.cols());
  lp.add_constraints(a, Relation::eq, Vector<Scalar>::Zero(a.rows()));
  lp.add_constraint(Vector<Scalar>::Ones(a.cols()), Relation::eq, Scalar(1));
  return lp;
}

// Solves for a witness and, when feasible, the affine dimension: maximizing
// and minimizing each coordinate (2n programs) finds the coordinates that are
// identically zero, which are the only implicit equalities among v >= 0, so
// dim = n - rank([A; 1^T; e_i for those i]).
template <typename Scalar>
BasicSimplexPolytope<Scalar> analyze_simplex_polytope(Matrix<Scalar> const& a, bool with_dimension = true) {
  BasicSimplexPolytope<Scalar> out{simplex_program(a)};
  auto res = solve_feasibility(out.program);
  out.feasible = res.status == LPStatus::feasible;
  if (!out.feasible) {
    out.certificate = res.certificate;
    return out;
  }
  out.witness = res.point;
  if (!with_dimension) return out;
  auto const n = a.cols();
  out.lower.resize(n);
  out.upper.resize(n);
  std::vector<Eigen::Index> zero;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (int sgn : {1, -1}) {
      auto lp = out.program;
      Vector<Scalar> c = Vector<Scalar>::Zero(n);
      c(i) = Scalar(sgn);
      lp.maximize(c);
      auto r = solve_lp(lp);
      if (r.status != LPStatus::optimal) throw std::logic_error("coordinate program on a bounded polytope");
      (sgn > 0 ? out.upper : out.lower)(i) = sgn > 0 ? r.value : Scalar(-r.value);
    }
    if (out.upper(i) == Scalar(0)) zero.push_back(i);
  }
  Matrix<Scalar> eqs = Matrix<Scalar>::Zero(a.rows() + 1 + static_cast<Eigen::Index>(zero.size()), n);
  eqs.topRows(a.rows()) = a;
  eqs.row(a.rows()).setOnes();
  for (std::size_t k = 0; k < zero.size(); ++k) eqs(a.rows() + 1 + static_cast<Eigen::Index>(k), zero[k]) = Scalar(1);
  out.dimension = n - exact_rank(eqs);
  return out;
}

}  // namespace shg

#endif  // SHG_LP_HPP_
