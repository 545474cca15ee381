#ifndef SHG_ACTIONS_HPP_
#define SHG_ACTIONS_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "shg/amenability.hpp"
#include "shg/random.hpp"

namespace shg {

// Where the matrices act. On the simplex each A_x is column-stochastic and
// v -> A_x v maps probability vectors to probability vectors; on affine
// functions (coordinates = values at the vertices) each matrix is
// row-stochastic, so constants stay constant.
enum class ActionDomain { simplex, affine_functions };

inline char const* to_string(ActionDomain d) { return d == ActionDomain::simplex ? "simplex" : "affine-functions"; }

// [[column 0], [column 1], ...], the action file layout.
template <typename Scalar>
std::string matrix_literal(Matrix<Scalar> const& a) {
  std::ostringstream out;
  out << '[';
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    out << (j ? ", [" : "[");
    for (Eigen::Index i = 0; i < a.rows(); ++i) out << (i ? ", " : "") << a(i, j);
    out << ']';
  }
  out << ']';
  return out.str();
}

template <typename Scalar>
struct ActionLawWitness {
  enum class Kind { not_stochastic, law, identity };
  Kind kind;
  std::size_t x = 0, y = 0;
  Matrix<Scalar> lhs, rhs;  // law: A_x A_y and sum_z (p_x*p_y)(z) A_z; identity: A_e and I
};

template <typename Scalar>
struct ActionLawCheck {
  std::optional<ActionLawWitness<Scalar>> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

namespace detail {

template <typename Scalar>
Eigen::Index require_action_shape(std::size_t points, std::vector<Matrix<Scalar>> const& mats) {
  if (mats.size() != points) {
    throw InputError("action has " + std::to_string(mats.size()) + " matrices for " + std::to_string(points) +
                     " points");
  }
  if (mats.empty()) throw InputError("action has no matrices");
  auto n = mats.front().rows();
  for (auto const& a : mats) {
    if (a.rows() != n || a.cols() != n) throw InputError("action matrices must all be " + std::to_string(n) + " x " + std::to_string(n));
  }
  return n;
}

template <typename Scalar>
Matrix<Scalar> weighted_sum(BasicConvTable<Scalar> const& t, std::size_t x, std::size_t y,
                            std::vector<Matrix<Scalar>> const& mats) {
  Matrix<Scalar> out = Matrix<Scalar>::Zero(mats.front().rows(), mats.front().cols());
  for (std::size_t z = 0; z < t.size(); ++z) {
    auto const& c = t.coefficient(z, x, y);
    if (c != Scalar(0)) out += c * mats[z];
  }
  return out;
}

}  // namespace detail

// Stochasticity of every matrix, A_x A_y = sum_z (p_x*p_y)(z) A_z for every
// pair, and A_e = I when K has a two-sided identity e.
template <typename Scalar>
ActionLawCheck<Scalar> check_action_law(BasicSemihypergroup<Scalar> const& s, std::vector<Matrix<Scalar>> const& mats,
                                        ActionDomain domain = ActionDomain::simplex) {
  using W = ActionLawWitness<Scalar>;
  auto n = detail::require_action_shape(s.size(), mats);
  for (std::size_t x = 0; x < s.size(); ++x) {
    bool ok = domain == ActionDomain::simplex ? is_column_stochastic<Scalar>(mats[x]) : is_row_stochastic<Scalar>(mats[x]);
    if (!ok) return {W{W::Kind::not_stochastic, x, x, mats[x], {}}};
  }
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      Matrix<Scalar> lhs = mats[x] * mats[y];
      Matrix<Scalar> rhs = detail::weighted_sum(s.table(), x, y, mats);
      if (lhs != rhs) return {W{W::Kind::law, x, y, std::move(lhs), std::move(rhs)}};
    }
  }
  if (auto e = s.verified().identity) {
    Matrix<Scalar> id = Matrix<Scalar>::Identity(n, n);
    if (mats[*e] != id) return {W{W::Kind::identity, *e, *e, mats[*e], id}};
  }
  return {};
}

// A family of stochastic matrices satisfying the action law. Obtainable only
// through verify().
template <typename Scalar>
class BasicAffineAction {
 public:
  static BasicAffineAction verify(BasicSemihypergroup<Scalar> s, std::vector<Matrix<Scalar>> mats,
                                  ActionDomain domain = ActionDomain::simplex) {
    if (auto c = check_action_law(s, mats, domain); !c) {
      auto const& w = *c.witness;
      auto const& sp = *s.space();
      using K = typename ActionLawWitness<Scalar>::Kind;
      if (w.kind == K::not_stochastic) {
        throw AxiomViolation("stochastic", {sp.name(w.x)},
                             std::string("matrix is not ") +
                                 (domain == ActionDomain::simplex ? "column" : "row") + "-stochastic: " +
                                 matrix_literal(w.lhs));
      }
      if (w.kind == K::identity) {
        throw AxiomViolation("action identity", {sp.name(w.x)}, "A_e = " + matrix_literal(w.lhs) + " is not I");
      }
      throw AxiomViolation("action law", {sp.name(w.x), sp.name(w.y)},
                           "A_x A_y = " + matrix_literal(w.lhs) + " but the convolution average is " +
                               matrix_literal(w.rhs));
    }
    return BasicAffineAction(std::move(s), std::move(mats), domain);
  }

  BasicSemihypergroup<Scalar> const& semihypergroup() const noexcept { return s_; }
  Eigen::Index dim() const noexcept { return mats_.front().rows(); }
  std::vector<Matrix<Scalar>> const& matrices() const noexcept { return mats_; }
  Matrix<Scalar> const& matrix(std::size_t x) const { return mats_.at(x); }
  ActionDomain domain() const noexcept { return domain_; }

 private:
  BasicAffineAction(BasicSemihypergroup<Scalar> s, std::vector<Matrix<Scalar>> mats, ActionDomain d)
      : s_(std::move(s)), mats_(std::move(mats)), domain_(d) {}

  BasicSemihypergroup<Scalar> s_;
  std::vector<Matrix<Scalar>> mats_;
  ActionDomain domain_;
};

using AffineAction = BasicAffineAction<Rational>;

// pi_mu = sum_x mu(x) A_x.
template <typename Scalar>
Matrix<Scalar> extend_to_measures(BasicAffineAction<Scalar> const& a, BasicMeasure<Scalar> const& mu) {
  a.semihypergroup().table().require_space(mu);
  Matrix<Scalar> out = Matrix<Scalar>::Zero(a.dim(), a.dim());
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (mu[x] != Scalar(0)) out += mu[x] * a.matrix(x);
  }
  return out;
}

// Stacked A_x - I.
template <typename Scalar>
Matrix<Scalar> fixed_point_system(BasicAffineAction<Scalar> const& a) {
  auto n = a.dim();
  auto k = static_cast<Eigen::Index>(a.matrices().size());
  Matrix<Scalar> sys(k * n, n);
  for (Eigen::Index x = 0; x < k; ++x) {
    sys.middleRows(x * n, n) = a.matrix(static_cast<std::size_t>(x)) - Matrix<Scalar>::Identity(n, n);
  }
  return sys;
}

// Common fixed points v in the simplex with A_x v = v for all x.
template <typename Scalar>
BasicSimplexPolytope<Scalar> fixed_points(BasicAffineAction<Scalar> const& a, bool with_dimension = true) {
  if (a.domain() != ActionDomain::simplex) throw InputError("fixed points are computed for actions on the simplex");
  return analyze_simplex_polytope(fixed_point_system(a), with_dimension);
}

// K acting on its means by m -> m o L_x: column z of A_x is p_x * p_z.
template <typename Scalar>
BasicAffineAction<Scalar> canonical_action(BasicSemihypergroup<Scalar> const& s) {
  auto n = static_cast<Eigen::Index>(s.size());
  std::vector<Matrix<Scalar>> mats;
  for (std::size_t x = 0; x < s.size(); ++x) {
    mats.push_back(s.table().structure().middleCols(static_cast<Eigen::Index>(x) * n, n));
  }
  return BasicAffineAction<Scalar>::verify(s, std::move(mats));
}

// f -> f o pi_s on affine functions, i.e. the transposes. The law for the
// transposes needs p_s*p_t = p_t*p_s, so only commutative K is accepted.
template <typename Scalar>
BasicAffineAction<Scalar> induced_action_on_affine(BasicAffineAction<Scalar> const& a) {
  if (!a.semihypergroup().is_commutative()) throw InputError("induced action requires commutative K");
  if (a.domain() != ActionDomain::simplex) throw InputError("induced action is taken from an action on the simplex");
  std::vector<Matrix<Scalar>> mats;
  for (auto const& m : a.matrices()) mats.push_back(m.transpose());
  return BasicAffineAction<Scalar>::verify(a.semihypergroup(), std::move(mats), ActionDomain::affine_functions);
}

// A nonlinear action sigma(mu, .) : X -> X given on generating measures.
template <typename Scalar>
struct BasicGeneralActionSpec {
  using Map = std::vector<std::size_t>;
  SpacePtr state_space;
  std::vector<std::pair<BasicMeasure<Scalar>, Map>> generators;
  int closure_depth = 1;
};

using GeneralActionSpec = BasicGeneralActionSpec<Rational>;

template <typename Scalar>
struct GeneralActionWitness {
  BasicMeasure<Scalar> measure;
  std::vector<std::size_t> first, second;  // two maps assigned to the same measure
};

template <typename Scalar>
struct GeneralActionCheck {
  std::size_t generated = 0;
  std::optional<GeneralActionWitness<Scalar>> witness;
  bool passed() const noexcept { return !witness.has_value(); }
  explicit operator bool() const noexcept { return passed(); }
};

// Closes the generators under (mu, f), (nu, g) -> (mu*nu, f o g) up to the
// given depth and checks that no measure is reached with two different maps,
// i.e. sigma(mu*nu, .) = sigma(mu, sigma(nu, .)) wherever both sides are
// generated.
template <typename Scalar>
GeneralActionCheck<Scalar> check_general_action(BasicSemihypergroup<Scalar> const& s,
                                                BasicGeneralActionSpec<Scalar> const& g) {
  using Map = std::vector<std::size_t>;
  if (g.closure_depth < 1) throw InputError("closure depth must be positive");
  auto const m = g.state_space->size();
  std::map<std::vector<Scalar>, std::pair<BasicMeasure<Scalar>, Map>> known;
  auto key = [](BasicMeasure<Scalar> const& mu) {
    return std::vector<Scalar>(mu.coeffs().data(), mu.coeffs().data() + mu.coeffs().size());
  };
  GeneralActionCheck<Scalar> out;
  // Records a conflict and returns false if mu already carries another map.
  auto insert = [&](BasicMeasure<Scalar> const& mu, Map const& f, bool* added) {
    auto [it, fresh] = known.try_emplace(key(mu), mu, f);
    if (!fresh && it->second.second != f) {
      out.witness = GeneralActionWitness<Scalar>{mu, it->second.second, f};
      return false;
    }
    if (added) *added = fresh;
    return true;
  };
  for (auto const& [mu, f] : g.generators) {
    s.table().require_space(mu);
    if (!mu.is_nonnegative()) throw InputError("generator measures must be nonnegative");
    if (f.size() != m) throw InputError("generator map is not total on the state space");
    for (auto v : f) {
      if (v >= m) throw InputError("generator map leaves the state space");
    }
    if (!insert(mu, f, nullptr)) return out;
  }
  // closure_depth rounds of adding products, then one pass that only
  // compares products already present.
  for (int round = 0; round <= g.closure_depth; ++round) {
    bool const last = round == g.closure_depth;
    std::vector<std::pair<BasicMeasure<Scalar>, Map>> all;
    for (auto const& [k, v] : known) all.push_back(v);
    bool grew = false;
    for (auto const& [mu, f] : all) {
      for (auto const& [nu, h] : all) {
        auto prod = s.convolve(mu, nu);
        if (last && !known.count(key(prod))) continue;
        Map fh(m);
        for (std::size_t x = 0; x < m; ++x) fh[x] = f[h[x]];
        bool added = false;
        if (!insert(prod, fh, &added)) return out;
        grew = grew || added;
      }
    }
    if (!grew) break;  // closed: every product has been compared
  }
  out.generated = known.size();
  return out;
}

namespace detail {

template <typename Scalar>
Matrix<Scalar> random_function_matrix(Eigen::Index n, Rng& rng) {
  std::uniform_int_distribution<Eigen::Index> pick(0, n - 1);
  Matrix<Scalar> a = Matrix<Scalar>::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) a(pick(rng), j) = Scalar(1);
  return a;
}

template <typename Scalar>
Matrix<Scalar> block_diagonal(std::vector<Matrix<Scalar>> const& blocks) {
  Eigen::Index n = 0;
  for (auto const& b : blocks) n += b.rows();
  Matrix<Scalar> out = Matrix<Scalar>::Zero(n, n);
  Eigen::Index at = 0;
  for (auto const& b : blocks) {
    out.block(at, at, b.rows(), b.cols()) = b;
    at += b.rows();
  }
  return out;
}

// P A P^T for the permutation sending i to perm[i].
template <typename Scalar>
Matrix<Scalar> permute(Matrix<Scalar> const& a, std::vector<Eigen::Index> const& perm) {
  Matrix<Scalar> out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) = a(i, j);
  }
  return out;
}

// All set partitions of {0, ..., n-1} as block labels (restricted growth
// strings).
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int blocks) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[static_cast<std::size_t>(i)] = b;
      rec(i + 1, std::max(blocks, b + 1));
    }
  };
  if (n > 0) rec(0, 0);
  return out;
}

// Quotient of a simplex action by a partition of the states, if the partition
// is lumpable: Q A_x e_z must not depend on the representative z of a block.
template <typename Scalar>
std::optional<std::vector<Matrix<Scalar>>> lump(std::vector<Matrix<Scalar>> const& mats, std::vector<int> const& part) {
  int k = *std::max_element(part.begin(), part.end()) + 1;
  auto n = static_cast<Eigen::Index>(part.size());
  Matrix<Scalar> q = Matrix<Scalar>::Zero(k, n);
  for (Eigen::Index i = 0; i < n; ++i) q(part[static_cast<std::size_t>(i)], i) = Scalar(1);
  std::vector<Matrix<Scalar>> out;
  for (auto const& a : mats) {
    Matrix<Scalar> qa = q * a;
    Matrix<Scalar> b(k, k);
    std::vector<bool> seen(static_cast<std::size_t>(k), false);
    for (Eigen::Index z = 0; z < n; ++z) {
      auto blk = part[static_cast<std::size_t>(z)];
      if (!seen[static_cast<std::size_t>(blk)]) {
        b.col(blk) = qa.col(z);
        seen[static_cast<std::size_t>(blk)] = true;
      } else if (b.col(blk) != qa.col(z)) {
        return std::nullopt;
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace detail

// The order in which draw-then-propagate fixes matrices: A_e = I when e
// exists; then repeatedly, whenever p_x*p_y has exactly one point z with an
// unknown matrix, A_z is solved from the law at (x, y); when nothing
// propagates, the first unknown point becomes a generator and is drawn.
struct PropagationPlan {
  struct Step {
    enum class Kind { identity, drawn, derived };
    Kind kind;
    std::size_t point, x = 0, y = 0;  // derived steps solve at (x, y)
  };
  std::vector<Step> steps;
};

template <typename Scalar>
PropagationPlan propagation_plan(BasicSemihypergroup<Scalar> const& s) {
  auto const n = s.size();
  std::vector<bool> known(n, false);
  PropagationPlan plan;
  if (auto e = s.verified().identity) {
    known[*e] = true;
    plan.steps.push_back({PropagationPlan::Step::Kind::identity, *e});
  }
  for (;;) {
    bool progress = true;
    while (progress) {
      progress = false;
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (!known[x] || !known[y]) continue;
          std::optional<std::size_t> unknown;
          int count = 0;
          for (auto z : s.table().entry(x, y).support_indices()) {
            if (!known[z]) {
              unknown = z;
              ++count;
            }
          }
          if (count == 1) {
            known[*unknown] = true;
            plan.steps.push_back({PropagationPlan::Step::Kind::derived, *unknown, x, y});
            progress = true;
          }
        }
      }
    }
    auto it = std::find(known.begin(), known.end(), false);
    if (it == known.end()) return plan;
    auto g = static_cast<std::size_t>(it - known.begin());
    known[g] = true;
    plan.steps.push_back({PropagationPlan::Step::Kind::drawn, g});
  }
}

template <typename Scalar>
struct BasicRandomAction {
  BasicAffineAction<Scalar> action;
  std::string method;  // "propagated" or "structured"
};

// Draw-then-propagate: generators get random stochastic matrices (half the
// time a random 0/1 column-stochastic matrix, i.e. a random map on the
// vertices, otherwise weights on the grid with denominator 2), everything
// else is solved from the law, and the result is verified. Returns nothing
// if no attempt verifies.
template <typename Scalar>
std::optional<BasicAffineAction<Scalar>> propagate_random_action(BasicSemihypergroup<Scalar> const& s,
                                                                 Eigen::Index dim, Rng& rng, int attempts) {
  auto plan = propagation_plan(s);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<Matrix<Scalar>> mats(s.size());
    for (auto const& st : plan.steps) {
      using K = PropagationPlan::Step::Kind;
      if (st.kind == K::drawn) {
        mats[st.point] = coin(rng) ? detail::random_function_matrix<Scalar>(dim, rng)
                                   : random_stochastic_matrix<Scalar>(dim, rng, 2);
      } else if (st.kind == K::identity) {
        mats[st.point] = Matrix<Scalar>::Identity(dim, dim);
      } else {
        // A_z = (A_x A_y - sum_{w != z} c_w A_w) / c_z
        Matrix<Scalar> rhs = mats[st.x] * mats[st.y];
        for (auto w : s.table().entry(st.x, st.y).support_indices()) {
          if (w != st.point) rhs -= s.table().coefficient(w, st.x, st.y) * mats[w];
        }
        mats[st.point] = rhs / s.table().coefficient(st.point, st.x, st.y);
      }
    }
    if (check_action_law(s, mats)) return BasicAffineAction<Scalar>::verify(s, std::move(mats));
  }
  return std::nullopt;
}

// Random direct sums of blocks that satisfy the law by construction (the
// trivial one-point action, the canonical action, its lumpable quotients
// and, without an identity, constant maps), conjugated by a random
// permutation of the vertices. Always succeeds.
template <typename Scalar>
BasicAffineAction<Scalar> structured_random_action(BasicSemihypergroup<Scalar> const& s, Eigen::Index dim, Rng& rng) {
  using Family = std::vector<Matrix<Scalar>>;
  auto const k = s.size();
  std::vector<Family> blocks;
  blocks.emplace_back(k, Matrix<Scalar>::Ones(1, 1));
  auto canon = canonical_action(s).matrices();
  blocks.push_back(canon);
  if (k <= 6) {
    for (auto const& part : detail::set_partitions(static_cast<int>(k))) {
      int parts = *std::max_element(part.begin(), part.end()) + 1;
      if (parts == 1 || parts == static_cast<int>(k)) continue;
      if (auto q = detail::lump(canon, part)) blocks.push_back(std::move(*q));
    }
  }
  bool constants = !s.verified().identity.has_value();
  std::vector<Matrix<Scalar>> acc(k);
  std::vector<std::vector<Matrix<Scalar>>> chosen(k);
  Eigen::Index filled = 0;
  while (filled < dim) {
    std::vector<std::size_t> fits;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].front().rows() <= dim - filled) fits.push_back(b);
    }
    std::uniform_int_distribution<std::size_t> pick(0, fits.size() - (constants ? 0 : 1));
    auto choice = pick(rng);
    Family fam;
    if (choice == fits.size()) {
      std::uniform_int_distribution<Eigen::Index> size(1, dim - filled);
      auto m = size(rng);
      Vector<Scalar> v = random_probability_vector<Scalar>(m, rng, 3);
      fam.assign(k, v * Vector<Scalar>::Ones(m).transpose());
    } else {
      fam = blocks[fits[choice]];
    }
    std::vector<Eigen::Index> perm(static_cast<std::size_t>(fam.front().rows()));
    std::iota(perm.begin(), perm.end(), Eigen::Index{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    for (std::size_t x = 0; x < k; ++x) chosen[x].push_back(detail::permute(fam[x], perm));
    filled += fam.front().rows();
  }
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(dim));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  for (std::size_t x = 0; x < k; ++x) acc[x] = detail::permute(detail::block_diagonal(chosen[x]), perm);
  return BasicAffineAction<Scalar>::verify(s, std::move(acc));
}

// Draw-then-propagate first; if every attempt is rejected, fall back to the
// structured family. Every result has passed check_action_law.
template <typename Scalar>
BasicRandomAction<Scalar> random_action(BasicSemihypergroup<Scalar> const& s, Eigen::Index dim, Rng& rng,
                                        int attempts = 64) {
  if (auto a = propagate_random_action(s, dim, rng, attempts)) return {std::move(*a), "propagated"};
  return {structured_random_action(s, dim, rng), "structured"};
}

template <typename Scalar>
struct BasicHarnessInstance {
  std::size_t index = 0;
  Eigen::Index dim = 0;
  std::string method;
  bool has_fixed_point = false;
  Vector<Scalar> witness;  // a common fixed point, or a Farkas certificate
};

template <typename Scalar>
struct BasicFPHarnessReport {
  std::uint64_t seed = 0;
  BasicLimReport<Scalar> lim;
  BasicSimplexPolytope<Scalar> canonical;
  std::vector<BasicHarnessInstance<Scalar>> instances;
  std::size_t misses = 0;  // actions without a fixed point although a LIM exists

  // With a LIM every action must have a fixed point; without one, the
  // canonical action must have none.
  bool consistent() const noexcept {
    return lim.exists() ? misses == 0 && canonical.feasible : !canonical.feasible;
  }
};

using FPHarnessReport = BasicFPHarnessReport<Rational>;

// Fixed points of the canonical action and of `per_dim` seeded random
// verified actions on each simplex dimension in `dims` (state dimensions,
// so 3 means the 2-simplex).
template <typename Scalar>
BasicFPHarnessReport<Scalar> fp_property_harness(BasicSemihypergroup<Scalar> const& s, int per_dim, std::uint64_t seed,
                                                 std::vector<Eigen::Index> const& dims = {3, 4}) {
  BasicFPHarnessReport<Scalar> out{seed, lim_solve(s, false), fixed_points(canonical_action(s), false), {}, 0};
  Rng rng(seed);
  std::size_t index = 0;
  for (auto dim : dims) {
    for (int i = 0; i < per_dim; ++i) {
      auto ra = random_action(s, dim, rng);
      auto fp = fixed_points(ra.action, false);
      BasicHarnessInstance<Scalar> inst{index++, dim, ra.method, fp.feasible,
                                        fp.feasible ? fp.witness : fp.certificate};
      if (out.lim.exists() && !fp.feasible) ++out.misses;
      out.instances.push_back(std::move(inst));
    }
  }
  return out;
}

}  // namespace shg

#endif  // SHG_ACTIONS_HPP_
