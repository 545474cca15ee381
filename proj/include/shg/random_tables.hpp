// Seeded random associative tables for property suites. Every family is
// associative by construction and the result is re-verified regardless.
#ifndef SHG_RANDOM_TABLES_HPP_
#define SHG_RANDOM_TABLES_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "shg/constructors.hpp"
#include "shg/random.hpp"

namespace shg {

// (K1 x K2, p_(a,b) * p_(c,d) = (p_a*p_c) (x) (p_b*p_d)), points named "a:b".
template <typename Scalar>
BasicSemihypergroup<Scalar> direct_product(BasicSemihypergroup<Scalar> const& k1, BasicSemihypergroup<Scalar> const& k2) {
  auto n1 = k1.size(), n2 = k2.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n1; ++a) {
    for (std::size_t b = 0; b < n2; ++b) names.push_back(k1.space()->name(a) + ":" + k2.space()->name(b));
  }
  auto space = FiniteSpace::make(std::move(names));
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t p, std::size_t q) {
    auto left = k1.table().column(p / n2, q / n2);
    auto right = k2.table().column(p % n2, q % n2);
    Vector<Scalar> v(static_cast<Eigen::Index>(n1 * n2));
    for (Eigen::Index i = 0; i < left.size(); ++i) v.segment(i * right.size(), right.size()) = left(i) * right;
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), k1.name() + " x " + k2.name());
}

// The same table with point i renamed names[perm[i]] and moved to position
// perm[i].
template <typename Scalar>
BasicSemihypergroup<Scalar> relabel(BasicSemihypergroup<Scalar> const& k, std::vector<std::size_t> const& perm) {
  auto n = k.size();
  if (perm.size() != n) throw InputError("relabeling has the wrong length");
  std::vector<std::size_t> inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm[i] >= n || inv[perm[i]] != n) throw InputError("relabeling is not a permutation");
    inv[perm[i]] = i;
  }
  std::vector<std::string> names(n);
  for (std::size_t i = 0; i < n; ++i) names[perm[i]] = k.space()->name(i);
  auto space = FiniteSpace::make(std::move(names));
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t p, std::size_t q) {
    auto col = k.table().column(inv[p], inv[q]);
    Vector<Scalar> v(static_cast<Eigen::Index>(n));
    for (std::size_t i = 0; i < n; ++i) v(static_cast<Eigen::Index>(perm[i])) = col(static_cast<Eigen::Index>(i));
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), k.name());
}

template <typename Scalar = Rational>
struct BasicRandomTable {
  std::string family;
  BasicSemihypergroup<Scalar> s;
};
using RandomTable = BasicRandomTable<>;

namespace detail {

inline std::vector<std::string> numbered(std::string const& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Semigroup of maps on {0..m-1} generated under composition (f.g)(i) =
// f(g(i)); empty when it grows past max_size.
inline CayleyTable transformation_closure(std::vector<std::vector<std::size_t>> const& gens, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> elems;
  std::map<std::vector<std::size_t>, std::size_t> index;
  auto add = [&](std::vector<std::size_t> const& f) {
    if (index.emplace(f, elems.size()).second) elems.push_back(f);
  };
  for (auto const& g : gens) add(g);
  auto compose = [](std::vector<std::size_t> const& f, std::vector<std::size_t> const& g) {
    std::vector<std::size_t> h(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
  };
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      add(compose(elems[i], elems[j]));
      add(compose(elems[j], elems[i]));
      if (elems.size() > max_size) return {};
    }
  }
  CayleyTable t(elems.size(), std::vector<std::size_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) t[i][j] = index.at(compose(elems[i], elems[j]));
  }
  return t;
}

inline bool cayley_commutative(CayleyTable const& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (t[i][j] != t[j][i]) return false;
    }
  }
  return true;
}

// Associative quarter-grid members of the three-point family, found once.
template <typename Scalar>
std::vector<BasicSemihypergroup<Scalar>> const& three_point_grid() {
  static std::vector<BasicSemihypergroup<Scalar>> cache = [] {
    std::vector<BasicSemihypergroup<Scalar>> out;
    std::vector<std::array<Scalar, 3>> triples;
    for (int a = 0; a <= 4; ++a) {
      for (int b = 0; a + b <= 4; ++b) triples.push_back({Scalar(a) / Scalar(4), Scalar(b) / Scalar(4), Scalar(4 - a - b) / Scalar(4)});
    }
    for (auto const& x : triples) {
      for (auto const& y : triples) {
        for (int c = 0; c <= 4; ++c) {
          std::array<Scalar, 2> z{Scalar(c) / Scalar(4), Scalar(4 - c) / Scalar(4)};
          if (y[0] * x[2] != z[0] * x[0]) continue;
          try {
            out.push_back(three_point_family<Scalar>(x, y, z));
          } catch (AxiomViolation const&) {
          }
        }
      }
    }
    return out;
  }();
  return cache;
}

template <typename Scalar>
Scalar grid_fraction(Rng& rng, int lo, int den) {
  return Scalar(std::uniform_int_distribution<int>(lo, den)(rng)) / Scalar(den);
}

}  // namespace detail

// One random associative table on at most max_size points (2..6). Families:
// transformation semigroups, cyclic groups, bands, null and constant
// tables, union semilattices, two-point hypergroups, the three-point grid,
// small Zeuner grids and group quotients, and direct products of these, all
// under a random relabeling. commutative_only restricts to commutative
// outputs.
template <typename Scalar = Rational>
BasicRandomTable<Scalar> random_associative_table(Rng& rng, std::size_t max_size = 6, bool commutative_only = false) {
  if (max_size < 2 || max_size > 6) throw InputError("random tables need 2 <= max_size <= 6");
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };

  std::function<BasicRandomTable<Scalar>(std::size_t)> draw = [&](std::size_t cap) -> BasicRandomTable<Scalar> {
    for (;;) {
      switch (pick(0, 11)) {
        case 0: {  // transformation semigroup
          auto m = pick(2, 4);
          std::vector<std::vector<std::size_t>> gens(pick(1, commutative_only ? 1 : 2));
          for (auto& g : gens) {
            g.resize(m);
            for (auto& v : g) v = pick(0, m - 1);
          }
          auto t = detail::transformation_closure(gens, cap);
          if (t.size() < 2 || (commutative_only && !detail::cayley_commutative(t))) continue;
          return {"transformation", from_semigroup<Scalar>(detail::numbered("t", t.size()), t, "transformation")};
        }
        case 1: {
          auto n = pick(2, cap);
          return {"cyclic", from_group<Scalar>(FiniteGroup::cyclic(n), "Z" + std::to_string(n))};
        }
        case 2: {  // left-, right-zero or rectangular band
          if (commutative_only) continue;
          auto n = pick(2, cap);
          auto i = pick(1, n);
          while (n % i != 0) --i;
          auto j = n / i;
          CayleyTable t(n, std::vector<std::size_t>(n));
          for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) t[x][y] = (x / j) * j + y % j;
          }
          return {"band", from_semigroup<Scalar>(detail::numbered("b", n), t, "band")};
        }
        case 3: {  // null semigroup with zero 0
          auto n = pick(2, cap);
          return {"null", from_semigroup<Scalar>(detail::numbered("n", n), CayleyTable(n, std::vector<std::size_t>(n, 0)),
                                                 "null")};
        }
        case 4: {  // p_x * p_y = nu for all x, y
          auto n = pick(2, cap);
          auto space = FiniteSpace::make(detail::numbered("c", n));
          Vector<Scalar> nu = random_probability_vector<Scalar>(static_cast<Eigen::Index>(n), rng, 4);
          auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t, std::size_t) { return nu; });
          return {"constant", BasicSemihypergroup<Scalar>::verify(std::move(table), "constant")};
        }
        case 5: {  // union semilattice of random subsets of {0,1,2}
          std::set<unsigned> family{static_cast<unsigned>(pick(0, 7))};
          auto target = pick(2, cap);
          for (int tries = 0; tries < 20 && family.size() < target; ++tries) {
            auto next = family;
            next.insert(static_cast<unsigned>(pick(0, 7)));
            for (bool grew = true; grew;) {
              grew = false;
              for (auto a : std::vector<unsigned>(next.begin(), next.end())) {
                for (auto b : std::vector<unsigned>(next.begin(), next.end())) grew |= next.insert(a | b).second;
              }
            }
            if (next.size() <= cap) family = next;
          }
          if (family.size() < 2) continue;
          std::vector<unsigned> sets(family.begin(), family.end());
          std::vector<std::string> names;
          for (auto s : sets) {
            std::string name = "u";  // u02 is {0, 2}
            for (unsigned bit = 0; bit < 3; ++bit) {
              if (s & (1u << bit)) name += std::to_string(bit);
            }
            names.push_back(name);
          }
          CayleyTable t(sets.size(), std::vector<std::size_t>(sets.size()));
          for (std::size_t x = 0; x < sets.size(); ++x) {
            for (std::size_t y = 0; y < sets.size(); ++y) {
              t[x][y] = static_cast<std::size_t>(std::find(sets.begin(), sets.end(), sets[x] | sets[y]) - sets.begin());
            }
          }
          return {"union", from_semigroup<Scalar>(names, t, "union")};
        }
        case 6: {  // {e, a} with a*a = q e + (1-q) a
          auto q = detail::grid_fraction<Scalar>(rng, 1, 6);
          auto space = FiniteSpace::make({"e", "a"});
          auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t x, std::size_t y) {
            Vector<Scalar> v = Vector<Scalar>::Zero(2);
            if (x == 0 || y == 0) {
              v(static_cast<Eigen::Index>(x + y)) = 1;
            } else {
              v << q, Scalar(1) - q;
            }
            return v;
          });
          return {"two-point", BasicSemihypergroup<Scalar>::verify(std::move(table), "two-point")};
        }
        case 7: {
          if (cap < 3) continue;
          auto const& grid = detail::three_point_grid<Scalar>();
          return {"three-point", grid[pick(0, grid.size() - 1)]};
        }
        case 8: {
          if (cap < 3) continue;
          long n = cap >= 5 && pick(0, 1) ? 4 : 2;
          return {"zeuner", zeuner_grid<Scalar>(n)};
        }
        case 9: {  // quotients of small groups
          auto s3 = FiniteGroup::symmetric(3);
          switch (pick(0, 2)) {
            case 0:
              if (cap < 3) continue;
              return {"coset", left_coset_space<Scalar>(s3, s3.subset({"e", "(12)"}))};
            case 1:
              return {"double-coset", double_coset_space<Scalar>(s3, s3.subset({"e", "(12)"}))};
            default: {
              auto n = pick(3, std::min<std::size_t>(2 * cap - 1, 10));
              auto g = FiniteGroup::cyclic(n);
              return {"orbit", orbit_space<Scalar>(g, GroupAction::inversion(g))};
            }
          }
        }
        case 10: {  // S3 and other noncommutative semigroups of maps
          if (commutative_only || cap < 6) continue;
          return {"S3", from_group<Scalar>(FiniteGroup::symmetric(3), "S3")};
        }
        default: {  // direct product of two smaller draws
          if (cap < 4) continue;
          auto a = draw(cap / 2);
          auto b = draw(cap / a.s.size());
          if (a.s.size() * b.s.size() > cap) continue;
          return {"product(" + a.family + "," + b.family + ")", direct_product(a.s, b.s)};
        }
      }
    }
  };

  auto out = draw(max_size);
  // Quotients like S3/H can be noncommutative.
  while (commutative_only && !out.s.is_commutative()) out = draw(max_size);
  std::vector<std::size_t> perm(out.s.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  out.s = relabel(out.s, perm);
  return out;
}

}  // namespace shg

#endif  // SHG_RANDOM_TABLES_HPP_
