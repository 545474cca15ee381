#ifndef SHG_CONSTRUCTORS_HPP_
#define SHG_CONSTRUCTORS_HPP_

#include <array>
#include <cstdlib>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shg/groups.hpp"
#include "shg/semihypergroup.hpp"

namespace shg {

// Every builder below returns a verified semihypergroup or throws: InputError
// for bad parameters, AxiomViolation (with witness) when the built table
// fails an axiom.

// p_x * p_y = p_{x.y}. The Cayley table is checked for associativity first.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> from_semigroup(std::vector<std::string> names, CayleyTable const& cayley,
                                           std::string label = "semigroup") {
  auto space = FiniteSpace::make(std::move(names));
  auto n = space->size();
  if (cayley.size() != n) throw InputError("Cayley table needs one row per element");
  for (auto const& row : cayley) {
    if (row.size() != n) throw InputError("Cayley table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw InputError("Cayley table entry out of range");
    }
  }
  if (auto a = check_cayley_associativity(cayley); !a.passed) {
    throw AxiomViolation("associativity", {space->name(a.x), space->name(a.y), space->name(a.z)},
                         "(xy)z = " + space->name(cayley[cayley[a.x][a.y]][a.z]) +
                             " but x(yz) = " + space->name(cayley[a.x][cayley[a.y][a.z]]));
  }
  auto table = BasicConvTable<Scalar>::from_entries(
      space, [&](std::size_t x, std::size_t y) { return dirac<Scalar>(space, cayley[x][y]).coeffs(); });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), std::move(label));
}

template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> from_group(FiniteGroup const& g, std::string label = "group") {
  return from_semigroup<Scalar>(g.elements()->points(), g.table(), std::move(label));
}

// Left-zero band x * y = x on the given names.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> left_zero_semigroup(std::vector<std::string> names) {
  CayleyTable t(names.size(), std::vector<std::size_t>(names.size()));
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t y = 0; y < names.size(); ++y) t[x][y] = x;
  }
  return from_semigroup<Scalar>(std::move(names), t, "left-zero");
}

template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> right_zero_semigroup(std::vector<std::string> names) {
  CayleyTable t(names.size(), std::vector<std::size_t>(names.size()));
  for (std::size_t x = 0; x < names.size(); ++x) {
    for (std::size_t y = 0; y < names.size(); ++y) t[x][y] = y;
  }
  return from_semigroup<Scalar>(std::move(names), t, "right-zero");
}

namespace detail {

// Partition of a group into classes, each named after its first member in
// declaration order.
struct Quotient {
  std::vector<std::size_t> class_of;                // element -> class
  std::vector<std::vector<std::size_t>> members;    // class -> elements, sorted
  std::vector<std::string> names;
};

template <typename ClassOf>
Quotient make_quotient(FiniteGroup const& g, ClassOf class_members, std::string const& prefix,
                       std::string const& suffix) {
  Quotient q;
  q.class_of.assign(g.size(), g.size());
  for (std::size_t x = 0; x < g.size(); ++x) {
    if (q.class_of[x] != g.size()) continue;
    std::set<std::size_t> cls = class_members(x);
    auto id = q.members.size();
    for (auto m : cls) q.class_of[m] = id;
    q.members.emplace_back(cls.begin(), cls.end());
    q.names.push_back(prefix + g.name(x) + suffix);
  }
  return q;
}

inline void require_subgroup(FiniteGroup const& g, std::vector<std::size_t> const& h) {
  if (!g.is_subgroup(h)) throw InputError("H is not a subgroup of G");
}

}  // namespace detail

// G/H with p_{xH} * p_{yH} = (1/|H|) sum_{t in H} p_{(x t y)H}.
// Representative independence is checked by recomputing every entry from
// every pair of representatives.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> left_coset_space(FiniteGroup const& g, std::vector<std::size_t> const& h) {
  detail::require_subgroup(g, h);
  auto q = detail::make_quotient(
      g,
      [&](std::size_t x) {
        std::set<std::size_t> c;
        for (auto t : h) c.insert(g.mul(x, t));
        return c;
      },
      "", "H");
  auto space = FiniteSpace::make(q.names);
  auto n = space->size();
  Scalar weight = Scalar(1) / Scalar(static_cast<long>(h.size()));
  auto entry_from = [&](std::size_t x, std::size_t y) {
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
    for (auto t : h) v(static_cast<Eigen::Index>(q.class_of[g.mul(g.mul(x, t), y)])) += weight;
    return v;
  };
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t a, std::size_t b) {
    Vector<Scalar> v = entry_from(q.members[a].front(), q.members[b].front());
    for (auto x : q.members[a]) {
      for (auto y : q.members[b]) {
        if (entry_from(x, y) != v) {
          throw AxiomViolation("well-definedness", {g.name(x), g.name(y)},
                               "coset product depends on the representatives");
        }
      }
    }
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), "coset");
}

// G//H with p_{HxH} * p_{HyH} = (1/|H|) sum_{t in H} p_{H(x t y)H}.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> double_coset_space(FiniteGroup const& g, std::vector<std::size_t> const& h) {
  detail::require_subgroup(g, h);
  auto q = detail::make_quotient(
      g,
      [&](std::size_t x) {
        std::set<std::size_t> c;
        for (auto s : h) {
          for (auto t : h) c.insert(g.mul(g.mul(s, x), t));
        }
        return c;
      },
      "H", "H");
  auto space = FiniteSpace::make(q.names);
  auto n = space->size();
  Scalar weight = Scalar(1) / Scalar(static_cast<long>(h.size()));
  auto entry_from = [&](std::size_t x, std::size_t y) {
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
    for (auto t : h) v(static_cast<Eigen::Index>(q.class_of[g.mul(g.mul(x, t), y)])) += weight;
    return v;
  };
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t a, std::size_t b) {
    Vector<Scalar> v = entry_from(q.members[a].front(), q.members[b].front());
    for (auto x : q.members[a]) {
      for (auto y : q.members[b]) {
        if (entry_from(x, y) != v) {
          throw AxiomViolation("well-definedness", {g.name(x), g.name(y)},
                               "double coset product depends on the representatives");
        }
      }
    }
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), "double-coset");
}

// Orbits x^H of an H-action on G, with
//   p_{x^H} * p_{y^H} = (1/|H|^2) sum_{s,t in H} p_{(pi(s,x) pi(t,y))^H}.
// Associativity is checked, not assumed: for actions that are not by
// automorphisms the result may fail to be a semihypergroup.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> orbit_space(FiniteGroup const& g, GroupAction const& pi) {
  if (pi.target_size() != g.size()) throw InputError("action does not act on G");
  auto const& hgrp = pi.acting();
  auto q = detail::make_quotient(
      g,
      [&](std::size_t x) {
        std::set<std::size_t> c;
        for (std::size_t s = 0; s < hgrp.size(); ++s) c.insert(pi(s, x));
        return c;
      },
      "orb(", ")");
  auto space = FiniteSpace::make(q.names);
  auto n = space->size();
  auto hsize = static_cast<long>(hgrp.size());
  Scalar weight = Scalar(1) / Scalar(hsize * hsize);
  auto entry_from = [&](std::size_t x, std::size_t y) {
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n));
    for (std::size_t s = 0; s < hgrp.size(); ++s) {
      for (std::size_t t = 0; t < hgrp.size(); ++t) {
        v(static_cast<Eigen::Index>(q.class_of[g.mul(pi(s, x), pi(t, y))])) += weight;
      }
    }
    return v;
  };
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t a, std::size_t b) {
    Vector<Scalar> v = entry_from(q.members[a].front(), q.members[b].front());
    for (auto x : q.members[a]) {
      for (auto y : q.members[b]) {
        if (entry_from(x, y) != v) {
          throw AxiomViolation("well-definedness", {g.name(x), g.name(y)},
                               "orbit product depends on the representatives");
        }
      }
    }
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), "orbit");
}

// The three-point table on {e, a, b}:
//   p_a*p_b = p_b*p_a = z1 p_a + z2 p_b
//   p_a*p_a = x1 p_e + x2 p_a + x3 p_b
//   p_b*p_b = y1 p_e + y2 p_a + y3 p_b
// with e a two-sided identity. The parameter constraints are necessary but
// not sufficient for associativity, so the full check still runs.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> three_point_family(std::array<Scalar, 3> const& x, std::array<Scalar, 3> const& y,
                                               std::array<Scalar, 2> const& z) {
  for (auto const* group : {x.data(), y.data()}) {
    for (int i = 0; i < 3; ++i) {
      if (group[i] < Scalar(0)) throw InputError("three-point parameters must be nonnegative");
    }
  }
  if (z[0] < Scalar(0) || z[1] < Scalar(0)) throw InputError("three-point parameters must be nonnegative");
  if (x[0] + x[1] + x[2] != Scalar(1)) throw InputError("x1+x2+x3 != 1");
  if (y[0] + y[1] + y[2] != Scalar(1)) throw InputError("y1+y2+y3 != 1");
  if (z[0] + z[1] != Scalar(1)) throw InputError("z1+z2 != 1");
  if (y[0] * x[2] != z[0] * x[0]) throw InputError("y1*x3 != z1*x1");

  auto space = FiniteSpace::make({"e", "a", "b"});
  auto vec = [](Scalar e, Scalar a, Scalar b) {
    Vector<Scalar> v(3);
    v << e, a, b;
    return v;
  };
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t p, std::size_t q) -> Vector<Scalar> {
    if (p == 0) return dirac<Scalar>(space, q).coeffs();
    if (q == 0) return dirac<Scalar>(space, p).coeffs();
    if (p == 1 && q == 1) return vec(x[0], x[1], x[2]);
    if (p == 2 && q == 2) return vec(y[0], y[1], y[2]);
    return vec(Scalar(0), z[0], z[1]);
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), "three-point");
}

// The grid {0, 1/n, ..., 1} with p_s * p_t = (p_{|s-t|} + p_{1-|1-s-t|}) / 2.
// Even n only, so the reflected branch stays on the grid.
template <typename Scalar = Rational>
BasicSemihypergroup<Scalar> zeuner_grid(long n) {
  if (n < 2 || n % 2 != 0) throw InputError("zeuner grid needs an even n >= 2");
  std::vector<std::string> names;
  for (long i = 0; i <= n; ++i) names.push_back(to_string(Rational(i, n)));
  auto space = FiniteSpace::make(names);
  auto at = [&](long numerator, std::size_t s, std::size_t t) -> Eigen::Index {
    if (numerator < 0 || numerator > n) {
      throw AxiomViolation("closure", {space->name(s), space->name(t)}, "product leaves the grid");
    }
    return static_cast<Eigen::Index>(numerator);
  };
  auto table = BasicConvTable<Scalar>::from_entries(space, [&](std::size_t s, std::size_t t) {
    auto si = static_cast<long>(s), ti = static_cast<long>(t);
    Vector<Scalar> v = Vector<Scalar>::Zero(static_cast<Eigen::Index>(n + 1));
    v(at(std::labs(si - ti), s, t)) += Scalar(1) / Scalar(2);
    v(at(n - std::labs(n - si - ti), s, t)) += Scalar(1) / Scalar(2);
    return v;
  });
  return BasicSemihypergroup<Scalar>::verify(std::move(table), "zeuner(" + std::to_string(n) + ")");
}

}  // namespace shg

#endif  // SHG_CONSTRUCTORS_HPP_
