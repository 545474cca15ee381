// Brute-force reference computations for the tests. Deliberately written
// against plain std::map tables, with none of the library's Eigen code paths,
// so expected values computed here are independent of the implementation.
#ifndef SHG_TESTS_ORACLES_HPP_
#define SHG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "shg/scalar.hpp"

namespace oracle {

using shg::Rational;
using Dist = std::map<std::string, Rational>;  // sparse measure, zero entries dropped

struct Table {
  std::vector<std::string> points;
  std::map<std::pair<std::string, std::string>, Dist> entries;

  Dist const& at(std::string const& x, std::string const& y) const { return entries.at({x, y}); }
};

inline Dist clean(Dist d) {
  for (auto it = d.begin(); it != d.end();) {
    it = it->second == 0 ? d.erase(it) : std::next(it);
  }
  return d;
}

inline Dist point(std::string const& x) { return Dist{{x, Rational(1)}}; }

inline Table from_formula(std::vector<std::string> points,
                          std::function<Dist(std::string const&, std::string const&)> const& f) {
  Table t{points, {}};
  for (auto const& x : points) {
    for (auto const& y : points) t.entries[{x, y}] = clean(f(x, y));
  }
  return t;
}

// mu * nu as the literal double sum over the table.
inline Dist convolve(Table const& t, Dist const& mu, Dist const& nu) {
  Dist out;
  for (auto const& [x, a] : mu) {
    for (auto const& [y, b] : nu) {
      for (auto const& [z, c] : t.at(x, y)) out[z] += a * b * c;
    }
  }
  return clean(out);
}

// First failing triple in the given point order, or none.
inline std::optional<std::tuple<std::string, std::string, std::string>> associativity_witness(Table const& t) {
  for (auto const& x : t.points) {
    for (auto const& y : t.points) {
      for (auto const& z : t.points) {
        if (convolve(t, t.at(x, y), point(z)) != convolve(t, point(x), t.at(y, z))) {
          return std::make_tuple(x, y, z);
        }
      }
    }
  }
  return std::nullopt;
}

inline bool associative(Table const& t) { return !associativity_witness(t).has_value(); }

// Zeuner's formula evaluated directly on rationals, grid {0, 1/n, ..., 1}.
inline Table zeuner(long n) {
  std::vector<std::string> pts;
  for (long i = 0; i <= n; ++i) pts.push_back(shg::to_string(Rational(i, n)));
  return from_formula(pts, [](std::string const& s, std::string const& t) {
    Rational a = shg::parse_rational(s), b = shg::parse_rational(t);
    Rational d = a > b ? Rational(a - b) : Rational(b - a);
    Rational r = a + b - 1;
    Rational refl = 1 - (r < 0 ? Rational(-r) : r);
    Dist out;
    out[shg::to_string(d)] += Rational(1, 2);
    out[shg::to_string(refl)] += Rational(1, 2);
    return out;
  });
}

// Permutations of {0,1,2}; product is composition (s t)(i) = s(t(i)).
using Perm = std::array<int, 3>;

inline Perm compose(Perm const& s, Perm const& t) { return {s[t[0]], s[t[1]], s[t[2]]}; }

inline std::vector<Perm> s3() {
  std::vector<Perm> all;
  Perm p{0, 1, 2};
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

inline Perm transposition(int a, int b) {
  Perm p{0, 1, 2};
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

inline std::string cycle_name(Perm const& p) {
  std::string out;
  std::array<bool, 3> seen{};
  for (int i = 0; i < 3; ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (int j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

// Canonical representative: fewest moved points, then smallest name.
inline std::string min_name(std::set<Perm> const& cls) {
  auto key = [](Perm const& p) {
    int moved = 0;
    for (int i = 0; i < 3; ++i) moved += p[i] != i;
    return std::make_pair(moved, cycle_name(p));
  };
  auto best = *cls.begin();
  for (auto const& p : cls) {
    if (key(p) < key(best)) best = p;
  }
  return cycle_name(best);
}

// S3 coset tables by literal expansion of the averaging formulas over H.
// double_sided selects HxH instead of xH.
inline Table s3_coset_table(std::vector<Perm> const& h, bool double_sided) {
  auto cls = [&](Perm const& x) {
    std::set<Perm> c;
    for (auto const& s : h) {
      if (double_sided) {
        for (auto const& t : h) c.insert(compose(compose(s, x), t));
      } else {
        c.insert(compose(x, s));
      }
    }
    return c;
  };
  auto label = [&](Perm const& x) {
    return double_sided ? "H" + min_name(cls(x)) + "H" : min_name(cls(x)) + "H";
  };
  std::map<std::string, Perm> rep;
  std::vector<std::string> names;
  for (auto const& x : s3()) {
    if (rep.emplace(label(x), x).second) names.push_back(label(x));
  }
  Table t{names, {}};
  Rational w(1, static_cast<long>(h.size()));
  for (auto const& [a, x] : rep) {
    for (auto const& [b, y] : rep) {
      Dist d;
      for (auto const& s : h) d[label(compose(compose(x, s), y))] += w;
      t.entries[{a, b}] = clean(d);
    }
  }
  return t;
}

// Functions and functionals as total maps point -> value.
using Fn = std::map<std::string, Rational>;

inline Rational integrate(Dist const& mu, Fn const& f) {
  Rational s = 0;
  for (auto const& [x, c] : mu) s += c * f.at(x);
  return s;
}

// (L_x f)(y) = f(x*y) and (R_y f)(x) = f(x*y), straight from the definition.
inline Fn left_translate(Table const& t, std::string const& x, Fn const& f) {
  Fn out;
  for (auto const& y : t.points) out[y] = integrate(t.at(x, y), f);
  return out;
}

inline Fn right_translate(Table const& t, std::string const& y, Fn const& f) {
  Fn out;
  for (auto const& x : t.points) out[x] = integrate(t.at(x, y), f);
  return out;
}

// T_w f (x) = w(L_x f), U_w f (x) = w(R_x f).
inline Fn introversion_left(Table const& t, Dist const& w, Fn const& f) {
  Fn out;
  for (auto const& x : t.points) out[x] = integrate(w, left_translate(t, x, f));
  return out;
}

inline Fn introversion_right(Table const& t, Dist const& w, Fn const& f) {
  Fn out;
  for (auto const& x : t.points) out[x] = integrate(w, right_translate(t, x, f));
  return out;
}

inline Fn indicator(Table const& t, std::string const& z) {
  Fn f;
  for (auto const& p : t.points) f[p] = p == z ? Rational(1) : Rational(0);
  return f;
}

// Weights of m <> n and m [] n, one indicator at a time.
inline Dist arens_left(Table const& t, Dist const& m, Dist const& n) {
  Dist out;
  for (auto const& z : t.points) out[z] = integrate(m, introversion_left(t, n, indicator(t, z)));
  return clean(out);
}

inline Dist arens_right(Table const& t, Dist const& m, Dist const& n) {
  Dist out;
  for (auto const& z : t.points) out[z] = integrate(n, introversion_right(t, m, indicator(t, z)));
  return clean(out);
}

}  // namespace oracle

#endif  // SHG_TESTS_ORACLES_HPP_
