// Named instances shared by the unit tests and the acceptance suite.
#ifndef SHG_TESTS_CORPUS_HPP_
#define SHG_TESTS_CORPUS_HPP_

#include <array>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "shg/constructors.hpp"

namespace corpus {

using shg::Rational;

struct Instance {
  std::string label;
  shg::Semihypergroup s;
};

struct ThreePointParams {
  std::array<Rational, 3> x, y;
  std::array<Rational, 2> z;
};

// Associative members of the three-point family, found by exhaustive search
// over the quarter grid (and each re-verified on construction).
inline std::vector<ThreePointParams> valid_three_point() {
  Rational q(1, 4), h(1, 2), t(3, 4);
  return {
      {{h, 0, h}, {h, h, 0}, {h, h}},
      {{q, q, h}, {q, h, q}, {h, h}},
      {{q, 0, t}, {q, q, h}, {t, q}},
      {{q, h, q}, {q, t, 0}, {q, t}},
      {{q, q, h}, {h, 0, h}, {1, 0}},
      {{1, 0, 0}, {q, q, h}, {0, 1}},
      {{h, h, 0}, {q, h, q}, {0, 1}},
  };
}

inline std::string three_point_label(ThreePointParams const& p) {
  auto s = [](auto const& arr) {
    std::string out;
    for (auto const& v : arr) out += (out.empty() ? "" : ",") + shg::to_string(v);
    return out;
  };
  return "three-point x=(" + s(p.x) + ") y=(" + s(p.y) + ") z=(" + s(p.z) + ")";
}

// Every constructor output named in the axiom criterion.
inline std::vector<Instance> constructor_corpus() {
  using namespace shg;
  auto s3 = FiniteGroup::symmetric(3);
  auto h = s3.subset({"e", "(12)"});
  std::vector<Instance> out;
  for (int n : {2, 3, 4}) out.push_back({"Z" + std::to_string(n), from_group(FiniteGroup::cyclic(n))});
  out.push_back({"S3", from_group(s3)});
  out.push_back({"S3/H", left_coset_space(s3, h)});
  out.push_back({"H\\S3/H", double_coset_space(s3, h)});
  auto z3 = FiniteGroup::cyclic(3);
  out.push_back({"Z3/inversion", orbit_space(z3, GroupAction::inversion(z3))});
  for (auto const& p : valid_three_point()) out.push_back({three_point_label(p), three_point_family(p.x, p.y, p.z)});
  for (long n : {2, 4, 8}) out.push_back({"zeuner(" + std::to_string(n) + ")", zeuner_grid(n)});
  return out;
}

inline Instance left_zero() { return {"left-zero{a,b}", shg::left_zero_semigroup({"a", "b"})}; }

// Constructor outputs plus the non-amenable left-zero lift.
inline std::vector<Instance> full_corpus() {
  auto out = constructor_corpus();
  out.push_back(left_zero());
  return out;
}

// The table data copied into the oracle's map form.
inline oracle::Table to_oracle(shg::Semihypergroup const& s) {
  auto const& sp = *s.space();
  oracle::Table t{sp.points(), {}};
  for (std::size_t x = 0; x < s.size(); ++x) {
    for (std::size_t y = 0; y < s.size(); ++y) {
      oracle::Dist d;
      for (std::size_t z = 0; z < s.size(); ++z) d[sp.name(z)] = s.table().coefficient(z, x, y);
      t.entries[{sp.name(x), sp.name(y)}] = oracle::clean(d);
    }
  }
  return t;
}

inline oracle::Dist to_dist(shg::SpacePtr const& sp, shg::VectorQ const& v) {
  oracle::Dist d;
  for (std::size_t i = 0; i < sp->size(); ++i) d[sp->name(i)] = v(static_cast<Eigen::Index>(i));
  return oracle::clean(d);
}

inline oracle::Fn to_fn(shg::SpacePtr const& sp, shg::VectorQ const& v) {
  oracle::Fn f;
  for (std::size_t i = 0; i < sp->size(); ++i) f[sp->name(i)] = v(static_cast<Eigen::Index>(i));
  return f;
}

}  // namespace corpus

#endif  // SHG_TESTS_CORPUS_HPP_
