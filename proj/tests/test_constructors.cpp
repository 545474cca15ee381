#include <catch_amalgamated.hpp>

#include "oracles.hpp"
#include "shg/constructors.hpp"

using namespace shg;

namespace {

oracle::Dist to_dist(Measure const& mu) {
  oracle::Dist d;
  for (auto i : mu.support_indices()) d[mu.space()->name(i)] = mu[i];
  return d;
}

// The library table agrees with an oracle table entry by entry, by name.
bool same_as(Semihypergroup const& s, oracle::Table const& t) {
  if (s.size() != t.points.size()) return false;
  for (auto const& x : t.points) {
    for (auto const& y : t.points) {
      if (!s.space()->contains(x) || !s.space()->contains(y)) return false;
      if (to_dist(s.convolve_points(x, y)) != t.at(x, y)) return false;
    }
  }
  return true;
}

oracle::Table orbit_oracle(long n, std::vector<std::vector<long>> const& maps) {
  // Orbits of Z_n under the given maps, named orb(min element); weights 1/|H|^2.
  auto orbit_of = [&](long x) {
    long best = x;
    for (auto const& m : maps) best = std::min(best, m[x]);
    return "orb(" + std::to_string(best) + ")";
  };
  std::vector<std::string> pts;
  for (long x = 0; x < n; ++x) {
    if (std::find(pts.begin(), pts.end(), orbit_of(x)) == pts.end()) pts.push_back(orbit_of(x));
  }
  Rational w(1, static_cast<long>(maps.size() * maps.size()));
  return oracle::from_formula(pts, [&](std::string const& a, std::string const& b) {
    long x = std::stol(a.substr(4)), y = std::stol(b.substr(4));
    oracle::Dist d;
    for (auto const& s : maps) {
      for (auto const& t : maps) d[orbit_of((s[x] + t[y]) % n)] += w;
    }
    return d;
  });
}

}  // namespace

TEST_CASE("from_semigroup lifts Cayley tables", "[constructors]") {
  auto lz = left_zero_semigroup({"a", "b"});
  CHECK(lz.verified().associative);
  CHECK_FALSE(lz.verified().identity.has_value());
  CHECK_FALSE(lz.is_hypergroup());

  auto z3 = from_group(FiniteGroup::cyclic(3));
  REQUIRE(z3.verified().identity.has_value());
  CHECK(z3.space()->name(*z3.verified().identity) == "0");

  try {
    from_semigroup({"u", "v"}, {{1, 0}, {1, 0}});
    FAIL("expected an associativity violation");
  } catch (AxiomViolation const& e) {
    CHECK(e.axiom() == "associativity");
    CHECK(e.witness() == std::vector<std::string>{"u", "u", "u"});
  }
  CHECK_THROWS_AS(from_semigroup({"a", "b"}, {{0, 2}, {1, 0}}), InputError);
}

TEST_CASE("from_group yields hypergroups with the group inverse", "[constructors]") {
  auto z2 = from_group(FiniteGroup::cyclic(2));
  CHECK(z2.is_hypergroup());
  CHECK(z2.verified().involution->is_identity());

  auto z3 = from_group(FiniteGroup::cyclic(3));
  CHECK(z3.is_hypergroup());
  CHECK(z3.verified().involution->perm == std::vector<std::size_t>{0, 2, 1});

  auto s3g = FiniteGroup::symmetric(3);
  auto s3 = from_group(s3g);
  CHECK(s3.is_hypergroup());
  CHECK_FALSE(s3.is_commutative());
  CHECK(center(s3.table()).size() == s3.size());
  for (std::size_t x = 0; x < s3g.size(); ++x) CHECK((*s3.verified().involution)(x) == s3g.inverse(x));
}

TEST_CASE("symmetric group naming and composition", "[constructors]") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.elements()->points() == std::vector<std::string>{"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
  // (12)(13): 1 -> 3 -> 3, 3 -> 1 -> 2, 2 -> 2 -> 1, i.e. (132).
  CHECK(s3.name(s3.mul(s3.index("(12)"), s3.index("(13)"))) == "(132)");
  CHECK_FALSE(s3.is_subgroup(s3.subset({"e", "(12)", "(13)"})));
  CHECK_THROWS_AS(left_coset_space(s3, s3.subset({"(12)"})), InputError);
}

TEST_CASE("left coset spaces", "[constructors]") {
  auto s3 = FiniteGroup::symmetric(3);
  auto h = s3.subset({"e", "(12)"});
  auto cs = left_coset_space(s3, h);
  CHECK(cs.space()->points() == std::vector<std::string>{"eH", "(13)H", "(23)H"});
  CHECK(same_as(cs, oracle::s3_coset_table({{0, 1, 2}, oracle::transposition(1, 2)}, false)));
  auto id = find_identity(cs.table());
  CHECK(id.kind == IdentityReport::Kind::right_only);
  CHECK(names(cs.table(), id.right) == std::set<std::string>{"eH"});
  CHECK_FALSE(cs.is_hypergroup());

  // Z4/{0,2} is the group Z2 under renaming 0H -> 0, 1H -> 1.
  auto z4 = FiniteGroup::cyclic(4);
  auto q = left_coset_space(z4, z4.subset({"0", "2"}));
  auto z2 = from_group(FiniteGroup::cyclic(2));
  CHECK(q.space()->points() == std::vector<std::string>{"0H", "1H"});
  CHECK(q.table().structure() == z2.table().structure());

  auto trivial = left_coset_space(s3, s3.subset({"e"}));
  CHECK(trivial.table().structure() == from_group(s3).table().structure());
}

TEST_CASE("double coset spaces", "[constructors]") {
  auto s3 = FiniteGroup::symmetric(3);
  auto h = s3.subset({"e", "(12)"});
  auto dc = double_coset_space(s3, h);
  CHECK(dc.space()->points() == std::vector<std::string>{"HeH", "H(13)H"});
  CHECK(same_as(dc, oracle::s3_coset_table({{0, 1, 2}, oracle::transposition(1, 2)}, true)));
  CHECK(to_dist(dc.convolve_points("H(13)H", "H(13)H")) ==
        oracle::Dist{{"HeH", Rational(1, 2)}, {"H(13)H", Rational(1, 2)}});
  CHECK(dc.is_hypergroup());
  CHECK(dc.is_commutative());
  CHECK(dc.space()->name(*dc.verified().identity) == "HeH");

  std::vector<std::string> all = s3.elements()->points();
  auto whole = double_coset_space(s3, s3.subset(all));
  CHECK(whole.size() == 1);
  CHECK(whole.is_hypergroup());

  auto trivial = double_coset_space(s3, s3.subset({"e"}));
  CHECK(trivial.table().structure() == from_group(s3).table().structure());

  // (S4, S3) is a Gelfand pair; its double coset hypergroup is commutative.
  auto s4 = FiniteGroup::symmetric(4);
  auto s3_in_s4 = s4.subset({"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
  auto g = double_coset_space(s4, s3_in_s4);
  CHECK(g.size() == 2);
  CHECK(g.is_commutative());
}

TEST_CASE("orbit spaces", "[constructors]") {
  auto z3 = FiniteGroup::cyclic(3);
  auto neg3 = orbit_space(z3, GroupAction::inversion(z3));
  CHECK(neg3.space()->points() == std::vector<std::string>{"orb(0)", "orb(1)"});
  CHECK(same_as(neg3, orbit_oracle(3, {{0, 1, 2}, {0, 2, 1}})));
  CHECK(to_dist(neg3.convolve_points("orb(1)", "orb(1)")) ==
        oracle::Dist{{"orb(0)", Rational(1, 2)}, {"orb(1)", Rational(1, 2)}});
  CHECK(neg3.is_hypergroup());

  auto z4 = FiniteGroup::cyclic(4);
  auto neg4 = orbit_space(z4, GroupAction::inversion(z4));
  CHECK(neg4.size() == 3);
  CHECK(same_as(neg4, orbit_oracle(4, {{0, 1, 2, 3}, {0, 3, 2, 1}})));
  CHECK(neg4.is_commutative());
  CHECK(neg4.is_hypergroup());

  auto z1 = FiniteGroup::cyclic(1);
  GroupAction trivial(z1, 3, {{0, 1, 2}});
  CHECK(orbit_space(z3, trivial).table().structure() == from_group(z3).table().structure());

  // Conjugacy classes of S3 form a commutative hypergroup.
  auto s3 = FiniteGroup::symmetric(3);
  auto classes = orbit_space(s3, GroupAction::conjugation(s3));
  CHECK(classes.size() == 3);
  CHECK(classes.is_commutative());

  CHECK_THROWS_AS(GroupAction(FiniteGroup::cyclic(2), 3, {{0, 1, 2}, {0, 0, 2}}), InputError);
}

TEST_CASE("orbit spaces of non-automorphic actions are checked, not trusted", "[constructors]") {
  // Z2 acting on S3 by inversion is a bijective action but not by
  // automorphisms; whatever the outcome, it is either verified or a witness.
  auto s3 = FiniteGroup::symmetric(3);
  try {
    auto o = orbit_space(s3, GroupAction::inversion(s3));
    CHECK(check_associativity(o.table()).passed());
  } catch (AxiomViolation const& e) {
    CHECK(e.witness().size() >= 2);
  }
}

TEST_CASE("three-point family", "[constructors]") {
  Rational q(1, 4), h(1, 2);
  auto tp = three_point_family<Rational>({q, q, h}, {q, h, q}, {h, h});
  CHECK(tp.is_hypergroup());
  CHECK(tp.is_commutative());
  CHECK(tp.space()->name(*tp.verified().identity) == "e");
  CHECK(tp.verified().involution->is_identity());

  // x = y = (1,0,0) forces z = (0,1) through y1 x3 = z1 x1, and the resulting
  // table fails at (a, b, b): (a*b)*b = b*b = e while a*(b*b) = a.
  try {
    three_point_family<Rational>({1, 0, 0}, {1, 0, 0}, {0, 1});
    FAIL("expected an associativity violation");
  } catch (AxiomViolation const& e) {
    CHECK(e.witness() == std::vector<std::string>{"a", "b", "b"});
  }
  CHECK_THROWS_WITH(three_point_family<Rational>({h, h, h}, {1, 0, 0}, {0, 1}), "x1+x2+x3 != 1");
  CHECK_THROWS_WITH(three_point_family<Rational>({q, q, h}, {q, h, q}, {1, 0}), "y1*x3 != z1*x1");
  CHECK_THROWS_AS(three_point_family<Rational>({Rational(-1, 2), 1, h}, {1, 0, 0}, {0, 1}), InputError);
}

TEST_CASE("zeuner grids", "[constructors]") {
  auto z2 = zeuner_grid(2);
  CHECK(same_as(z2, oracle::zeuner(2)));
  CHECK(z2.is_hypergroup());
  CHECK(names(z2.table(), center(z2.table())) == std::set<std::string>{"0", "1"});

  auto z4 = zeuner_grid(4);
  CHECK(z4.size() == 5);
  CHECK(oracle::associative(oracle::zeuner(4)));
  CHECK(same_as(z4, oracle::zeuner(4)));
  CHECK(z4.is_commutative());

  CHECK_THROWS_AS(zeuner_grid(3), InputError);
  CHECK_THROWS_AS(zeuner_grid(0), InputError);
}
