#ifndef SHG_SEMIHYPERGROUP_HPP_
#define SHG_SEMIHYPERGROUP_HPP_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "shg/conv_table.hpp"

namespace shg {

// An involutive permutation x -> x^- of the points.
struct Involution {
  std::vector<std::size_t> perm;

  std::size_t operator()(std::size_t x) const { return perm.at(x); }
  bool is_identity() const {
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (perm[i] != i) return false;
    }
    return true;
  }
  bool operator==(Involution const& other) const = default;
};

// mu^-(B) := mu(B^-): the coefficient at x is mu(x^-).
template <typename Scalar>
BasicMeasure<Scalar> reflect(BasicMeasure<Scalar> const& mu, Involution const& inv) {
  Vector<Scalar> v(mu.coeffs().size());
  for (std::size_t x = 0; x < mu.size(); ++x) v(static_cast<Eigen::Index>(x)) = mu[inv(x)];
  return BasicMeasure<Scalar>(mu.space(), std::move(v));
}

struct IdentityReport {
  enum class Kind { two_sided, left_only, right_only, none };
  Kind kind = Kind::none;
  std::optional<std::size_t> two_sided;
  std::vector<std::size_t> left;   // e with p_e * p_x = p_x for every x
  std::vector<std::size_t> right;  // e with p_x * p_e = p_x for every x
};

template <typename Scalar>
IdentityReport find_identity(BasicConvTable<Scalar> const& t) {
  IdentityReport r;
  auto const n = t.size();
  for (std::size_t e = 0; e < n; ++e) {
    bool left = true, right = true;
    for (std::size_t x = 0; x < n && (left || right); ++x) {
      auto px = dirac<Scalar>(t.space(), x).coeffs();
      if (left && Vector<Scalar>(t.column(e, x)) != px) left = false;
      if (right && Vector<Scalar>(t.column(x, e)) != px) right = false;
    }
    if (left) r.left.push_back(e);
    if (right) r.right.push_back(e);
    if (left && right && !r.two_sided) r.two_sided = e;
  }
  if (r.two_sided) {
    r.kind = IdentityReport::Kind::two_sided;
  } else if (!r.left.empty()) {
    r.kind = IdentityReport::Kind::left_only;
  } else if (!r.right.empty()) {
    r.kind = IdentityReport::Kind::right_only;
  }
  return r;
}

template <typename Scalar>
bool is_commutative(BasicConvTable<Scalar> const& t) {
  for (std::size_t x = 0; x < t.size(); ++x) {
    for (std::size_t y = x + 1; y < t.size(); ++y) {
      if (t.column(x, y) != t.column(y, x)) return false;
    }
  }
  return true;
}

// Z(K) = { x : supp(p_x * p_y) and supp(p_y * p_x) are singletons for all y }.
template <typename Scalar>
std::vector<std::size_t> center(BasicConvTable<Scalar> const& t) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < t.size(); ++x) {
    bool central = true;
    for (std::size_t y = 0; y < t.size() && central; ++y) {
      central = t.entry(x, y).support_indices().size() == 1 &&
                t.entry(y, x).support_indices().size() == 1;
    }
    if (central) out.push_back(x);
  }
  return out;
}

// Whether Z(K) * Z(K) stays inside Z(K) with singleton supports, i.e. whether
// the support-singleton center is itself a semigroup under *. Reported as a
// diagnostic; the two descriptions of the center are not assumed to agree.
template <typename Scalar>
bool center_is_closed(BasicConvTable<Scalar> const& t) {
  auto z = center(t);
  std::set<std::size_t> zs(z.begin(), z.end());
  for (auto x : z) {
    for (auto y : z) {
      auto supp = t.entry(x, y).support_indices();
      if (supp.size() != 1 || !zs.count(supp.front())) return false;
    }
  }
  return true;
}

// A * B := union of supp(p_x * p_y) over x in A, y in B.
template <typename Scalar>
std::set<std::size_t> set_convolution(BasicConvTable<Scalar> const& t, std::set<std::size_t> const& a,
                                      std::set<std::size_t> const& b) {
  std::set<std::size_t> out;
  for (auto x : a) {
    for (auto y : b) {
      for (auto z : t.entry(x, y).support_indices()) out.insert(z);
    }
  }
  return out;
}

struct InvolutionSearch {
  std::vector<Involution> involutions;
  // More than one involution survived; a hypergroup's involution is unique,
  // so this flags a table that is not a hypergroup in the usual sense.
  bool ambiguous = false;
};

// All involutive permutations i with
//   e in supp(p_x * p_y)  <=>  x = i(y)
// and (p_x * p_y)^- = p_{i(y)} * p_{i(x)} on every Dirac pair.
// Throws InputError if e is not a two-sided identity.
template <typename Scalar>
InvolutionSearch find_involutions(BasicConvTable<Scalar> const& t, std::size_t e) {
  auto ident = find_identity(t);
  if (!ident.two_sided || *ident.two_sided != e) {
    throw InputError("point " + t.space()->name(e) + " is not a two-sided identity");
  }
  auto const n = t.size();
  // A6 pins down the candidates: y^- must be one of the x with e in supp(p_x * p_y).
  std::vector<std::vector<std::size_t>> candidates(n);
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (t.coefficient(e, x, y) != Scalar(0)) candidates[y].push_back(x);
    }
  }

  auto satisfies = [&](std::vector<std::size_t> const& perm) {
    Involution inv{perm};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        bool has_e = t.coefficient(e, x, y) != Scalar(0);
        if (has_e != (x == perm[y])) return false;
        if (reflect(t.entry(x, y), inv) != t.entry(perm[y], perm[x])) return false;
      }
    }
    return true;
  };

  InvolutionSearch out;
  std::vector<std::size_t> perm(n, n);
  // Backtracking over involutive permutations restricted to the candidates.
  std::function<void(std::size_t)> extend = [&](std::size_t y) {
    while (y < n && perm[y] != n) ++y;
    if (y == n) {
      if (satisfies(perm)) out.involutions.push_back(Involution{perm});
      return;
    }
    for (auto x : candidates[y]) {
      if (perm[x] != n && x != y) continue;
      if (x == y) {
        perm[y] = y;
        extend(y + 1);
        perm[y] = n;
      } else if (perm[x] == n) {
        // y^- = x forces x^- = y, which must also be a candidate.
        bool ok = false;
        for (auto c : candidates[x]) ok = ok || c == y;
        if (!ok) continue;
        perm[y] = x;
        perm[x] = y;
        extend(y + 1);
        perm[y] = n;
        perm[x] = n;
      }
    }
  };
  extend(0);
  out.ambiguous = out.involutions.size() > 1;
  return out;
}

// What verification established about a table.
struct Verification {
  bool associative = false;
  std::optional<std::size_t> identity;
  std::optional<Involution> involution;
  bool involution_ambiguous = false;
  bool commutative = false;
  bool is_hypergroup = false;
};

// A convolution table that passed the probability axiom and associativity.
// The only way to obtain one is verify(), which throws AxiomViolation with the
// first counterexample otherwise.
template <typename Scalar>
class BasicSemihypergroup {
 public:
  using scalar_type = Scalar;

  static BasicSemihypergroup verify(BasicConvTable<Scalar> table, std::string name = {}) {
    auto const& space = *table.space();
    if (auto prob = check_probability_axiom(table); !prob) {
      auto [x, y] = *prob.cell;
      auto entry = table.entry(x, y);
      std::string detail = prob.defect == ProbabilityCheck::Defect::negative
                               ? "negative coefficient in " + to_literal(entry)
                               : "mass " + mass_string(entry.total_mass()) + " != 1 in " + to_literal(entry);
      throw AxiomViolation("probability", {space.name(x), space.name(y)}, detail);
    }
    if (auto assoc = check_associativity(table); !assoc) {
      auto const& w = *assoc.witness;
      throw AxiomViolation("associativity", {space.name(w.x), space.name(w.y), space.name(w.z)},
                           "(xy)z = " + to_literal(w.lhs) + " but x(yz) = " + to_literal(w.rhs));
    }
    Verification v;
    v.associative = true;
    v.commutative = shg::is_commutative(table);
    auto ident = find_identity(table);
    v.identity = ident.two_sided;
    if (v.identity) {
      auto search = find_involutions(table, *v.identity);
      v.involution_ambiguous = search.ambiguous;
      if (!search.involutions.empty()) v.involution = search.involutions.front();
      v.is_hypergroup = v.involution.has_value();
    }
    return BasicSemihypergroup(std::move(table), v, std::move(name));
  }

  BasicConvTable<Scalar> const& table() const noexcept { return table_; }
  SpacePtr const& space() const noexcept { return table_.space(); }
  std::size_t size() const noexcept { return table_.size(); }
  Verification const& verified() const noexcept { return verified_; }
  std::string const& name() const noexcept { return name_; }
  bool is_commutative() const noexcept { return verified_.commutative; }
  bool is_hypergroup() const noexcept { return verified_.is_hypergroup; }

  BasicMeasure<Scalar> convolve_points(std::string_view x, std::string_view y) const {
    return table_.entry(x, y);
  }
  BasicMeasure<Scalar> convolve_points(std::size_t x, std::size_t y) const { return table_.entry(x, y); }
  BasicMeasure<Scalar> convolve(BasicMeasure<Scalar> const& mu, BasicMeasure<Scalar> const& nu) const {
    return table_.convolve(mu, nu);
  }

 private:
  BasicSemihypergroup(BasicConvTable<Scalar> table, Verification v, std::string name)
      : table_(std::move(table)), verified_(v), name_(std::move(name)) {}

  static std::string mass_string(Scalar const& s) {
    std::ostringstream out;
    out << s;
    return out.str();
  }

  BasicConvTable<Scalar> table_;
  Verification verified_;
  std::string name_;
};

using Semihypergroup = BasicSemihypergroup<Rational>;

template <typename Scalar>
std::set<std::string> names(BasicConvTable<Scalar> const& t, std::vector<std::size_t> const& idx) {
  std::set<std::string> out;
  for (auto i : idx) out.insert(t.space()->name(i));
  return out;
}

}  // namespace shg

#endif  // SHG_SEMIHYPERGROUP_HPP_
