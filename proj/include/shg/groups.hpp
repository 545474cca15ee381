#ifndef SHG_GROUPS_HPP_
#define SHG_GROUPS_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shg/space.hpp"

namespace shg {

using CayleyTable = std::vector<std::vector<std::size_t>>;

// A finite group given by its multiplication table. The constructor verifies
// closure, associativity, a two-sided identity and inverses by brute force.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, CayleyTable table);

  static FiniteGroup cyclic(std::size_t n);
  // Permutations of {1..n} in cycle notation, "e" for the identity, ordered by
  // number of moved points and then by name. Product is composition,
  // (s t)(i) = s(t(i)).
  static FiniteGroup symmetric(std::size_t n);

  std::size_t size() const noexcept { return table_.size(); }
  SpacePtr const& elements() const noexcept { return elements_; }
  std::string const& name(std::size_t g) const { return elements_->name(g); }
  std::size_t index(std::string_view name) const { return elements_->index(name); }
  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const noexcept { return identity_; }
  CayleyTable const& table() const noexcept { return table_; }
  bool is_abelian() const;

  bool is_subgroup(std::vector<std::size_t> const& subset) const;
  // Element indices from names; throws InputError on unknown names.
  std::vector<std::size_t> subset(std::vector<std::string> const& names) const;

 private:
  SpacePtr elements_;
  CayleyTable table_;
  std::vector<std::size_t> inverse_;
  std::size_t identity_ = 0;
};

// An action of the finite group `acting` on a finite set of `target_size`
// points, map[h][x] = pi(h, x). Verified on construction: pi(e, x) = x,
// pi(h1, pi(h2, x)) = pi(h1 h2, x), and every pi(h, .) is a bijection.
class GroupAction {
 public:
  GroupAction(FiniteGroup acting, std::size_t target_size, CayleyTable map);

  // Z2 acting on G by x -> x^{-1}. An automorphism action only when G is
  // abelian.
  static GroupAction inversion(FiniteGroup const& target);
  // G acting on itself by conjugation.
  static GroupAction conjugation(FiniteGroup const& g);
  // The cyclic subgroup generated by multiplication by a unit u acting on Z_n.
  static GroupAction unit_multiplication(std::size_t n, std::size_t unit);

  FiniteGroup const& acting() const noexcept { return acting_; }
  std::size_t target_size() const noexcept { return target_size_; }
  std::size_t operator()(std::size_t h, std::size_t x) const { return map_[h][x]; }

 private:
  FiniteGroup acting_;
  std::size_t target_size_;
  CayleyTable map_;
};

// First failing triple of a binary operation table, if any.
struct CayleyAssociativity {
  bool passed = true;
  std::size_t x = 0, y = 0, z = 0;
};
CayleyAssociativity check_cayley_associativity(CayleyTable const& table);

}  // namespace shg

#endif  // SHG_GROUPS_HPP_
