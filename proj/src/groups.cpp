#include "shg/groups.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "shg/errors.hpp"

namespace shg {

namespace {

void require_square(CayleyTable const& table, std::size_t n) {
  if (table.size() != n) throw InputError("multiplication table has wrong number of rows");
  for (auto const& row : table) {
    if (row.size() != n) throw InputError("multiplication table row has wrong length");
    for (auto v : row) {
      if (v >= n) throw InputError("multiplication table entry out of range");
    }
  }
}

std::string cycle_name(std::vector<std::size_t> const& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = perm[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "e" : out;
}

}  // namespace

CayleyAssociativity check_cayley_associativity(CayleyTable const& table) {
  auto n = table.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (table[table[x][y]][z] != table[x][table[y][z]]) return {false, x, y, z};
      }
    }
  }
  return {};
}

FiniteGroup::FiniteGroup(std::vector<std::string> names, CayleyTable table)
    : elements_(FiniteSpace::make(std::move(names))), table_(std::move(table)) {
  auto n = elements_->size();
  if (n == 0) throw InputError("a group needs at least one element");
  require_square(table_, n);
  if (auto a = check_cayley_associativity(table_); !a.passed) {
    throw InputError("group table is not associative at (" + name(a.x) + ", " + name(a.y) + ", " +
                     name(a.z) + ")");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) throw InputError("group table has no identity");
  inverse_.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) inverse_[x] = y;
    }
    if (inverse_[x] == n) throw InputError("element " + name(x) + " has no inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  std::vector<std::string> names;
  CayleyTable table(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) table[i][j] = (i + j) % n;
  }
  return FiniteGroup(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n == 0 || n > 5) throw InputError("symmetric group degree must be in 1..5");
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto moved = [](std::vector<std::size_t> const& q) {
    std::size_t k = 0;
    for (std::size_t i = 0; i < q.size(); ++i) k += q[i] != i;
    return k;
  };
  std::stable_sort(perms.begin(), perms.end(), [&](auto const& a, auto const& b) {
    auto ma = moved(a), mb = moved(b);
    if (ma != mb) return ma < mb;
    return cycle_name(a) < cycle_name(b);
  });

  std::vector<std::string> names;
  for (auto const& q : perms) names.push_back(cycle_name(q));
  auto m = perms.size();
  CayleyTable table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<std::size_t> c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return FiniteGroup(std::move(names), std::move(table));
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (std::size_t y = 0; y < size(); ++y) {
      if (table_[x][y] != table_[y][x]) return false;
    }
  }
  return true;
}

bool FiniteGroup::is_subgroup(std::vector<std::size_t> const& subset) const {
  if (subset.empty()) return false;
  std::set<std::size_t> s(subset.begin(), subset.end());
  if (s.size() != subset.size()) return false;
  for (auto x : s) {
    if (x >= size()) return false;
  }
  if (!s.count(identity_)) return false;
  for (auto x : s) {
    if (!s.count(inverse_[x])) return false;
    for (auto y : s) {
      if (!s.count(table_[x][y])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> FiniteGroup::subset(std::vector<std::string> const& names) const {
  std::vector<std::size_t> out;
  for (auto const& nm : names) out.push_back(elements_->index(nm));
  return out;
}

GroupAction::GroupAction(FiniteGroup acting, std::size_t target_size, CayleyTable map)
    : acting_(std::move(acting)), target_size_(target_size), map_(std::move(map)) {
  if (map_.size() != acting_.size()) throw InputError("action table needs one row per group element");
  for (auto const& row : map_) {
    if (row.size() != target_size_) throw InputError("action row has wrong length");
    std::vector<bool> hit(target_size_, false);
    for (auto v : row) {
      if (v >= target_size_) throw InputError("action entry out of range");
      hit[v] = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw InputError("action map is not a bijection");
    }
  }
  for (std::size_t x = 0; x < target_size_; ++x) {
    if (map_[acting_.identity()][x] != x) throw InputError("identity does not act trivially");
    for (std::size_t h1 = 0; h1 < acting_.size(); ++h1) {
      for (std::size_t h2 = 0; h2 < acting_.size(); ++h2) {
        if (map_[h1][map_[h2][x]] != map_[acting_.mul(h1, h2)][x]) {
          throw InputError("action law fails for (" + acting_.name(h1) + ", " + acting_.name(h2) + ")");
        }
      }
    }
  }
}

GroupAction GroupAction::inversion(FiniteGroup const& target) {
  auto z2 = FiniteGroup::cyclic(2);
  CayleyTable map(2, std::vector<std::size_t>(target.size()));
  for (std::size_t x = 0; x < target.size(); ++x) {
    map[0][x] = x;
    map[1][x] = target.inverse(x);
  }
  return GroupAction(std::move(z2), target.size(), std::move(map));
}

GroupAction GroupAction::conjugation(FiniteGroup const& g) {
  CayleyTable map(g.size(), std::vector<std::size_t>(g.size()));
  for (std::size_t h = 0; h < g.size(); ++h) {
    for (std::size_t x = 0; x < g.size(); ++x) map[h][x] = g.mul(g.mul(h, x), g.inverse(h));
  }
  return GroupAction(g, g.size(), std::move(map));
}

GroupAction GroupAction::unit_multiplication(std::size_t n, std::size_t unit) {
  if (n == 0 || std::gcd(unit % n, n) != 1) throw InputError("multiplier must be a unit mod n");
  std::size_t order = 1;
  for (std::size_t u = unit % n; u != 1 % n; u = (u * unit) % n) ++order;
  auto h = FiniteGroup::cyclic(order);
  CayleyTable map(order, std::vector<std::size_t>(n));
  std::size_t power = 1 % n;
  for (std::size_t j = 0; j < order; ++j) {
    for (std::size_t x = 0; x < n; ++x) map[j][x] = (power * x) % n;
    power = (power * unit) % n;
  }
  return GroupAction(std::move(h), n, std::move(map));
}

}  // namespace shg
