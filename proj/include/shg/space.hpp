#ifndef SHG_SPACE_HPP_
#define SHG_SPACE_HPP_

#include <cstddef>
#include <initializer_list>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace shg {

// An ordered, finite set of named points. The declaration order fixes the
// coordinate order of every vector and matrix built over the space.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> points);

  static std::shared_ptr<FiniteSpace const> make(std::vector<std::string> points);
  static std::shared_ptr<FiniteSpace const> make(std::initializer_list<std::string> points);

  std::size_t size() const noexcept { return points_.size(); }
  std::vector<std::string> const& points() const noexcept { return points_; }
  std::string const& name(std::size_t i) const { return points_.at(i); }

  // Throws InputError("unknown point <id>").
  std::size_t index(std::string_view id) const;
  bool contains(std::string_view id) const;

  bool operator==(FiniteSpace const& other) const noexcept { return points_ == other.points_; }

 private:
  std::vector<std::string> points_;
  std::unordered_map<std::string, std::size_t> index_;
};

using SpacePtr = std::shared_ptr<FiniteSpace const>;

// Same pointer or same ordered point list.
inline bool same_space(SpacePtr const& a, SpacePtr const& b) {
  return a == b || (a && b && *a == *b);
}

// Point names must be usable in the text formats: nonempty, no whitespace at
// the ends, and none of  * + - , = [ ] #
bool is_valid_point_name(std::string_view id);

}  // namespace shg

#endif  // SHG_SPACE_HPP_
