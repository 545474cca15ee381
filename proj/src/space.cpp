#include "shg/space.hpp"

#include <cctype>

#include "shg/errors.hpp"

namespace shg {

FiniteSpace::FiniteSpace(std::vector<std::string> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (!is_valid_point_name(points_[i])) throw InputError("invalid point name '" + points_[i] + "'");
    if (!index_.emplace(points_[i], i).second) throw InputError("duplicate point " + points_[i]);
  }
}

std::shared_ptr<FiniteSpace const> FiniteSpace::make(std::vector<std::string> points) {
  return std::make_shared<FiniteSpace const>(std::move(points));
}

std::shared_ptr<FiniteSpace const> FiniteSpace::make(std::initializer_list<std::string> points) {
  return make(std::vector<std::string>(points));
}

std::size_t FiniteSpace::index(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw InputError("unknown point " + std::string(id));
  return it->second;
}

bool FiniteSpace::contains(std::string_view id) const { return index_.count(std::string(id)) != 0; }

bool is_valid_point_name(std::string_view id) {
  if (id.empty()) return false;
  if (std::isspace(static_cast<unsigned char>(id.front())) || std::isspace(static_cast<unsigned char>(id.back()))) {
    return false;
  }
  for (char c : id) {
    switch (c) {
      case '*':
      case '+':
      case '-':
      case ',':
      case '=':
      case '[':
      case ']':
      case '#':
      case '\n':
        return false;
      default:
        break;
    }
  }
  return true;
}

}  // namespace shg
