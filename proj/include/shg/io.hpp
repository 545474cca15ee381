// Text formats for structures and actions. Exact rationals only.
//
//   format = 1
//   name = Z2
//   points = [0, 1]
//   0 * 0 = 0
//   0 * 1 = 1
//   ...
//
//   dim = 2
//   domain = simplex
//   matrix 0 = [[1, 0], [0, 1]]
//   matrix 1 = [[0, 1], [1, 0]]
//
// Matrices are column-major: each inner list is one column. Blank lines and
// '#' comments are ignored.
#ifndef SHG_IO_HPP_
#define SHG_IO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "shg/actions.hpp"
#include "shg/conv_table.hpp"

namespace shg {

// An InputError that knows which line it came from (0 = whole document).
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, std::string const& message)
      : InputError(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct StructureDocument {
  int format_version = 1;
  std::string name;
  ConvTable table;
};

StructureDocument parse_structure_document(std::string_view text);
inline ConvTable parse_structure(std::string_view text) { return parse_structure_document(text).table; }
std::string emit_structure(ConvTable const& table, std::string const& name = {});

struct ActionDocument {
  Eigen::Index dim = 0;
  ActionDomain domain = ActionDomain::simplex;
  std::vector<MatrixQ> matrices;  // in the order of the structure's points
};

ActionDocument parse_action(SpacePtr const& space, std::string_view text);
std::string emit_action(SpacePtr const& space, std::vector<MatrixQ> const& matrices,
                        ActionDomain domain = ActionDomain::simplex);
inline std::string emit_action(AffineAction const& a) {
  return emit_action(a.semihypergroup().space(), a.matrices(), a.domain());
}

// "[[1/2, 1/2], [0, 1]]" -> 2x2 matrix with those columns.
MatrixQ parse_matrix_literal(std::string_view text);

std::string read_file(std::string const& path);
void write_file(std::string const& path, std::string const& text);

}  // namespace shg

#endif  // SHG_IO_HPP_
