#include "shg/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

namespace shg {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Line {
  std::size_t number;
  std::string_view key, value;
};

// Non-empty "key = value" lines with comments stripped.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    ++number;
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (!line.empty()) {
      auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError(number, "expected 'key = value'");
      out.push_back({number, trim(line.substr(0, eq)), trim(line.substr(eq + 1))});
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return out;
}

// Rethrows any InputError from f with the line attached.
template <typename F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (ParseError const&) {
    throw;
  } catch (InputError const& e) {
    throw ParseError(line, e.what());
  }
}

std::vector<std::string_view> split_list(std::string_view body) {
  std::vector<std::string_view> out;
  if (trim(body).empty()) return out;
  while (true) {
    auto comma = body.find(',');
    out.push_back(trim(body.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  return out;
}

std::vector<std::string> parse_points(std::string_view value) {
  if (value.size() < 2 || value.front() != '[' || value.back() != ']') {
    throw InputError("points must be written [p1, p2, ...]");
  }
  std::vector<std::string> out;
  for (auto p : split_list(value.substr(1, value.size() - 2))) {
    if (p.empty()) throw InputError("empty point name in points list");
    out.emplace_back(p);
  }
  if (out.empty()) throw InputError("points list is empty");
  return out;
}

std::string pair_name(FiniteSpace const& sp, std::size_t x, std::size_t y) {
  return "(" + sp.name(x) + ", " + sp.name(y) + ")";
}

}  // namespace

StructureDocument parse_structure_document(std::string_view text) {
  std::string name;
  std::optional<std::size_t> format_line, name_line;
  SpacePtr space;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<std::size_t, VectorQ>> entries;  // -> (line, coeffs)

  auto lines = split_lines(text);
  for (auto const& [number, key, value] : lines) {
    if (key == "format") {
      if (format_line) throw ParseError(number, "duplicate format line");
      format_line = number;
      if (value != "1") throw ParseError(number, "unsupported format version '" + std::string(value) + "'");
    } else if (key == "name") {
      if (name_line) throw ParseError(number, "duplicate name line");
      name_line = number;
      name = std::string(value);
    } else if (key == "points") {
      if (space) throw ParseError(number, "duplicate points line");
      space = at_line(number, [&] { return FiniteSpace::make(parse_points(value)); });
    } else if (auto star = key.find('*'); star != std::string_view::npos) {
      if (!space) throw ParseError(number, "table entry before the points line");
      auto x = at_line(number, [&] { return space->index(trim(key.substr(0, star))); });
      auto y = at_line(number, [&] { return space->index(trim(key.substr(star + 1))); });
      if (auto it = entries.find({x, y}); it != entries.end()) {
        throw ParseError(number, "duplicate entry for pair " + pair_name(*space, x, y) + " (first on line " +
                                     std::to_string(it->second.first) + ")");
      }
      auto mu = at_line(number, [&] { return parse_measure(space, value); });
      if (!mu.is_nonnegative()) {
        throw ParseError(number, "negative coefficient at " + pair_name(*space, x, y));
      }
      if (mu.total_mass() != 1) {
        throw ParseError(number, "mass " + to_string(mu.total_mass()) + " ≠ 1 at " + pair_name(*space, x, y));
      }
      entries.emplace(std::make_pair(x, y), std::make_pair(number, mu.coeffs()));
    } else {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
  }
  std::size_t end = lines.empty() ? 1 : lines.back().number + 1;
  if (!space) throw ParseError(end, "missing points line");
  auto n = space->size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!entries.count({x, y})) {
        throw ParseError(end, "missing entry for pair " + pair_name(*space, x, y) + ": expected '" + space->name(x) +
                                  " * " + space->name(y) + " = ...'");
      }
    }
  }
  auto table = ConvTable::from_entries(space, [&](std::size_t x, std::size_t y) { return entries.at({x, y}).second; });
  return {1, std::move(name), std::move(table)};
}

std::string emit_structure(ConvTable const& table, std::string const& name) {
  auto const& sp = *table.space();
  std::ostringstream out;
  out << "format = 1\n";
  if (!name.empty()) out << "name = " << name << '\n';
  out << "points = [";
  for (std::size_t i = 0; i < sp.size(); ++i) out << (i ? ", " : "") << sp.name(i);
  out << "]\n";
  for (std::size_t x = 0; x < sp.size(); ++x) {
    for (std::size_t y = 0; y < sp.size(); ++y) {
      out << sp.name(x) << " * " << sp.name(y) << " = " << to_literal(table.entry(x, y)) << '\n';
    }
  }
  return out.str();
}

MatrixQ parse_matrix_literal(std::string_view text) {
  auto body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']') {
    throw InputError("matrix must be written [[column], [column], ...]");
  }
  body = trim(body.substr(1, body.size() - 2));
  std::vector<std::vector<Rational>> columns;
  while (!body.empty()) {
    if (body.front() != '[') throw InputError("expected '[' to open a column");
    auto close = body.find(']');
    if (close == std::string_view::npos) throw InputError("unterminated column");
    auto inner = body.substr(1, close - 1);
    if (inner.find('[') != std::string_view::npos) throw InputError("columns cannot be nested");
    std::vector<Rational> col;
    for (auto tok : split_list(inner)) col.push_back(parse_rational(tok));
    if (col.empty()) throw InputError("empty column");
    if (!columns.empty() && col.size() != columns.front().size()) throw InputError("columns have different lengths");
    columns.push_back(std::move(col));
    body = trim(body.substr(close + 1));
    if (body.empty()) break;
    if (body.front() != ',') throw InputError("expected ',' between columns");
    body = trim(body.substr(1));
    if (body.empty()) throw InputError("trailing ',' after the last column");
  }
  if (columns.empty()) throw InputError("matrix has no columns");
  MatrixQ a(static_cast<Eigen::Index>(columns.front().size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < columns[j].size(); ++i) {
      a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = columns[j][i];
    }
  }
  return a;
}

ActionDocument parse_action(SpacePtr const& space, std::string_view text) {
  ActionDocument doc;
  std::optional<std::size_t> dim_line, domain_line;
  std::map<std::size_t, std::pair<std::size_t, MatrixQ>> mats;

  auto lines = split_lines(text);
  for (auto const& [number, key, value] : lines) {
    if (key == "dim") {
      if (dim_line) throw ParseError(number, "duplicate dim line");
      dim_line = number;
      auto d = at_line(number, [&] { return parse_rational(value); });
      if (denominator(d) != 1 || d < 1) throw ParseError(number, "dim must be a positive integer");
      doc.dim = static_cast<Eigen::Index>(numerator(d).convert_to<long>());
    } else if (key == "domain") {
      if (domain_line) throw ParseError(number, "duplicate domain line");
      domain_line = number;
      if (value == "simplex") {
        doc.domain = ActionDomain::simplex;
      } else if (value == "affine-functions") {
        doc.domain = ActionDomain::affine_functions;
      } else {
        throw ParseError(number, "unknown domain '" + std::string(value) + "'");
      }
    } else if (key.substr(0, 6) == "matrix" && key.size() > 6 && std::isspace(static_cast<unsigned char>(key[6]))) {
      auto x = at_line(number, [&] { return space->index(trim(key.substr(6))); });
      if (auto it = mats.find(x); it != mats.end()) {
        throw ParseError(number, "duplicate matrix for " + space->name(x) + " (first on line " +
                                     std::to_string(it->second.first) + ")");
      }
      auto a = at_line(number, [&] { return parse_matrix_literal(value); });
      if (!dim_line) throw ParseError(number, "matrix before the dim line");
      if (a.rows() != doc.dim || a.cols() != doc.dim) {
        throw ParseError(number, "matrix " + space->name(x) + " is " + std::to_string(a.rows()) + "x" +
                                     std::to_string(a.cols()) + " but dim = " + std::to_string(doc.dim));
      }
      mats.emplace(x, std::make_pair(number, std::move(a)));
    } else {
      throw ParseError(number, "unknown key '" + std::string(key) + "'");
    }
  }
  std::size_t end = lines.empty() ? 1 : lines.back().number + 1;
  if (!dim_line) throw ParseError(end, "missing dim line");
  for (std::size_t x = 0; x < space->size(); ++x) {
    auto it = mats.find(x);
    if (it == mats.end()) throw ParseError(end, "missing matrix for point " + space->name(x));
    doc.matrices.push_back(it->second.second);
  }
  return doc;
}

std::string emit_action(SpacePtr const& space, std::vector<MatrixQ> const& matrices, ActionDomain domain) {
  if (matrices.size() != space->size()) throw InputError("need one matrix per point");
  std::ostringstream out;
  out << "dim = " << (matrices.empty() ? 0 : matrices.front().rows()) << '\n';
  out << "domain = " << to_string(domain) << '\n';
  for (std::size_t x = 0; x < matrices.size(); ++x) {
    out << "matrix " << space->name(x) << " = " << matrix_literal(matrices[x]) << '\n';
  }
  return out.str();
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(std::string const& path, std::string const& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw InputError("cannot write '" + path + "'");
}

}  // namespace shg
