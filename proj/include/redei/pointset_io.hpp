#pragma once

// Point-set text format:
//
//   # comment
//   p h
//   a b
//   a b
//   ...
//
// Coordinates are integer codecs of GF(p^h). Blank lines and anything after
// '#' are ignored.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "redei/field.hpp"
#include "redei/geometry.hpp"

namespace redei {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline AffinePointSet read_point_set(std::istream& in, const std::string& origin = "<input>") {
  std::string line;
  std::optional<Field> field;
  std::vector<Point> pts;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long x, y;
    if (!(ls >> x)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos)
        throw FormatError(origin + ":" + std::to_string(lineno) + ": expected two integers");
      continue;
    }
    std::string rest;
    if (!(ls >> y) || (ls >> rest) || x < 0 || y < 0)
      throw FormatError(origin + ":" + std::to_string(lineno) + ": expected two non-negative integers");
    if (!field) {
      try {
        field = make_field(static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y));
      } catch (const std::invalid_argument& e) {
        throw FormatError(origin + ":" + std::to_string(lineno) + ": bad field header: " + e.what());
      }
      continue;
    }
    if (static_cast<unsigned long long>(x) >= field->q() || static_cast<unsigned long long>(y) >= field->q())
      throw FormatError(origin + ":" + std::to_string(lineno) + ": coordinate outside GF(" + field->name() + ")");
    pts.push_back({Elem{static_cast<std::uint32_t>(x)}, Elem{static_cast<std::uint32_t>(y)}});
  }
  if (!field) throw FormatError(origin + ": missing 'p h' header");
  return AffinePointSet(*field, std::move(pts));
}

inline AffinePointSet load_point_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_point_set(in, path);
}

inline void write_point_set(std::ostream& out, const AffinePointSet& u, const std::string& comment = {}) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << u.field().p() << ' ' << u.field().h() << '\n';
  for (const auto& pt : u.points()) out << pt.a.v << ' ' << pt.b.v << '\n';
}

inline void save_point_set(const std::string& path, const AffinePointSet& u, const std::string& comment = {}) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  write_point_set(out, u, comment);
  if (!out) throw FormatError("write failed: " + path);
}

/// Inverse of DirectionSet::to_string.
inline DirectionSet parse_direction_set(const Field& f, const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  std::vector<Direction> dirs;
  while (in >> tok) {
    if (tok == "inf") {
      dirs.push_back(Direction::infinity());
      continue;
    }
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || v >= f.q()) throw FormatError("bad direction '" + tok + "'");
    dirs.push_back(Direction::slope(Elem{static_cast<std::uint32_t>(v)}));
  }
  return DirectionSet(f, std::move(dirs));
}

}  // namespace redei
