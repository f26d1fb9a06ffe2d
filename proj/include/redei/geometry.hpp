#pragma once

// Points of AG(2,q), directions on the ideal line, the direction set of a
// point set, the geometric invariant s, and affine collineations.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redei/field.hpp"

namespace redei {

struct Point {
  Elem a;
  Elem b;
  friend constexpr auto operator<=>(const Point&, const Point&) = default;
};

/// A point of the ideal line: an affine slope or the vertical direction.
class Direction {
 public:
  constexpr Direction() = default;
  static constexpr Direction slope(Elem m) { return Direction(m.v); }
  static constexpr Direction infinity() { return Direction(kInfinity); }

  constexpr bool is_infinity() const { return code_ == kInfinity; }
  Elem slope() const {
    if (is_infinity()) throw std::logic_error("the vertical direction has no slope");
    return Elem{code_};
  }
  /// Slope codec, or q for the vertical direction.
  std::uint32_t index(std::uint32_t q) const { return is_infinity() ? q : code_; }
  static Direction from_index(std::uint32_t idx, std::uint32_t q) { return idx == q ? infinity() : slope(Elem{idx}); }

  std::string to_string() const { return is_infinity() ? "inf" : std::to_string(code_); }

  friend constexpr auto operator<=>(const Direction&, const Direction&) = default;

 private:
  static constexpr std::uint32_t kInfinity = std::numeric_limits<std::uint32_t>::max();
  constexpr explicit Direction(std::uint32_t code) : code_(code) {}
  std::uint32_t code_ = 0;
};

/// Deduplicated, sorted set of points of AG(2,q).
class AffinePointSet {
 public:
  AffinePointSet() = default;
  explicit AffinePointSet(Field f) : f_(std::move(f)) {}
  AffinePointSet(Field f, std::vector<Point> pts) : f_(std::move(f)), pts_(std::move(pts)) {
    for (const auto& pt : pts_)
      if (pt.a.v >= f_.q() || pt.b.v >= f_.q()) throw std::out_of_range("point coordinate outside field");
    std::sort(pts_.begin(), pts_.end());
    pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
  }

  /// Builds from point codecs a*q + b.
  static AffinePointSet from_codes(const Field& f, const std::vector<std::uint32_t>& codes) {
    std::vector<Point> pts;
    pts.reserve(codes.size());
    for (auto c : codes) {
      if (c >= f.q() * f.q()) throw std::out_of_range("point codec outside plane");
      pts.push_back({Elem{c / f.q()}, Elem{c % f.q()}});
    }
    return AffinePointSet(f, std::move(pts));
  }

  const Field& field() const { return f_; }
  const std::vector<Point>& points() const { return pts_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  bool contains(const Point& pt) const { return std::binary_search(pts_.begin(), pts_.end(), pt); }

  std::uint32_t code(const Point& pt) const { return pt.a.v * f_.q() + pt.b.v; }
  std::vector<std::uint32_t> codes() const {
    std::vector<std::uint32_t> out;
    out.reserve(pts_.size());
    for (const auto& pt : pts_) out.push_back(code(pt));
    return out;
  }

  AffinePointSet with(const Point& pt) const {
    auto pts = pts_;
    pts.push_back(pt);
    return AffinePointSet(f_, std::move(pts));
  }
  AffinePointSet without(const Point& pt) const {
    auto pts = pts_;
    pts.erase(std::remove(pts.begin(), pts.end(), pt), pts.end());
    return AffinePointSet(f_, std::move(pts));
  }

  friend bool operator==(const AffinePointSet& x, const AffinePointSet& y) { return x.f_ == y.f_ && x.pts_ == y.pts_; }

 private:
  Field f_;
  std::vector<Point> pts_;
};

/// Determined directions, sorted with the vertical direction last.
class DirectionSet {
 public:
  DirectionSet() = default;
  DirectionSet(Field f, std::vector<Direction> dirs) : f_(std::move(f)), dirs_(std::move(dirs)) {
    std::sort(dirs_.begin(), dirs_.end());
    dirs_.erase(std::unique(dirs_.begin(), dirs_.end()), dirs_.end());
  }

  const Field& field() const { return f_; }
  const std::vector<Direction>& directions() const { return dirs_; }
  std::size_t size() const { return dirs_.size(); }
  bool empty() const { return dirs_.empty(); }
  bool contains(Direction d) const { return std::binary_search(dirs_.begin(), dirs_.end(), d); }
  bool contains_infinity() const { return !dirs_.empty() && dirs_.back().is_infinity(); }
  bool is_full() const { return dirs_.size() == std::size_t{f_.q()} + 1; }

  /// Sorted codec list with "inf" for the vertical direction, space separated.
  std::string to_string() const {
    std::string out;
    for (const auto& d : dirs_) {
      if (!out.empty()) out += ' ';
      out += d.to_string();
    }
    return out;
  }

  friend bool operator==(const DirectionSet& x, const DirectionSet& y) { return x.f_ == y.f_ && x.dirs_ == y.dirs_; }

 private:
  Field f_;
  std::vector<Direction> dirs_;
};

inline Direction direction_of(const Field& f, const Point& p1, const Point& p2) {
  if (p1 == p2) throw std::invalid_argument("direction of a point with itself");
  if (p1.a == p2.a) return Direction::infinity();
  return Direction::slope(f.div(f.sub(p1.b, p2.b), f.sub(p1.a, p2.a)));
}

/// Membership table indexed by Direction::index(q).
inline std::vector<char> direction_mask(const AffinePointSet& u) {
  const Field& f = u.field();
  std::vector<char> seen(std::size_t{f.q()} + 1, 0);
  const auto& pts = u.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) seen[direction_of(f, pts[i], pts[j]).index(f.q())] = 1;
  return seen;
}

inline DirectionSet directions_of(const AffinePointSet& u) {
  const Field& f = u.field();
  const auto seen = direction_mask(u);
  std::vector<Direction> dirs;
  for (std::uint32_t i = 0; i <= f.q(); ++i)
    if (seen[i]) dirs.push_back(Direction::from_index(i, f.q()));
  return DirectionSet(f, std::move(dirs));
}

/// Index of the line of direction y through pt among the q parallel lines:
/// the intercept b - y*a for affine y, the abscissa a for the vertical direction.
inline std::uint32_t line_index(const Field& f, const Point& pt, Direction y) {
  if (y.is_infinity()) return pt.a.v;
  return f.sub(pt.b, f.mul(y.slope(), pt.a)).v;
}

/// Intersection counts of U with the q lines of direction y, by line index.
inline std::vector<std::uint32_t> line_profile(const AffinePointSet& u, Direction y) {
  const Field& f = u.field();
  std::vector<std::uint32_t> counts(f.q(), 0);
  for (const auto& pt : u.points()) ++counts[line_index(f, pt, y)];
  return counts;
}

/// Largest power of p dividing n, capped at q; q itself for n = 0.
inline std::uint32_t p_power_part(std::uint64_t n, const Field& f) {
  if (n == 0) return f.q();
  std::uint32_t s = 1;
  while (s < f.q() && n % (std::uint64_t{s} * f.p()) == 0) s *= f.p();
  return s;
}

/// s(y): greatest power of p dividing every intersection count of the lines of direction y.
inline std::uint32_t s_of_direction(const AffinePointSet& u, Direction y) {
  if (u.empty()) throw std::invalid_argument("s(y) of an empty point set");
  std::uint32_t s = u.field().q();
  for (auto c : line_profile(u, y))
    if (c != 0) s = std::min(s, p_power_part(c, u.field()));
  return s;
}

struct GeometricInvariants {
  std::vector<std::uint32_t> per_direction;  // s(y) by Direction::index(q); 1 when undetermined
  DirectionSet determined;
  std::optional<std::uint32_t> s;  // undefined when no direction is determined
};

inline GeometricInvariants geometric_invariants(const AffinePointSet& u) {
  const Field& f = u.field();
  GeometricInvariants gi;
  gi.determined = directions_of(u);
  gi.per_direction.assign(std::size_t{f.q()} + 1, 1);
  for (const auto& y : gi.determined.directions()) {
    const auto sy = s_of_direction(u, y);
    gi.per_direction[y.index(f.q())] = sy;
    gi.s = gi.s ? std::min(*gi.s, sy) : sy;
  }
  return gi;
}

/// Aggregate s = min over determined directions; throws when D is empty.
inline GeometricInvariants s_of_set(const AffinePointSet& u) {
  auto gi = geometric_invariants(u);
  if (!gi.s) throw std::invalid_argument("s is undefined for a set determining no direction");
  return gi;
}

struct LineCount {
  bool ideal = false;
  Direction slope;            // direction of an affine line
  std::uint32_t intercept = 0;  // line_index within its parallel class
  std::uint32_t count = 0;    // |(U ∪ D) ∩ line|
  bool pass = true;
};

struct OneModSReport {
  bool applicable = false;
  std::string reason;  // when not applicable
  std::uint32_t s = 0;
  std::vector<LineCount> lines;  // affine lines by (slope index, intercept), ideal line last
  bool size_divisible = false;   // |U| ≡ 0 (mod s)
  bool passed() const {
    if (!applicable) return false;
    if (!size_divisible) return false;
    return std::all_of(lines.begin(), lines.end(), [](const LineCount& l) { return l.pass; });
  }
};

/// Counts |(U ∪ D) ∩ l| on every line of PG(2,q) and tests 0 or 1 (mod m).
inline OneModSReport one_mod_check(const AffinePointSet& u, std::uint32_t modulus) {
  const Field& f = u.field();
  OneModSReport rep;
  rep.applicable = true;
  rep.s = modulus;
  const auto dirs = direction_mask(u);
  std::uint32_t ideal = 0;
  for (std::uint32_t idx = 0; idx <= f.q(); ++idx) {
    const Direction y = Direction::from_index(idx, f.q());
    const auto counts = line_profile(u, y);
    for (std::uint32_t c = 0; c < f.q(); ++c) {
      LineCount lc;
      lc.slope = y;
      lc.intercept = c;
      lc.count = counts[c] + (dirs[idx] ? 1 : 0);
      lc.pass = lc.count == 0 || lc.count % modulus == 1 % modulus;
      rep.lines.push_back(lc);
    }
    if (dirs[idx]) ++ideal;
  }
  LineCount il;
  il.ideal = true;
  il.count = ideal;
  il.pass = ideal == 0 || ideal % modulus == 1 % modulus;
  rep.lines.push_back(il);
  rep.size_divisible = u.size() % modulus == 0;
  return rep;
}

/// The 0-or-1 (mod s) incidence property of U ∪ D, with s the geometric
/// invariant; not applicable when s is undefined or s = 1.
inline OneModSReport check_one_mod_s(const AffinePointSet& u) {
  const auto gi = geometric_invariants(u);
  if (!gi.s) {
    OneModSReport rep;
    rep.reason = "s undefined: U determines no direction";
    return rep;
  }
  if (*gi.s == 1) {
    OneModSReport rep;
    rep.s = 1;
    rep.reason = "s = 1";
    return rep;
  }
  return one_mod_check(u, *gi.s);
}

/// x -> M x + v on AG(2,q) with M = [[m00, m01], [m10, m11]] invertible.
struct Collineation {
  Elem m00{1}, m01{0}, m10{0}, m11{1};
  Elem v0{0}, v1{0};

  static Collineation identity() { return {}; }
  static Collineation swap_axes() { return {Elem{0}, Elem{1}, Elem{1}, Elem{0}, Elem{0}, Elem{0}}; }

  Elem determinant(const Field& f) const { return f.sub(f.mul(m00, m11), f.mul(m01, m10)); }

  Point apply(const Field& f, const Point& pt) const {
    return {f.add(f.add(f.mul(m00, pt.a), f.mul(m01, pt.b)), v0), f.add(f.add(f.mul(m10, pt.a), f.mul(m11, pt.b)), v1)};
  }

  /// Induced map on the ideal line: direction (1, m) or (0, 1) is sent through M.
  Direction apply(const Field& f, Direction y) const {
    Elem x, z;
    if (y.is_infinity()) {
      x = m01;
      z = m11;
    } else {
      x = f.add(m00, f.mul(m01, y.slope()));
      z = f.add(m10, f.mul(m11, y.slope()));
    }
    if (x == Field::zero()) return Direction::infinity();
    return Direction::slope(f.div(z, x));
  }

  /// Linear involution exchanging the direction of slope m with the vertical one.
  static Collineation exchanging_infinity(const Field& f, Elem m) {
    // [[-m, 1], [1 - m^2, m]] squares to a nonzero scalar and has determinant -1.
    return {f.neg(m), Field::one(), f.sub(Field::one(), f.mul(m, m)), m, Elem{0}, Elem{0}};
  }
};

inline AffinePointSet apply_collineation(const AffinePointSet& u, const Collineation& c) {
  const Field& f = u.field();
  if (c.determinant(f) == Field::zero()) throw std::invalid_argument("collineation matrix is singular");
  std::vector<Point> img;
  img.reserve(u.size());
  for (const auto& pt : u.points()) img.push_back(c.apply(f, pt));
  return AffinePointSet(f, std::move(img));
}

inline DirectionSet apply_collineation(const DirectionSet& d, const Collineation& c) {
  const Field& f = d.field();
  if (c.determinant(f) == Field::zero()) throw std::invalid_argument("collineation matrix is singular");
  std::vector<Direction> img;
  for (const auto& y : d.directions()) img.push_back(c.apply(f, y));
  return DirectionSet(f, std::move(img));
}

struct CanonicalImage {
  AffinePointSet set;
  Collineation map;
  bool changed = false;
};

/// Image of U determining the vertical direction. When it is not determined,
/// the least-codec determined slope is exchanged with it. Throws when D is empty.
inline CanonicalImage canonicalize_infinity(const AffinePointSet& u) {
  const auto d = directions_of(u);
  if (d.empty()) throw std::invalid_argument("cannot canonicalize a set determining no direction");
  if (d.contains_infinity()) return {u, Collineation::identity(), false};
  const auto c = Collineation::exchanging_infinity(u.field(), d.directions().front().slope());
  return {apply_collineation(u, c), c, true};
}

/// Image of U not determining the vertical direction, exchanging it with the
/// least-codec undetermined slope. Empty when U determines every direction.
inline std::optional<CanonicalImage> move_infinity_out(const AffinePointSet& u) {
  const Field& f = u.field();
  const auto mask = direction_mask(u);
  if (!mask[f.q()]) return CanonicalImage{u, Collineation::identity(), false};
  for (std::uint32_t m = 0; m < f.q(); ++m) {
    if (!mask[m]) {
      const auto c = Collineation::exchanging_infinity(f, Elem{m});
      return CanonicalImage{apply_collineation(u, c), c, true};
    }
  }
  return std::nullopt;
}

/// Every point of AG(2,q) in codec order.
inline std::vector<Point> all_points(const Field& f) {
  std::vector<Point> out;
  out.reserve(std::size_t{f.q()} * f.q());
  for (std::uint32_t a = 0; a < f.q(); ++a)
    for (std::uint32_t b = 0; b < f.q(); ++b) out.push_back({Elem{a}, Elem{b}});
  return out;
}

}  // namespace redei
