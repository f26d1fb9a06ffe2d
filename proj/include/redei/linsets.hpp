#pragma once

// Affine and projective GF(s)-linear sets.
//
// Vectors of GF(q)^n are plain coefficient vectors. Projective points are
// normalized so that their first nonzero coordinate is 1. In homogeneous
// coordinates of PG(n,q) the first coordinate is the homogenizing one: the
// affine point u is (1, u) and the direction of a vector v is (0, v).
//
// Projecting PG(d+1,s) through the lift [[1, 0], [0, A]] gives the image of a
// rank-(d+1) affine set together with its directions, so the projective
// closure U ∪ D has projective rank d+2 in this convention.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/random.hpp"

namespace redei {

using Vec = std::vector<Elem>;
using Matrix = std::vector<Vec>;  // row major

namespace vec {

inline Vec add(const Field& f, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}
inline Vec sub(const Field& f, const Vec& x, const Vec& y) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.sub(x[i], y[i]);
  return out;
}
inline Vec scale(const Field& f, Elem a, const Vec& x) {
  Vec out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(a, x[i]);
  return out;
}
inline bool is_zero(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](Elem e) { return e == Field::zero(); });
}
inline Vec apply(const Field& f, const Matrix& m, const Vec& x) {
  Vec out(m.size(), Field::zero());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] = f.add(out[i], f.mul(m[i][j], x[j]));
  return out;
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
inline Vec normalize(const Field& f, const Vec& x) {
  for (Elem e : x)
    if (e != Field::zero()) return scale(f, f.inv(e), x);
  throw std::invalid_argument("the zero vector is not a projective point");
}

}  // namespace vec

/// Rank over GF(q) by Gaussian elimination.
inline std::size_t rank_over_field(const Field& f, Matrix rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == Field::zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const Elem inv = f.inv(rows[rank][c]);
    rows[rank] = vec::scale(f, inv, rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c] != Field::zero()) rows[r] = vec::sub(f, rows[r], vec::scale(f, rows[r][c], rows[rank]));
    ++rank;
  }
  return rank;
}

/// All GF(s)-combinations translate + sum lambda_i g_i, sorted and deduplicated.
inline std::vector<Vec> span_over_subfield(const Field& f, const Subfield& sub, const std::vector<Vec>& gens, const Vec& translate) {
  std::vector<Vec> out{translate};
  for (const auto& g : gens) {
    std::vector<Vec> next;
    next.reserve(out.size() * sub.elements.size());
    for (const auto& v : out)
      for (Elem lam : sub.elements) next.push_back(vec::add(f, v, vec::scale(f, lam, g)));
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    out = std::move(next);
  }
  return out;
}

/// Greedy GF(s)-independent subsequence of gens (indices).
inline std::vector<std::size_t> independent_over_subfield(const Field& f, const Subfield& sub, const std::vector<Vec>& gens) {
  std::vector<std::size_t> keep;
  if (gens.empty()) return keep;
  std::vector<Vec> basis;
  std::vector<Vec> span{Vec(gens[0].size(), Field::zero())};
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (std::binary_search(span.begin(), span.end(), gens[i])) continue;
    keep.push_back(i);
    basis.push_back(gens[i]);
    span = span_over_subfield(f, sub, basis, Vec(gens[i].size(), Field::zero()));
  }
  return keep;
}

struct AffineLinearSpec {
  Field field;
  std::uint32_t s = 0;  // subfield order
  std::uint32_t n = 2;  // ambient dimension
  std::vector<Vec> generators;
  Vec translate;  // empty means the origin
};

inline void validate(const AffineLinearSpec& spec) {
  if (!is_subfield_order(spec.field, spec.s))
    throw std::invalid_argument(std::to_string(spec.s) + " is not a subfield order of GF(" + spec.field.name() + ")");
  if (!spec.translate.empty() && spec.translate.size() != spec.n) throw std::invalid_argument("translate has the wrong dimension");
  for (const auto& g : spec.generators)
    if (g.size() != spec.n) throw std::invalid_argument("generator has the wrong dimension");
}

/// The point set {translate + sum lambda_i a_i : lambda_i in GF(s)} of AG(n,q).
inline std::vector<Vec> build_affine_linear(const AffineLinearSpec& spec) {
  validate(spec);
  const auto sub = subfield_of_order(spec.field, spec.s);
  const Vec origin = spec.translate.empty() ? Vec(spec.n, Field::zero()) : spec.translate;
  return span_over_subfield(spec.field, sub, spec.generators, origin);
}

/// Converts points of AG(2,q) to an AffinePointSet.
inline AffinePointSet to_plane_set(const Field& f, const std::vector<Vec>& pts) {
  std::vector<Point> out;
  out.reserve(pts.size());
  for (const auto& v : pts) {
    if (v.size() != 2) throw std::invalid_argument("not a point of the plane");
    out.push_back({v[0], v[1]});
  }
  return AffinePointSet(f, std::move(out));
}

inline AffinePointSet build_affine_linear_plane(const AffineLinearSpec& spec) {
  if (spec.n != 2) throw std::invalid_argument("spec is not planar");
  return to_plane_set(spec.field, build_affine_linear(spec));
}

/// Directions determined by points of AG(n,q), as normalized points of PG(n-1,q).
inline std::set<Vec> directions_in_space(const Field& f, const std::vector<Vec>& pts) {
  std::set<Vec> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) out.insert(vec::normalize(f, vec::sub(f, pts[i], pts[j])));
  return out;
}

/// Normalized points of the canonical subgeometry PG(d,s) in PG(d,q).
inline std::vector<Vec> subgeometry_points(const Subfield& sub, std::uint32_t d) {
  std::vector<Vec> out;
  const std::size_t len = d + 1;
  for (std::size_t lead = 0; lead < len; ++lead) {
    Vec v(len, Field::zero());
    v[lead] = Field::one();
    std::function<void(std::size_t)> rec = [&](std::size_t pos) {
      if (pos == len) {
        out.push_back(v);
        return;
      }
      for (Elem e : sub.elements) {
        v[pos] = e;
        rec(pos + 1);
      }
    };
    rec(lead + 1);
  }
  return out;
}

struct ProjectiveLinearSpec {
  Field field;
  std::uint32_t s = 0;
  std::uint32_t d = 0;  // source PG(d,q)
  std::uint32_t n = 0;  // target PG(n,q)
  Matrix projection;    // (n+1) x (d+1)
};

/// Projective point -> multiplicity.
struct WeightedProjectiveSet {
  std::map<Vec, std::uint32_t> weights;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& [pt, w] : weights) t += w;
    return t;
  }
  std::set<Vec> support() const {
    std::set<Vec> out;
    for (const auto& [pt, w] : weights) out.insert(pt);
    return out;
  }
};

inline void validate(const ProjectiveLinearSpec& spec) {
  if (!is_subfield_order(spec.field, spec.s))
    throw std::invalid_argument(std::to_string(spec.s) + " is not a subfield order of GF(" + spec.field.name() + ")");
  if (spec.projection.size() != spec.n + 1) throw std::invalid_argument("projection must have n+1 rows");
  for (const auto& row : spec.projection) {
    if (row.size() != spec.d + 1) throw std::invalid_argument("projection must have d+1 columns");
    for (Elem e : row)
      if (e.v >= spec.field.q()) throw std::out_of_range("projection entry outside field");
  }
  // Full rank: onto PG(n,q) when d >= n, an embedding when d < n.
  if (rank_over_field(spec.field, spec.projection) != std::min(spec.n, spec.d) + 1)
    throw std::invalid_argument("projection is not of full rank");
}

/// (s^(k) - 1)/(s - 1): number of points of PG(k-1,s).
inline std::uint64_t projective_point_count(std::uint64_t s, std::uint32_t rank) {
  std::uint64_t total = 0, pw = 1;
  for (std::uint32_t i = 0; i < rank; ++i) {
    total += pw;
    pw *= s;
  }
  return total;
}

/// Image of PG(d,s) with multiplicities; throws if the centre meets the subgeometry.
inline WeightedProjectiveSet project_subgeometry(const ProjectiveLinearSpec& spec) {
  validate(spec);
  const Field& f = spec.field;
  const auto sub = subfield_of_order(f, spec.s);
  WeightedProjectiveSet out;
  for (const auto& pt : subgeometry_points(sub, spec.d)) {
    const Vec img = vec::apply(f, spec.projection, pt);
    if (vec::is_zero(img)) throw std::invalid_argument("projection centre meets the canonical subgeometry");
    ++out.weights[vec::normalize(f, img)];
  }
  return out;
}

/// Directions of PG(1,q) as slopes: (1, m) -> m, (0, 1) -> vertical.
inline DirectionSet to_direction_set(const Field& f, const std::set<Vec>& pts) {
  std::vector<Direction> dirs;
  for (const auto& v : pts) {
    if (v.size() != 2) throw std::invalid_argument("not a point of PG(1,q)");
    dirs.push_back(v[0] == Field::zero() ? Direction::infinity() : Direction::slope(v[1]));
  }
  return DirectionSet(f, std::move(dirs));
}

/// Lift of a projective linear set of PG(n,q) to an affine set of AG(n+1,q):
/// the affine part of PG(d+1,s) under [[1, 0], [0, P]]. The map is injective
/// there because the centre lies in the ideal hyperplane.
inline std::vector<Vec> realize_direction_set(const ProjectiveLinearSpec& spec) {
  validate(spec);
  const Field& f = spec.field;
  const auto sub = subfield_of_order(f, spec.s);
  // Centre disjointness is a precondition; check it on the ideal part.
  for (const auto& pt : subgeometry_points(sub, spec.d))
    if (vec::is_zero(vec::apply(f, spec.projection, pt))) throw std::invalid_argument("projection centre meets the canonical subgeometry");
  std::vector<Vec> out;
  Vec lam(spec.d + 1, Field::zero());
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == lam.size()) {
      out.push_back(vec::apply(f, spec.projection, lam));
      return;
    }
    for (Elem e : sub.elements) {
      lam[pos] = e;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  const auto before = out.size();
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != before) throw std::logic_error("lifted projection is not injective on the affine part");
  return out;
}

inline AffinePointSet realize_in_plane(const ProjectiveLinearSpec& spec) {
  if (spec.n != 1) throw std::invalid_argument("plane realization needs a target PG(1,q)");
  return to_plane_set(spec.field, realize_direction_set(spec));
}

struct ClosureWitness {
  bool holds = false;
  std::uint32_t ambient_dim = 0;       // after reduction to the GF(q)-span
  std::uint32_t affine_rank = 0;       // GF(s)-rank of U
  std::uint32_t projective_rank = 0;   // affine_rank + 1
  Matrix projection;                   // (ambient+1) x (affine_rank+1)
  WeightedProjectiveSet image;
  std::vector<std::string> failures;
};

/// Builds the projection of PG(r,s) onto U ∪ D (r = GF(s)-rank of U) and
/// checks that the image is U ∪ D with every point of U simple.
inline ClosureWitness closure_is_projective_linear(const AffineLinearSpec& spec) {
  validate(spec);
  const Field& f = spec.field;
  const auto sub = subfield_of_order(f, spec.s);
  ClosureWitness w;
  const auto keep = independent_over_subfield(f, sub, spec.generators);
  if (keep.empty()) throw std::invalid_argument("degenerate generators: the set is a single point");
  std::vector<Vec> gens;
  for (auto i : keep) gens.push_back(spec.generators[i]);

  // Coordinates with respect to a GF(q)-basis of the span of the generators.
  Matrix basis;
  for (const auto& g : gens) {
    auto trial = basis;
    trial.push_back(g);
    if (rank_over_field(f, trial) > basis.size()) basis.push_back(g);
  }
  const std::size_t m = basis.size();
  auto coords = [&](const Vec& v) {
    // Solve sum c_i basis_i = v by brute elimination on the augmented system.
    Matrix a(spec.n, Vec(m + 1, Field::zero()));
    for (std::size_t r = 0; r < spec.n; ++r) {
      for (std::size_t c = 0; c < m; ++c) a[r][c] = basis[c][r];
      a[r][m] = v[r];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivcol;
    for (std::size_t c = 0; c < m && row < a.size(); ++c) {
      std::size_t piv = row;
      while (piv < a.size() && a[piv][c] == Field::zero()) ++piv;
      if (piv == a.size()) continue;
      std::swap(a[piv], a[row]);
      a[row] = vec::scale(f, f.inv(a[row][c]), a[row]);
      for (std::size_t r = 0; r < a.size(); ++r)
        if (r != row && a[r][c] != Field::zero()) a[r] = vec::sub(f, a[r], vec::scale(f, a[r][c], a[row]));
      pivcol.push_back(c);
      ++row;
    }
    Vec out(m, Field::zero());
    for (std::size_t r = 0; r < pivcol.size(); ++r) out[pivcol[r]] = a[r][m];
    return out;
  };

  std::vector<Vec> local;
  for (const auto& g : gens) local.push_back(coords(g));
  w.ambient_dim = static_cast<std::uint32_t>(m);
  w.affine_rank = static_cast<std::uint32_t>(gens.size());
  w.projective_rank = w.affine_rank + 1;

  // Homogeneous projection [[1, 0], [0, A]] with A = [a_0 ... a_r].
  w.projection.assign(m + 1, Vec(gens.size() + 1, Field::zero()));
  w.projection[0][0] = Field::one();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < gens.size(); ++c) w.projection[r + 1][c + 1] = local[c][r];

  for (const auto& pt : subgeometry_points(sub, w.affine_rank)) {
    const Vec img = vec::apply(f, w.projection, pt);
    if (vec::is_zero(img)) {
      w.failures.push_back("centre meets the subgeometry");
      continue;
    }
    ++w.image.weights[vec::normalize(f, img)];
  }

  // Independent route: U in local coordinates and its pairwise directions.
  const auto u = span_over_subfield(f, sub, local, Vec(m, Field::zero()));
  const auto dirs = directions_in_space(f, u);
  std::set<Vec> expected;
  for (const auto& pt : u) {
    Vec h{Field::one()};
    h.insert(h.end(), pt.begin(), pt.end());
    expected.insert(h);
    if (auto it = w.image.weights.find(h); it == w.image.weights.end() || it->second != 1)
      w.failures.push_back("affine point has multiplicity other than 1");
  }
  for (const auto& dv : dirs) {
    Vec h{Field::zero()};
    h.insert(h.end(), dv.begin(), dv.end());
    expected.insert(h);
  }
  if (w.image.support() != expected) w.failures.push_back("projected support differs from U ∪ D");
  if (w.image.total() != projective_point_count(spec.s, w.projective_rank)) w.failures.push_back("total weight mismatch");
  w.holds = w.failures.empty();
  return w;
}

struct LinearityWitness {
  bool linear = false;
  Point origin{};
  std::vector<Point> generators;
};

/// Whether some translate of U is closed under GF(s)-linear combinations.
inline LinearityWitness is_gf_s_linear(const AffinePointSet& u, std::uint32_t s) {
  const Field& f = u.field();
  const auto sub = subfield_of_order(f, s);
  LinearityWitness w;
  if (u.empty()) return w;
  w.origin = u.points().front();
  std::vector<Vec> shifted;
  for (const auto& pt : u.points()) shifted.push_back({f.sub(pt.a, w.origin.a), f.sub(pt.b, w.origin.b)});
  std::sort(shifted.begin(), shifted.end());
  auto member = [&](const Vec& v) { return std::binary_search(shifted.begin(), shifted.end(), v); };
  for (const auto& v : shifted)
    for (Elem lam : sub.elements)
      if (!member(vec::scale(f, lam, v))) return w;
  for (std::size_t i = 0; i < shifted.size(); ++i)
    for (std::size_t j = i + 1; j < shifted.size(); ++j)
      if (!member(vec::add(f, shifted[i], shifted[j]))) return w;
  w.linear = true;
  for (auto i : independent_over_subfield(f, sub, shifted)) w.generators.push_back({shifted[i][0], shifted[i][1]});
  return w;
}

/// A uniformly drawn valid projective spec (full rank, centre disjoint from PG(d,s)).
inline ProjectiveLinearSpec random_projective_spec(const Field& f, std::uint32_t s, std::uint32_t d, std::uint32_t n, Rng& rng) {
  ProjectiveLinearSpec spec{f, s, d, n, {}};
  const auto sub = subfield_of_order(f, s);
  const auto pts = subgeometry_points(sub, d);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    spec.projection.assign(n + 1, Vec(d + 1));
    for (auto& row : spec.projection)
      for (auto& e : row) e = Elem{static_cast<std::uint32_t>(rng.below(f.q()))};
    if (rank_over_field(f, spec.projection) != std::min(n, d) + 1) continue;
    bool disjoint = std::none_of(pts.begin(), pts.end(), [&](const Vec& pt) { return vec::is_zero(vec::apply(f, spec.projection, pt)); });
    if (disjoint) return spec;
  }
  throw std::invalid_argument("no valid projection found; d is too large for this (s, q, n)");
}

}  // namespace redei
