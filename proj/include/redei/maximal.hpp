#pragma once

#include <cstdint>
#include <vector>

#include "redei/geometry.hpp"

namespace redei {

/// True when every proper superset of U determines more directions than U.
/// Only the directions from a candidate point to U can be new, so each
/// candidate is tested incrementally against the direction mask of U.
/// A set determining every direction is maximal only when it is the whole plane.
inline bool is_maximal(const AffinePointSet& u) {
  const Field& f = u.field();
  const auto mask = direction_mask(u);
  for (const auto& cand : all_points(f)) {
    if (u.contains(cand)) continue;
    bool grows = false;
    for (const auto& pt : u.points()) {
      if (!mask[direction_of(f, cand, pt).index(f.q())]) {
        grows = true;
        break;
      }
    }
    if (!grows) return false;
  }
  return true;
}

/// Reference implementation: recomputes the direction set of every extension.
inline bool is_maximal_by_recomputation(const AffinePointSet& u) {
  const auto base = directions_of(u).size();
  for (const auto& cand : all_points(u.field())) {
    if (u.contains(cand)) continue;
    if (directions_of(u.with(cand)).size() <= base) return false;
  }
  return true;
}

}  // namespace redei
