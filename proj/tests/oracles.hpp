#pragma once

// Brute-force reference computations used to cross-check the library. They
// share only the element codec with the code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/poly.hpp"

namespace oracle {

using redei::Elem;
using redei::Field;

// Schoolbook product of digit vectors reduced by the modulus, all mod p.
inline std::uint32_t mul(const Field& f, std::uint32_t a, std::uint32_t b) {
  const std::uint32_t p = f.p(), h = f.h();
  std::vector<std::uint64_t> da(h), db(h), prod(2 * h, 0);
  for (std::uint32_t i = 0, x = a, y = b; i < h; ++i, x /= p, y /= p) {
    da[i] = x % p;
    db[i] = y % p;
  }
  for (std::uint32_t i = 0; i < h; ++i)
    for (std::uint32_t j = 0; j < h; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  const auto& m = f.modulus();
  for (std::size_t k = 2 * h; k-- > h;) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= h; ++i) prod[k - h + i] = (prod[k - h + i] + (p - c) * m[i]) % p;
  }
  std::uint32_t out = 0;
  for (std::uint32_t i = h; i-- > 0;) out = out * p + static_cast<std::uint32_t>(prod[i]);
  return out;
}

inline std::uint32_t add(const Field& f, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.h(); ++i, a /= f.p(), b /= f.p(), scale *= f.p()) out += ((a % f.p() + b % f.p()) % f.p()) * scale;
  return out;
}

inline std::uint32_t sub(const Field& f, std::uint32_t a, std::uint32_t b) {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < f.h(); ++i, a /= f.p(), b /= f.p(), scale *= f.p()) out += ((a % f.p() + f.p() - b % f.p()) % f.p()) * scale;
  return out;
}

// Direction indices (slope codec, q for vertical) found by testing every
// slope against every pair; no field division involved.
inline std::set<std::uint32_t> directions(const redei::AffinePointSet& u) {
  const Field& f = u.field();
  std::set<std::uint32_t> out;
  const auto& pts = u.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto da = sub(f, pts[j].a.v, pts[i].a.v), db = sub(f, pts[j].b.v, pts[i].b.v);
      if (da == 0) {
        out.insert(f.q());
        continue;
      }
      for (std::uint32_t m = 0; m < f.q(); ++m)
        if (mul(f, m, da) == db) out.insert(m);
    }
  return out;
}

// Intersection sizes of U with every line of slope index y (vertical when y = q).
inline std::vector<std::uint32_t> line_counts(const redei::AffinePointSet& u, std::uint32_t y) {
  const Field& f = u.field();
  std::vector<std::uint32_t> counts;
  for (std::uint32_t c = 0; c < f.q(); ++c) {
    std::uint32_t n = 0;
    for (const auto& pt : u.points()) {
      const bool on = y == f.q() ? pt.a.v == c : pt.b.v == add(f, mul(f, y, pt.a.v), c);
      n += on ? 1 : 0;
    }
    counts.push_back(n);
  }
  return counts;
}

// Largest power of p dividing all intersection counts of determined lines.
inline std::uint32_t s_of_direction(const redei::AffinePointSet& u, std::uint32_t y) {
  const Field& f = u.field();
  std::uint64_t g = 0;
  for (auto n : line_counts(u, y)) g = std::gcd(g, std::uint64_t{n});
  std::uint32_t s = 1;
  while (g % (std::uint64_t{s} * f.p()) == 0 && std::uint64_t{s} * f.p() <= f.q()) s *= f.p();
  return s;
}

// H(X,y) from the univariate product prod (X + b - a y).
inline redei::Poly h_at(const redei::AffinePointSet& u, Elem y) {
  const Field& f = u.field();
  redei::Poly r = redei::Poly::constant(f, Field::one());
  for (const auto& pt : u.points()) r = r * redei::Poly(f, {f.sub(pt.b, f.mul(pt.a, y)), Field::one()});
  const redei::Poly rem = redei::x_pow_q_minus_x(f) % r;
  return -rem - redei::Poly::x(f);
}

// In characteristic p, a polynomial is a tau-th power exactly when every
// exponent carrying a nonzero coefficient is divisible by tau (coefficients are
// always tau-th powers in a finite field). t(y) is then the p-part of the gcd
// of the positive exponents, capped at q; constants give q.
inline std::uint32_t t_from_exponents(const redei::Poly& hy, const Field& f) {
  std::uint64_t g = 0;
  for (std::size_t i = 1; i < hy.coeffs().size(); ++i)
    if (hy.coeffs()[i] != Field::zero()) g = std::gcd(g, std::uint64_t{i});
  if (g == 0) return f.q();
  std::uint32_t t = 1;
  while (g % (std::uint64_t{t} * f.p()) == 0 && t < f.q()) t *= f.p();
  return t;
}

inline std::uint64_t choose(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
