#pragma once

// The Rédei polynomial pipeline for a set U of n <= q points of AG(2,q):
//
//   R(X,Y) = prod_{(a,b) in U} (X - aY + b)
//   R(X,Y) Q(X,Y) = X^q + H(X,Y)      with deg_X H < deg_X R (n >= 2)
//
// obtained by dividing X^q - X by R over GF(q)[Y]. From H come the algebraic
// invariants t(y), f_y and kappa(y) of every determined affine direction.
//
// H(X,Y) is only evaluated at affine Y = y. The aggregate t is the minimum of
// t(y) over the affine determined directions; a set whose only determined
// direction is the vertical one gets t = q (single-direction convention).

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/poly.hpp"

namespace redei {

/// R(X,Y) for 1 <= |U| <= q.
inline BiPoly redei_polynomial(const AffinePointSet& u) {
  const Field& f = u.field();
  if (u.empty()) throw std::invalid_argument("Redei polynomial of an empty set");
  if (u.size() > f.q()) throw std::invalid_argument("Redei system needs |U| <= q");
  BiPoly r(f, {Poly::constant(f, Field::one())});
  for (const auto& pt : u.points()) {
    // X + (b - aY)
    BiPoly factor(f, {Poly(f, {pt.b, f.neg(pt.a)}), Poly::constant(f, Field::one())});
    r = r * factor;
  }
  return r;
}

struct RedeiSystem {
  AffinePointSet u;
  DirectionSet d;
  BiPoly r, quotient, h;  // R, Q, H
  std::size_t n = 0;
  std::uint32_t q = 0;

  /// sigma_k: coefficient of X^(n-k) in R (sigma_0 = 1).
  Poly sigma(std::size_t k) const { return k <= n ? r.coeff_x(n - k) : Poly(r.field()); }
  /// sigma*_k: coefficient of X^(q-n-k) in Q.
  Poly sigma_star(std::size_t k) const { return k <= q - n ? quotient.coeff_x(q - n - k) : Poly(r.field()); }
  /// h_j: coefficient of X^(q-j) in X^q + H, 1 <= j <= q.
  Poly h_coeff(std::size_t j) const { return j <= q ? h.coeff_x(q - j) : Poly(r.field()); }

  /// X^q + H(X, y).
  Poly full_at(Elem y) const { return Poly::monomial(r.field(), Field::one(), q) + h.specialize(y); }
};

inline BiPoly bivariate_x_pow_q_minus_x(const Field& f) {
  return BiPoly::term(f, Field::one(), f.q(), 0) - BiPoly::term(f, Field::one(), 1, 0);
}

/// Divides X^q - X by R over GF(q)[Y]; H is minus the remainder, minus X.
inline RedeiSystem divide_xq(const AffinePointSet& u) {
  const Field& f = u.field();
  RedeiSystem sys;
  sys.u = u;
  sys.d = directions_of(u);
  sys.r = redei_polynomial(u);
  sys.n = u.size();
  sys.q = f.q();
  auto [quo, rem] = divmod_monic(bivariate_x_pow_q_minus_x(f), sys.r);
  sys.quotient = std::move(quo);
  sys.h = -rem - BiPoly::term(f, Field::one(), 1, 0);
  return sys;
}

inline Poly specialize(const BiPoly& p, Elem y) { return p.specialize(y); }

/// The sigma* recurrence: sigma*_j = [X^(q-j)](X^q - X) - sum_{i=1..j} sigma_i sigma*_(j-i)
/// for 1 <= j <= q-n. For n >= 2 the bracket vanishes and this is h_j = 0.
inline std::vector<Poly> sigma_star_by_recurrence(const RedeiSystem& sys) {
  const Field& f = sys.r.field();
  std::vector<Poly> ss(sys.q - sys.n + 1, Poly(f));
  ss[0] = Poly::constant(f, Field::one());
  for (std::size_t j = 1; j <= sys.q - sys.n; ++j) {
    Poly acc(f);
    if (sys.q - j == 1) acc = Poly::constant(f, f.neg(Field::one()));
    for (std::size_t i = 1; i <= std::min(j, sys.n); ++i) acc = acc - sys.sigma(i) * ss[j - i];
    ss[j] = acc;
  }
  return ss;
}

/// Structural invariants of a Redei system; returns human-readable failures.
inline std::vector<std::string> check_division(const RedeiSystem& sys) {
  std::vector<std::string> bad;
  const Field& f = sys.r.field();
  const BiPoly xq = BiPoly::term(f, Field::one(), sys.q, 0);
  if (!(sys.r * sys.quotient == xq + sys.h)) bad.push_back("R*Q != X^q + H");
  if (sys.r.degree_x() != static_cast<int>(sys.n) || !(sys.r.coeff_x(sys.n) == Poly::constant(f, Field::one())))
    bad.push_back("R is not monic of X-degree n");
  if (sys.quotient.degree_x() != static_cast<int>(sys.q - sys.n) ||
      !(sys.quotient.coeff_x(sys.q - sys.n) == Poly::constant(f, Field::one())))
    bad.push_back("Q is not monic of X-degree q-n");
  if (sys.n >= 2) {
    if (sys.h.degree_x() >= sys.r.degree_x()) bad.push_back("deg_X H >= deg_X R");
    for (std::size_t i = 1; i <= sys.q - sys.n; ++i)
      if (!sys.h_coeff(i).is_zero()) bad.push_back("h_" + std::to_string(i) + " != 0");
  }
  for (std::size_t k = 0; k <= sys.n; ++k)
    if (sys.sigma(k).degree() > static_cast<int>(k)) bad.push_back("deg sigma_" + std::to_string(k) + " > " + std::to_string(k));
  for (std::size_t k = 0; k <= sys.q - sys.n; ++k)
    if (sys.sigma_star(k).degree() > static_cast<int>(k)) bad.push_back("deg sigma*_" + std::to_string(k) + " > " + std::to_string(k));
  for (std::size_t j = 1; j <= sys.q; ++j)
    if (sys.h_coeff(j).degree() > static_cast<int>(j)) bad.push_back("deg h_" + std::to_string(j) + " > " + std::to_string(j));
  const auto rec = sigma_star_by_recurrence(sys);
  for (std::size_t k = 0; k < rec.size(); ++k)
    if (!(rec[k] == sys.sigma_star(k))) bad.push_back("sigma*_" + std::to_string(k) + " disagrees with the recurrence");
  if (sys.q - sys.n >= 1 && !(sys.sigma_star(1) == -sys.sigma(1)) && sys.q - 1 != 1)
    bad.push_back("sigma*_1 != -sigma_1");
  if (sys.q - sys.n >= 2 && sys.q - 2 != 1 && !(sys.sigma_star(2) == -sys.sigma(2) + sys.sigma(1) * sys.sigma(1)))
    bad.push_back("sigma*_2 != -sigma_2 + sigma_1^2");
  return bad;
}

struct RStructureVerdict {
  Direction y;
  bool determined = false;
  std::uint32_t s_y = 1;
  bool holds = false;
  std::string detail;
};

/// Determined y: R(X,y) in GF(q)[X^s(y)] \ GF(q)[X^(p s(y))].
/// Undetermined y: R(X,y) divides X^q - X.
inline RStructureVerdict check_r_structure(const AffinePointSet& u, Direction y) {
  if (y.is_infinity()) throw std::invalid_argument("R(X,Y) is not evaluated at the vertical direction");
  const Field& f = u.field();
  RStructureVerdict v;
  v.y = y;
  const auto d = directions_of(u);
  const Poly ry = redei_polynomial(u).specialize(y.slope());
  v.determined = d.contains(y);
  if (v.determined) {
    v.s_y = s_of_direction(u, y);
    const bool in_lower = ry.in_power_ring(v.s_y);
    const bool in_higher = ry.in_power_ring(std::uint64_t{v.s_y} * f.p());
    v.holds = in_lower && !in_higher;
    v.detail = "R(X,y) in GF(q)[X^" + std::to_string(v.s_y) + "]: " + (in_lower ? "yes" : "no") + ", in GF(q)[X^" +
               std::to_string(std::uint64_t{v.s_y} * f.p()) + "]: " + (in_higher ? "yes" : "no");
  } else {
    v.holds = divides_x_pow_q_minus_x(ry);
    v.detail = std::string("R(X,y) divides X^q - X: ") + (v.holds ? "yes" : "no");
  }
  return v;
}

struct TValue {
  std::uint32_t t = 0;
  std::optional<Poly> f;  // absent when H(X,y) is constant (t = q)
};

/// Largest p-power tau with H(X,y) = f^tau and f not in GF(q)[X^p].
inline TValue t_of_h(const Poly& hy, const Field& field) {
  if (hy.is_constant()) return {field.q(), std::nullopt};
  std::uint64_t tau = 1;
  while (tau * field.p() <= static_cast<std::uint64_t>(hy.degree())) tau *= field.p();
  for (; tau >= 1; tau /= field.p()) {
    if (!hy.in_power_ring(tau)) continue;
    Poly root = hy.power_root(tau);
    if (root.in_power_ring(field.p())) continue;
    if (!(root.pow(tau) == hy)) throw std::logic_error("power root does not reproduce H(X,y)");
    return {static_cast<std::uint32_t>(tau), std::move(root)};
  }
  throw std::logic_error("no admissible root order for H(X,y)");
}

/// t(y) and f_y for a determined affine direction.
inline TValue t_of_direction(const RedeiSystem& sys, Elem y) {
  if (!sys.d.contains(Direction::slope(y)))
    throw std::invalid_argument("t(y) is only defined for determined directions (y = " + std::to_string(y.v) + ")");
  return t_of_h(sys.h.specialize(y), sys.r.field());
}

/// Roots of X^q + H(X,y) in GF(q), counted with multiplicity.
inline std::uint32_t kappa(const RedeiSystem& sys, Elem y) {
  const Poly full = sys.full_at(y);
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < sys.q; ++x) count += static_cast<std::uint32_t>(full.root_multiplicity(Elem{x}));
  return count;
}

struct DirectionInvariants {
  Direction y;
  std::uint32_t s = 1;
  std::uint32_t t = 0;
  std::optional<Poly> f;
  std::uint32_t kappa = 0;
  int deg_x_h_y = -1;  // deg_X H(X,y)
};

struct AlgebraicInvariants {
  std::vector<DirectionInvariants> per_direction;  // affine determined directions, ascending
  std::uint32_t t = 0;
  int deg_x_h = -1;
  bool infinity_determined = false;  // t excludes the vertical direction
  bool s_le_t = true;
  std::optional<std::uint32_t> s;
};

/// Aggregate t over the affine determined directions; throws when D is empty.
inline AlgebraicInvariants t_of_set(const RedeiSystem& sys) {
  if (sys.d.empty()) throw std::invalid_argument("t is undefined for a set determining no direction");
  AlgebraicInvariants ai;
  ai.deg_x_h = sys.h.degree_x();
  ai.infinity_determined = sys.d.contains_infinity();
  ai.t = sys.q;
  const auto gi = geometric_invariants(sys.u);
  ai.s = gi.s;
  for (const auto& y : sys.d.directions()) {
    if (y.is_infinity()) continue;
    DirectionInvariants di;
    di.y = y;
    di.s = gi.per_direction[y.index(sys.q)];
    auto tv = t_of_direction(sys, y.slope());
    di.t = tv.t;
    di.f = std::move(tv.f);
    di.kappa = kappa(sys, y.slope());
    di.deg_x_h_y = sys.h.specialize(y.slope()).degree();
    if (di.s > di.t) ai.s_le_t = false;
    ai.t = std::min(ai.t, di.t);
    ai.per_direction.push_back(std::move(di));
  }
  if (ai.s && *ai.s > ai.t) ai.s_le_t = false;
  return ai;
}

struct PropVerdict {
  bool holds = true;
  std::vector<std::string> failures;
  void fail(std::string why) {
    holds = false;
    failures.push_back(std::move(why));
  }
};

/// Determined y: Q(X,y), H(X,y) in GF(q)[X^s(y)], and Q(X,y) outside
/// GF(q)[X^(p s(y))] when deg R <= deg Q. Undetermined y: R Q = X^q - X and
/// Q(X,y) splits into distinct linear factors.
inline PropVerdict check_prop_es(const RedeiSystem& sys) {
  PropVerdict v;
  const Field& f = sys.r.field();
  const auto gi = geometric_invariants(sys.u);
  const Poly xq_minus_x = x_pow_q_minus_x(f);
  for (std::uint32_t yv = 0; yv < sys.q; ++yv) {
    const Elem y{yv};
    const Poly qy = sys.quotient.specialize(y);
    const Poly hy = sys.h.specialize(y);
    const std::string tag = "y=" + std::to_string(yv) + ": ";
    if (sys.d.contains(Direction::slope(y))) {
      const std::uint64_t sy = gi.per_direction[yv];
      if (!qy.in_power_ring(sy)) v.fail(tag + "Q(X,y) not in GF(q)[X^s(y)]");
      if (!hy.in_power_ring(sy)) v.fail(tag + "H(X,y) not in GF(q)[X^s(y)]");
      if (sys.n <= sys.q - sys.n && qy.in_power_ring(sy * f.p())) v.fail(tag + "Q(X,y) in GF(q)[X^(p s(y))]");
    } else {
      if (!(sys.r.specialize(y) * qy == xq_minus_x)) v.fail(tag + "R(X,y) Q(X,y) != X^q - X");
      if (!divides_x_pow_q_minus_x(qy)) v.fail(tag + "Q(X,y) not totally reducible");
    }
  }
  return v;
}

/// Every X-exponent of X^q + H(X,Y) lies in {0, 1} ∪ tZ.
inline PropVerdict check_prop_lin(const RedeiSystem& sys, std::uint32_t t) {
  PropVerdict v;
  if (t == 0) throw std::invalid_argument("t must be positive");
  const BiPoly full = BiPoly::term(sys.r.field(), Field::one(), sys.q, 0) + sys.h;
  for (std::size_t i = 0; i < full.coeffs().size(); ++i) {
    if (full.coeffs()[i].is_zero()) continue;
    if (i != 0 && i != 1 && i % t != 0) v.fail("exponent " + std::to_string(i) + " outside {0,1} ∪ " + std::to_string(t) + "Z");
  }
  return v;
}

}  // namespace redei
