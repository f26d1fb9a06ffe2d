#pragma once

// Verdicts for the direction-set theorems on concrete point sets. A verdict
// either reports the hypothesis that is not met (applicable = false) or the
// list of inequalities that the conclusion asserts, each with its truth value.
// All bound arithmetic is exact.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redei/field.hpp"
#include "redei/geometry.hpp"
#include "redei/linsets.hpp"
#include "redei/maximal.hpp"
#include "redei/poly.hpp"
#include "redei/rational.hpp"
#include "redei/redei.hpp"

namespace redei {

enum class Relation { kLe, kLt, kEq, kGe };

inline const char* to_string(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kLt: return "<";
    case Relation::kEq: return "=";
    case Relation::kGe: return ">=";
  }
  return "?";
}

struct Check {
  std::string label;
  Rational lhs;
  Relation rel = Relation::kLe;
  Rational rhs;
  bool holds = false;
};

inline Check make_check(std::string label, Rational lhs, Relation rel, Rational rhs) {
  bool ok = false;
  switch (rel) {
    case Relation::kLe: ok = lhs <= rhs; break;
    case Relation::kLt: ok = lhs < rhs; break;
    case Relation::kEq: ok = lhs == rhs; break;
    case Relation::kGe: ok = lhs >= rhs; break;
  }
  return {std::move(label), lhs, rel, rhs, ok};
}

struct Verdict {
  std::string statement;
  bool applicable = false;
  std::string case_matched;
  std::vector<Check> checks;
  std::vector<std::string> notes;
  std::map<std::string, std::int64_t> values;  // |U|, |D|, s, t, ... when computed

  bool conclusion_holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
  }
  /// Applicable and some asserted inequality is false.
  bool failed() const { return applicable && !conclusion_holds(); }

  void check(std::string label, Rational lhs, Relation rel, Rational rhs) { checks.push_back(make_check(std::move(label), lhs, rel, rhs)); }
};

inline Verdict inapplicable(std::string statement, std::string why) {
  Verdict v;
  v.statement = std::move(statement);
  v.applicable = false;
  v.notes.push_back(std::move(why));
  return v;
}

inline std::int64_t to_i64(std::size_t x) { return static_cast<std::int64_t>(x); }

/// |U| = q, vertical direction not determined: s = 1 with (q+3)/2 <= |D| <= q,
/// or GF(s) a subfield with q/s + 1 <= |D| <= (q-1)/(s-1), or s = q with
/// |D| = 1; for s > 2 the set is GF(s)-linear.
inline Verdict classify_ball(const AffinePointSet& u) {
  const std::string id = "thm-ball";
  const Field& f = u.field();
  const std::int64_t q = f.q();
  if (to_i64(u.size()) != q) return inapplicable(id, "requires |U| = q");
  const auto moved = move_infinity_out(u);
  if (!moved) return inapplicable(id, "U determines every direction");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  if (moved->changed) v.notes.push_back("collineation applied to make the vertical direction undetermined");
  const auto& w = moved->set;
  const auto d = directions_of(w);
  const std::int64_t s = *geometric_invariants(w).s;
  const std::int64_t nd = to_i64(d.size());
  v.values = {{"n", to_i64(u.size())}, {"D", nd}, {"s", s}};
  v.check("vertical direction undetermined", d.contains_infinity() ? 1 : 0, Relation::kEq, 0);
  if (s == 1) {
    v.case_matched = "s=1";
    v.check("(q+3)/2 <= |D|", Rational(q + 3, 2), Relation::kLe, nd);
    v.check("|D| <= q", nd, Relation::kLe, q);
  } else if (s == q) {
    v.case_matched = "s=q";
    v.check("|D| = 1", nd, Relation::kEq, 1);
  } else {
    v.case_matched = "GF(s) subfield";
    v.check("GF(s) is a subfield of GF(q)", is_subfield_order(f, s) ? 1 : 0, Relation::kEq, 1);
    v.check("q/s + 1 <= |D|", Rational(q, s) + 1, Relation::kLe, nd);
    v.check("|D| <= (q-1)/(s-1)", nd, Relation::kLe, Rational(q - 1, s - 1));
  }
  if (s > 2) {
    const bool linear = is_subfield_order(f, s) && is_gf_s_linear(w, static_cast<std::uint32_t>(s)).linear;
    v.check("U is GF(s)-linear", linear ? 1 : 0, Relation::kEq, 1);
  }
  return v;
}

/// q = p prime, 1 < |U| <= p, vertical direction not determined: either
/// (|U|+3)/2 <= |D| <= p, or U is collinear and |D| = 1.
inline Verdict classify_szonyi_blokhuis(const AffinePointSet& u) {
  const std::string id = "thm-sztaab";
  const Field& f = u.field();
  if (f.h() != 1) return inapplicable(id, "requires q prime");
  const std::int64_t p = f.p();
  const std::int64_t n = to_i64(u.size());
  if (n <= 1 || n > p) return inapplicable(id, "requires 1 < |U| <= p");
  const auto moved = move_infinity_out(u);
  if (!moved) return inapplicable(id, "U determines every direction");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  if (moved->changed) v.notes.push_back("collineation applied to make the vertical direction undetermined");
  const auto d = directions_of(moved->set);
  const std::int64_t nd = to_i64(d.size());
  v.values = {{"n", n}, {"D", nd}};
  if (nd == 1) {
    v.case_matched = "collinear";
    v.check("|D| = 1", nd, Relation::kEq, 1);
  } else {
    v.case_matched = "spread";
    v.check("(|U|+3)/2 <= |D|", Rational(n + 3, 2), Relation::kLe, nd);
    v.check("|D| <= p", nd, Relation::kLe, p);
    if (Rational(nd) == Rational(n + 3, 2)) v.notes.push_back("sharp");
  }
  return v;
}

/// Bounds in terms of s and t with the vertical direction determined:
/// 1 = s <= t < q and (|U|-1)/(t+1) + 2 <= |D| <= q+1;
/// 1 < s <= t < q and (|U|-1)/(t+1) + 2 <= |D| <= (|U|-1)/(s-1);
/// t = q and D = {vertical}.
/// Also checks the two lemmas the lower bound rests on and the point-counting
/// identity behind the upper bound.
inline Verdict classify_thm_m(const AffinePointSet& u) {
  const std::string id = "thm-m";
  const Field& f = u.field();
  const std::int64_t q = f.q();
  const std::int64_t n = to_i64(u.size());
  if (n > q) return inapplicable(id, "requires |U| <= q");
  const auto d0 = directions_of(u);
  if (d0.empty()) return inapplicable(id, "U determines no direction");
  if (d0.is_full()) return inapplicable(id, "no undetermined direction");
  const auto canon = canonicalize_infinity(u);
  const auto& w = canon.set;
  Verdict v;
  v.statement = id;
  v.applicable = true;
  if (canon.changed) v.notes.push_back("collineation applied to make the vertical direction determined");
  const auto sys = divide_xq(w);
  const auto ai = t_of_set(sys);
  const std::int64_t s = *ai.s;
  const std::int64_t t = ai.t;
  const std::int64_t nd = to_i64(sys.d.size());
  v.values = {{"n", n}, {"D", nd}, {"s", s}, {"t", t}, {"degXH", ai.deg_x_h}};
  v.check("s <= t", s, Relation::kLe, t);
  for (const auto& di : ai.per_direction)
    v.check("s(y) <= t(y) at y=" + di.y.to_string(), std::int64_t{di.s}, Relation::kLe, std::int64_t{di.t});
  const Rational lower = Rational(n - 1, t + 1) + 2;
  if (t == q) {
    v.case_matched = "t=q";
    v.check("|D| = 1", nd, Relation::kEq, 1);
    v.check("vertical direction determined", sys.d.contains_infinity() ? 1 : 0, Relation::kEq, 1);
  } else if (s == 1) {
    v.case_matched = "s=1";
    v.check("(|U|-1)/(t+1) + 2 <= |D|", lower, Relation::kLe, nd);
    v.check("|D| <= q+1", nd, Relation::kLe, q + 1);
  } else {
    v.case_matched = "1<s";
    v.check("(|U|-1)/(t+1) + 2 <= |D|", lower, Relation::kLe, nd);
    v.check("|D| <= (|U|-1)/(s-1)", nd, Relation::kLe, Rational(n - 1, s - 1));
    // Lines joining a point of U to the determined directions.
    const Point p0 = w.points().front();
    std::int64_t sum = 0, off = 0;
    for (const auto& y : sys.d.directions()) {
      const auto counts = line_profile(w, y);
      const std::int64_t c = counts[line_index(f, p0, y)];
      sum += c - 1;
      if (c % s != 0) ++off;
    }
    v.check("sum over D of (|l ∩ U| - 1) through a point = |U| - 1", sum, Relation::kEq, n - 1);
    v.check("lines through a point not meeting U in a multiple of s", off, Relation::kEq, 0);
  }
  if (t < q) v.check("t < q", t, Relation::kLt, q);
  // Needs an affine determined direction as well; with D = {vertical}, H = -X.
  if (nd >= 2) v.check("|D| >= deg_X H + 1", nd, Relation::kGe, std::int64_t{ai.deg_x_h} + 1);
  for (const auto& di : ai.per_direction) {
    const Poly hy = sys.h.specialize(di.y.slope());
    if (hy.is_constant() || hy == -Poly::x(f)) continue;
    const std::string at = " at y=" + di.y.to_string();
    const std::int64_t ty = di.t;
    const std::int64_t deg_f = di.f ? di.f->degree() : 0;
    v.check("(kappa+t(y))/(t(y)+1) <= t(y) deg f_y" + at, Rational(std::int64_t{di.kappa} + ty, ty + 1), Relation::kLe, ty * deg_f);
    v.check("t(y) deg f_y = deg_X H(X,y)" + at, ty * deg_f, Relation::kEq, std::int64_t{di.deg_x_h_y});
    v.check("deg_X H(X,y) <= deg_X H" + at, std::int64_t{di.deg_x_h_y}, Relation::kLe, std::int64_t{ai.deg_x_h});
    v.check("kappa(y) >= |U|" + at, std::int64_t{di.kappa}, Relation::kGe, n);
  }
  return v;
}

/// Lines of PG(2,q) meet U ∪ D in 0 or 1 (mod s) points, |U| ≡ 0 and |D| ≡ 1 (mod s); needs s >= p.
inline Verdict verdict_one_mod_s(const AffinePointSet& u) {
  const std::string id = "rem-1mods";
  const auto rep = check_one_mod_s(u);
  if (!rep.applicable) return inapplicable(id, rep.reason);
  Verdict v;
  v.statement = id;
  v.applicable = true;
  const std::int64_t s = rep.s;
  std::int64_t bad = 0;
  for (const auto& l : rep.lines)
    if (!l.pass) ++bad;
  const std::int64_t nd = to_i64(directions_of(u).size());
  v.values = {{"n", to_i64(u.size())}, {"D", nd}, {"s", s}};
  v.check("lines meeting U ∪ D in neither 0 nor 1 (mod s) points", bad, Relation::kEq, 0);
  v.check("|U| mod s", to_i64(u.size()) % s, Relation::kEq, 0);
  v.check("|D| mod s", nd % s, Relation::kEq, 1 % s);
  return v;
}

namespace detail {

inline std::optional<Verdict> redei_gate(const std::string& id, const AffinePointSet& u) {
  if (u.empty()) return inapplicable(id, "U is empty");
  if (u.size() > u.field().q()) return inapplicable(id, "requires |U| <= q");
  return std::nullopt;
}

}  // namespace detail

/// R(X,y) structure for every affine y (membership for determined, divisibility otherwise).
inline Verdict verdict_r_structure(const AffinePointSet& u) {
  const std::string id = "prop-r";
  if (auto gate = detail::redei_gate(id, u)) return *gate;
  Verdict v;
  v.statement = id;
  v.applicable = true;
  std::int64_t bad = 0;
  for (std::uint32_t y = 0; y < u.field().q(); ++y) {
    const auto r = check_r_structure(u, Direction::slope(Elem{y}));
    if (!r.holds) {
      ++bad;
      v.notes.push_back("y=" + std::to_string(y) + ": " + r.detail);
    }
  }
  v.check("directions violating the R(X,y) structure", bad, Relation::kEq, 0);
  return v;
}

inline Verdict verdict_prop_es(const AffinePointSet& u) {
  const std::string id = "prop-es";
  if (auto gate = detail::redei_gate(id, u)) return *gate;
  Verdict v;
  v.statement = id;
  v.applicable = true;
  const auto r = check_prop_es(divide_xq(u));
  v.notes = r.failures;
  v.check("failed Q/H membership conditions", to_i64(r.failures.size()), Relation::kEq, 0);
  return v;
}

/// t over the affine determined directions (q when there is none).
inline std::uint32_t aggregate_t(const RedeiSystem& sys) { return t_of_set(sys).t; }

inline Verdict verdict_prop_lin(const AffinePointSet& u) {
  const std::string id = "prop-lin";
  if (auto gate = detail::redei_gate(id, u)) return *gate;
  const auto sys = divide_xq(u);
  if (sys.d.empty()) return inapplicable(id, "U determines no direction");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  const auto t = aggregate_t(sys);
  const auto r = check_prop_lin(sys, t);
  v.values = {{"t", t}};
  v.notes = r.failures;
  v.check("exponents of X^q + H outside {0,1} ∪ tZ", to_i64(r.failures.size()), Relation::kEq, 0);
  return v;
}

inline Verdict verdict_s_le_t(const AffinePointSet& u) {
  const std::string id = "s-le-t";
  if (auto gate = detail::redei_gate(id, u)) return *gate;
  const auto sys = divide_xq(u);
  if (sys.d.empty()) return inapplicable(id, "U determines no direction");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  const auto ai = t_of_set(sys);
  if (ai.infinity_determined) v.notes.push_back("t taken over affine directions; the vertical direction is determined");
  v.values = {{"n", to_i64(u.size())}, {"D", to_i64(sys.d.size())}, {"s", *ai.s}, {"t", ai.t}, {"degXH", ai.deg_x_h}};
  v.check("s <= t", std::int64_t{*ai.s}, Relation::kLe, std::int64_t{ai.t});
  for (const auto& di : ai.per_direction)
    v.check("s(y) <= t(y) at y=" + di.y.to_string(), std::int64_t{di.s}, Relation::kLe, std::int64_t{di.t});
  return v;
}

struct ExtensionResult {
  bool f_exists = false;
  Poly f, quotient, h, r;  // X^q = (g f) h + r, quotient = X^q div g
  Verdict verdict;
};

namespace detail {

/// Solves A x = b over the field; returns a solution with free variables 0.
inline std::optional<Vec> solve_linear(const Field& fl, Matrix a, Vec b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  for (std::size_t r = 0; r < rows; ++r) a[r].push_back(b[r]);
  std::size_t row = 0;
  std::vector<std::size_t> pivcol;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t piv = row;
    while (piv < rows && a[piv][c] == Field::zero()) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    a[row] = vec::scale(fl, fl.inv(a[row][c]), a[row]);
    for (std::size_t r = 0; r < rows; ++r)
      if (r != row && a[r][c] != Field::zero()) a[r] = vec::sub(fl, a[r], vec::scale(fl, a[r][c], a[row]));
    pivcol.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r)
    if (a[r][cols] != Field::zero()) return std::nullopt;
  Vec x(cols, Field::zero());
  for (std::size_t r = 0; r < pivcol.size(); ++r) x[pivcol[r]] = a[r][cols];
  return x;
}

inline bool is_power_of(std::uint64_t x, std::uint64_t p) {
  if (x == 0) return false;
  while (x % p == 0) x /= p;
  return x == 1;
}

}  // namespace detail

/// Least-degree monic f with deg f <= s-1 and g f in F[X^s], if any.
inline std::optional<Poly> find_extension_factor(const Poly& g, std::uint64_t s) {
  const Field& fl = g.field();
  const std::size_t dg = static_cast<std::size_t>(g.degree());
  for (std::size_t k = 0; k < s; ++k) {
    // Unknowns f_0 .. f_{k-1}; f_k = 1. Rows: exponents i of g f with s ∤ i.
    Matrix a;
    Vec b;
    for (std::size_t i = 0; i <= dg + k; ++i) {
      if (i % s == 0) continue;
      Vec row(k, Field::zero());
      for (std::size_t j = 0; j < k; ++j)
        if (i >= j && i - j <= dg) row[j] = g.coeff(i - j);
      a.push_back(row);
      b.push_back(i >= k && i - k <= dg ? fl.neg(g.coeff(i - k)) : Field::zero());
    }
    std::optional<Vec> sol = k == 0 ? (std::all_of(b.begin(), b.end(), [](Elem e) { return e == Field::zero(); }) ? std::optional<Vec>(Vec{}) : std::nullopt)
                                    : detail::solve_linear(fl, a, b);
    if (!sol) continue;
    Vec coeffs = *sol;
    coeffs.push_back(Field::one());
    return Poly(fl, coeffs);
  }
  return std::nullopt;
}

/// For g with some f (deg f <= s-1, g f in F[X^s]): X^q div g extends g into F[X^s].
inline ExtensionResult extension_oracle(const Poly& g, std::uint64_t s, std::uint64_t q) {
  const Field& fl = g.field();
  if (g.is_zero()) throw std::invalid_argument("g must be nonzero");
  if (!detail::is_power_of(s, fl.p()) || !detail::is_power_of(q, fl.p()) || s > q)
    throw std::invalid_argument("s and q must be powers of the characteristic with s <= q");
  ExtensionResult res;
  res.verdict.statement = "thm-egydim";
  const Poly xq = Poly::monomial(fl, Field::one(), q);
  res.quotient = xq / g;
  auto f = find_extension_factor(g, s);
  if (!f) {
    res.verdict.applicable = false;
    res.verdict.notes.push_back("no f with deg f <= s-1 and g f in F[X^s]");
    return res;
  }
  res.f_exists = true;
  res.f = *f;
  res.verdict.applicable = true;
  const Poly gf = g * res.f;
  auto [hq, r] = divmod(xq, gf);
  res.h = hq;
  res.r = r;
  auto& v = res.verdict;
  v.values = {{"deg g", g.degree()}, {"deg f", res.f.degree()}, {"s", static_cast<std::int64_t>(s)}, {"q", static_cast<std::int64_t>(q)}};
  v.check("g f in F[X^s]", gf.in_power_ring(s) ? 1 : 0, Relation::kEq, 1);
  v.check("(X^q div gf) in F[X^s]", res.h.in_power_ring(s) ? 1 : 0, Relation::kEq, 1);
  v.check("(X^q mod gf) in F[X^s]", res.r.in_power_ring(s) ? 1 : 0, Relation::kEq, 1);
  v.check("deg(X^q mod gf) < deg g", res.r.degree(), Relation::kLt, g.degree());
  v.check("X^q div g = f (X^q div gf)", res.quotient == res.f * res.h ? 1 : 0, Relation::kEq, 1);
  v.check("g (X^q div g) in F[X^s]", (g * res.quotient).in_power_ring(s) ? 1 : 0, Relation::kEq, 1);
  return res;
}

/// Maximal U: t(y) = s(y) for every affine determined y with 2 < t(y) < q.
inline Verdict conjecture_s_equals_t(const AffinePointSet& u) {
  const std::string id = "conj-1";
  if (u.size() > u.field().q()) return inapplicable(id, "requires |U| <= q");
  if (u.empty()) return inapplicable(id, "U is empty");
  if (!is_maximal(u)) return inapplicable(id, "U is not maximal");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  v.notes.push_back("affine directions only");
  const auto sys = divide_xq(u);
  if (sys.d.empty()) return v;
  const auto ai = t_of_set(sys);
  v.values = {{"n", to_i64(u.size())}, {"D", to_i64(sys.d.size())}, {"s", *ai.s}, {"t", ai.t}};
  for (const auto& di : ai.per_direction) {
    if (di.t <= 2 || di.t >= u.field().q()) continue;
    v.check("t(y) = s(y) at y=" + di.y.to_string(), std::int64_t{di.t}, Relation::kEq, std::int64_t{di.s});
  }
  return v;
}

/// Maximal U with t = s > 2 is GF(s)-linear.
inline Verdict conjecture_linearity(const AffinePointSet& u) {
  const std::string id = "conj-2";
  if (u.size() > u.field().q()) return inapplicable(id, "requires |U| <= q");
  if (u.size() < 2) return inapplicable(id, "U determines no direction");
  if (!is_maximal(u)) return inapplicable(id, "U is not maximal");
  const auto sys = divide_xq(u);
  const auto ai = t_of_set(sys);
  if (!(ai.t == *ai.s && ai.t > 2)) return inapplicable(id, "requires t = s > 2");
  Verdict v;
  v.statement = id;
  v.applicable = true;
  v.values = {{"n", to_i64(u.size())}, {"D", to_i64(sys.d.size())}, {"s", *ai.s}, {"t", ai.t}};
  const bool sub = is_subfield_order(u.field(), *ai.s);
  const auto w = sub ? is_gf_s_linear(u, *ai.s) : LinearityWitness{};
  v.check("U is GF(s)-linear", w.linear ? 1 : 0, Relation::kEq, 1);
  if (w.linear) {
    std::string gens;
    for (const auto& g : w.generators) gens += " (" + std::to_string(g.a.v) + "," + std::to_string(g.b.v) + ")";
    v.notes.push_back("generators:" + gens);
  }
  return v;
}

inline const std::vector<std::string>& statement_ids() {
  static const std::vector<std::string> ids = {"thm-ball", "thm-sztaab", "thm-m", "rem-1mods", "prop-r", "prop-es", "prop-lin", "s-le-t", "conj-1", "conj-2"};
  return ids;
}

/// Dispatches a statement id to its verdict function.
inline Verdict evaluate(const std::string& statement, const AffinePointSet& u) {
  if (statement == "thm-ball") return classify_ball(u);
  if (statement == "thm-sztaab") return classify_szonyi_blokhuis(u);
  if (statement == "thm-m") return classify_thm_m(u);
  if (statement == "rem-1mods") return verdict_one_mod_s(u);
  if (statement == "prop-r") return verdict_r_structure(u);
  if (statement == "prop-es") return verdict_prop_es(u);
  if (statement == "prop-lin") return verdict_prop_lin(u);
  if (statement == "s-le-t") return verdict_s_le_t(u);
  if (statement == "conj-1") return conjecture_s_equals_t(u);
  if (statement == "conj-2") return conjecture_linearity(u);
  throw std::invalid_argument("unknown statement '" + statement + "'");
}

/// Embeds a point set of AG(2, small) into AG(2, big) through the subfield embedding.
inline AffinePointSet embed_plane_set(const AffinePointSet& u, const Field& big) {
  const Field& small = u.field();
  if (big.p() != small.p() || big.h() % small.h() != 0) throw std::invalid_argument("not a subfield");
  const auto sub = subfield(big, small.h());
  std::vector<Point> pts;
  for (const auto& pt : u.points()) pts.push_back({sub.embedding[pt.a.v], sub.embedding[pt.b.v]});
  return AffinePointSet(big, std::move(pts));
}

struct MaximalityExample {
  std::string name;
  AffinePointSet small_set;  // in the subplane
  AffinePointSet set;        // in the larger plane
  Verdict verdict;
};

struct MaximalityReport {
  std::vector<MaximalityExample> examples;
  bool holds() const {
    return std::all_of(examples.begin(), examples.end(), [](const MaximalityExample& e) { return e.verdict.applicable && e.verdict.conclusion_holds(); });
  }
};

/// First q-point set of AG(2,q) (codec order) with s = 1 and (q+3)/2 <= |D| <= q.
inline std::optional<AffinePointSet> find_nonlinear_q_set(const Field& f) {
  const std::uint32_t q = f.q();
  const std::uint32_t total = q * q;
  std::vector<std::uint32_t> idx(q);
  for (std::uint32_t i = 0; i < q; ++i) idx[i] = i;
  while (true) {
    const auto u = AffinePointSet::from_codes(f, idx);
    const auto gi = geometric_invariants(u);
    const auto nd = gi.determined.size();
    if (gi.s && *gi.s == 1 && 2 * nd >= q + 3 && nd <= q) return u;
    // next combination
    std::int64_t i = q - 1;
    while (i >= 0 && idx[i] == total - q + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (std::uint32_t j = i + 1; j < q; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Reproduces the two maximality examples: a non-linear maximal set of q
/// points embedded into AG(2,q^2), and a GF(s)-linear set inside a subplane
/// AG(2,s^i) of AG(2,s^(ij)) with more than s^i points, which determines the
/// subplane's directions without being maximal.
inline MaximalityReport reproduce_maximality_examples() {
  MaximalityReport rep;
  for (std::uint32_t q0 : {4u, 5u}) {
    const Field small = make_field_of_order(q0);
    const Field big = make_field(small.p(), small.h() * 2);
    MaximalityExample ex;
    ex.name = "non-linear maximal set, q=" + std::to_string(q0) + " in AG(2," + std::to_string(big.q()) + ")";
    auto& v = ex.verdict;
    v.statement = "example-nonlinear-maximal";
    auto found = find_nonlinear_q_set(small);
    if (!found) {
      v.applicable = false;
      v.notes.push_back("no q-point set with s = 1 found");
      rep.examples.push_back(std::move(ex));
      continue;
    }
    v.applicable = true;
    ex.small_set = *found;
    ex.set = embed_plane_set(*found, big);
    const auto gi_small = geometric_invariants(ex.small_set);
    const auto d_small = gi_small.determined.size();
    v.values = {{"q", q0}, {"n", to_i64(ex.small_set.size())}, {"D", to_i64(d_small)}, {"s", *gi_small.s}};
    v.check("s = 1", std::int64_t{*gi_small.s}, Relation::kEq, 1);
    v.check("(q+3)/2 <= |D|", Rational(q0 + 3, 2), Relation::kLe, to_i64(d_small));
    v.check("|D| <= q", to_i64(d_small), Relation::kLe, q0);
    v.check("maximal in AG(2,q)", is_maximal(ex.small_set) ? 1 : 0, Relation::kEq, 1);
    v.check("maximal in AG(2,q^2)", is_maximal(ex.set) ? 1 : 0, Relation::kEq, 1);
    v.check("|U| < q^2", to_i64(ex.set.size()), Relation::kLt, big.q());
    for (const auto& sf : subfields(big))
      v.check("not GF(" + std::to_string(sf.order) + ")-linear", is_gf_s_linear(ex.set, sf.order).linear ? 1 : 0, Relation::kEq, 0);
    rep.examples.push_back(std::move(ex));
  }
  {
    // s = 2, i = 2, j = 2: AG(2,4) inside AG(2,16).
    const Field small = make_field(2, 2);
    const Field big = make_field(2, 4);
    MaximalityExample ex;
    ex.name = "non-maximal GF(2)-linear set in AG(2,4) inside AG(2,16)";
    auto& v = ex.verdict;
    v.statement = "example-nonmaximal-linear";
    v.applicable = true;
    // GF(2)-span of (1,0), (w,0), (0,1): rank 3, 8 > 4 points.
    AffineLinearSpec spec{small, 2, 2, {{Elem{1}, Elem{0}}, {Elem{2}, Elem{0}}, {Elem{0}, Elem{1}}}, {}};
    ex.small_set = build_affine_linear_plane(spec);
    ex.set = embed_plane_set(ex.small_set, big);
    const auto subplane = embed_plane_set(AffinePointSet(small, all_points(small)), big);
    const auto du = directions_of(ex.set);
    const auto ds = directions_of(subplane);
    v.values = {{"n", to_i64(ex.set.size())}, {"D", to_i64(du.size())}};
    v.check("|U| > s^i", to_i64(ex.set.size()), Relation::kGe, 5);
    v.check("U is GF(2)-linear", is_gf_s_linear(ex.set, 2).linear ? 1 : 0, Relation::kEq, 1);
    v.check("D(U) = D(subplane)", du == ds ? 1 : 0, Relation::kEq, 1);
    v.check("U is maximal", is_maximal(ex.set) ? 1 : 0, Relation::kEq, 0);
    rep.examples.push_back(std::move(ex));
  }
  return rep;
}

}  // namespace redei
