#pragma once

// Dense univariate polynomials over GF(q), and bivariate polynomials stored
// as univariate polynomials in X whose coefficients are polynomials in Y.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "redei/field.hpp"

namespace redei {

class Poly {
 public:
  Poly() = default;
  explicit Poly(Field f) : f_(std::move(f)) {}
  Poly(Field f, std::vector<Elem> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (Elem e : c_)
      if (e.v >= f_.q()) throw std::out_of_range("polynomial coefficient outside field");
    normalize();
  }

  static Poly constant(const Field& f, Elem c) { return Poly(f, {c}); }
  static Poly monomial(const Field& f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, Field::zero());
    v[degree] = c;
    return Poly(f, std::move(v));
  }
  static Poly x(const Field& f) { return monomial(f, Field::one(), 1); }

  const Field& field() const { return f_; }
  const std::vector<Elem>& coeffs() const { return c_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Field::zero(); }
  Elem lead() const { return c_.empty() ? Field::zero() : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == Field::one(); }

  Elem eval(Elem x) const {
    Elem acc = Field::zero();
    for (std::size_t i = c_.size(); i-- > 0;) acc = f_.add(f_.mul(acc, x), c_[i]);
    return acc;
  }

  /// True when every monomial exponent is a multiple of k, i.e. P in F[X^k].
  bool in_power_ring(std::uint64_t k) const {
    if (k <= 1) return true;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != Field::zero() && i % k != 0) return false;
    return true;
  }

  Poly derivative() const {
    std::vector<Elem> out;
    for (std::size_t i = 1; i < c_.size(); ++i) out.push_back(f_.mul(f_.from_integer(static_cast<std::int64_t>(i % f_.p())), c_[i]));
    return Poly(f_, std::move(out));
  }

  Poly scaled(Elem a) const {
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.mul(a, c_[i]);
    return Poly(f_, std::move(out));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(f_.inv(lead()));
  }

  Poly operator-() const {
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = f_.neg(c_[i]);
    return Poly(f_, std::move(out));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check_same(a, b);
    const Field& f = a.f_;
    std::vector<Elem> out(std::max(a.c_.size(), b.c_.size()), Field::zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a.coeff(i), b.coeff(i));
    return Poly(f, std::move(out));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

  friend Poly operator*(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.f_);
    const Field& f = a.f_;
    std::vector<Elem> out(a.c_.size() + b.c_.size() - 1, Field::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == Field::zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(f, std::move(out));
  }

  Poly pow(std::uint64_t e) const {
    Poly result = constant(f_, Field::one());
    Poly base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      e >>= 1;
      if (e > 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error for a zero divisor.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    check_same(a, b);
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& f = a.f_;
    std::vector<Elem> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (rem.size() < b.c_.size()) return {Poly(f), a};
    std::vector<Elem> quo(rem.size() - db, Field::zero());
    const Elem lead_inv = f.inv(b.lead());
    for (std::size_t k = rem.size(); k-- > db;) {
      const Elem factor = f.mul(rem[k], lead_inv);
      if (factor == Field::zero()) continue;
      quo[k - db] = factor;
      for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(factor, b.c_[i]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
  }

  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  /// Monic gcd (zero when both inputs are zero).
  friend Poly gcd(Poly a, Poly b) {
    check_same(a, b);
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// For P in F[X^tau] with tau a power of p dividing q: the f with f^tau = P.
  Poly power_root(std::uint64_t tau) const {
    if (!in_power_ring(tau)) throw std::invalid_argument("polynomial is not in F[X^tau]");
    if (tau == 1) return *this;
    if (f_.q() % tau != 0) throw std::invalid_argument("root order must divide the field order");
    const std::uint64_t e = f_.q() / tau;  // c -> c^(q/tau) inverts c -> c^tau
    std::vector<Elem> out(c_.empty() ? 0 : (c_.size() - 1) / tau + 1, Field::zero());
    for (std::size_t i = 0; i < c_.size(); i += tau) out[i / tau] = f_.pow(c_[i], e);
    return Poly(f_, std::move(out));
  }

  /// Multiplicity of x as a root (0 when P(x) != 0); the zero polynomial throws.
  std::size_t root_multiplicity(Elem x) const {
    if (is_zero()) throw std::domain_error("root multiplicity of the zero polynomial");
    std::vector<Elem> cur = c_;
    std::size_t mult = 0;
    while (cur.size() > 1) {
      // Synthetic division by (X - x).
      std::vector<Elem> quo(cur.size() - 1);
      Elem carry = Field::zero();
      for (std::size_t i = cur.size(); i-- > 0;) {
        const Elem v = f_.add(cur[i], f_.mul(carry, x));
        if (i == 0) {
          if (v != Field::zero()) return mult;
        } else {
          quo[i - 1] = v;
        }
        carry = v;
      }
      ++mult;
      cur = std::move(quo);
    }
    return mult;
  }

  /// Sparse text form "c X^i" terms, exponents descending, coefficients by codec.
  std::string to_string(const char* var = "X") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == Field::zero()) continue;
      if (!out.empty()) out += " + ";
      out += std::to_string(c_[i].v) + " " + var + "^" + std::to_string(i);
    }
    return out;
  }

 private:
  static void check_same(const Poly& a, const Poly& b) {
    if (!(a.f_ == b.f_)) throw std::invalid_argument("polynomials over different fields");
  }
  void normalize() {
    while (!c_.empty() && c_.back() == Field::zero()) c_.pop_back();
  }

  Field f_;
  std::vector<Elem> c_;
};

/// X^q - X over the given field.
inline Poly x_pow_q_minus_x(const Field& f) {
  return Poly::monomial(f, Field::one(), f.q()) - Poly::x(f);
}

/// True when P splits into distinct linear factors over GF(q), i.e. P | X^q - X.
inline bool divides_x_pow_q_minus_x(const Poly& p) {
  if (p.is_zero()) return false;
  return (x_pow_q_minus_x(p.field()) % p).is_zero();
}

/// Polynomial in X with coefficients in GF(q)[Y]; coefficient i belongs to X^i.
class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(Field f) : f_(std::move(f)) {}
  BiPoly(Field f, std::vector<Poly> coeffs) : f_(std::move(f)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
      if (!(c.field() == f_)) throw std::invalid_argument("bivariate coefficient over a different field");
    normalize();
  }

  /// c * X^i * Y^j.
  static BiPoly term(const Field& f, Elem c, std::size_t i, std::size_t j) {
    std::vector<Poly> v(i + 1, Poly(f));
    v[i] = Poly::monomial(f, c, j);
    return BiPoly(f, std::move(v));
  }

  const Field& field() const { return f_; }
  const std::vector<Poly>& coeffs() const { return c_; }
  int degree_x() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Total degree (-1 for zero).
  int total_degree() const {
    int best = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!c_[i].is_zero()) best = std::max(best, static_cast<int>(i) + c_[i].degree());
    return best;
  }

  /// Coefficient of X^i as a polynomial in Y.
  Poly coeff_x(std::size_t i) const { return i < c_.size() ? c_[i] : Poly(f_); }

  /// Coefficient-wise evaluation at Y = y.
  Poly specialize(Elem y) const {
    std::vector<Elem> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i].eval(y);
    return Poly(f_, std::move(out));
  }

  BiPoly operator-() const {
    std::vector<Poly> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(-c);
    return BiPoly(f_, std::move(out));
  }

  friend BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    std::vector<Poly> out(std::max(a.c_.size(), b.c_.size()), Poly(a.f_));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a.coeff_x(i) + b.coeff_x(i);
    return BiPoly(a.f_, std::move(out));
  }
  friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }

  friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return BiPoly(a.f_);
    std::vector<Poly> out(a.c_.size() + b.c_.size() - 1, Poly(a.f_));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
    }
    return BiPoly(a.f_, std::move(out));
  }

  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.f_ == b.f_ && a.c_ == b.c_; }

  /// Division in GF(q)[Y][X] by a divisor monic in X; exact over the
  /// coefficient ring because no coefficient inversion is needed.
  friend std::pair<BiPoly, BiPoly> divmod_monic(const BiPoly& a, const BiPoly& b) {
    check_same(a, b);
    if (b.is_zero() || !(b.c_.back() == Poly::constant(b.f_, Field::one())))
      throw std::invalid_argument("divisor must be monic in X");
    const Field& f = a.f_;
    std::vector<Poly> rem = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (rem.size() < b.c_.size()) return {BiPoly(f), a};
    std::vector<Poly> quo(rem.size() - db, Poly(f));
    for (std::size_t k = rem.size(); k-- > db;) {
      const Poly factor = rem[k];
      if (factor.is_zero()) continue;
      quo[k - db] = factor;
      for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = rem[k - db + i] - factor * b.c_[i];
    }
    rem.resize(db);
    return {BiPoly(f, std::move(quo)), BiPoly(f, std::move(rem))};
  }

  /// Sparse term list "c X^i Y^j", sorted by (i desc, j desc).
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      const auto& yc = c_[i].coeffs();
      for (std::size_t j = yc.size(); j-- > 0;) {
        if (yc[j] == Field::zero()) continue;
        if (!out.empty()) out += " + ";
        out += std::to_string(yc[j].v) + " X^" + std::to_string(i) + " Y^" + std::to_string(j);
      }
    }
    return out;
  }

 private:
  static void check_same(const BiPoly& a, const BiPoly& b) {
    if (!(a.f_ == b.f_)) throw std::invalid_argument("polynomials over different fields");
  }
  void normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Field f_;
  std::vector<Poly> c_;
};

}  // namespace redei
