#pragma once

// Exact arithmetic in GF(p^h) over a polynomial basis.
//
// Elements are stored by their integer codec: the base-p digits of the codec
// are the coefficients of the basis powers 1, x, x^2, ... (digit i belongs to
// x^i). The defining modulus is the lexicographically smallest monic
// irreducible of degree h, comparing coefficient tuples from the constant
// term upwards, so a given (p, h) always yields the same field.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace redei {

inline constexpr std::uint32_t kDefaultMaxOrder = 1u << 20;

/// Field element by integer codec. Carries no field; arithmetic goes through Field.
struct Elem {
  std::uint32_t v = 0;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// Polynomials over GF(p) as coefficient vectors, low degree first. Only used
// while bootstrapping a field (modulus search, primitive element, tables).
using PrimePoly = std::vector<std::uint32_t>;

inline void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t qt = r / nr;
    t = std::exchange(nt, t - qt * nt);
    r = std::exchange(nr, r - qt * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Remainder of a modulo b over GF(p); b nonzero.
inline PrimePoly prime_poly_mod(PrimePoly a, const PrimePoly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

inline bool is_irreducible(const PrimePoly& m, std::uint32_t p) {
  const std::size_t h = m.size() - 1;
  if (h <= 1) return true;
  // Trial division by every monic polynomial of degree 1..h/2.
  for (std::size_t deg = 1; deg <= h / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    PrimePoly d(deg + 1, 0);
    d[deg] = 1;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::uint64_t rest = idx;
      for (std::size_t i = 0; i < deg; ++i) {
        d[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      if (prime_poly_mod(m, d, p).empty()) return false;
    }
  }
  return true;
}

inline PrimePoly smallest_irreducible(std::uint32_t p, std::uint32_t h) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  PrimePoly m(h + 1, 0);
  m[h] = 1;
  // idx enumerates tuples (c_0, ..., c_{h-1}) with c_0 most significant.
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (std::uint32_t k = 0; k < h; ++k) {
      m[h - 1 - k] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");
}

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  std::uint32_t q = 0;
  PrimePoly modulus;                   // monic, length h + 1
  std::vector<std::uint32_t> exp_tab;  // exp_tab[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log_tab;  // log_tab[a] for a != 0
  std::vector<std::uint16_t> add_tab;  // q*q when p odd and q small
  std::vector<std::uint32_t> neg_tab;
  std::vector<std::uint32_t> pow_p;    // p^i for i <= h

  std::uint32_t add_digits(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < h; ++i) {
      const std::uint32_t da = a % p, db = b % p;
      a /= p;
      b /= p;
      out += ((da + db) % p) * pow_p[i];
    }
    return out;
  }

  std::uint32_t neg_digits(std::uint32_t a) const {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < h; ++i) {
      const std::uint32_t da = a % p;
      a /= p;
      out += ((p - da) % p) * pow_p[i];
    }
    return out;
  }

  // Schoolbook product modulo the modulus; bootstrap only.
  std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b) const {
    PrimePoly pa(h, 0), pb(h, 0);
    for (std::uint32_t i = 0; i < h; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    PrimePoly prod(2 * h, 0);
    for (std::uint32_t i = 0; i < h; ++i)
      for (std::uint32_t j = 0; j < h; ++j)
        prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{pa[i]} * pb[j]) % p);
    prod = prime_poly_mod(prod, modulus, p);
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < prod.size(); ++i) out += prod[i] * pow_p[i];
    return out;
  }
};

inline std::shared_ptr<const FieldData> build_field(std::uint32_t p, std::uint32_t h) {
  auto d = std::make_shared<FieldData>();
  d->p = p;
  d->h = h;
  d->pow_p.resize(h + 1);
  d->pow_p[0] = 1;
  for (std::uint32_t i = 1; i <= h; ++i) d->pow_p[i] = d->pow_p[i - 1] * p;
  d->q = d->pow_p[h];
  const std::uint32_t q = d->q;
  d->modulus = smallest_irreducible(p, h);

  d->neg_tab.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) d->neg_tab[a] = d->neg_digits(a);
  if (p != 2 && h > 1 && q <= 1024) {
    d->add_tab.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        d->add_tab[std::size_t{a} * q + b] = static_cast<std::uint16_t>(d->add_digits(a, b));
  }

  // Primitive element: least codec g whose order is exactly q - 1.
  const std::uint32_t order = q - 1;
  d->exp_tab.assign(2 * std::size_t{std::max<std::uint32_t>(order, 1)}, 0);
  d->log_tab.assign(q, 0);
  if (q == 2) {
    d->exp_tab = {1, 1};
    return d;
  }
  const auto factors = prime_factors(order);
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = d->slow_mul(r, a);
      a = d->slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint32_t g = 0;
  for (std::uint32_t cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(cand, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      g = cand;
      break;
    }
  }
  if (g == 0) throw std::logic_error("no primitive element found");
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    d->exp_tab[i] = x;
    d->exp_tab[i + order] = x;
    d->log_tab[x] = i;
    x = d->slow_mul(x, g);
  }
  return d;
}

}  // namespace detail

/// Immutable handle to GF(p^h); copies share the same tables.
class Field {
 public:
  Field() = default;

  std::uint32_t p() const { return d_->p; }
  std::uint32_t h() const { return d_->h; }
  std::uint32_t q() const { return d_->q; }
  bool valid() const { return d_ != nullptr; }

  /// Monic modulus, coefficients low degree first (length h + 1).
  const std::vector<std::uint32_t>& modulus() const { return d_->modulus; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }

  Elem element(std::uint64_t codec) const {
    if (codec >= q()) throw std::out_of_range("element codec " + std::to_string(codec) + " outside GF(" + name() + ")");
    return Elem{static_cast<std::uint32_t>(codec)};
  }

  /// Image of the integer n under Z -> GF(p).
  Elem from_integer(std::int64_t n) const {
    std::int64_t r = n % static_cast<std::int64_t>(p());
    if (r < 0) r += p();
    return Elem{static_cast<std::uint32_t>(r)};
  }

  Elem add(Elem a, Elem b) const {
    if (d_->p == 2) return Elem{a.v ^ b.v};
    if (d_->h == 1) {
      const std::uint32_t s = a.v + b.v;
      return Elem{s >= d_->p ? s - d_->p : s};
    }
    if (!d_->add_tab.empty()) return Elem{d_->add_tab[std::size_t{a.v} * d_->q + b.v]};
    return Elem{d_->add_digits(a.v, b.v)};
  }
  Elem neg(Elem a) const { return Elem{d_->neg_tab[a.v]}; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

  Elem mul(Elem a, Elem b) const {
    if (a.v == 0 || b.v == 0) return zero();
    if (d_->q == 2) return one();
    return Elem{d_->exp_tab[d_->log_tab[a.v] + d_->log_tab[b.v]]};
  }

  Elem inv(Elem a) const {
    if (a.v == 0) throw std::domain_error("inverse of zero in GF(" + name() + ")");
    if (d_->q == 2) return one();
    const std::uint32_t order = d_->q - 1;
    return Elem{d_->exp_tab[(order - d_->log_tab[a.v]) % order]};
  }

  Elem div(Elem a, Elem b) const {
    if (b.v == 0) throw std::domain_error("division by zero in GF(" + name() + ")");
    return mul(a, inv(b));
  }

  /// a^e with 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const {
    if (e == 0) return one();
    if (a.v == 0) return zero();
    if (d_->q == 2) return one();
    const std::uint64_t order = d_->q - 1;
    return Elem{d_->exp_tab[(std::uint64_t{d_->log_tab[a.v]} * (e % order)) % order]};
  }

  /// x -> x^(p^times).
  Elem frobenius(Elem a, std::uint32_t times = 1) const {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < times % std::max<std::uint32_t>(h(), 1); ++i) e *= p();
    return pow(a, e);
  }

  /// Primitive element used for the log tables.
  Elem generator() const { return Elem{q() == 2 ? 1u : d_->exp_tab[1]}; }

  std::vector<std::uint32_t> digits(Elem a) const {
    std::vector<std::uint32_t> out(h());
    std::uint32_t v = a.v;
    for (auto& dgt : out) {
      dgt = v % p();
      v /= p();
    }
    return out;
  }

  Elem from_digits(std::span<const std::uint32_t> dg) const {
    if (dg.size() != h()) throw std::invalid_argument("digit vector length must equal h");
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < dg.size(); ++i) {
      if (dg[i] >= p()) throw std::invalid_argument("digit out of range");
      v += dg[i] * d_->pow_p[i];
    }
    return Elem{v};
  }

  /// All q elements in codec order (0 first, 1 second).
  std::vector<Elem> elements() const {
    std::vector<Elem> out(q());
    for (std::uint32_t i = 0; i < q(); ++i) out[i] = Elem{i};
    return out;
  }

  /// Text form "p^h".
  std::string name() const { return std::to_string(p()) + "^" + std::to_string(h()); }

  friend bool operator==(const Field& a, const Field& b) {
    if (a.d_ == b.d_) return true;
    if (!a.d_ || !b.d_) return false;
    return a.d_->p == b.d_->p && a.d_->h == b.d_->h;
  }

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
  friend Field make_field(std::uint32_t, std::uint32_t, std::uint32_t);

  std::shared_ptr<const detail::FieldData> d_;
};

/// Builds (or returns the cached) GF(p^h). Throws std::invalid_argument on a
/// non-prime p, h < 1, or an order above max_order.
inline Field make_field(std::uint32_t p, std::uint32_t h, std::uint32_t max_order = kDefaultMaxOrder) {
  if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (h < 1) throw std::invalid_argument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > max_order) throw std::invalid_argument("field order " + std::to_string(p) + "^" + std::to_string(h) + " exceeds bound " + std::to_string(max_order));
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const detail::FieldData>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, h}];
  if (!slot) slot = detail::build_field(p, h);
  return Field(slot);
}

/// The defining modulus as text over GF(p), e.g. "X^2 + X + 2".
inline std::string modulus_string(const Field& f) {
  const auto& m = f.modulus();
  std::string out;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += " + ";
    const bool show_coeff = m[i] != 1 || i == 0;
    if (show_coeff) out += std::to_string(m[i]);
    if (i > 0) out += i == 1 ? "X" : "X^" + std::to_string(i);
  }
  return out;
}

/// Field of order q (a prime power).
inline Field make_field_of_order(std::uint32_t q, std::uint32_t max_order = kDefaultMaxOrder) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t h = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++h;
  }
  if (rest != 1) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(p, h, max_order);
}

/// Parses the text form "p^h" (a bare "p" means h = 1).
inline Field parse_field(const std::string& text) {
  auto number = [&](std::string_view part) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || ptr != part.data() + part.size() || part.empty())
      throw std::invalid_argument("malformed field '" + text + "', expected p^h");
    return v;
  };
  const std::string_view view(text);
  const auto caret = view.find('^');
  if (caret == std::string_view::npos) return make_field(number(view), 1);
  return make_field(number(view.substr(0, caret)), number(view.substr(caret + 1)));
}

/// An element tied to its field; mixing fields throws std::invalid_argument.
class FieldElement {
 public:
  FieldElement(Field f, Elem e) : f_(std::move(f)), e_(e) {
    if (e_.v >= f_.q()) throw std::out_of_range("element codec outside field");
  }
  FieldElement(Field f, std::uint64_t codec) : f_(std::move(f)), e_(f_.element(codec)) {}

  const Field& field() const { return f_; }
  Elem raw() const { return e_; }
  std::uint32_t codec() const { return e_.v; }
  bool is_zero() const { return e_.v == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.add(a.e_, same(a, b))}; }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.sub(a.e_, same(a, b))}; }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.mul(a.e_, same(a, b))}; }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return {a.f_, a.f_.div(a.e_, same(a, b))}; }
  FieldElement operator-() const { return {f_, f_.neg(e_)}; }
  FieldElement inv() const { return {f_, f_.inv(e_)}; }
  FieldElement pow(std::uint64_t e) const { return {f_, f_.pow(e_, e)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.e_ == same(a, b); }

 private:
  static Elem same(const FieldElement& a, const FieldElement& b) {
    if (!(a.f_ == b.f_)) throw std::invalid_argument("operands from different fields GF(" + a.f_.name() + ") and GF(" + b.f_.name() + ")");
    return b.e_;
  }

  Field f_;
  Elem e_;
};

/// GF(p^e) inside GF(p^h), e | h, realized as the fixed field of x -> x^(p^e).
struct Subfield {
  std::uint32_t e = 0;
  std::uint32_t order = 0;
  std::vector<Elem> elements;   // ascending codec
  std::vector<Elem> embedding;  // embedding[c] = image of codec c of make_field(p, e)

  bool contains(Elem a) const { return std::binary_search(elements.begin(), elements.end(), a); }
};

inline Subfield subfield(const Field& f, std::uint32_t e) {
  if (e == 0 || f.h() % e != 0) throw std::invalid_argument("subfield degree " + std::to_string(e) + " does not divide " + std::to_string(f.h()));
  Subfield sf;
  sf.e = e;
  sf.order = 1;
  for (std::uint32_t i = 0; i < e; ++i) sf.order *= f.p();
  for (std::uint32_t a = 0; a < f.q(); ++a)
    if (f.frobenius(Elem{a}, e) == Elem{a}) sf.elements.push_back(Elem{a});

  if (e == f.h()) {
    sf.embedding = sf.elements;
    return sf;
  }
  const Field small = make_field(f.p(), e);
  const auto& m = small.modulus();
  auto eval_modulus = [&](Elem x) {
    Elem acc = Field::zero();
    for (std::size_t i = m.size(); i-- > 0;) acc = f.add(f.mul(acc, x), f.from_integer(m[i]));
    return acc;
  };
  Elem root{0};
  bool found = false;
  for (Elem x : sf.elements) {
    if (eval_modulus(x) == Field::zero()) {
      root = x;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("subfield modulus has no root");
  sf.embedding.resize(sf.order);
  for (std::uint32_t c = 0; c < sf.order; ++c) {
    const auto dg = small.digits(Elem{c});
    Elem acc = Field::zero();
    for (std::size_t i = dg.size(); i-- > 0;) acc = f.add(f.mul(acc, root), f.from_integer(dg[i]));
    sf.embedding[c] = acc;
  }
  return sf;
}

/// One entry per divisor e of h, ascending.
inline std::vector<Subfield> subfields(const Field& f) {
  std::vector<Subfield> out;
  for (std::uint32_t e = 1; e <= f.h(); ++e)
    if (f.h() % e == 0) out.push_back(subfield(f, e));
  return out;
}

/// The subfield of the given order; throws if the order is not p^e with e | h.
inline Subfield subfield_of_order(const Field& f, std::uint32_t order) {
  std::uint32_t e = 0;
  std::uint64_t acc = 1;
  while (acc < order) {
    acc *= f.p();
    ++e;
  }
  if (acc != order || e == 0 || f.h() % e != 0)
    throw std::invalid_argument(std::to_string(order) + " is not a subfield order of GF(" + f.name() + ")");
  return subfield(f, e);
}

/// True when s = p^e with e | h.
inline bool is_subfield_order(const Field& f, std::uint64_t s) {
  std::uint32_t e = 0;
  std::uint64_t acc = 1;
  while (acc < s) {
    acc *= f.p();
    ++e;
  }
  return acc == s && e > 0 && f.h() % e == 0;
}

}  // namespace redei
