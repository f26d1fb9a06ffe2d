#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "redei/linsets.hpp"
#include "redei/random.hpp"
#include "redei/redei.hpp"

using namespace redei;

namespace {

AffinePointSet e1() { return AffinePointSet::from_codes(make_field(2, 2), {0, 1, 4, 5}); }

std::size_t multiplicity_by_division(const Poly& p, Elem x) {
  const Field& f = p.field();
  const Poly lin(f, {f.neg(x), Field::one()});
  std::size_t k = 0;
  Poly power = lin;
  while ((p % power).is_zero()) {
    ++k;
    power = power * lin;
  }
  return k;
}

TEST(Redei, E1GoldenValues) {
  const Field f = make_field(2, 2);
  const auto sys = divide_xq(e1());
  // By hand: R = X^4 + (Y^2+Y+1) X^2 + (Y^2+Y) X, so Q = 1 and H = R - X^4.
  EXPECT_EQ(sys.h.degree_x(), 2);
  EXPECT_EQ(sys.h.coeff_x(2), Poly(f, {Elem{1}, Elem{1}, Elem{1}}));
  EXPECT_EQ(sys.h.coeff_x(1), Poly(f, {Elem{0}, Elem{1}, Elem{1}}));
  EXPECT_TRUE(sys.h.coeff_x(0).is_zero());
  EXPECT_EQ(sys.quotient, BiPoly(f, {Poly::constant(f, Field::one())}));
  EXPECT_TRUE(check_division(sys).empty());

  const auto ai = t_of_set(sys);
  EXPECT_EQ(ai.t, 2u);
  EXPECT_EQ(*ai.s, 2u);
  ASSERT_EQ(ai.per_direction.size(), 2u);
  EXPECT_EQ(ai.per_direction[0].kappa, 4u);  // X^4 + X^2 = X^2 (X+1)^2
  EXPECT_EQ(*ai.per_direction[0].f, Poly::x(f));
}

TEST(Redei, CollinearTripleHasConstantH) {
  const Field f = make_field(5, 1);
  const auto sys = divide_xq(AffinePointSet::from_codes(f, {0, 6, 12}));
  EXPECT_TRUE(sys.h.specialize(Elem{1}).is_zero());
  EXPECT_EQ(kappa(sys, Elem{1}), 5u);
  EXPECT_EQ(t_of_direction(sys, Elem{1}).t, 5u);
  EXPECT_EQ(kappa(sys, Elem{0}), 5u);  // undetermined: X^q - X splits
  EXPECT_THROW(t_of_direction(sys, Elem{0}), std::invalid_argument);
}

TEST(Redei, DivisionIdentityAndUnivariateOracle) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = make_field_of_order(q);
    Rng rng(q * 13);
    for (int i = 0; i < 40; ++i) {
      const auto n = static_cast<std::uint32_t>(rng.between(2, q));
      const auto u = AffinePointSet::from_codes(f, rng.sample(q * q, n));
      const auto sys = divide_xq(u);
      EXPECT_TRUE(check_division(sys).empty());
      for (std::uint32_t y = 0; y < q; ++y) {
        const Poly hy = sys.h.specialize(Elem{y});
        EXPECT_EQ(hy, oracle::h_at(u, Elem{y}));
        if (sys.d.contains(Direction::slope(Elem{y}))) {
          const auto tv = t_of_direction(sys, Elem{y});
          EXPECT_EQ(tv.t, oracle::t_from_exponents(hy, f));
          if (tv.f) EXPECT_EQ(tv.f->pow(tv.t), hy);
        } else {
          EXPECT_EQ(hy, -Poly::x(f));
        }
        const Poly full = sys.full_at(Elem{y});
        std::size_t k = 0;
        for (std::uint32_t x = 0; x < q; ++x) k += multiplicity_by_division(full, Elem{x});
        EXPECT_EQ(kappa(sys, Elem{y}), k);
      }
    }
  }
}

TEST(Redei, RecurrenceCoversSingletons) {
  const Field f = make_field(3, 1);
  const auto sys = divide_xq(AffinePointSet::from_codes(f, {4}));
  EXPECT_TRUE(check_division(sys).empty());
}

TEST(Redei, PreconditionErrors) {
  const Field f = make_field(2, 1);
  EXPECT_THROW(redei_polynomial(AffinePointSet(f)), std::invalid_argument);
  EXPECT_THROW(redei_polynomial(AffinePointSet(f, all_points(f))), std::invalid_argument);
  EXPECT_THROW(redei_polynomial(AffinePointSet::from_codes(f, {0, 1, 2})), std::invalid_argument);
  EXPECT_THROW(check_r_structure(AffinePointSet::from_codes(f, {0, 1}), Direction::infinity()), std::invalid_argument);
}

TEST(Redei, StructureStatementsOnRandomSets) {
  for (std::uint32_t q : {4u, 8u, 9u}) {
    const Field f = make_field_of_order(q);
    Rng rng(q * 17);
    for (int i = 0; i < 30; ++i) {
      const auto u = AffinePointSet::from_codes(f, rng.sample(q * q, static_cast<std::uint32_t>(rng.between(2, q))));
      const auto sys = divide_xq(u);
      EXPECT_TRUE(check_prop_es(sys).holds);
      EXPECT_TRUE(check_prop_lin(sys, t_of_set(sys).t).holds);
      for (std::uint32_t y = 0; y < q; ++y) EXPECT_TRUE(check_r_structure(u, Direction::slope(Elem{y})).holds);
    }
  }
}

// A GF(p)-linear set minus one point: s = 1 but t = p.
TEST(Redei, LinearSetMinusAPointSeparatesSAndT) {
  for (auto [p, h] : {std::pair{2u, 2u}, std::pair{3u, 2u}}) {
    const Field f = make_field(p, h);
    AffineLinearSpec spec{f, p, 2, {{Field::one(), Field::zero()}, {Field::zero(), Field::one()}}, {}};
    const auto full = build_affine_linear_plane(spec);
    ASSERT_EQ(full.size(), p * p);
    const auto u = full.without(full.points().back());
    const auto ai = t_of_set(divide_xq(u));
    EXPECT_EQ(*ai.s, 1u);
    EXPECT_EQ(ai.t, p);
  }
}

}  // namespace
