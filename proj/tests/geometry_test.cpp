#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "redei/geometry.hpp"
#include "redei/random.hpp"

using namespace redei;

namespace {

AffinePointSet random_set(const Field& f, Rng& rng, std::uint32_t k) {
  return AffinePointSet::from_codes(f, rng.sample(f.q() * f.q(), k));
}

Collineation random_collineation(const Field& f, Rng& rng) {
  while (true) {
    auto r = [&] { return Elem{static_cast<std::uint32_t>(rng.below(f.q()))}; };
    Collineation c{r(), r(), r(), r(), r(), r()};
    if (c.determinant(f) != Field::zero()) return c;
  }
}

TEST(Geometry, E1Directions) {
  const Field f = make_field(2, 2);
  const auto u = AffinePointSet::from_codes(f, {0, 1, 4, 5});
  const auto d = directions_of(u);
  EXPECT_EQ(d.to_string(), "0 1 inf");
  EXPECT_TRUE(d.contains_infinity());
  EXPECT_FALSE(d.is_full());
}

TEST(Geometry, DirectionsAgreeWithPairwiseOracle) {
  for (std::uint32_t q : {3u, 4u, 5u, 8u, 9u}) {
    const Field f = make_field_of_order(q);
    Rng rng(q * 31);
    for (int i = 0; i < 100; ++i) {
      const auto u = random_set(f, rng, static_cast<std::uint32_t>(rng.between(1, q + 2)));
      std::set<std::uint32_t> got;
      const auto d = directions_of(u);
      for (const auto& y : d.directions()) got.insert(y.index(q));
      EXPECT_EQ(got, oracle::directions(u));
    }
  }
}

TEST(Geometry, SAgreesWithLineCountOracle) {
  for (std::uint32_t q : {3u, 4u, 8u, 9u}) {
    const Field f = make_field_of_order(q);
    Rng rng(q * 7);
    for (int i = 0; i < 60; ++i) {
      const auto u = random_set(f, rng, static_cast<std::uint32_t>(rng.between(2, 2 * q)));
      const auto gi = geometric_invariants(u);
      for (const auto& y : gi.determined.directions()) {
        const auto idx = y.index(q);
        EXPECT_EQ(gi.per_direction[idx], oracle::s_of_direction(u, idx));
        EXPECT_EQ(line_profile(u, y), oracle::line_counts(u, idx));
      }
    }
  }
}

TEST(Geometry, SOfSubplaneAndLine) {
  const Field f = make_field(2, 2);
  EXPECT_EQ(*s_of_set(AffinePointSet::from_codes(f, {0, 1, 4, 5})).s, 2u);
  EXPECT_EQ(*s_of_set(AffinePointSet::from_codes(f, {0, 5, 10, 15})).s, 4u);  // the line y = x
  EXPECT_EQ(*s_of_set(AffinePointSet::from_codes(f, {0, 1, 4})).s, 1u);
  EXPECT_THROW(s_of_set(AffinePointSet::from_codes(f, {3})), std::invalid_argument);
}

TEST(Geometry, PointSetIsSortedAndDeduplicated) {
  const Field f = make_field(3, 1);
  const auto u = AffinePointSet::from_codes(f, {5, 1, 5, 0});
  EXPECT_EQ(u.codes(), (std::vector<std::uint32_t>{0, 1, 5}));
  EXPECT_THROW(AffinePointSet::from_codes(f, {9}), std::out_of_range);
  EXPECT_THROW(direction_of(f, Point{Elem{1}, Elem{1}}, Point{Elem{1}, Elem{1}}), std::invalid_argument);
}

TEST(Geometry, CollineationsMapDirectionSets) {
  for (std::uint32_t q : {3u, 4u, 5u, 9u}) {
    const Field f = make_field_of_order(q);
    Rng rng(q + 100);
    for (int i = 0; i < 50; ++i) {
      const auto u = random_set(f, rng, static_cast<std::uint32_t>(rng.between(2, q)));
      const auto c = random_collineation(f, rng);
      EXPECT_EQ(directions_of(apply_collineation(u, c)), apply_collineation(directions_of(u), c));
    }
  }
}

TEST(Geometry, ExchangingInfinity) {
  const Field f = make_field(3, 2);
  for (std::uint32_t m = 0; m < f.q(); ++m) {
    const auto c = Collineation::exchanging_infinity(f, Elem{m});
    EXPECT_TRUE(c.apply(f, Direction::slope(Elem{m})).is_infinity());
    EXPECT_EQ(c.apply(f, Direction::infinity()), Direction::slope(Elem{m}));
  }
}

TEST(Geometry, CanonicalizeAndMoveInfinity) {
  const Field f = make_field(5, 1);
  const auto line = AffinePointSet::from_codes(f, {0, 6, 12});  // slope 1
  const auto canon = canonicalize_infinity(line);
  EXPECT_TRUE(canon.changed);
  EXPECT_EQ(directions_of(canon.set).to_string(), "inf");
  const auto out = move_infinity_out(canon.set);
  ASSERT_TRUE(out.has_value());
  EXPECT_FALSE(directions_of(out->set).contains_infinity());
  EXPECT_THROW(canonicalize_infinity(AffinePointSet::from_codes(f, {7})), std::invalid_argument);

  const Field g = make_field(2, 1);
  EXPECT_FALSE(move_infinity_out(AffinePointSet(g, all_points(g))).has_value());
}

TEST(Geometry, OneModSOnSubplane) {
  const Field f = make_field(2, 2);
  const auto rep = check_one_mod_s(AffinePointSet::from_codes(f, {0, 1, 4, 5}));
  ASSERT_TRUE(rep.applicable);
  EXPECT_EQ(rep.s, 2u);
  EXPECT_EQ(rep.lines.size(), 21u);
  EXPECT_TRUE(rep.passed());
  EXPECT_FALSE(check_one_mod_s(AffinePointSet::from_codes(f, {0, 1, 4})).applicable);
}

}  // namespace
