#include <gtest/gtest.h>

#include <stdexcept>

#include "redei/analysis.hpp"
#include "redei/random.hpp"

using namespace redei;

namespace {

AffinePointSet e1() { return AffinePointSet::from_codes(make_field(2, 2), {0, 1, 4, 5}); }

const Check* find_check(const Verdict& v, const std::string& label) {
  for (const auto& c : v.checks)
    if (c.label == label) return &c;
  return nullptr;
}

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ((Rational(1, 3) + Rational(1, 6)).to_string(), "1/2");
  EXPECT_LT(Rational(7, 3), Rational(5, 2));
  EXPECT_EQ(Rational(8, 4), Rational(2));
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(ThmM, E1IsTightOnBothSides) {
  const auto v = classify_thm_m(e1());
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.case_matched, "1<s");
  EXPECT_TRUE(v.conclusion_holds());
  const auto* lo = find_check(v, "(|U|-1)/(t+1) + 2 <= |D|");
  const auto* hi = find_check(v, "|D| <= (|U|-1)/(s-1)");
  ASSERT_TRUE(lo && hi);
  EXPECT_EQ(lo->lhs, Rational(3));
  EXPECT_EQ(lo->rhs, Rational(3));
  EXPECT_EQ(hi->lhs, Rational(3));
  EXPECT_EQ(hi->rhs, Rational(3));
  EXPECT_EQ(v.values.at("degXH"), 2);
}

TEST(ThmM, CollinearTripleIsTheThirdCase) {
  const auto v = classify_thm_m(AffinePointSet::from_codes(make_field(5, 1), {0, 6, 12}));
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.case_matched, "t=q");
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(ThmM, SubplaneMinusAPointIsTheFirstCase) {
  const auto v = classify_thm_m(e1().without(Point{Elem{1}, Elem{1}}));
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.case_matched, "s=1");
  EXPECT_EQ(v.values.at("t"), 2);
  const auto* lo = find_check(v, "(|U|-1)/(t+1) + 2 <= |D|");
  ASSERT_TRUE(lo);
  EXPECT_EQ(lo->lhs, Rational(8, 3));
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(ThmM, Preconditions) {
  const Field f = make_field(2, 2);
  EXPECT_FALSE(classify_thm_m(AffinePointSet::from_codes(f, {3})).applicable);
  EXPECT_FALSE(classify_thm_m(AffinePointSet(f, all_points(f))).applicable);
}

TEST(ThmM, AgreesWithPrimeCaseAtPFive) {
  const Field f = make_field(5, 1);
  Rng rng(55);
  for (int i = 0; i < 300; ++i) {
    const auto u = AffinePointSet::from_codes(f, rng.sample(25, static_cast<std::uint32_t>(rng.between(2, 5))));
    const auto m = classify_thm_m(u);
    const auto sb = classify_szonyi_blokhuis(u);
    if (m.applicable) {
      EXPECT_TRUE(m.values.at("t") == 1 || m.values.at("t") == 5);
      EXPECT_TRUE(m.conclusion_holds());
    }
    if (sb.applicable) EXPECT_TRUE(sb.conclusion_holds());
  }
}

TEST(Ball, SubplaneIsTheSubfieldCase) {
  const auto v = classify_ball(e1());
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.case_matched, "GF(s) subfield");
  EXPECT_EQ(v.values.at("s"), 2);
  EXPECT_EQ(v.values.at("D"), 3);
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(Ball, FullLineIsTheThirdCase) {
  const auto v = classify_ball(AffinePointSet::from_codes(make_field(3, 2), {0, 1, 2, 3, 4, 5, 6, 7, 8}));
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.case_matched, "s=q");
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(Ball, GfThreeSubplaneIsLinear) {
  const Field f = make_field(3, 2);
  std::vector<Point> pts;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) pts.push_back({Elem{a}, Elem{b}});
  const auto v = classify_ball(AffinePointSet(f, pts));
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.values.at("s"), 3);
  ASSERT_TRUE(find_check(v, "U is GF(s)-linear"));
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(Ball, RequiresQPoints) { EXPECT_FALSE(classify_ball(e1().without(Point{})).applicable); }

TEST(SzonyiBlokhuis, TriangleIsSharp) {
  const auto v = classify_szonyi_blokhuis(AffinePointSet::from_codes(make_field(5, 1), {0, 1, 5}));
  ASSERT_TRUE(v.applicable);
  EXPECT_EQ(v.values.at("D"), 3);
  EXPECT_EQ(v.notes.back(), "sharp");
  EXPECT_TRUE(v.conclusion_holds());
}

TEST(SzonyiBlokhuis, CollinearAndGates) {
  const Field f = make_field(5, 1);
  EXPECT_EQ(classify_szonyi_blokhuis(AffinePointSet::from_codes(f, {0, 6, 12})).case_matched, "collinear");
  EXPECT_FALSE(classify_szonyi_blokhuis(e1()).applicable);
  EXPECT_FALSE(classify_szonyi_blokhuis(AffinePointSet::from_codes(f, {0})).applicable);
  EXPECT_FALSE(classify_szonyi_blokhuis(AffinePointSet::from_codes(f, {0, 1, 2, 3, 4, 5})).applicable);
}

TEST(Extension, WorkedExampleInGf4) {
  const Field f = make_field(2, 2);
  const Poly g(f, {Elem{0}, Elem{0}, Elem{1}, Elem{1}});  // X^3 + X^2
  const auto r = extension_oracle(g, 2, 4);
  ASSERT_TRUE(r.f_exists);
  EXPECT_EQ(r.f, Poly(f, {Elem{1}, Elem{1}}));
  EXPECT_EQ(r.quotient, Poly(f, {Elem{1}, Elem{1}}));
  EXPECT_TRUE(r.verdict.conclusion_holds());
}

TEST(Extension, AlreadyInPowerRing) {
  const Field f = make_field(3, 2);
  const Poly g(f, {Elem{2}, Elem{0}, Elem{0}, Elem{5}});  // 5 X^3 + 2
  const auto r = extension_oracle(g, 3, 9);
  ASSERT_TRUE(r.f_exists);
  EXPECT_EQ(r.f.degree(), 0);
  EXPECT_TRUE(r.verdict.conclusion_holds());
}

TEST(Extension, InputErrors) {
  const Field f = make_field(2, 2);
  EXPECT_THROW(extension_oracle(Poly(f), 2, 4), std::invalid_argument);
  EXPECT_THROW(extension_oracle(Poly::x(f), 3, 4), std::invalid_argument);
  EXPECT_THROW(extension_oracle(Poly::x(f), 8, 4), std::invalid_argument);
}

TEST(Conjectures, Gates) {
  EXPECT_TRUE(conjecture_s_equals_t(e1()).applicable);
  EXPECT_TRUE(conjecture_s_equals_t(e1()).conclusion_holds());
  EXPECT_FALSE(conjecture_s_equals_t(e1().without(Point{Elem{1}, Elem{1}})).applicable);
  EXPECT_FALSE(conjecture_linearity(e1()).applicable);  // s = t = 2

  const auto line = AffinePointSet::from_codes(make_field(2, 2), {0, 1, 2, 3});
  const auto v = conjecture_s_equals_t(line);
  EXPECT_TRUE(v.applicable);
  EXPECT_TRUE(v.checks.empty());
}

TEST(Conjectures, GfThreeSubplaneIsALinearityWitness) {
  const Field f = make_field(3, 2);
  std::vector<Point> pts;
  for (std::uint32_t a = 0; a < 3; ++a)
    for (std::uint32_t b = 0; b < 3; ++b) pts.push_back({Elem{a}, Elem{b}});
  const auto v = conjecture_linearity(AffinePointSet(f, pts));
  ASSERT_TRUE(v.applicable);
  EXPECT_TRUE(v.conclusion_holds());
}

// Checked by hand: H(X,0) is a cube of degree 3 while the lines of slope 0 meet U in 3 and 1 points.
TEST(Conjectures, SmallMaximalSetWithTAboveS) {
  const Field f = make_field(3, 2);
  const AffinePointSet u(f, {{Elem{1}, Elem{5}}, {Elem{4}, Elem{5}}, {Elem{5}, Elem{3}}, {Elem{5}, Elem{5}}});
  EXPECT_TRUE(is_maximal(u));
  EXPECT_EQ(directions_of(u).size(), 4u);
  const auto sys = divide_xq(u);
  const Poly h0 = sys.h.specialize(Elem{0});
  EXPECT_EQ(h0.degree(), 3);
  EXPECT_TRUE(h0.in_power_ring(3));
  const auto tv = t_of_direction(sys, Elem{0});
  EXPECT_EQ(tv.t, 3u);
  EXPECT_EQ(s_of_direction(u, Direction::slope(Elem{0})), 1u);
  const auto v = conjecture_s_equals_t(u);
  ASSERT_TRUE(v.applicable);
  EXPECT_TRUE(v.failed());
}

TEST(Examples, BothConstructionsReproduce) {
  const auto rep = reproduce_maximality_examples();
  ASSERT_EQ(rep.examples.size(), 3u);
  for (const auto& e : rep.examples) EXPECT_TRUE(e.verdict.applicable && e.verdict.conclusion_holds()) << e.name;
  EXPECT_EQ(rep.examples[0].set.field().q(), 16u);
  EXPECT_EQ(rep.examples[1].set.field().q(), 25u);
  EXPECT_EQ(rep.examples[2].set.size(), 8u);
}

TEST(Evaluate, DispatchesEveryStatement) {
  for (const auto& id : statement_ids()) EXPECT_EQ(evaluate(id, e1()).statement, id);
  EXPECT_THROW(evaluate("thm-x", e1()), std::invalid_argument);
}

}  // namespace
