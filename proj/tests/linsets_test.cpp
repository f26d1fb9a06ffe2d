#include <gtest/gtest.h>

#include <set>
#include <stdexcept>
#include <tuple>

#include "redei/linsets.hpp"
#include "redei/random.hpp"

using namespace redei;

namespace {

AffinePointSet e1() { return AffinePointSet::from_codes(make_field(2, 2), {0, 1, 4, 5}); }

TEST(Linsets, SpanSizes) {
  const Field f = make_field(3, 2);
  AffineLinearSpec spec{f, 3, 2, {{Elem{1}, Elem{0}}, {Elem{3}, Elem{0}}, {Elem{0}, Elem{1}}}, {}};
  EXPECT_EQ(build_affine_linear(spec).size(), 27u);
  spec.generators.push_back({Elem{4}, Elem{1}});  // (1,0) + (x,0) + (0,1)
  EXPECT_EQ(build_affine_linear(spec).size(), 27u);
  spec.translate = {Elem{2}, Elem{5}};
  EXPECT_EQ(build_affine_linear(spec).size(), 27u);
}

TEST(Linsets, ValidationErrors) {
  const Field f = make_field(2, 4);
  EXPECT_THROW(validate(AffineLinearSpec{f, 8, 2, {}, {}}), std::invalid_argument);
  ProjectiveLinearSpec bad{f, 2, 2, 1, {{Elem{1}, Elem{0}, Elem{0}}, {Elem{1}, Elem{0}, Elem{0}}}};
  EXPECT_THROW(validate(bad), std::invalid_argument);  // rank 1
  ProjectiveLinearSpec meets{f, 2, 2, 1, {{Elem{1}, Elem{0}, Elem{0}}, {Elem{0}, Elem{1}, Elem{0}}}};
  EXPECT_THROW(project_subgeometry(meets), std::invalid_argument);  // (0,0,1) is in the kernel
}

TEST(Linsets, ClosureOfSubplaneHasWeightSeven) {
  const Field f = make_field(2, 2);
  AffineLinearSpec spec{f, 2, 2, {{Elem{1}, Elem{0}}, {Elem{0}, Elem{1}}}, {}};
  const auto w = closure_is_projective_linear(spec);
  EXPECT_TRUE(w.holds);
  EXPECT_EQ(w.affine_rank, 2u);
  EXPECT_EQ(w.projective_rank, 3u);
  EXPECT_EQ(w.image.total(), 7u);
  EXPECT_EQ(w.image.support().size(), 7u);  // 4 points and 3 directions
}

TEST(Linsets, ClosureOnRandomSpecs) {
  for (auto [p, h, s] : {std::tuple{2u, 4u, 2u}, std::tuple{2u, 4u, 4u}, std::tuple{3u, 2u, 3u}, std::tuple{2u, 3u, 2u}}) {
    const Field f = make_field(p, h);
    Rng rng(p * 100 + h);
    for (int i = 0; i < 20; ++i) {
      AffineLinearSpec spec{f, s, 2, {}, {}};
      const auto r = rng.between(1, 3);
      for (std::uint64_t k = 0; k < r; ++k)
        spec.generators.push_back({Elem{static_cast<std::uint32_t>(rng.below(f.q()))}, Elem{static_cast<std::uint32_t>(rng.below(f.q()))}});
      if (independent_over_subfield(f, subfield_of_order(f, s), spec.generators).empty()) continue;
      const auto w = closure_is_projective_linear(spec);
      EXPECT_TRUE(w.holds) << (w.failures.empty() ? "" : w.failures.front());
    }
  }
}

TEST(Linsets, LinearityRecognition) {
  EXPECT_TRUE(is_gf_s_linear(e1(), 2).linear);
  EXPECT_EQ(is_gf_s_linear(e1(), 2).generators.size(), 2u);
  EXPECT_FALSE(is_gf_s_linear(e1().without(Point{Elem{1}, Elem{1}}), 2).linear);
  EXPECT_FALSE(is_gf_s_linear(e1(), 4).linear);
  EXPECT_TRUE(is_gf_s_linear(AffinePointSet::from_codes(make_field(3, 2), {17}), 9).linear);
}

TEST(Linsets, RealizeRoundTrip) {
  for (auto [q, s] : {std::pair{4u, 2u}, std::pair{9u, 3u}, std::pair{16u, 2u}, std::pair{16u, 4u}}) {
    const Field f = make_field_of_order(q);
    Rng rng(q * s);
    for (int i = 0; i < 20; ++i) {
      const auto spec = random_projective_spec(f, s, static_cast<std::uint32_t>(rng.between(1, 2)), 1, rng);
      const auto img = project_subgeometry(spec);
      EXPECT_EQ(img.total(), projective_point_count(s, spec.d + 1));
      const auto u = realize_in_plane(spec);
      EXPECT_EQ(directions_of(u), to_direction_set(f, img.support()));
    }
  }
}

TEST(Linsets, RealizeInHigherDimension) {
  const Field f = make_field(2, 2);
  Rng rng(3);
  const auto spec = random_projective_spec(f, 2, 3, 2, rng);
  const auto pts = realize_direction_set(spec);
  EXPECT_EQ(pts.size(), 16u);
  std::set<Vec> dirs = directions_in_space(f, pts);
  EXPECT_EQ(dirs, project_subgeometry(spec).support());
}

TEST(Linsets, SubgeometryPointCounts) {
  const Field f = make_field(3, 2);
  const auto sub = subfield_of_order(f, 3);
  EXPECT_EQ(subgeometry_points(sub, 0).size(), 1u);
  EXPECT_EQ(subgeometry_points(sub, 2).size(), 13u);
  EXPECT_EQ(projective_point_count(3, 3), 13u);
}

}  // namespace
