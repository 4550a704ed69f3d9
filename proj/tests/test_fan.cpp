#include <gtest/gtest.h>

#include <algorithm>

#include "loghilb/exact/integer.hpp"
#include "loghilb/fan/hilb_fan.hpp"
#include "loghilb/fan/stacky_fan.hpp"
#include "loghilb/motive/series.hpp"

using namespace loghilb;
using namespace loghilb::fan;

namespace {

std::set<Vec> ray_vectors(const StackyFan& f) {
  std::set<Vec> out;
  for (const auto& r : f.rays()) out.insert(r.vector);
  return out;
}

std::set<std::set<std::string>> cone_labels(const StackyFan& f) {
  std::set<std::set<std::string>> out;
  for (const auto& c : f.max_cones()) {
    auto l = f.labels_of(c);
    out.insert({l.begin(), l.end()});
  }
  return out;
}

// Census of the fan of (P^1)^n by enumerating its faces: each coordinate
// contributes nothing, +e_k or -e_k.
std::vector<std::size_t> product_fan_census(std::size_t n) {
  std::vector<std::size_t> counts(n + 1, 0);
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t dim = 0;
    for (std::size_t c = code; c > 0; c /= 3)
      if (c % 3 != 0) ++dim;
    ++counts[dim];
  }
  return counts;
}

MultiPoly lefschetz_plus_one_pow(unsigned n) { return (MultiPoly::variable("L") + 1).pow(n); }

}  // namespace

TEST(ProjectiveFan, P1) {
  const auto f = projective_fan(1);
  EXPECT_EQ(ray_vectors(f), (std::set<Vec>{{1}, {-1}}));
  EXPECT_EQ(cone_labels(f), (std::set<std::set<std::string>>{{"sigma_1"}, {"tau"}}));
}

TEST(ProjectiveFan, P2) {
  const auto f = projective_fan(2);
  EXPECT_EQ(f.rays().size(), 3u);
  EXPECT_EQ(f.max_cones().size(), 3u);
}

TEST(ProjectiveFan, P3Census) { EXPECT_EQ(cone_census(projective_fan(3)), (std::vector<std::size_t>{1, 4, 6, 4})); }

TEST(MinimalCone, WeightedPointInQuadrant) {
  const auto f = projective_fan(2);
  const auto loc = minimal_cone(f, {1, 2});
  EXPECT_EQ(f.labels_of(loc.cone), (std::vector<std::string>{"sigma_1", "sigma_2"}));
  EXPECT_EQ(loc.coefficients, (std::vector<Rational>{Rational(1), Rational(2)}));
}

TEST(MinimalCone, RayItself) {
  const auto f = projective_fan(2);
  EXPECT_EQ(f.labels_of(minimal_cone(f, {1, 0}).cone), std::vector<std::string>{"sigma_1"});
  EXPECT_EQ(f.labels_of(minimal_cone(f, {-1, -1}).cone), std::vector<std::string>{"tau"});
}

TEST(MinimalCone, OutsideSupportThrows) {
  // Only the positive ray of a one-cone fan: -e_1 is outside.
  StackyFan half(1, {{"sigma_1", {1}}}, {{0}});
  EXPECT_THROW(minimal_cone(half, {-1}), std::domain_error);
  EXPECT_THROW(minimal_cone(projective_fan(2), {0, 0}), std::invalid_argument);
}

TEST(StarSubdivide, HilbTwoOneFromP2) {
  const auto f = star_subdivide(projective_fan(2), {1, 2}, "rho_2");
  EXPECT_EQ(f.rays().size(), 4u);
  EXPECT_EQ(cone_labels(f), (std::set<std::set<std::string>>{
                                {"sigma_1", "rho_2"}, {"rho_2", "sigma_2"}, {"sigma_2", "tau"}, {"tau", "sigma_1"}}));
}

TEST(StarSubdivide, ExistingRayIsANoOp) {
  const auto p2 = projective_fan(2);
  const auto f = star_subdivide(p2, {0, 1}, "rho_1");
  EXPECT_EQ(f.rays().size(), p2.rays().size());
  EXPECT_EQ(f.max_cones(), p2.max_cones());
}

TEST(StarSubdivide, InteriorPointOfP3Cone) {
  const auto f = star_subdivide(projective_fan(3), {1, 2, 3}, "rho_3");
  EXPECT_EQ(f.rays().size(), 5u);
  EXPECT_EQ(f.max_cones().size(), 6u);
}

TEST(StarSubdivide, RejectsNonPrimitive) {
  EXPECT_THROW(star_subdivide(projective_fan(2), {2, 4}, "x"), std::invalid_argument);
}

TEST(StarSubdivide, MaxConeCountGrowsByMinimalConeDimension) {
  for (std::size_t n = 2; n <= 5; ++n) {
    auto f = projective_fan(n);
    for (std::size_t j = n; j >= 2; --j) {
      const auto v = zero_side_ray(n, j);
      const auto loc = minimal_cone(f, v);
      std::size_t touched = 0;
      for (const auto& c : f.max_cones())
        if (std::includes(c.begin(), c.end(), loc.cone.begin(), loc.cone.end())) ++touched;
      const auto g = star_subdivide(f, v, zero_label(j));
      EXPECT_EQ(g.max_cones().size(), f.max_cones().size() + touched * (loc.cone.size() - 1));
      EXPECT_TRUE(validate_fan(g).ok());
      f = g;
    }
  }
}

TEST(WeightedRay, MatchesHilbTwoOne) {
  const auto f = insert_weighted_ray(projective_fan(2), {0, 1}, {1, 2}, "rho_2");
  EXPECT_TRUE(same_fan(f, hilb_fan(2, 1)));
}

TEST(WeightedRay, UnitWeightOnRayIsANoOp) {
  const auto p2 = projective_fan(2);
  EXPECT_TRUE(same_fan(insert_weighted_ray(p2, {1}, {1}, "x"), p2));
}

TEST(WeightedRay, FirstStepOfHilbThree) {
  const auto f = insert_weighted_ray(projective_fan(3), {0, 1, 2}, {1, 2, 3}, "rho_3");
  EXPECT_TRUE(f.ray_index(Vec{1, 2, 3}).has_value());
  EXPECT_TRUE(same_fan(f, hilb_fan(3, 2)));
}

TEST(WeightedRay, Errors) {
  const auto p2 = projective_fan(2);
  EXPECT_THROW(insert_weighted_ray(p2, {0, 1}, {2, 2}, "x"), std::invalid_argument);
  EXPECT_THROW(insert_weighted_ray(p2, {0, 1}, {0, 1}, "x"), std::invalid_argument);
  const auto h = hilb_fan(2, 1);
  // sigma_1 and sigma_2 no longer span a cone after the blow-up.
  EXPECT_THROW(insert_weighted_ray(h, {0, 1}, {1, 1}, "x"), std::invalid_argument);
}

TEST(HilbFan, TwoOneRaysAndCensus) {
  const auto f = hilb_fan(2, 1);
  EXPECT_EQ(ray_vectors(f), (std::set<Vec>{{1, 0}, {0, 1}, {-1, -1}, {1, 2}}));
  EXPECT_EQ(f.max_cones().size(), 4u);
  EXPECT_EQ(cone_census(f), (std::vector<std::size_t>{1, 4, 4}));
}

TEST(HilbFan, TopLevelIsProjectiveSpace) {
  for (std::size_t n = 1; n <= 6; ++n) EXPECT_TRUE(same_fan(hilb_fan(n, n), projective_fan(n)));
}

TEST(HilbFan, LevelZeroEqualsLevelOne) {
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_TRUE(same_fan(hilb_fan(n, 0), hilb_fan(n, 1)));
}

TEST(HilbFan, LevelAboveNThrows) { EXPECT_THROW(hilb_fan(3, 4), std::invalid_argument); }

TEST(HilbFan, ZeroSideRayFormula) {
  EXPECT_EQ(zero_side_ray(4, 4), (Vec{1, 2, 3, 4}));
  EXPECT_EQ(zero_side_ray(4, 2), (Vec{0, 0, 1, 2}));
  EXPECT_EQ(zero_side_ray(4, 1), (Vec{0, 0, 0, 1}));
}

TEST(HilbFan, CensusMatchesProductFan) {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto census = cone_census(hilb_fan(n, 1));
    EXPECT_EQ(census, product_fan_census(n)) << "n = " << n;
    for (std::size_t k = 0; k <= n; ++k) EXPECT_EQ(Integer(census[k]), binomial(n, k) * power(2, k));
  }
}

TEST(HilbFan, ThreeOneCensus) { EXPECT_EQ(cone_census(hilb_fan(3, 1)), (std::vector<std::size_t>{1, 6, 12, 8})); }

TEST(HilbFan, CompleteAndSimplicial) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (std::size_t i = 1; i <= n; ++i) {
      const auto rep = validate_fan(hilb_fan(n, i), n <= 5);
      EXPECT_TRUE(rep.ok()) << "n=" << n << " i=" << i << ": " << (rep.ok() ? "" : rep.problems.front());
    }
}

TEST(HilbFan, TowerContainsCoarserRays) {
  for (std::size_t n = 2; n <= 5; ++n)
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) {
        const auto fine = ray_vectors(hilb_fan(n, i));
        for (const auto& v : ray_vectors(hilb_fan(n, j))) EXPECT_TRUE(fine.count(v));
      }
}

TEST(HilbFan, MotiveIsProductOfProjectiveLines) {
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(fan_motive(hilb_fan(n, 1)), lefschetz_plus_one_pow(n));
  EXPECT_EQ(fan_motive(projective_fan(1)), MultiPoly::variable("L") + 1);
}

TEST(Validate, DetectsMissingCone) {
  const auto f = hilb_fan(3, 1);
  auto cones = f.max_cones();
  cones.erase(cones.begin());
  const StackyFan broken(f.dim(), f.rays(), cones);
  EXPECT_FALSE(validate_fan(broken).ok());
  EXPECT_THROW(fan_motive(broken), std::domain_error);
}

TEST(Validate, DetectsDegenerateCone) {
  StackyFan flat(2, {{"a", {1, 0}}, {"b", {-1, 0}}, {"c", {0, 1}}}, {{0, 1}});
  EXPECT_FALSE(validate_fan(flat).ok());
}

TEST(Validate, DetectsOverlappingCones) {
  // Two cones overlapping in a 2-dimensional region.
  StackyFan overlap(2, {{"a", {1, 0}}, {"b", {0, 1}}, {"c", {1, 1}}, {"d", {-1, -1}}}, {{0, 1}, {0, 2}});
  EXPECT_FALSE(validate_fan(overlap).ok());
}

TEST(StackyFanInvariants, RejectsNonPrimitiveRay) {
  EXPECT_THROW(StackyFan(1, {{"a", {2}}}, {{0}}), std::invalid_argument);
}

TEST(Involution, SwapsBoundaryRaysAndSquaresToIdentity) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = boundary_involution(n);
    EXPECT_EQ(a * a, IntMatrix::identity(n));
    const auto p = projective_fan(n);
    for (const auto& r : p.rays()) EXPECT_TRUE(p.ray_index(transform(a, r.vector)).has_value());
  }
}

TEST(Involution, InfinityRaysAreTauWeighted) {
  EXPECT_EQ(infinity_side_ray(2, 2), (Vec{-1, -2}));
  EXPECT_EQ(infinity_side_ray(3, 1), (Vec{-1, -1, -1}));
}

TEST(TwoMarkings, ZeroInfinityIsCompleteAndMatchesSeries) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto f = hilb_fan_two_markings(n, 1, 1);
    EXPECT_TRUE(validate_fan(f).ok()) << n;
    const auto expect = motive::closed_form(motive::ZetaMode::motivic_p1(), 2, n)[n];
    EXPECT_EQ(fan_motive(f), expect) << n;
    const auto euler = expect.substitute({{"L", 1}});
    EXPECT_EQ(MultiPoly(static_cast<long>(f.max_cones().size())), euler) << n;
  }
}

TEST(TwoMarkings, BlowupOrderDoesNotMatter) {
  for (std::size_t n = 2; n <= 4; ++n)
    for (std::size_t i0 = 1; i0 <= n; ++i0)
      for (std::size_t ii = 1; ii <= n; ++ii) {
        std::vector<BlowupStep> zero, inf;
        for (std::size_t j = n; j > i0; --j) zero.push_back({false, j});
        for (std::size_t j = n; j > ii; --j) inf.push_back({true, j});
        // Every interleaving preserving each side's order.
        std::vector<int> pattern(zero.size(), 0);
        pattern.insert(pattern.end(), inf.size(), 1);
        const auto reference = hilb_fan_two_markings(n, i0, ii);
        do {
          std::vector<BlowupStep> steps;
          std::size_t a = 0, b = 0;
          for (int side : pattern) steps.push_back(side ? inf[b++] : zero[a++]);
          EXPECT_TRUE(same_fan(apply_blowups(projective_fan(n), steps), reference))
              << "n=" << n << " i0=" << i0 << " i_inf=" << ii;
        } while (std::next_permutation(pattern.begin(), pattern.end()));
      }
}
