#include <gtest/gtest.h>

#include <random>

#include "confspace/segments.hpp"

using namespace confspace;

namespace {

// Best clearance over plain random sampling of the four center coordinates.
double sampled_best(double r, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1, 1);
  double best = -1e9;
  for (int i = 0; i < samples; ++i) best = std::max(best, perpendicular_clearance(r, {u(rng), u(rng), u(rng), u(rng)}));
  return best;
}

}  // namespace

TEST(Perpendicular, ChordAndTangentPictureFitsUpToOnePointSix) {
  // Horizontal chord at y = -3/5 (half-length 4/5), vertical segment from the
  // chord's midpoint up to the boundary: both have length 8/5.
  EXPECT_NEAR(perpendicular_clearance(1.6, {0, -0.6, 0, 0.2}), 0.0, 1e-12);
  EXPECT_LT(perpendicular_clearance(1.6, {0, -0.6, 0, 0.2 + 1e-6}), 0.0);
  EXPECT_TRUE(perpendicular_fits(1.55));
}

TEST(Perpendicular, FeasibilityAgreesWithRandomSampling) {
  // Whatever plain sampling can place, the optimizer places too; lengths above
  // the threshold stay infeasible under both.
  for (double r : {1.3, 1.5, 1.55}) {
    if (sampled_best(r, 200000, 1) >= 0) EXPECT_TRUE(perpendicular_fits(r)) << r;
  }
  EXPECT_GE(sampled_best(1.3, 200000, 1), 0.0);
  EXPECT_LT(sampled_best(1.65, 200000, 2), 0.0);
  EXPECT_FALSE(perpendicular_fits(1.61));
}

TEST(Perpendicular, ThresholdWithoutPaperSeeds) {
  PerpendicularOptions opt;
  opt.paper_seeds = false;
  opt.random_starts = 3000;
  EXPECT_NEAR(max_perpendicular_length(1e-4, opt), 1.6, 2e-3);
}

TEST(Collinear, ObstructionMatchesBisection) {
  for (int k = 1; k <= 8; ++k) {
    double lo = 0, hi = 1;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      DiskConfig c{{}, mid};
      for (int i = 0; i < k; ++i) c.centers.push_back({(2 * i - (k - 1)) * mid, 0});
      (c.is_valid(0) ? lo : hi) = mid;
    }
    EXPECT_NEAR(collinear_obstruction(k), lo, 1e-12);
  }
  EXPECT_THROW(collinear_obstruction(0), std::invalid_argument);
}

TEST(Hourglass, InequalitiesHoldAcrossParameters) {
  std::mt19937_64 rng(16);
  std::uniform_real_distribution<double> ur(1.02, 3.0), ud(0.01, 1.0);
  for (int t = 0; t < 500; ++t) {
    const double r = ur(rng), d = ud(rng);
    const auto p = hourglass_params(r, d);
    EXPECT_TRUE(p.width_ok());
    EXPECT_TRUE(p.diagonal_ok());
    EXPECT_TRUE(p.length_ok());
    EXPECT_LT(p.b, 1.0);
    // Obstacles: symmetric pairs at odd multiples of a.
    for (const Vec2& s : p.S) {
      EXPECT_NEAR(std::abs(s.y), p.b, 1e-15);
      const double k = (s.x / p.a - 1) / 2;
      EXPECT_NEAR(k, std::round(k), 1e-9);
    }
  }
  EXPECT_THROW(hourglass_params(1.0, 0.2), std::invalid_argument);
  EXPECT_THROW(hourglass_params(1.5, 0.0), std::invalid_argument);
}

TEST(Hourglass, HalvingDeltaBreaksTheWidthCondition) {
  auto p = hourglass_params(1.5, 0.2);
  p.delta /= 2;
  EXPECT_FALSE(p.width_ok());
  EXPECT_FALSE(p.valid());
  EXPECT_FALSE(p.violation().empty());
}

TEST(Radial, DistinctAnglesSpinFreely) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 500; ++t) {
    std::vector<double> a(1 + t % 8);
    for (double& x : a) x = u(rng);
    const auto c = radial_surjectivity_demo(a, 0.9);
    EXPECT_TRUE(c.is_valid());
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_NEAR(wrap_signed_turns(turns_of(c.centers[i]) - a[i]), 0.0, 1e-12);
    }
  }
  EXPECT_THROW(radial_surjectivity_demo({0.25, 1.25}, 0.5), std::invalid_argument);
}
