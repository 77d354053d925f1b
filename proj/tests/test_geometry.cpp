#include <gtest/gtest.h>

#include <random>

#include "confspace/geometry.hpp"

using namespace confspace;

namespace {

std::vector<Vec2> random_centers(std::mt19937_64& rng, int n, double radius = 0.9) {
  std::uniform_real_distribution<double> u(-1, 1);
  std::vector<Vec2> c;
  while (static_cast<int>(c.size()) < n) {
    const Vec2 p{u(rng), u(rng)};
    if (norm(p) < radius) c.push_back(p);
  }
  return c;
}

// Dense sampling of both segments.
double sampled_distance(const Segment& s, const Segment& t, int k = 400) {
  double best = 1e9;
  for (int i = 0; i <= k; ++i) {
    const Vec2 a = s.p + (double(i) / k) * (s.q - s.p);
    best = std::min(best, point_segment_distance(a, t));
  }
  return best;
}

}  // namespace

TEST(Tau, IsTheSupremalValidRadius) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 300; ++t) {
    const auto c = random_centers(rng, 1 + t % 7);
    const double r = tau(c);
    EXPECT_TRUE((DiskConfig{c, r}.is_valid(1e-12)));
    EXPECT_FALSE((DiskConfig{c, r + 1e-9}.is_valid(0)));
  }
  EXPECT_THROW(tau({{0.1, 0.1}, {0.1, 0.1}}), std::invalid_argument);
}

TEST(SegmentPredicates, AgreeWithSampling) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 2000; ++t) {
    const Segment s{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Segment r{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const double d = segment_distance(s, r);
    const double sampled = sampled_distance(s, r);
    EXPECT_LE(d, sampled + 1e-12);
    // Sampling resolution is about |s|/400.
    EXPECT_NEAR(d, sampled, 0.01);
    if (sampled > 0.02) EXPECT_FALSE(segments_intersect(s, r));
    if (segments_intersect(s, r)) {
      EXPECT_EQ(d, 0.0);
      EXPECT_LE(signed_separation(s, r), 0.0);
    } else {
      EXPECT_GT(signed_separation(s, r), 0.0);
    }
  }
}

TEST(SegmentPredicates, TouchingCounts) {
  const Segment a{{0, 0}, {1, 0}};
  EXPECT_TRUE(segments_intersect(a, Segment{{1, 0}, {2, 1}}));
  EXPECT_TRUE(segments_intersect(a, Segment{{0.5, 0}, {0.5, 1}}));
  EXPECT_TRUE(segments_intersect(a, Segment{{0.5, 0}, {2, 0}}));
  EXPECT_FALSE(segments_intersect(a, Segment{{1.1, 0}, {2, 0}}));
  // Perpendicular crossing: the shortest separating push is the shorter arm.
  EXPECT_NEAR(signed_separation(a, Segment{{0.3, -0.1}, {0.3, 0.5}}), -0.1, 1e-15);
}

TEST(SegTau, MatchesGridScan) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 40; ++t) {
    const int n = 1 + t % 4;
    const auto c = random_centers(rng, n, 0.8);
    std::vector<double> a(n);
    for (double& x : a) x = u(rng);
    double scan = 0;
    while (scan + 1e-3 <= 2.0 && segments_fit(c, a, scan + 1e-3)) scan += 1e-3;
    const double st = seg_tau(c, a);
    EXPECT_GE(st, scan - 1e-12);
    EXPECT_LT(st, scan + 1e-3 + 1e-9);
  }
}

TEST(LengthRecursion, ValuesAndBounds) {
  EXPECT_EQ(ell(1), 2.0);
  EXPECT_EQ(ell(2), 1.6);
  EXPECT_NEAR(d_of(3), 2.9, 1e-15);
  EXPECT_NEAR(ell(3), 4 / 2.9, 1e-15);
  const auto d = d_sequence(5000);
  for (int n = 1; n <= 5000; ++n) {
    EXPECT_GE(d[n] * d[n], 2.0 * (n + 1));
    EXPECT_LE(d[n] * d[n], 3.0 * (n + 1));
    if (n > 1) EXPECT_LT(d[n - 1], d[n]);
  }
}

TEST(Kn, RandomAnglesGiveValidConfigurations) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 3000; ++t) {
    const int n = 1 + t % 7;
    std::vector<double> a(n);
    for (double& x : a) x = u(rng);
    const auto c = build_kn(a);
    ASSERT_EQ(c.size(), static_cast<std::size_t>(n));
    EXPECT_DOUBLE_EQ(c.length, ell(n));
    EXPECT_TRUE(c.is_valid()) << "trial " << t << " clearance " << c.clearance();
  }
}

TEST(Kn, IsTightForSomeAngles) {
  // Worst-case clearance over random angles shrinks to zero: the length is
  // exactly what the recursion can afford.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0, 1);
  double worst = 1;
  for (int t = 0; t < 5000; ++t) {
    std::vector<double> a{u(rng), u(rng)};
    worst = std::min(worst, build_kn(a).clearance());
  }
  EXPECT_LT(worst, 0.01);
}

TEST(Qn, TauAndRecovery) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 3000; ++t) {
    const int n = 2 + t % 8;
    std::vector<double> a(n - 1);
    for (double& x : a) x = u(rng);
    const auto c = build_qn(a);
    EXPECT_NEAR(tau(c.centers), 1.0 / n, 1e-12);
    const auto back = recover_qn_angles(c.centers);
    for (int i = 0; i < n - 1; ++i) EXPECT_NEAR(wrap_signed_turns(back[i] - a[i]), 0.0, 1e-12);
  }
}

TEST(Hhat, ValidAndContinuousOverTheTorus) {
  for (int a = 1; a <= 4; ++a) {
    for (int b = a + 1; b <= 4; ++b) {
      for (int i = 0; i < 60; ++i) {
        for (int j = 0; j < 60; ++j) {
          const auto c = build_hhat(a, b, i / 60.0, j / 60.0);
          ASSERT_TRUE(c.is_valid()) << a << "->" << b << " at " << i << "," << j;
          const auto up = build_hhat(a, b, i / 60.0, (j + 1) / 60.0);
          for (int k = 0; k < 4; ++k) EXPECT_LT(distance(c.centers[k], up.centers[k]), 0.2);
          // The tangent pair points along theta2.
          const Vec2 dir = c.centers[b - 1] - c.centers[a - 1];
          EXPECT_NEAR(wrap_signed_turns(turns_of(dir) - j / 60.0), 0.0, 1e-12);
        }
      }
    }
  }
  EXPECT_THROW(build_h(2, 1, 0.0), std::invalid_argument);
}

TEST(Bounds, Calculators) {
  const auto b = bound_calculators(ComponentProfile{{2, 2}, 2});
  EXPECT_DOUBLE_EQ(b.r_min, 1 / std::sqrt(8.0));
  EXPECT_DOUBLE_EQ(b.r_max, 0.5);
  const auto c = bound_calculators(ComponentProfile{{3}, 2});
  EXPECT_DOUBLE_EQ(c.r_max, 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(bound_calculators(ComponentProfile{{2, 2, 2, 2, 2}, 5}).r_max, 1 / std::sqrt(10.0));
  EXPECT_TRUE(std::isinf(bound_calculators(ComponentProfile{}).r_max));
  EXPECT_THROW(bound_calculators(ComponentProfile{{1}, 0}), std::invalid_argument);
}
