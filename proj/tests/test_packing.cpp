#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "confspace/errors.hpp"
#include "confspace/packing.hpp"

using namespace confspace;

namespace {

void expect_packed(const PackedLayout& lay) {
  for (std::size_t i = 0; i < lay.radii.size(); ++i) {
    EXPECT_LE(norm(lay.centers[i]) + lay.radii[i], lay.R * (1 + 1e-12));
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GE(distance(lay.centers[i], lay.centers[j]), (lay.radii[i] + lay.radii[j]) * (1 - 1e-12));
    }
  }
  EXPECT_LE(lay.R * lay.R, 36 * lay.sum_sq());
}

}  // namespace

TEST(Packing, RandomMultisetsRespectTheBound) {
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> r(1 + t % 40);
    for (double& x : r) x = t % 2 ? u(rng) + 1e-3 : std::pow(10.0, -4 * u(rng));
    std::sort(r.rbegin(), r.rend());
    expect_packed(pack_disks(r));
  }
}

TEST(Packing, EqualDisksAndSingletons) {
  const auto one = pack_disks({0.7});
  EXPECT_DOUBLE_EQ(one.R, 0.7);
  const auto two = pack_disks({1, 1});
  EXPECT_NEAR(two.R, 2.0, 1e-12);
  expect_packed(pack_disks(std::vector<double>(50, 1.0)));
}

TEST(Packing, RejectsBadInput) {
  EXPECT_THROW(pack_disks({}), std::invalid_argument);
  EXPECT_THROW(pack_disks({1, 2}), std::invalid_argument);
  EXPECT_THROW(pack_disks({1, 0}), std::invalid_argument);
}

TEST(Embedding, ScaledPiecesAssemble) {
  const DiskConfig q3 = build_qn({0.1, 0.6});
  const auto part = embed_scaled(q3, {0.5, 0}, 0.5, {2, 4, 5});
  EXPECT_DOUBLE_EQ(part.radius, q3.radius * 0.5);
  EXPECT_THROW(embed_scaled(q3, {0.6, 0}, 0.5, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(embed_scaled(q3, {0, 0}, 0.5, {1, 1, 3}), std::invalid_argument);
  EXPECT_THROW(embed_scaled(q3, {0, 0}, 1.5, {1, 2, 3}), std::invalid_argument);
  EXPECT_THROW(assemble(5, {part}), std::invalid_argument);  // labels 1, 3 missing
}

TEST(Embedding, HalfInclusionIsValid) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 3, k = 1 + (t / 3) % 3;
    std::vector<double> ax(m - 1), ay(k - 1);
    for (double& x : ax) x = u(rng);
    for (double& x : ay) x = u(rng);
    const auto x = build_qn(ax).centers, y = build_qn(ay).centers;
    const double r = 0.5 * std::min(1.0 / m, 1.0 / k) / 2;
    std::vector<int> labels(m + k);
    std::iota(labels.begin(), labels.end(), 1);
    std::shuffle(labels.begin(), labels.end(), rng);
    const std::vector<int> subset(labels.begin(), labels.begin() + m);
    const auto c = half_inclusion(x, y, subset, m + k, r);
    EXPECT_TRUE(c.is_valid()) << "trial " << t;
    EXPECT_DOUBLE_EQ(c.radius, r);
  }
  EXPECT_THROW(half_inclusion({{0, 0}, {0.1, 0}}, {{0, 0}}, {1, 2}, 3, 0.2), InfeasibleError);
}

TEST(Embedding, PartitionInclusion) {
  // Two q_2 pieces side by side at r = 1/5: hosts of radius 2/5.
  const auto p = build_qn({0.3}).centers;
  const auto c = partition_inclusion({p, p}, {{1, 3}, {2, 4}}, {{-0.5, 0}, {0.5, 0}}, 0.2);
  EXPECT_TRUE(c.is_valid());
  EXPECT_THROW(partition_inclusion({p, p}, {{1, 3}, {2, 4}}, {{-0.2, 0}, {0.2, 0}}, 0.2), InfeasibleError);
}

TEST(Matching, FamilyIsValidAcrossAngles) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0, 1);
  for (int j = 1; j <= 5; ++j) {
    // Largest pair radius the ring layout allows, minus a margin.
    const double s = std::sin(std::numbers::pi / std::max(j, 2));
    const double r = j == 1 ? 0.49 : 0.49 * s / (1 + s);
    for (int t = 0; t < 200; ++t) {
      std::vector<double> a(j);
      for (double& x : a) x = u(rng);
      const auto c = build_matching_family(j, r, a);
      ASSERT_TRUE(c.is_valid()) << "j=" << j;
      for (int i = 0; i < j; ++i) {
        EXPECT_NEAR(distance(c.centers[2 * i], c.centers[2 * i + 1]), 2 * r, 1e-12);
      }
    }
  }
  EXPECT_THROW(build_matching_family(3, 0.3, {0, 0, 0}), InfeasibleError);
}
