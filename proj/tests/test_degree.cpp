#include <gtest/gtest.h>

#include "confspace/degree.hpp"
#include "confspace/packing.hpp"

using namespace confspace;

// Linear torus maps x -> A x have degree det A.
TEST(TorusDegree, LinearMapsGiveDeterminant) {
  const std::vector<std::vector<std::vector<int>>> mats{
      {{3}}, {{-2}}, {{0}}, {{2, 1}, {1, 1}}, {{1, 2}, {3, 4}}, {{0, 1}, {1, 0}}, {{1, 0, 0}, {1, 2, 0}, {0, 1, -1}}};
  for (const auto& A : mats) {
    const int j = static_cast<int>(A.size());
    Eigen::MatrixXd M(j, j);
    for (int r = 0; r < j; ++r)
      for (int c = 0; c < j; ++c) M(r, c) = A[r][c];
    const int want = static_cast<int>(std::lround(M.determinant()));
    auto F = [&](const std::vector<double>& x) {
      std::vector<double> y(j, 0.0);
      for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c) y[r] += A[r][c] * x[c];
      return y;
    };
    EXPECT_EQ(torus_map_degree(F, j, 48), want);
  }
}

TEST(TorusDegree, NonlinearButHomotopicMaps) {
  // x + 0.1 sin(2 pi x) is homotopic to the identity.
  auto F = [](const std::vector<double>& x) {
    return std::vector<double>{x[0] + 0.1 * std::sin(2 * std::numbers::pi * x[1]), -x[1] + 0.05 * std::cos(2 * std::numbers::pi * x[0])};
  };
  EXPECT_EQ(torus_map_degree(F, 2, 32), -1);
}

TEST(TorusDegree, CoarseGridIsReported) {
  // 3/8 of a turn per grid step is ambiguous; a finer grid resolves it.
  auto F = [](const std::vector<double>& x) { return std::vector<double>{3 * x[0]}; };
  EXPECT_THROW(torus_map_degree(F, 1, 8), ResolutionError);
  EXPECT_EQ(torus_map_degree(F, 1, 64), 3);
}

TEST(FamilyDegree, SinglePairSpinsOnce) {
  // Two tangent disks spinning about the origin: the edge direction has degree 1.
  auto fam = [](const std::vector<double>& x) {
    const Vec2 u = unit_from_turns(x[0]);
    return std::vector<Vec2>{-0.4 * u, 0.4 * u};
  };
  EXPECT_EQ(family_degree(fam, parse_forest(2, "1-2"), 16), 1);
}

TEST(FamilyDegree, MatchingFamilyIsDiagonal) {
  // Pairs (1,2) and (3,4) spin independently: the matching forest pairs to 1;
  // the cross edge 2->3 never winds, so that forest pairs to 0.
  auto fam = [](const std::vector<double>& x) { return build_matching_family(2, 0.2, x).centers; };
  EXPECT_EQ(family_degree(fam, parse_forest(4, "1-2,3-4"), 24), 1);
  EXPECT_EQ(family_degree(fam, parse_forest(4, "1-2,2-3"), 24), 0);
}

TEST(DegreeOracle, AgreesWithPairingForN3) {
  for (const auto& g : enumerate_forests(3, 2)) {
    for (const auto& s : permutations_fixing_one(3)) {
      EXPECT_EQ(numeric_degree_oracle(g, s, default_qn_grid(3)), pairing_forest_qn(g, s));
    }
  }
}

TEST(DegreeOracle, ContinuityProbeCatchesCoarseGrids) {
  EXPECT_THROW(numeric_degree_oracle(parse_forest(4, "1-2,2-3,3-4"), Permutation::identity(4), 4), ResolutionError);
}
