#include <gtest/gtest.h>

#include <random>

#include "confspace/balance.hpp"
#include "confspace/search.hpp"

using namespace confspace;

TEST(Lp, FindsNonnegativeSolutionsOrReportsNone) {
  // x + y = 1, x - y = 0.2.
  auto s = nonnegative_solution({{1, 1}, {1, -1}}, {1, 0.2});
  ASSERT_TRUE(s);
  EXPECT_NEAR((*s)[0], 0.6, 1e-12);
  EXPECT_NEAR((*s)[1], 0.4, 1e-12);
  // x + y = -1 has no nonnegative solution.
  EXPECT_FALSE(nonnegative_solution({{1, 1}}, {-1}));
  // Random feasible systems: build b from a nonnegative x.
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + t % 5, n = m + t % 4;
    DenseMatrix A(m, std::vector<double>(n));
    std::vector<double> x(n), b(m, 0.0);
    for (auto& v : x) v = std::abs(u(rng));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) {
        A[i][j] = u(rng);
        b[i] += A[i][j] * x[j];
      }
    auto sol = nonnegative_solution(A, b);
    ASSERT_TRUE(sol) << "trial " << t;
    for (int i = 0; i < m; ++i) {
      double r = -b[i];
      for (int j = 0; j < n; ++j) r += A[i][j] * (*sol)[j];
      EXPECT_NEAR(r, 0.0, 1e-9);
    }
    for (double v : *sol) EXPECT_GE(v, 0.0);
  }
}

TEST(Balance, DiametersAndSquareAreBalanced) {
  for (int n = 1; n <= 10; ++n) {
    const auto c = diameter_config(n, 0.37);
    ASSERT_TRUE(c.is_valid());
    const auto g = contact_graph(c);
    EXPECT_EQ(g.internal_edge_count(), static_cast<std::size_t>(n - 1));
    EXPECT_EQ(g.boundary_edge_count(), n == 1 ? 0u : 2u);
    const auto b = is_balanced(g);
    if (n == 1) continue;  // the centered unit disk has no single contact point
    EXPECT_TRUE(b.balanced) << "n=" << n;
    EXPECT_LT(b.residual, 1e-8);
    for (double w : b.weights) EXPECT_GE(w, 1.0 - 1e-12);
  }
  const auto sq = contact_graph(square_config(0.2));
  EXPECT_EQ(sq.internal_edge_count(), 4u);
  EXPECT_EQ(sq.boundary_edge_count(), 4u);
  EXPECT_TRUE(is_balanced(sq).balanced);
}

TEST(Balance, UnbalancedConfigurations) {
  // A single disk touching the wall is pushed, nothing pushes back.
  DiskConfig one{{{0.5, 0}}, 0.5};
  EXPECT_FALSE(is_balanced(contact_graph(one)).balanced);
  // Three disks in a row shifted to one side: only one wall contact.
  DiskConfig row{{{-0.2, 0}, {0.2, 0}, {0.6, 0}}, 0.2};
  EXPECT_FALSE(is_balanced(contact_graph(row)).balanced);
  // A tangent pair floating inside the disk: the pair forces cannot cancel.
  DiskConfig pair{{{-0.1, 0}, {0.1, 0}}, 0.1};
  EXPECT_FALSE(is_balanced(contact_graph(pair)).balanced);
  // With no contacts at all the graph is empty and nothing is balanced.
  DiskConfig loose{{{-0.5, 0}, {0.5, 0}}, 0.1};
  EXPECT_TRUE(contact_graph(loose).edges.empty());
  EXPECT_FALSE(is_balanced(contact_graph(loose)).balanced);
}

TEST(Balance, AnySupportFindsSubgraphStresses) {
  // Diameter of three plus a fourth disk stacked on the middle one. Disk 2 is
  // pushed down with nothing pushing up, so every contact cannot carry weight;
  // the stress supported on the diameter alone still exists.
  DiskConfig d{{{-2.0 / 3, 0}, {0, 0}, {2.0 / 3, 0}, {0, 2.0 / 3}}, 1.0 / 3};
  const auto g = contact_graph(d);
  EXPECT_FALSE(is_balanced(g).balanced);
  const auto any = is_balanced(g, WeightMode::AnySupport);
  EXPECT_TRUE(any.balanced);
}

TEST(Balance, ContactFreeConfigurationsHaveEmptyGraphs) {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 200; ++t) {
    std::vector<Vec2> c;
    while (c.size() < 2 + t % 6u) {
      const Vec2 p{u(rng), u(rng)};
      if (norm(p) < 0.95) c.push_back(p);
    }
    const DiskConfig cfg{c, 0.9 * tau(c)};
    EXPECT_TRUE(contact_graph(cfg).edges.empty());
  }
  EXPECT_THROW(contact_graph(DiskConfig{{{0, 0}}, 0}), std::invalid_argument);
}

TEST(EnclosingBall, RadiusAtMostHalfTheLength) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int t = 0; t < 300; ++t) {
    const int n = 1 + t % 12;
    std::vector<Vec2> v(n);
    for (auto& p : v) p = {u(rng), u(rng)};
    std::vector<std::pair<int, int>> e;
    double L = 0;
    for (int i = 1; i < n; ++i) {
      const int parent = static_cast<int>(rng() % i);
      e.push_back({parent, i});
      L += distance(v[parent], v[i]);
    }
    const Ball b = enclosing_ball_of_tree(v, e);
    EXPECT_LE(b.radius, 0.5 * L + 1e-12);
    for (const auto& p : v) EXPECT_LE(distance(p, b.center), b.radius + 1e-12);
  }
  EXPECT_THROW(enclosing_ball_of_tree({{0, 0}, {1, 0}}, {}), std::invalid_argument);
}

TEST(Search, FindsKnownBalancedConfigurations) {
  SearchOptions opt;
  opt.trials = 300;
  const auto d = search_balanced(3, 1.0 / 3.0, opt);
  ASSERT_FALSE(d.empty());
  EXPECT_TRUE(has_diameter_chain(d.front().config, 1e-6));
  const auto s = search_balanced(4, 1.0 / (1.0 + std::sqrt(2.0)), opt);
  ASSERT_FALSE(s.empty());
  for (const auto& h : s) EXPECT_TRUE(h.balance.balanced);
}

TEST(Search, NothingJustBelowTheDiameterRadius) {
  SearchOptions opt;
  opt.trials = 600;
  for (int n : {2, 3, 4}) EXPECT_TRUE(search_balanced(n, 1.0 / n - 0.01, opt).empty()) << "n=" << n;
}

TEST(Search, IsReproducibleFromTheSeed) {
  SearchOptions opt;
  opt.trials = 150;
  opt.seed = 42;
  const auto a = search_balanced(4, 1.0 / (1.0 + std::sqrt(2.0)), opt);
  const auto b = search_balanced(4, 1.0 / (1.0 + std::sqrt(2.0)), opt);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].config.centers[0].x, b[i].config.centers[0].x);
}

TEST(Classify, DiameterAboveAndViolation) {
  const int n = 5;  // threshold 3/13
  const auto cls = classify_small_radius(n, {diameter_config(5), square_config(), DiskConfig{{{0, 0}, {0.4, 0}}, 0.2}});
  EXPECT_EQ(cls[0].label, "diameter");
  EXPECT_EQ(cls[1].label, "above threshold");
  EXPECT_EQ(cls[2].label, "violation");
}
