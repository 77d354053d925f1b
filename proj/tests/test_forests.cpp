#include <gtest/gtest.h>

#include <set>

#include "confspace/forests.hpp"

using namespace confspace;

namespace {

// Each vertex v picks a parent among 1..v-1 or none: prod (1 + (v-1) x).
std::vector<long long> forest_counts(int n) {
  std::vector<long long> c{1};
  for (int v = 1; v <= n; ++v) {
    std::vector<long long> next(c.size() + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
      next[k] += c[k];
      next[k + 1] += c[k] * (v - 1);
    }
    c = next;
  }
  return c;
}

}  // namespace

TEST(Forests, CountsMatchStirlingPolynomial) {
  for (int n = 1; n <= 7; ++n) {
    const auto want = forest_counts(n);
    long long total = 0;
    for (int j = 0; j <= n - 1; ++j) {
      const auto fs = enumerate_forests(n, j);
      EXPECT_EQ(static_cast<long long>(fs.size()), want[j]) << "n=" << n << " j=" << j;
      total += static_cast<long long>(fs.size());
    }
    long long fact = 1;
    for (int k = 2; k <= n; ++k) fact *= k;
    EXPECT_EQ(total, fact);
  }
}

TEST(Forests, EnumerationIsSortedUniqueAndValid) {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 0; j < n; ++j) {
      const auto fs = enumerate_forests(n, j);
      EXPECT_TRUE(std::is_sorted(fs.begin(), fs.end()));
      EXPECT_EQ(std::set<OrderedForest>(fs.begin(), fs.end()).size(), fs.size());
      for (const auto& g : fs) {
        EXPECT_EQ(static_cast<int>(g.edge_count()), j);
        std::set<int> heads;
        for (const auto& e : g.edges()) {
          EXPECT_LT(e.from, e.to);
          EXPECT_TRUE(heads.insert(e.to).second);
        }
      }
    }
  }
}

TEST(Forests, ParseAndPrint) {
  const auto g = parse_forest(4, "3-4, 1->2,1-3");
  EXPECT_EQ(g.to_string(), "{1->2,1->3,3->4}");
  EXPECT_EQ(parse_forest(4, g.to_string().substr(1, g.to_string().size() - 2)), g);
  EXPECT_EQ(g.edge_index(1, 3), 1);
  EXPECT_EQ(g.edge_index(2, 3), -1);
  EXPECT_EQ(parse_forest(3, "").edge_count(), 0u);
}

TEST(Forests, RejectsInvalidEdges) {
  EXPECT_THROW(parse_forest(3, "2-1"), std::invalid_argument);
  EXPECT_THROW(parse_forest(3, "1-3,2-3"), std::invalid_argument);
  EXPECT_THROW(parse_forest(3, "1-4"), std::invalid_argument);
  EXPECT_THROW(parse_forest(3, "1x2"), std::invalid_argument);
  EXPECT_THROW(enumerate_forests(3, 3), std::invalid_argument);
}

TEST(Forests, ComponentProfile) {
  EXPECT_EQ(component_profile(parse_forest(5, "1-2,3-4,3-5")), (ComponentProfile{{2, 3}, 3}));
  EXPECT_EQ(component_profile(parse_forest(4, "")), (ComponentProfile{{}, 0}));
  EXPECT_EQ(component_profile(parse_forest(4, "1-2,2-3,1-4")), (ComponentProfile{{4}, 3}));
}

TEST(Forests, ClassArithmetic) {
  const auto a = parse_forest(3, "1-2"), b = parse_forest(3, "1-3");
  CohomClass c = CohomClass::of(a, 2) + CohomClass::of(b, -1);
  EXPECT_EQ(c.coefficient(a), 2);
  EXPECT_EQ(c.coefficient_sum(), 1);
  c -= CohomClass::of(a, 2);
  EXPECT_EQ(c.terms().size(), 1u);
  EXPECT_EQ(c.coordinates(enumerate_forests(3, 1)), (std::vector<std::int64_t>{0, -1, 0}));
  EXPECT_THROW(c.add(parse_forest(3, "1-2,1-3"), 1), std::invalid_argument);
  EXPECT_THROW(c.add(parse_forest(4, "1-2"), 1), std::invalid_argument);
}

TEST(Forests, TopKernelElementIsAlternatingFaceSum) {
  const auto t = parse_forest(4, "1-2,2-3,3-4");
  const auto k = top_kernel_element(t);
  EXPECT_EQ(k.coefficient(parse_forest(4, "2-3,3-4")), 1);
  EXPECT_EQ(k.coefficient(parse_forest(4, "1-2,3-4")), -1);
  EXPECT_EQ(k.coefficient(parse_forest(4, "1-2,2-3")), 1);
  EXPECT_THROW(top_kernel_element(parse_forest(4, "1-2,3-4")), std::invalid_argument);
}

TEST(Forests, KernelLadderValues) {
  using A = std::array<int, 4>;
  EXPECT_EQ(kernel_ladder_n4(0.2), (A{0, 0, 0, 0}));
  EXPECT_EQ(kernel_ladder_n4(0.3), (A{0, 0, 6, 6}));
  EXPECT_EQ(kernel_ladder_n4(0.4), (A{0, 5, 11, 6}));
  EXPECT_EQ(kernel_ladder_n4(0.5), (A{1, 6, 11, 6}));
  // Bands are open on the left: at a threshold nothing new dies yet.
  EXPECT_EQ(kernel_ladder_n4(0.25), (A{0, 0, 0, 0}));
  EXPECT_EQ(kernel_ladder_n4(1.0 / 3.0), (A{0, 0, 6, 6}));
  EXPECT_EQ(kernel_ladder_n4(LadderThresholds::square()), (A{0, 5, 11, 6}));
}

TEST(Forests, KernelLadderIsMonotoneAndBounded) {
  const auto counts = forest_counts(4);
  std::array<int, 4> prev{};
  for (double r = 0.01; r < 0.6; r += 0.01) {
    const auto k = kernel_ladder_n4(r);
    for (int j = 0; j < 4; ++j) {
      EXPECT_GE(k[j], prev[j]) << "r=" << r;
      EXPECT_LE(k[j], counts[j]);
    }
    prev = k;
  }
}
