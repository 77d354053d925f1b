#include <gtest/gtest.h>

#include "confspace/degree.hpp"
#include "confspace/exact.hpp"
#include "confspace/pairing.hpp"

using namespace confspace;

namespace {

int inversion_sign(const std::vector<int>& v) {
  int inv = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) inv += v[i] > v[j];
  return inv % 2 ? -1 : 1;
}

}  // namespace

TEST(Permutation, SignMatchesInversionCount) {
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    do {
      const Permutation p(v);
      EXPECT_EQ(p.sign(), inversion_sign(v));
      EXPECT_EQ(p.inverse().sign(), p.sign());
      for (int i = 1; i <= n; ++i) EXPECT_EQ(p.inverse()(p(i)), i);
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST(Permutation, ValidationAndExtension) {
  EXPECT_THROW(Permutation({1, 1, 2}), std::invalid_argument);
  EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
  EXPECT_EQ(Permutation({1, 3, 2}).extended(2).images(), (std::vector<int>{1, 4, 3, 2}));
  EXPECT_EQ(Permutation({1, 3, 2}).to_string(), "[1 3 2]");
}

TEST(Permutation, FixingOneCountAndOrder) {
  for (int n = 1; n <= 6; ++n) {
    const auto ps = permutations_fixing_one(n);
    std::size_t fact = 1;
    for (int k = 2; k < n; ++k) fact *= k;
    EXPECT_EQ(ps.size(), fact);
    EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end()));
    for (const auto& p : ps) EXPECT_EQ(p(1), 1);
  }
}

TEST(Pairing, RelabelingMovesEdges) {
  const auto g = parse_forest(3, "1-2,2-3");
  const auto r = sigma_apply(Permutation({1, 3, 2}), g);
  // G has 1->2 and 2->3; sigma^{-1} = [1 3 2] sends them to 1->3 and 3->2.
  EXPECT_EQ(r.edges[0], (Edge{1, 3}));
  EXPECT_EQ(r.edges[1], (Edge{3, 2}));
  EXPECT_FALSE(r.is_ordered_forest);
  EXPECT_EQ(pairing_forest_qn(g, Permutation({1, 3, 2})), 0);
}

TEST(Pairing, IdentityPairsToOne) {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_forests(n, n - 1)) EXPECT_EQ(pairing_forest_qn(g, Permutation::identity(n)), 1);
  }
  EXPECT_THROW(pairing_forest_qn(parse_forest(3, "1-2,1-3"), Permutation({2, 1, 3})), std::invalid_argument);
}

TEST(Pairing, DualBasisMatrixShapeAndBounds) {
  for (int n = 2; n <= 6; ++n) {
    const auto m = dual_basis_matrix(n);
    EXPECT_EQ(m.rows.size(), m.cols.size());
    EXPECT_EQ(abs(exact_determinant(m.entries)), 1) << "n=" << n;
  }
  EXPECT_THROW(dual_basis_matrix(1), std::invalid_argument);
  EXPECT_THROW(dual_basis_matrix(kMaxDualBasisN + 1), std::length_error);
}

// Independent oracle: the dual element solves M^T-style systems exactly.
TEST(Pairing, DualExpansionMatchesExactSolve) {
  for (int n = 3; n <= 5; ++n) {
    const auto m = dual_basis_matrix(n);
    // Unknowns b_tau = a_tau sign(tau); sum_tau b_tau <h, tau q_n> = [h == g].
    for (std::size_t gi = 0; gi < m.rows.size(); ++gi) {
      std::vector<std::int64_t> rhs(m.rows.size(), 0);
      rhs[gi] = 1;
      const auto b = exact_solve(m.entries, rhs);
      const auto e = dual_expansion(m.rows[gi]);
      for (std::size_t j = 0; j < m.cols.size(); ++j) {
        const auto it = e.find(m.cols[j]);
        const std::int64_t a = it == e.end() ? 0 : it->second;
        EXPECT_EQ(Rational(a * m.cols[j].sign()), b[j]) << m.rows[gi].to_string() << " " << m.cols[j].to_string();
      }
    }
  }
}

TEST(Pairing, HhatPairingAgreesWithDegree) {
  for (const auto& g : enumerate_forests(4, 2)) {
    for (int a = 1; a <= 4; ++a) {
      for (int b = a + 1; b <= 4; ++b) {
        EXPECT_EQ(numeric_degree_oracle_hhat(g, a, b, 24), pairing_hhat(g, a, b))
            << g.to_string() << " h_" << a << "->" << b;
      }
    }
  }
}
