#include <gtest/gtest.h>

#include <sstream>

#include "nilschur/multiplier.hpp"
#include "support.hpp"

using namespace nilschur::multiplier;
using testsupport::e;
using testsupport::named;
using testsupport::vec;

namespace {

// symbol vector with coefficients at 1-based lexicographic pair numbers
Vector symbols(std::size_t count, std::initializer_list<std::pair<std::size_t, long>> terms) {
  Vector v = nilschur::exactla::zero_vector(count);
  for (const auto& [k, c] : terms) v[k - 1] = c;
  return v;
}

}  // namespace

TEST(PairIndex, LexicographicNumbering) {
  EXPECT_EQ(pair_index(6, 0, 1), 0u);
  EXPECT_EQ(pair_index(6, 0, 5), 4u);
  EXPECT_EQ(pair_index(6, 1, 2), 5u);
  EXPECT_EQ(pair_index(6, 4, 5), 14u);
  const auto pairs = all_pairs(5);
  ASSERT_EQ(pairs.size(), 10u);
  for (std::size_t k = 0; k < pairs.size(); ++k) EXPECT_EQ(pair_index(5, pairs[k].first, pairs[k].second), k);
}

TEST(JacobiMatrix, AbelianIsZero) {
  const auto J = jacobi_relation_matrix(named("A(4)"));
  EXPECT_EQ(J.rows(), 4u);
  EXPECT_EQ(J.cols(), 6u);
  EXPECT_EQ(nilschur::exactla::rank(J), 0u);
}

TEST(JacobiMatrix, L626Relations) {
  const auto J = jacobi_relation_matrix(named("L6_26"));
  const auto R = Subspace::row_space(J);
  EXPECT_EQ(R.dim(), 4u);
  const auto expected = Subspace::span({symbols(15, {{5, 1}, {8, -1}, {10, 1}}), symbols(15, {{13, 1}}),
                                        symbols(15, {{14, 1}}), symbols(15, {{15, 1}})},
                                       15);
  EXPECT_EQ(R, expected);
}

TEST(JacobiMatrix, L58Relations) {
  const auto n = 5;
  const auto R = Subspace::row_space(jacobi_relation_matrix(named("L5_8")));
  EXPECT_EQ(R.dim(), 2u);
  Vector a = nilschur::exactla::zero_vector(10);
  a[pair_index(n, 1, 4)] = 1;
  a[pair_index(n, 2, 3)] = -1;
  Vector b = nilschur::exactla::zero_vector(10);
  b[pair_index(n, 3, 4)] = 1;
  EXPECT_EQ(R, Subspace::span({a, b}, 10));
}

TEST(SchurMultiplier, KnownValues) {
  EXPECT_EQ(schur_multiplier_dim(named("A(4)")).dim_M, 6u);
  EXPECT_EQ(schur_multiplier_dim(named("H(1)")).dim_M, 2u);
  EXPECT_EQ(schur_multiplier_dim(named("H(2)")).dim_M, 5u);
  EXPECT_EQ(schur_multiplier_dim(named("H(3)")).dim_M, 14u);
  EXPECT_EQ(schur_multiplier_dim(named("L6_26")).dim_M, 8u);
  EXPECT_EQ(schur_multiplier_dim(named("L5_7")).dim_M, 3u);
  EXPECT_EQ(schur_multiplier_dim(named("L5_9")).dim_M, 3u);
  EXPECT_EQ(schur_multiplier_dim(named("L5_8")).dim_M, 6u);
  EXPECT_EQ(schur_multiplier_dim(named("L5_8+A(1)")).dim_M, 9u);
  EXPECT_EQ(schur_multiplier_dim(LieAlgebra::trivial()).dim_M, 0u);
}

TEST(CoverPresentation, H1) {
  const auto c = cover_presentation(named("H(1)"));
  EXPECT_EQ(c.absorbed_pairs, (std::vector<Pair>{{0, 1}}));
  EXPECT_EQ(c.multiplier_basis, (std::vector<Pair>{{0, 2}, {1, 2}}));
  EXPECT_EQ(c.multiplier_dim, 2u);
}

TEST(CoverPresentation, L626) {
  const auto c = cover_presentation(named("L6_26"));
  EXPECT_EQ(c.relation_rank, 4u);
  EXPECT_EQ(c.absorbed_pairs, (std::vector<Pair>{{0, 1}, {0, 2}, {1, 2}}));
  // s3, s4, s7, ..., s12
  std::vector<Pair> expected;
  for (std::size_t k : {3, 4, 7, 8, 9, 10, 11, 12}) expected.push_back(c.pairs[k - 1]);
  EXPECT_EQ(c.multiplier_basis, expected);
  EXPECT_EQ(c.multiplier_dim, 8u);

  std::ostringstream out;
  print_cover(out, c);
  EXPECT_NE(out.str().find("[x1, x2] = x4 + s1"), std::string::npos);
  EXPECT_NE(out.str().find("s5 - s8 + s10 = 0"), std::string::npos);
}

TEST(CoverPresentation, A2) {
  const auto c = cover_presentation(named("A(2)"));
  EXPECT_TRUE(c.absorbed_pairs.empty());
  EXPECT_EQ(c.multiplier_basis, (std::vector<Pair>{{0, 1}}));
  EXPECT_EQ(c.multiplier_dim, 1u);
}

TEST(ExteriorSquare, Examples) {
  EXPECT_EQ(exterior_square_dim(named("A(5)")), 10u);
  EXPECT_EQ(exterior_square_dim(named("L6_26")), 11u);
  EXPECT_EQ(exterior_square_dim(named("L5_7")), 6u);
}

TEST(CentralWedge, Examples) {
  const auto l626 = named("L6_26");
  EXPECT_EQ(central_wedge_dim(l626, Subspace::zero(6)), 0u);
  EXPECT_EQ(central_wedge_dim(l626, nilschur::liealg::derived(l626)), 9u);
  EXPECT_THROW(central_wedge_dim(l626, Subspace::span({e(6, 1)}, 6)), NotCentral);
}

TEST(CentralWedge, TopLevelOfLowerCentralQuotients) {
  for (const char* name : {"L5_7", "L5_9", "L6_26"}) {
    const auto L = named(name);
    const auto series = nilschur::liealg::lower_central_series(L);
    const std::size_t ab = L.dim() - series[1].dim();
    for (std::size_t i = 2; i + 1 < series.size(); ++i) {
      const auto q = nilschur::liealg::quotient(L, series[i]);
      const auto top = Subspace::span([&] {
        std::vector<Vector> rows;
        for (const auto& v : series[i - 1].basis_vectors()) rows.push_back(q.projection.apply(v));
        return rows;
      }(), q.algebra.dim());
      EXPECT_EQ(central_wedge_dim(q.algebra, top), (series[i - 1].dim() - series[i].dim()) * ab) << name;
    }
  }
}

TEST(DirectSumCheck, Examples) {
  const auto a = direct_sum_multiplier_check(named("A(2)"), named("A(3)"));
  EXPECT_EQ(a.lhs, 10u);
  EXPECT_EQ(a.rhs, 10u);
  EXPECT_TRUE(a.ok);
  for (std::size_t n = 4; n <= 7; ++n) {
    const auto c = direct_sum_multiplier_check(named("H(1)"), named("A(" + std::to_string(n - 3) + ")"));
    EXPECT_EQ(c.lhs, (n - 1) * (n - 2) / 2 + 1);
    EXPECT_TRUE(c.ok);
  }
  const auto l = direct_sum_multiplier_check(named("L5_8"), named("A(1)"));
  EXPECT_EQ(l.lhs, 9u);
  EXPECT_EQ(l.rhs, 9u);
}

TEST(QuotientInequality, Examples) {
  const auto l626 = named("L6_26");
  const auto zero = quotient_inequality_check(l626, Subspace::zero(6));
  EXPECT_EQ(zero.lhs, zero.rhs);

  const auto q = quotient_inequality_check(l626, Subspace::span({e(6, 6)}, 6));
  EXPECT_EQ(q.dim_M_L, 8u);
  EXPECT_EQ(q.dim_L2_cap_K, 1u);
  EXPECT_EQ(q.dim_M_H, 6u);
  EXPECT_EQ(q.dim_M_K, 0u);
  EXPECT_EQ(q.dim_tensor, 3u);
  EXPECT_EQ(q.lhs, 9u);
  EXPECT_EQ(q.rhs, 9u);
  EXPECT_TRUE(q.ok);

  const auto h = named("H(1)");
  const auto z = quotient_inequality_check(h, nilschur::liealg::center(h));
  EXPECT_EQ(z.lhs, 3u);
  EXPECT_EQ(z.rhs, 3u);
  EXPECT_TRUE(z.ok);

  EXPECT_THROW(quotient_inequality_check(h, Subspace::span({e(3, 1)}, 3)), nilschur::liealg::NotAnIdeal);
}

TEST(GMap, H1) {
  const auto g = g_map_analysis(named("H(1)"));
  EXPECT_EQ(g.dim_M, 2u);
  EXPECT_EQ(g.dim_M_abelianization, 1u);
  EXPECT_EQ(g.dim_im_g, 2u);
  EXPECT_EQ(g.dim_ker_g, 0u);
  EXPECT_TRUE(g.exactness_ok);
  EXPECT_TRUE(g.K_in_kernel_ok);
}

TEST(GMap, L626) {
  const auto g = g_map_analysis(named("L6_26"));
  EXPECT_EQ(g.dim_im_g, 8u);
  EXPECT_EQ(g.dim_ker_g, 1u);
  EXPECT_TRUE(g.exactness_ok);
  EXPECT_TRUE(g.K_in_kernel_ok);
}

TEST(GMap, RejectsOtherClasses) {
  EXPECT_THROW(g_map_analysis(named("L5_7")), NotClassTwo);
  EXPECT_THROW(g_map_analysis(named("A(3)")), NotClassTwo);
}
