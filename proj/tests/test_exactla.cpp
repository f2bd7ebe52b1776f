#include <gtest/gtest.h>

#include "nilschur/exactla.hpp"
#include "nilschur/multiplier.hpp"
#include "support.hpp"

using namespace nilschur::exactla;
using testsupport::e;
using testsupport::mat;
using testsupport::vec;

namespace {

// plain textbook Gauss-Jordan on rationals, used as an oracle
RrefResult naive_rref(Matrix a) {
  RrefResult out;
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(row, k));
    const Rational inv = 1 / a(row, c);
    for (std::size_t k = 0; k < a.cols(); ++k) a(row, k) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, c) == 0) continue;
      const Rational f = a(r, c);
      for (std::size_t k = 0; k < a.cols(); ++k) a(r, k) -= f * a(row, k);
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  out.reduced = a;
  return out;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-2/4"), Rational(-1, 2));
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("6/-4"), nilschur::InputError);
  EXPECT_THROW(parse_rational("1/0"), nilschur::InputError);
  EXPECT_THROW(parse_rational("0.5"), nilschur::InputError);
  EXPECT_THROW(parse_rational(""), nilschur::InputError);
}

TEST(Rref, Identity) {
  const auto r = rref(Matrix::identity(2));
  EXPECT_EQ(r.reduced, Matrix::identity(2));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, ProportionalRows) {
  const auto r = rref(mat({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0}));
  EXPECT_EQ(r.reduced, mat({{1, 2}, {0, 0}}));
}

TEST(Rref, JacobiMatrixOfL626HasRankFour) {
  const auto J = nilschur::multiplier::jacobi_relation_matrix(testsupport::named("L6_26"));
  EXPECT_EQ(J.rows(), 20u);
  EXPECT_EQ(J.cols(), 15u);
  EXPECT_EQ(rank(J), 4u);
}

TEST(Rref, MatchesNaiveOracleOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 7;
    auto m = testsupport::random_matrix(rng, rows, cols);
    // force some rank deficiency
    if (rows > 2 && trial % 3 == 0) {
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * 2 - m(1, c);
    }
    const auto fast = rref(m);
    const auto slow = naive_rref(m);
    ASSERT_EQ(fast.rank, slow.rank);
    ASSERT_EQ(fast.pivots, slow.pivots);
    ASSERT_EQ(fast.reduced, slow.reduced);
  }
}

TEST(Rref, IdempotentAndRowSpacePreserving) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = testsupport::random_matrix(rng, 4, 5);
    const auto once = rref(m);
    EXPECT_EQ(rref(once.reduced).reduced, once.reduced);
    EXPECT_EQ(Subspace::row_space(m), Subspace::row_space(once.reduced));
    for (std::size_t i = 0; i < once.pivots.size(); ++i) {
      for (std::size_t r = 0; r < m.rows(); ++r) EXPECT_EQ(once.reduced(r, once.pivots[i]), r == i ? 1 : 0);
    }
  }
}

TEST(Rref, EmptyShapes) {
  EXPECT_EQ(rank(Matrix(0, 4)), 0u);
  EXPECT_EQ(rank(Matrix(3, 0)), 0u);
  EXPECT_EQ(rank(Matrix(3, 3)), 0u);
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto p = testsupport::random_invertible(rng, 4);
    EXPECT_EQ(p * inverse(p), Matrix::identity(4));
  }
  EXPECT_THROW(inverse(mat({{1, 2}, {2, 4}})), SingularMatrix);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(Matrix::identity(3)).dim(), 0u);
  EXPECT_EQ(kernel_basis(Matrix(2, 5)), Subspace::full(5));
  const auto k = kernel_basis(mat({{1, 1, 0}}));
  EXPECT_EQ(k.dim(), 2u);
  EXPECT_TRUE(in_span(vec({1, -1, 0}), k));
}

TEST(Kernel, RankNullityAndAnnihilation) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 5;
    const std::size_t cols = 1 + rng() % 6;
    const auto m = testsupport::random_matrix(rng, rows, cols, -1, 1);
    const auto k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), cols);
    for (const auto& v : k.basis_vectors()) EXPECT_TRUE(is_zero(m.apply(v)));
  }
}

TEST(SpanSum, Examples) {
  const auto x = Subspace::span({vec({1, 2, 3})}, 3);
  EXPECT_EQ(span_sum(x, Subspace::zero(3)), x);
  EXPECT_EQ(span_sum(Subspace::span({e(3, 1)}, 3), Subspace::span({e(3, 2)}, 3)),
            Subspace::span({e(3, 1), e(3, 2)}, 3));
  EXPECT_EQ(span_sum(Subspace::span({vec({1, 1})}, 2), Subspace::span({vec({1, -1})}, 2)).dim(), 2u);
}

TEST(SpanIntersect, Examples) {
  const auto x = Subspace::span({vec({1, 2, 3}), vec({0, 1, 1})}, 3);
  EXPECT_EQ(span_intersect(x, x), x);
  EXPECT_TRUE(span_intersect(Subspace::span({e(3, 1)}, 3), Subspace::span({e(3, 2)}, 3)).is_zero());
  EXPECT_EQ(span_intersect(Subspace::span({e(3, 1), e(3, 2)}, 3), Subspace::span({e(3, 2), e(3, 3)}, 3)),
            Subspace::span({e(3, 2)}, 3));
}

TEST(SpanIntersect, DimensionFormulaOnRandomPairs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const auto a = Subspace::row_space(testsupport::random_matrix(rng, 1 + rng() % 4, 6, -1, 1));
    const auto b = Subspace::row_space(testsupport::random_matrix(rng, 1 + rng() % 4, 6, -1, 1));
    const auto cap = span_intersect(a, b);
    EXPECT_EQ(span_sum(a, b).dim() + cap.dim(), a.dim() + b.dim());
    EXPECT_TRUE(a.contains(cap));
    EXPECT_TRUE(b.contains(cap));
  }
}

TEST(InSpan, Examples) {
  EXPECT_TRUE(in_span(vec({0, 0, 0}), Subspace::span({e(3, 2)}, 3)));
  EXPECT_FALSE(in_span(e(3, 1), Subspace::span({e(3, 2)}, 3)));
  EXPECT_TRUE(in_span(vec({1, 1, 0}), Subspace::span({vec({1, 1, 0}), e(3, 3)}, 3)));
}

TEST(Subspace, DimensionMismatch) {
  EXPECT_THROW(span_sum(Subspace::zero(2), Subspace::zero(3)), nilschur::DimensionMismatch);
}

TEST(QuotientCoordinates, CanonicalAndExplicitRepresentatives) {
  const auto whole = Subspace::full(3);
  const auto sub = Subspace::span({e(3, 3)}, 3);
  const QuotientCoordinates q(whole, sub);
  EXPECT_EQ(q.dim(), 2u);
  EXPECT_EQ(q(vec({2, 5, 9})), vec({2, 5}));
  const QuotientCoordinates alt(whole, sub, {vec({1, 1, 7}), vec({0, 1, 0})});
  EXPECT_EQ(alt(vec({2, 5, 9})), vec({2, 3}));
  EXPECT_THROW(QuotientCoordinates(whole, sub, {vec({0, 0, 1}), vec({0, 1, 0})}), nilschur::PreconditionFailed);
}
