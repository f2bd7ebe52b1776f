#include <gtest/gtest.h>

#include "nilschur/liealg.hpp"
#include "nilschur/multiplier.hpp"
#include "support.hpp"

using namespace nilschur::liealg;
using testsupport::e;
using testsupport::named;
using testsupport::vec;

namespace {

BracketEntry br(std::size_t n, std::size_t i, std::size_t j, std::size_t k) { return {i - 1, j - 1, e(n, k)}; }

std::vector<std::size_t> dims(const std::vector<Subspace>& series) {
  std::vector<std::size_t> out;
  for (const auto& s : series) out.push_back(s.dim());
  return out;
}

}  // namespace

TEST(Validate, AcceptsAbelianAndHeisenberg) {
  EXPECT_EQ(LieAlgebra::validate(3, {}, {}).dim(), 3u);
  const auto h = LieAlgebra::validate(3, {"x", "y", "z"}, {br(3, 1, 2, 3)});
  EXPECT_EQ(nilpotency_class(h), 2u);
  EXPECT_EQ(h.labels()[2], "z");
}

TEST(Validate, RejectsNonNilpotent) {
  // [x1,x2]=x2 is solvable but not nilpotent
  EXPECT_THROW(LieAlgebra::validate(2, {}, {br(2, 1, 2, 2)}), NotNilpotent);
  // [x1,x2]=x3, [x1,x3]=x1 already fails Jacobi on (1,2,3)
  EXPECT_THROW(LieAlgebra::validate(3, {}, {br(3, 1, 2, 3), br(3, 1, 3, 1)}), JacobiViolation);
}

TEST(Validate, RejectsJacobiFailureWithWitness) {
  // [x1,x2]=x3, [x2,x3]=x4, [x1,x4]=x5: the triple (1,2,3) leaves x5
  try {
    LieAlgebra::validate(5, {}, {br(5, 1, 2, 3), br(5, 2, 3, 4), br(5, 1, 4, 5)});
    FAIL() << "expected JacobiViolation";
  } catch (const JacobiViolation& ex) {
    EXPECT_EQ(ex.triple(), (std::array<std::size_t, 3>{0, 1, 2}));
    EXPECT_FALSE(nilschur::exactla::is_zero(ex.defect()));
    EXPECT_EQ(ex.severity(), nilschur::Severity::input);
  }
}

TEST(Validate, RejectsMalformedEntries) {
  EXPECT_THROW(LieAlgebra::validate(3, {}, {{1, 0, e(3, 3)}}), nilschur::InputError);
  EXPECT_THROW(LieAlgebra::validate(3, {}, {{0, 3, e(3, 3)}}), nilschur::InputError);
  EXPECT_THROW(LieAlgebra::validate(3, {}, {br(3, 1, 2, 3), br(3, 1, 2, 3)}), nilschur::InputError);
  EXPECT_THROW(LieAlgebra::validate(3, {"a"}, {}), nilschur::InputError);
  EXPECT_THROW(LieAlgebra::validate(3, {}, {{0, 1, vec({1, 0})}}), nilschur::InputError);
}

TEST(Bracket, Basics) {
  const auto l58 = named("L5_8");
  const auto v = vec({1, 2, 0, 3, -1});
  EXPECT_TRUE(nilschur::exactla::is_zero(l58.bracket(v, v)));
  EXPECT_EQ(l58.bracket(e(5, 1), e(5, 2)), e(5, 4));
  EXPECT_EQ(l58.bracket(e(5, 2), e(5, 1)), vec({0, 0, 0, -1, 0}));
  const auto l57 = named("L5_7");
  EXPECT_EQ(l57.bracket(e(5, 1), vec({0, 0, 1, 1, 0})), vec({0, 0, 0, 1, 1}));
}

TEST(ProductSubspace, Examples) {
  const auto l58 = named("L5_8");
  EXPECT_TRUE(product_subspace(l58, Subspace::full(5), Subspace::zero(5)).is_zero());
  EXPECT_EQ(derived(l58), Subspace::span({e(5, 4), e(5, 5)}, 5));
  const auto l57 = named("L5_7");
  EXPECT_EQ(product_subspace(l57, Subspace::full(5), derived(l57)), Subspace::span({e(5, 4), e(5, 5)}, 5));
}

TEST(LowerCentralSeries, Examples) {
  EXPECT_EQ(dims(lower_central_series(named("A(4)"))), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(nilpotency_class(named("A(4)")), 1u);
  EXPECT_EQ(dims(lower_central_series(named("L5_7"))), (std::vector<std::size_t>{5, 3, 2, 1, 0}));
  EXPECT_EQ(nilpotency_class(named("L5_7")), 4u);
  EXPECT_EQ(dims(lower_central_series(named("L6_26"))), (std::vector<std::size_t>{6, 3, 0}));
}

TEST(Center, Examples) {
  EXPECT_EQ(center(named("A(3)")), Subspace::full(3));
  EXPECT_EQ(center(named("H(1)")), Subspace::span({e(3, 3)}, 3));
  EXPECT_EQ(center(named("L5_7")), Subspace::span({e(5, 5)}, 5));
}

TEST(Quotient, Examples) {
  const auto l626 = named("L6_26");
  EXPECT_EQ(quotient(l626, Subspace::full(6)).algebra.dim(), 0u);

  const auto q = quotient(l626, Subspace::span({e(6, 6)}, 6));
  EXPECT_EQ(q.projection.rows(), 5u);
  const auto l58 = named("L5_8");
  EXPECT_EQ(structure_report(q.algebra), structure_report(l58));
  EXPECT_EQ(nilschur::multiplier::schur_multiplier_dim(q.algebra).dim_M, 6u);

  const auto h = named("H(1)");
  const auto ab = quotient(h, center(h)).algebra;
  EXPECT_EQ(ab.dim(), 2u);
  EXPECT_TRUE(ab.brackets().empty());
}

TEST(Quotient, RejectsNonIdeal) {
  EXPECT_THROW(quotient(named("H(1)"), Subspace::span({e(3, 1)}, 3)), NotAnIdeal);
}

TEST(SubalgebraOn, Examples) {
  const auto l58 = named("L5_8");
  EXPECT_EQ(structure_report(subalgebra_on(l58, Subspace::full(5))), structure_report(l58));
  const auto a = subalgebra_on(named("L5_7"), Subspace::span({e(5, 3), e(5, 4), e(5, 5)}, 5));
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_TRUE(a.brackets().empty());
  EXPECT_TRUE(subalgebra_on(l58, Subspace::span({e(5, 1), e(5, 4)}, 5)).brackets().empty());
  EXPECT_THROW(subalgebra_on(l58, Subspace::span({e(5, 1), e(5, 2)}, 5)), NotClosed);
}

TEST(DirectSum, Examples) {
  EXPECT_EQ(structure_report(direct_sum(named("A(1)"), named("A(1)"))), structure_report(named("A(2)")));
  const auto r = structure_report(direct_sum(named("H(1)"), named("A(2)")));
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.m, 1u);
  const auto t = structure_report(direct_sum(named("L5_8"), named("A(1)")));
  EXPECT_EQ(t.n, 6u);
  EXPECT_EQ(t.m, 2u);
  EXPECT_EQ(t.t, 1u);
}

TEST(ChangeBasis, Examples) {
  const auto h = named("H(1)");
  EXPECT_EQ(change_basis(h, Matrix::identity(3)).brackets()[0].value, e(3, 3));
  const auto swapped = change_basis(h, testsupport::mat({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(swapped.basis_bracket(0, 1), vec({0, 0, -1}));
  EXPECT_THROW(change_basis(h, testsupport::mat({{1, 0, 0}, {1, 0, 0}, {0, 0, 1}})), nilschur::InputError);
}

TEST(ChangeBasis, StructureReportInvariant) {
  std::mt19937 rng(3);
  for (const char* name : {"L5_8", "L5_7", "L6_26", "H(2)+A(1)"}) {
    const auto L = named(name);
    for (int trial = 0; trial < 5; ++trial) {
      const auto P = testsupport::random_invertible(rng, L.dim());
      EXPECT_EQ(structure_report(change_basis(L, P)), structure_report(L)) << name;
    }
  }
}

TEST(StructureReport, Examples) {
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto r = structure_report(named("H(" + std::to_string(m) + ")"));
    EXPECT_EQ(r.n, 2 * m + 1);
    EXPECT_EQ(r.m, 1u);
    EXPECT_EQ(r.nil_class, 2u);
    EXPECT_EQ(r.z_dim, 1u);
    EXPECT_EQ(r.t, 0u);
    EXPECT_TRUE(r.is_generalized_heisenberg);
    EXPECT_EQ(r.heisenberg_rank, 1u);
  }
  const auto r = structure_report(named("L6_26"));
  EXPECT_EQ(r.n, 6u);
  EXPECT_EQ(r.m, 3u);
  EXPECT_EQ(r.nil_class, 2u);
  EXPECT_EQ(r.z_dim, 3u);
  EXPECT_EQ(r.t, 0u);
  EXPECT_TRUE(r.is_stem);
  EXPECT_EQ(r.heisenberg_rank, 3u);
  const auto s = structure_report(named("L5_8+A(1)"));
  EXPECT_EQ(s.t, 1u);
  EXPECT_FALSE(s.is_stem);
  EXPECT_FALSE(structure_report(named("A(3)")).heisenberg_rank.has_value());
}
