#include <gtest/gtest.h>

#include "nilschur/bounds.hpp"
#include "nilschur/multiplier.hpp"
#include "support.hpp"

using namespace nilschur::bounds;
using testsupport::named;

namespace {

const BoundReport* find(const std::vector<BoundReport>& reports, BoundName name) {
  for (const auto& r : reports) {
    if (r.bound_name == name) return &r;
  }
  return nullptr;
}

}  // namespace

TEST(Formulas, GeneralBound) {
  EXPECT_EQ(bound_theorem15(5, 2), 6);
  EXPECT_EQ(bound_theorem15(6, 3), 8);
  EXPECT_EQ(bound_theorem15(5, 3), 4);
  for (std::int64_t n = 3; n <= 12; ++n) EXPECT_EQ(bound_theorem15(n, 1), (n - 1) * (n - 2) / 2 + 1);
  EXPECT_THROW(bound_theorem15(3, 3), DomainError);
  EXPECT_THROW(bound_theorem15(4, 0), DomainError);
}

TEST(Formulas, CentreRefinedBound) {
  EXPECT_EQ(bound_theorem212(6, 2, 1), 9);
  EXPECT_EQ(bound_theorem212(6, 3, 0), bound_theorem15(6, 3));
  EXPECT_EQ(bound_theorem212(6, 3, 1), 6);
}

TEST(Formulas, Class3) {
  EXPECT_EQ(bound_class3(5, 3), 3);
  EXPECT_EQ(bound_class3(6, 3), 7);
  EXPECT_EQ(bound_class3(4, 2), 2);
}

TEST(RecognizeM1, Examples) {
  const auto a = recognize_m1(named("H(1)+A(2)"));
  EXPECT_EQ(a.k, 1u);
  EXPECT_EQ(a.predicted_dim_M, 7u);
  const auto b = recognize_m1(named("H(2)"));
  EXPECT_EQ(b.k, 2u);
  EXPECT_EQ(b.predicted_dim_M, 5u);
  const auto c = recognize_m1(named("H(1)"));
  EXPECT_EQ(c.k, 1u);
  EXPECT_EQ(c.predicted_dim_M, 2u);
  EXPECT_THROW(recognize_m1(named("L5_8")), nilschur::PreconditionFailed);
}

TEST(EvaluateBounds, Examples) {
  const auto l58 = evaluate_bounds(named("L5_8"));
  EXPECT_EQ(find(l58, BoundName::theorem15)->verdict, Verdict::attained);
  EXPECT_EQ(find(l58, BoundName::theorem15)->bound_value, 6);

  const auto l57 = evaluate_bounds(named("L5_7"));
  EXPECT_EQ(find(l57, BoundName::theorem15)->verdict, Verdict::strict);
  EXPECT_EQ(find(l57, BoundName::class3)->verdict, Verdict::attained);
  EXPECT_EQ(find(l57, BoundName::class3)->bound_value, 3);

  const auto h2 = evaluate_bounds(named("H(2)"));
  EXPECT_EQ(find(h2, BoundName::theorem15)->bound_value, 7);
  EXPECT_EQ(find(h2, BoundName::theorem15)->verdict, Verdict::strict);
  EXPECT_EQ(find(h2, BoundName::prop29)->verdict, Verdict::attained);

  EXPECT_EQ(find(l58, BoundName::class3), nullptr);
  EXPECT_THROW(evaluate_bounds(named("A(3)")), nilschur::PreconditionFailed);
}

TEST(EvaluateBounds, NothingViolatedOnCorpus) {
  for (const auto& name : testsupport::corpus_names()) {
    const auto L = named(name);
    if (nilschur::liealg::structure_report(L).m == 0) continue;
    EXPECT_FALSE(any_violated(evaluate_bounds(L))) << name;
  }
}

TEST(EnumStrings, RoundTrip) {
  for (auto b : {BoundName::theorem15, BoundName::theorem212, BoundName::class3, BoundName::lemma14,
                 BoundName::prop29}) {
    EXPECT_EQ(bound_name_from_string(to_string(b)), b);
  }
  for (auto f : {Family::H1_plus_abelian, Family::L_5_8, Family::L_6_26, Family::none}) {
    EXPECT_EQ(family_from_string(to_string(f)), f);
  }
  EXPECT_THROW(verdict_from_string("maybe"), nilschur::InputError);
}

TEST(ClassifyAttainer, Examples) {
  const auto a = classify_attainer(named("H(1)+A(4)"));
  EXPECT_TRUE(a.attains_theorem15);
  EXPECT_EQ(a.family, Family::H1_plus_abelian);
  const auto b = classify_attainer(named("L6_26"));
  EXPECT_EQ(b.family, Family::L_6_26);
  EXPECT_TRUE(b.consistent_with_theorem220);
  EXPECT_FALSE(classify_attainer(named("L5_9")).attains_theorem15);
  EXPECT_EQ(classify_attainer(named("L5_8")).family, Family::L_5_8);
}

TEST(CentralQuotient, Examples) {
  const auto l626 = named("L6_26");
  const auto k1 = central_quotient_attainment(l626, 1);
  EXPECT_EQ(k1.predicted, 6);
  EXPECT_EQ(k1.dim_M_quotient, 6u);
  EXPECT_TRUE(k1.ok);
  EXPECT_EQ(k1.quotient_report, nilschur::liealg::structure_report(named("L5_8")));
  const auto k2 = central_quotient_attainment(l626, 2);
  EXPECT_EQ(k2.predicted, 4);
  EXPECT_EQ(k2.dim_M_quotient, 4u);
  EXPECT_TRUE(k2.ok);
  const auto l58 = central_quotient_attainment(named("L5_8"), 1);
  EXPECT_EQ(l58.predicted, 4);
  EXPECT_EQ(l58.dim_M_quotient, 4u);
}

TEST(CentralQuotient, Preconditions) {
  EXPECT_THROW(central_quotient_attainment(named("L6_26"), 0), nilschur::PreconditionFailed);
  EXPECT_THROW(central_quotient_attainment(named("L6_26"), 3), nilschur::PreconditionFailed);
  EXPECT_THROW(central_quotient_attainment(named("L5_9"), 1), nilschur::PreconditionFailed);
  EXPECT_THROW(central_quotient_attainment(named("H(1)"), 1), nilschur::PreconditionFailed);
}
