#include <cmath>

#include <gtest/gtest.h>

#include "pangular/certifier.hpp"
#include "pangular/distances.hpp"
#include "pangular/error.hpp"

using namespace pangular;

namespace {

SearchConfig small(std::uint64_t seed = 0, Execution ex = Execution::parallel) {
  SearchConfig c;
  c.samples = 2000;
  c.seed = seed;
  c.execution = ex;
  return c;
}

}  // namespace

TEST(Certifier, LambdaGridContainsOne) {
  const auto g = lambda_grid(61);
  ASSERT_EQ(g.size(), 61u);
  EXPECT_NEAR(g.front(), 1e-3, 1e-18);
  EXPECT_NEAR(g.back(), 1e3, 1e-9);
  EXPECT_NE(std::find(g.begin(), g.end(), 1.0), g.end());
}

TEST(Certifier, GramNormsAreConsistentForEveryCriterion) {
  const NormSpec g = NormSpec::gram(3, {2.0, 0.2, 0.0, 0.2, 1.0, 0.1, 0.0, 0.1, 0.5});
  for (const auto& name : criterion_names()) {
    const auto v = run_criterion(name, g, 2.0, small(4));
    EXPECT_EQ(v.verdict, Verdict::consistent_with_inner_product) << name << " " << v.max_margin;
    EXPECT_EQ(v.note, kConsistentNote);
  }
}

TEST(Certifier, L1IsRejectedByAlphaBeta) {
  const auto v = certify_alpha_beta(NormSpec::l1(), 2.0, small(1));
  ASSERT_EQ(v.verdict, Verdict::counterexample_found);
  ASSERT_TRUE(v.witness);
  EXPECT_GT(v.witness->margin, v.tolerance);
  const Witness again = replay_witness("alpha-beta", NormSpec::l1(), *v.witness);
  EXPECT_EQ(again.margin, v.witness->margin);
}

TEST(Certifier, NonEuclideanNormsAreRejectedByEachCriterion) {
  for (const auto& name : criterion_names()) {
    const auto v = run_criterion(name, NormSpec::linf(), 2.0, small(2));
    EXPECT_EQ(v.verdict, Verdict::counterexample_found) << name;
    ASSERT_TRUE(v.witness);
    const Witness again = replay_witness(name, NormSpec::linf(), *v.witness);
    EXPECT_EQ(again.margin, v.witness->margin) << name;
  }
}

TEST(Certifier, FixedL1WitnessReplays) {
  Witness w;
  w.x = Vector{1.0, 0.0};
  w.y = Vector{5.0 / 6.0, 11.0 / 30.0};
  w.p = 2.0;
  const Witness r = replay_witness("alpha-beta", NormSpec::l1(), w);
  EXPECT_NEAR(r.margin, 0.73333333333333333333 - 0.44, 1e-15);
  const Witness id = replay_witness("identity", NormSpec::l1(), w);
  EXPECT_NEAR(id.margin, 0.25780608576690797827, 1e-15);
}

TEST(Certifier, SerialAndParallelAgreeExactly) {
  for (const auto& name : criterion_names()) {
    const auto a = run_criterion(name, NormSpec::lp(3.0), 1.5, small(8, Execution::serial));
    const auto b = run_criterion(name, NormSpec::lp(3.0), 1.5, small(8, Execution::parallel));
    EXPECT_EQ(a.max_margin, b.max_margin) << name;
    EXPECT_EQ(a.trials, b.trials) << name;
    ASSERT_EQ(a.witness.has_value(), b.witness.has_value());
    if (a.witness) EXPECT_EQ(a.witness->x, b.witness->x) << name;
  }
}

TEST(Certifier, RejectsPEqualOne) {
  EXPECT_THROW(certify_alpha_beta(NormSpec::l1(), 1.0, small()), Error);
  EXPECT_THROW(certify_identity(NormSpec::l1(), 1.0, small()), Error);
}

TEST(Certifier, DualWitnessOnBothSides) {
  const DualWitness d = dual_witness(NormSpec::l1(), 2.0, small(3));
  EXPECT_GT(d.alpha_below_beta.margin, 0.0);
  EXPECT_GT(d.alpha_above_beta.margin, 0.0);
  const NormSpec l1 = NormSpec::l1();
  EXPECT_NEAR(d.alpha_above_beta.margin,
              alpha_p(l1, d.alpha_above_beta.x, d.alpha_above_beta.y, 2.0) -
                  beta_p(l1, d.alpha_above_beta.x, d.alpha_above_beta.y, 2.0),
              1e-14);
  EXPECT_THROW(dual_witness(NormSpec::identity_gram(2), 2.0, small()), Error);
}
