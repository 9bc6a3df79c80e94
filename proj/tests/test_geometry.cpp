#include <cmath>

#include <gtest/gtest.h>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/geometry.hpp"

using namespace pangular;

TEST(Geometry, MetricAuditPassesOnSeveralNorms) {
  for (const NormSpec& spec : {NormSpec::l1(), NormSpec::l2(), NormSpec::linf(),
                               NormSpec::gram(2, {2.0, 0.3, 0.3, 1.0})}) {
    for (double p : {-1.5, 0.5, 1.0, 2.0}) {
      const auto r = metric_audit_alpha(spec, p, 2000, 3);
      EXPECT_TRUE(r.all_pass()) << spec.name() << " p=" << p << " worst "
                                << r.triangle.worst_slack;
    }
  }
}

TEST(Geometry, MetricAuditRejectsZero) {
  EXPECT_THROW(metric_audit_alpha(NormSpec::l2(), 0.0, 10, 0), Error);
}

TEST(Geometry, SerialAndParallelAuditAgree) {
  const auto a = metric_audit_alpha(NormSpec::l1(), 1.7, 5000, 9, 3, Execution::serial);
  const auto b = metric_audit_alpha(NormSpec::l1(), 1.7, 5000, 9, 3, Execution::parallel);
  EXPECT_EQ(a.triangle.worst_slack, b.triangle.worst_slack);
  EXPECT_EQ(a.triangle.failures, b.triangle.failures);
  ASSERT_TRUE(a.triangle.worst_witness && b.triangle.worst_witness);
  EXPECT_EQ((*a.triangle.worst_witness)[0], (*b.triangle.worst_witness)[0]);
}

TEST(Geometry, BetaWitnessFrozen) {
  const TriangleWitness w = beta_triangle_triple(NormSpec::l2(), 0.0, 0.1, 1);
  EXPECT_NEAR(w.lhs, 19.95, 1e-13);
  EXPECT_NEAR(w.rhs, 11.4, 1e-13);
  EXPECT_NEAR(w.margin, 8.55, 1e-13);
}

TEST(Geometry, BetaWitnessFoundForEveryExponent) {
  for (double p : {-2.0, 0.0, 0.5, 1.5, 3.0}) {
    const TriangleWitness w = beta_non_metric_witness(NormSpec::l1(), p);
    EXPECT_GT(w.margin, 0.0) << p;
    EXPECT_NEAR(w.lhs, beta_p(NormSpec::l1(), w.x, w.y, p), 1e-12 * (1 + w.lhs));
  }
  EXPECT_THROW(beta_non_metric_witness(NormSpec::l2(), 1.0), Error);
}

TEST(Geometry, NonequivalenceConstantsGrow) {
  const auto rows = nonequivalence_table(2.0, 1.0, 0.5, {10.0, 100.0, 1000.0});
  ASSERT_EQ(rows.size(), 3u);
  for (const auto& r : rows) {
    EXPECT_NEAR(r.constant, std::pow(r.n, -1.0) * 0.75 / 0.5, 1e-15);
    EXPECT_NEAR(r.kernel_ratio, r.constant, 1e-12 * r.constant);
  }
  const auto grow = nonequivalence_table(1.0, 2.0, 0.5, {10.0, 1000.0});
  EXPECT_GT(grow[1].constant, grow[0].constant * 50);
}

TEST(Geometry, TranslationBreaksInvariance) {
  for (double p : {-1.0, 0.0, 2.0, 3.0}) {
    const TranslationWitness w = translation_invariance_probe(NormSpec::l2(), p);
    EXPECT_GT(w.gap, 1e-6) << p;
    EXPECT_NEAR(w.gap, std::abs(w.shifted - w.original), 1e-15);
  }
  EXPECT_THROW(translation_invariance_probe(NormSpec::l2(), 1.0), Error);
}

TEST(Geometry, ConsistencyOfSequences) {
  Vector a{1.0, 0.0};
  const SequenceLaw shrink{"(1+1/n) a", [a](std::size_t n) { return (1.0 + 1.0 / n) * a; }, a};
  const auto r = consistency_check(NormSpec::l2(), 3.0, shrink);
  EXPECT_TRUE(r.converges_alpha_one);
  EXPECT_TRUE(r.converges_alpha_p);
  const SequenceLaw flip{"alternating", [](std::size_t n) {
                           return n % 2 ? Vector{0.0, 1.0} : Vector{1.0, 0.0};
                         }, a};
  const auto f = consistency_check(NormSpec::l2(), -1.0, flip);
  EXPECT_FALSE(f.converges_alpha_one);
  EXPECT_TRUE(f.agree());
}

TEST(Geometry, CompletenessExperiment) {
  const auto [a, b] = completeness_experiment(1.0, -1.0, {10.0, 100.0, 1000.0});
  EXPECT_TRUE(a.cauchy);
  EXPECT_FALSE(a.limit_in_set);
  EXPECT_TRUE(b.cauchy);
  EXPECT_FALSE(b.limit_in_set);
  ASSERT_EQ(a.rows.size(), 3u);
  EXPECT_NEAR(a.rows[1].modulus, 0.01, 1e-15);
  for (const auto& r : a.rows) EXPECT_LE(r.sampled, r.modulus * (1 + 1e-12));
}
