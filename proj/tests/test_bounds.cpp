#include <cmath>

#include <gtest/gtest.h>

#include "pangular/bounds.hpp"
#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/sampling.hpp"

using namespace pangular;

namespace {

const Vector kX{3.0, 0.0};
const Vector kY{0.0, 4.0};

// int_0^1 sqrt(25t^2 - 18t + 9) dt, mpmath.
constexpr double kSegmentIntegral = 2.8520534542753596805;

}  // namespace

TEST(Bounds, RatioCaseDispatch) {
  EXPECT_EQ(classify_ratio(2.0, 1.0), RatioCase::at_least_one);
  EXPECT_EQ(classify_ratio(1.0, 1.0), RatioCase::at_least_one);
  EXPECT_EQ(classify_ratio(-3.0, -1.0), RatioCase::at_least_one);
  EXPECT_EQ(classify_ratio(1.0, 2.0), RatioCase::unit_interval);
  EXPECT_EQ(classify_ratio(0.0, 2.0), RatioCase::unit_interval);
  EXPECT_EQ(classify_ratio(-1.0, 1.0), RatioCase::non_positive);
  EXPECT_EQ(classify_ratio(2.0, -0.5), RatioCase::non_positive);
}

TEST(Bounds, ReportBookkeeping) {
  const BoundReport r = make_bound_report("t", 2.0, 1.0, 1.5);
  EXPECT_TRUE(r.holds_lower);
  EXPECT_FALSE(r.holds_upper);
  EXPECT_DOUBLE_EQ(r.slack_upper, -0.5);
  const BoundReport edge = make_bound_report("t", 1.0 + 1e-12, std::nullopt, 1.0);
  EXPECT_TRUE(edge.holds());
  const BoundReport s = skipped_bound("t", "why");
  EXPECT_FALSE(s.applicable);
  EXPECT_EQ(s.reason, "why");
}

TEST(Bounds, SkewAngularCapFrozen) {
  const BoundReport r = skew_angular_cap(NormSpec::l2(), kX, kY);
  ASSERT_TRUE(r.upper);
  EXPECT_NEAR(*r.upper, 2.2946949688357274123, 1e-14);
  EXPECT_NEAR(r.value, 1.4142135623730950488, 1e-15);
  EXPECT_TRUE(r.holds());
}

TEST(Bounds, IntegralBoundFrozen) {
  const IntegralBound b = dragomir_integral_bound(NormSpec::l2(), kX, kY, 2.0, 1.0);
  ASSERT_TRUE(b.report.upper);
  EXPECT_NEAR(*b.report.upper, 10.0 * kSegmentIntegral, 1e-10);
  EXPECT_NEAR(b.quadrature.value, kSegmentIntegral, 1e-11);
  EXPECT_TRUE(b.report.holds());
}

TEST(Bounds, ReverseBoundFrozen) {
  const IntegralBound b = dragomir_reverse_bound(NormSpec::l2(), kX, kY, 1.0, 2.0);
  ASSERT_TRUE(b.report.lower);
  EXPECT_NEAR(*b.report.lower, 3.2183056953520612455, 1e-11);
  EXPECT_DOUBLE_EQ(b.report.value, 5.0);
  EXPECT_TRUE(b.report.holds());
}

TEST(Bounds, NegativeExponentIntegralFrozen) {
  const IntegralBound b =
      dragomir_integral_bound(NormSpec::l2(), Vector{1.0, 0.0}, Vector{0.0, 1.0}, 0.0, 1.0);
  ASSERT_TRUE(b.report.upper);
  EXPECT_NEAR(*b.report.upper, 3.5254943480781721009, 1e-11);
}

TEST(Bounds, NegativeExponentNeedsIndependence) {
  try {
    dragomir_integral_bound(NormSpec::l2(), Vector{1.0, 0.0}, Vector{-2.0, 0.0}, 0.0, 1.0);
    ADD_FAILURE() << "expected linear_dependence";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::linear_dependence);
  }
}

TEST(Bounds, HermiteHadamardChainFrozenOnL1) {
  const BoundChain c =
      hermite_hadamard_chain(NormSpec::l1(), Vector{1.0, 0.0}, Vector{1.0, 1.0}, 4.0, 2.0);
  const std::vector<double> expected{15.0, 15.0, 15.0, 15.0, 15.0, 24.0};
  ASSERT_EQ(c.terms.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(c.terms[i], expected[i], 1e-10);
  EXPECT_TRUE(c.nondecreasing);
}

TEST(Bounds, HermiteHadamardChainPreconditions) {
  EXPECT_THROW(hermite_hadamard_chain(NormSpec::l2(), kX, kY, 3.0, 2.0), Error);
  EXPECT_THROW(hermite_hadamard_chain(NormSpec::l2(), kX, Vector{0.0, 3.0}, 4.0, 2.0), Error);
}

TEST(Bounds, BestConstantSweepFrozen) {
  struct Case {
    double p, q, eps, ratio, limit;
  };
  for (const Case c : {Case{2, 1, 1.0, 1.5, 2.0}, Case{2, 1, 1e-5, 1.999990000099999, 2.0},
                       Case{1, 2, 1e-5, 1.4999987500062499609, 1.5},
                       Case{3, 2, 1e-6, 1.4999996250003124997, 1.5},
                       Case{-1, 1, 1e-6, 2.999998000001999998, 3.0}}) {
    const BestConstantSweep s = best_constant_sweep(c.p, c.q, {c.eps});
    ASSERT_EQ(s.rows.size(), 1u);
    // alpha_p and alpha_q cancel to O(eps); rounding is amplified by 1/eps.
    EXPECT_NEAR(s.rows[0].ratio, c.ratio, 1e-15 / c.eps) << c.p << "," << c.q;
    EXPECT_DOUBLE_EQ(s.limit, c.limit);
  }
}

TEST(Bounds, CauchySchwarzErrorOnGram) {
  const NormSpec g = NormSpec::identity_gram(2);
  const BoundReport r = cauchy_schwarz_error_bound(g, kX, kY);
  EXPECT_DOUBLE_EQ(r.value, 12.0);
  EXPECT_TRUE(r.holds());
  EXPECT_THROW(cauchy_schwarz_error_bound(NormSpec::l1(), kX, kY), Error);
}

TEST(Bounds, SegmentIntegralHandlesKinks) {
  // ||(1-2t, t)||_1 has a kink at t = 1/2.
  const auto q = normalized_segment_integral(NormSpec::l1(), Vector{1.0, 0.0},
                                             Vector{-1.0, 1.0}, 1.0, 1.0, 1e-12);
  EXPECT_NEAR(q.value, 1.0, 1e-13);
}

class BoundProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(BoundProperties, AllApplicableBoundsHoldOnRandomInputs) {
  Rng rng = sample_rng(GetParam(), 7);
  for (int trial = 0; trial < 150; ++trial) {
    const NormSpec spec = random_norm(rng, 2);
    const Vector x = nonzero_gaussian_vector(spec, rng, 2, 1e-2);
    const Vector y = nonzero_gaussian_vector(spec, rng, 2, 1e-2);
    double p = uniform(rng, -3.0, 3.0);
    double q = uniform(rng, -3.0, 3.0);
    if (std::abs(q) < 0.05) q = 1.0;
    EXPECT_TRUE(power_comparison_bound(spec, x, y, p, q).holds());
    EXPECT_TRUE(refined_power_bound(spec, x, y, p, q).holds());
    if (std::abs(p - 2.0) > 1e-3) EXPECT_TRUE(skew_comparison_bound(spec, x, y, p).holds());
    for (const auto& b : classical_bounds(spec, x, y, p)) {
      if (b.applicable) EXPECT_TRUE(b.holds()) << b.name;
    }
    try {
      EXPECT_TRUE(dragomir_integral_bound(spec, x, y, p, q).report.holds());
      EXPECT_TRUE(dragomir_reverse_bound(spec, x, y, p, q).report.holds());
    } catch (const Error& e) {
      // Dependent pairs, or an integral beyond the double range.
      EXPECT_TRUE(e.code() == ErrorCode::linear_dependence ||
                  e.code() == ErrorCode::out_of_range)
          << e.what();
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, BoundProperties, ::testing::Values(11u, 12u));
