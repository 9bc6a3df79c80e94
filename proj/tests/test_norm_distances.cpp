#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/norm.hpp"
#include "pangular/sampling.hpp"

using namespace pangular;

namespace {

// Frozen with mpmath at 50 digits (tests/oracles/derive_values.py).
constexpr double kAlpha2 = 18.357559750685819298;
constexpr double kBeta2 = 16.970562748477140586;
constexpr double kAlpha0 = 1.4142135623730950488;
constexpr double kBeta0 = 1.5297966458904849415;

void expect_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
    ADD_FAILURE() << "no error thrown";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Norms, BasicValues) {
  const Vector v{3.0, -4.0};
  EXPECT_DOUBLE_EQ(norm_eval(NormSpec::l1(), v), 7.0);
  EXPECT_DOUBLE_EQ(norm_eval(NormSpec::l2(), v), 5.0);
  EXPECT_DOUBLE_EQ(norm_eval(NormSpec::linf(), v), 4.0);
  EXPECT_NEAR(norm_eval(NormSpec::lp(3.0), v), std::cbrt(91.0), 1e-14);
  EXPECT_DOUBLE_EQ(norm_eval(NormSpec::identity_gram(2), v), 5.0);
  EXPECT_DOUBLE_EQ(norm_eval(NormSpec::weighted_lp({2.0, 1.0}, 1.0), v), 10.0);
}

TEST(Norms, GramValidation) {
  expect_code(ErrorCode::invalid_argument, [] { NormSpec::gram(2, {1.0, 2.0, 0.0, 1.0}); });
  expect_code(ErrorCode::invalid_argument, [] { NormSpec::gram(2, {1.0, 2.0, 2.0, 1.0}); });
  EXPECT_TRUE(NormSpec::gram(2, {2.0, 1.0, 1.0, 2.0}).has_inner_product());
  EXPECT_FALSE(NormSpec::l2().has_inner_product());
}

TEST(Norms, DimensionAndFiniteness) {
  expect_code(ErrorCode::dimension_mismatch,
              [] { norm_eval(NormSpec::identity_gram(3), Vector{1.0, 2.0}); });
  expect_code(ErrorCode::non_finite, [] { norm_eval(NormSpec::l2(), Vector{1.0, NAN}); });
}

TEST(Norms, LineMinimumClosedFormMatchesSearch) {
  const NormSpec g = NormSpec::gram(2, {2.0, 0.5, 0.5, 1.0});
  const Vector a{1.0, 2.0}, b{-0.3, 1.1};
  const auto exact = min_over_line(g, a, b);
  const auto numeric = detail::min_over_line_numeric(g, a, b);
  EXPECT_NEAR(exact.value, numeric.value, 1e-12);
  EXPECT_NEAR(exact.t_star, numeric.t_star, 1e-6);
}

TEST(Distances, FrozenEuclideanValues) {
  const NormSpec e = NormSpec::l2();
  const Vector x{3.0, 0.0}, y{0.0, 4.0};
  EXPECT_NEAR(alpha_p(e, x, y, 2.0), kAlpha2, 1e-13 * kAlpha2);
  EXPECT_NEAR(beta_p(e, x, y, 2.0), kBeta2, 1e-13 * kBeta2);
  EXPECT_NEAR(alpha_p(e, x, y, 0.0), kAlpha0, 1e-15);
  EXPECT_NEAR(beta_p(e, x, y, 0.0), kBeta0, 1e-15);
  EXPECT_DOUBLE_EQ(alpha_p(e, x, y, 1.0), 5.0);
  EXPECT_DOUBLE_EQ(beta_p(e, x, y, 1.0), 5.0);
}

TEST(Distances, ClosedFormOnGram) {
  const NormSpec g = NormSpec::identity_gram(2);
  const Vector x{3.0, 0.0}, y{0.0, 4.0};
  EXPECT_NEAR(alpha_p_closed_form_ips(g, x, y, 2.0), kAlpha2, 1e-13 * kAlpha2);
  EXPECT_NEAR(sign_identity_ips(g, x, y, 2.0), kAlpha2 * kAlpha2 - kBeta2 * kBeta2, 1e-10);
  expect_code(ErrorCode::no_inner_product,
              [&] { alpha_p_closed_form_ips(NormSpec::l1(), x, y, 2.0); });
}

TEST(Distances, RadicandClampAndNonInnerProductGap) {
  const NormSpec g = NormSpec::identity_gram(2);
  const Vector x{1.0, 0.0};
  EXPECT_EQ(alpha_p_closed_form_ips(g, x, x, 3.0), 0.0);

  // In l1 the radicand is defined but its root misses alpha_2.
  const Vector u{1.0, 0.0}, v{5.0 / 6.0, 11.0 / 30.0};
  const auto r = closed_form_radicand(NormSpec::l1(), u, v, 2.0);
  EXPECT_NEAR(std::sqrt(r.value), 0.69780608576690797827, 1e-15);
  EXPECT_NEAR(alpha_p(NormSpec::l1(), u, v, 2.0), 0.44, 1e-15);
  EXPECT_NEAR(beta_p(NormSpec::l1(), u, v, 2.0), 0.73333333333333333333, 1e-15);
}

TEST(Distances, Preconditions) {
  const NormSpec e = NormSpec::l2();
  expect_code(ErrorCode::zero_vector, [&] { alpha_p(e, Vector{0.0, 0.0}, Vector{1.0, 0.0}, 2.0); });
  expect_code(ErrorCode::dimension_mismatch, [&] { alpha_p(e, Vector{1.0}, Vector{1.0, 0.0}, 2.0); });
  expect_code(ErrorCode::out_of_range, [&] { alpha_p(e, Vector{1e-200}, Vector{1.0}, 2.0); });
  expect_code(ErrorCode::invalid_argument, [&] { alpha_p(e, Vector{1.0}, Vector{2.0}, NAN); });
}

TEST(Distances, CollinearFormula) {
  const NormSpec e = NormSpec::l2();
  for (double p : {-2.0, -0.5, 0.0, 0.5, 1.0, 3.0}) {
    for (auto [l, m] : {std::pair{2.0, -3.0}, {0.5, 4.0}, {-1.5, -0.25}}) {
      EXPECT_NEAR(alpha_p(e, Vector{l, 0.0}, Vector{m, 0.0}, p), collinear_alpha(p, l, m),
                  1e-12 * (1.0 + collinear_alpha(p, l, m)))
          << "p=" << p;
    }
  }
}

// Properties over random norms and pairs.
class DistanceProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(DistanceProperties, SymmetrySkewRelationAndOneAgreement) {
  Rng rng = sample_rng(GetParam(), 0);
  for (int trial = 0; trial < 200; ++trial) {
    const NormSpec spec = random_norm(rng, 3);
    const Vector x = nonzero_gaussian_vector(spec, rng, 3);
    const Vector y = nonzero_gaussian_vector(spec, rng, 3);
    const double p = uniform(rng, -3.0, 3.0);
    const double a = alpha_p(spec, x, y, p);
    EXPECT_EQ(a, alpha_p(spec, y, x, p));
    EXPECT_GE(a, 0.0);
    EXPECT_LE(relation_pp_residual(spec, x, y, p), 1e-11 * (1.0 + beta_p(spec, x, y, p)));
    EXPECT_NEAR(alpha_p(spec, x, y, 1.0), beta_p(spec, x, y, 1.0),
                1e-13 * norm_eval(spec, x - y));
  }
}

TEST_P(DistanceProperties, ClosedFormAndSignIdentityOnGram) {
  Rng rng = sample_rng(GetParam(), 1);
  for (int trial = 0; trial < 200; ++trial) {
    const NormSpec g = random_gram(rng, 4);
    const Vector x = nonzero_gaussian_vector(g, rng, 4);
    const Vector y = nonzero_gaussian_vector(g, rng, 4);
    const double p = uniform(rng, -3.0, 3.0);
    const AngularResult r = angular(g, x, y, p);
    const double cf = alpha_p_closed_form_ips(g, x, y, p);
    EXPECT_NEAR(cf, r.alpha, 1e-9 * (1.0 + r.alpha));
    const double s = sign_identity_ips(g, x, y, p);
    EXPECT_NEAR(r.alpha * r.alpha - r.beta * r.beta, s,
                1e-9 * (1.0 + r.alpha * r.alpha + r.beta * r.beta));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, DistanceProperties, ::testing::Values(1u, 2u, 3u));
