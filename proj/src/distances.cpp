#include "pangular/distances.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pangular/error.hpp"

namespace pangular {

namespace {

void check_exponent(double p) {
  if (!std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "exponent p must be finite");
}

}  // namespace

bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

double checked_norm(const NormSpec& spec, const Vector& v) {
  const double n = norm_eval(spec, v);
  if (n == 0.0) throw Error(ErrorCode::zero_vector, "zero vector where X \\ {0} is required");
  if (n < kMinNorm || n > kMaxNorm) {
    throw Error(ErrorCode::out_of_range, "norm outside the supported range [1e-150, 1e150]");
  }
  return n;
}

double alpha_p(const NormSpec& spec, const Vector& x, const Vector& y, double p) {
  check_exponent(p);
  require_same_dimension(x, y);
  const double nx = checked_norm(spec, x);
  const double ny = checked_norm(spec, y);
  return norm_eval(spec, lincomb(std::pow(nx, p - 1.0), x, -std::pow(ny, p - 1.0), y));
}

double beta_p(const NormSpec& spec, const Vector& x, const Vector& y, double p) {
  check_exponent(p);
  require_same_dimension(x, y);
  const double nx = checked_norm(spec, x);
  const double ny = checked_norm(spec, y);
  return norm_eval(spec, lincomb(std::pow(ny, p - 1.0), x, -std::pow(nx, p - 1.0), y));
}

AngularResult angular(const NormSpec& spec, const Vector& x, const Vector& y, double p) {
  return {p, alpha_p(spec, x, y, p), beta_p(spec, x, y, p)};
}

double relation_pp_residual(const NormSpec& spec, const Vector& x, const Vector& y,
                            double p) {
  const double nx = checked_norm(spec, x);
  const double ny = checked_norm(spec, y);
  const double rhs = std::pow(nx, p - 1.0) * std::pow(ny, p - 1.0) * alpha_p(spec, x, y, 2.0 - p);
  return std::abs(beta_p(spec, x, y, p) - rhs);
}

ClosedFormRadicand closed_form_radicand(const NormSpec& spec, const Vector& x,
                                        const Vector& y, double p) {
  check_exponent(p);
  require_same_dimension(x, y);
  const double a = checked_norm(spec, x);
  const double b = checked_norm(spec, y);
  const double d = norm_eval(spec, x - y);
  const double first = (std::pow(a, p + 1.0) - std::pow(b, p + 1.0)) *
                       (std::pow(a, p - 1.0) - std::pow(b, p - 1.0));
  const double second = std::pow(a, p - 1.0) * std::pow(b, p - 1.0) * d * d;
  return {first + second, std::max(std::abs(first), std::abs(second))};
}

double alpha_p_closed_form_ips(const NormSpec& spec, const Vector& x, const Vector& y,
                               double p) {
  if (!spec.has_inner_product()) {
    throw Error(ErrorCode::no_inner_product,
                "closed form of alpha_p needs an inner-product norm, got " + spec.name());
  }
  const auto r = closed_form_radicand(spec, x, y, p);
  if (r.value >= 0.0) return std::sqrt(r.value);
  if (r.value >= -kRadicandTol * r.scale) return 0.0;
  throw Error(ErrorCode::negative_radicand,
              "closed-form radicand " + std::to_string(r.value) +
                  " is negative beyond tolerance; the norm is not induced by an inner product");
}

double sign_identity_ips(const NormSpec& spec, const Vector& x, const Vector& y, double p) {
  if (!spec.has_inner_product()) {
    throw Error(ErrorCode::no_inner_product,
                "alpha/beta sign identity needs an inner-product norm, got " + spec.name());
  }
  check_exponent(p);
  const double a = checked_norm(spec, x);
  const double b = checked_norm(spec, y);
  return (a * a - b * b) * (std::pow(a, 2.0 * p - 2.0) - std::pow(b, 2.0 * p - 2.0));
}

double collinear_alpha(double p, double lambda, double mu) {
  auto signed_power = [p](double s) { return std::copysign(std::pow(std::abs(s), p), s); };
  return std::abs(signed_power(lambda) - signed_power(mu));
}

}  // namespace pangular
