#pragma once

#include "pangular/norm.hpp"
#include "pangular/vector.hpp"

namespace pangular {

/// Norms outside [kMinNorm, kMaxNorm] are rejected: ||x||^{p-1} would leave
/// the representable range for the exponents used here.
inline constexpr double kMinNorm = 1e-150;
inline constexpr double kMaxNorm = 1e150;

/// Relative tolerance for deciding ||x|| == ||y||.
inline constexpr double kNormEqualityTol = 1e-9;

/// Radicands in [-kRadicandTol * scale, 0) are clamped to zero.
inline constexpr double kRadicandTol = 1e-10;

struct AngularResult {
  double p = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

/// ||x|| with the X \ {0} precondition and the numerical-range guard applied.
double checked_norm(const NormSpec& spec, const Vector& v);

/// || ||x||^{p-1} x - ||y||^{p-1} y ||
double alpha_p(const NormSpec& spec, const Vector& x, const Vector& y, double p);

/// || ||y||^{p-1} x - ||x||^{p-1} y ||
double beta_p(const NormSpec& spec, const Vector& x, const Vector& y, double p);

AngularResult angular(const NormSpec& spec, const Vector& x, const Vector& y, double p);

/// |beta_p - ||x||^{p-1} ||y||^{p-1} alpha_{2-p}|; zero up to rounding.
double relation_pp_residual(const NormSpec& spec, const Vector& x, const Vector& y, double p);

/// The radicand of the inner-product closed form of alpha_p together with the
/// magnitude of its largest addend (used for the clamp tolerance).
struct ClosedFormRadicand {
  double value = 0.0;
  double scale = 0.0;
};

/// (a^{p+1}-b^{p+1})(a^{p-1}-b^{p-1}) + a^{p-1} b^{p-1} ||x-y||^2 with a=||x||,
/// b=||y||. Evaluated from norms alone, so it is defined for any norm.
ClosedFormRadicand closed_form_radicand(const NormSpec& spec, const Vector& x,
                                        const Vector& y, double p);

/// sqrt of closed_form_radicand. Requires an inner-product norm; throws
/// ErrorCode::negative_radicand when the radicand is materially negative.
double alpha_p_closed_form_ips(const NormSpec& spec, const Vector& x, const Vector& y,
                               double p);

/// (||x||^2 - ||y||^2)(||x||^{2p-2} - ||y||^{2p-2}), equal to alpha_p^2 - beta_p^2
/// in an inner product space.
double sign_identity_ips(const NormSpec& spec, const Vector& x, const Vector& y, double p);

/// alpha_p of the collinear pair (lambda a, mu a) for a unit vector a:
/// |sgn(lambda)|lambda|^p - sgn(mu)|mu|^p|.
double collinear_alpha(double p, double lambda, double mu);

/// Relative comparison |a - b| <= tol * max(|a|, |b|).
bool nearly_equal(double a, double b, double tol);

}  // namespace pangular
