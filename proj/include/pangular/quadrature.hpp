#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace pangular {

struct QuadratureOptions {
  double abs_tol = 1e-13;
  double rel_tol = 1e-11;
  std::size_t max_subdivisions = 4000;
  /// Interior points where the integrand may be sharply peaked or
  /// non-smooth. The range is split there first so the adaptive refinement
  /// grades toward them from both sides.
  std::vector<double> graded_points;
  /// Interior kinks of the integrand; split there without flagging.
  std::vector<double> breakpoints;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t subdivisions = 0;
  bool singular_endpoint = false;  // some subrange ends at a graded point
};

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature of f over [a, b].
/// Throws ErrorCode::quadrature_failed if the tolerance
/// max(abs_tol, rel_tol*|I|) is not reached within max_subdivisions, or if
/// f returns a non-finite value.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace pangular
