#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pangular/norm.hpp"
#include "pangular/quadrature.hpp"
#include "pangular/vector.hpp"

namespace pangular {

/// Relative slack tolerance below which a bound side counts as violated.
inline constexpr double kBoundRelTol = 1e-9;

/// One evaluated inequality lower <= value <= upper. Violations are
/// recorded (holds_* = false), never thrown.
struct BoundReport {
  std::string name;
  std::optional<double> lower;
  std::optional<double> upper;
  double value = 0.0;        // the bounded quantity, recomputed independently
  double slack_lower = 0.0;  // value - lower
  double slack_upper = 0.0;  // upper - value
  bool holds_lower = true;
  bool holds_upper = true;
  double tolerance = 0.0;    // absolute; holds(side) <=> slack(side) >= -tolerance
  bool applicable = true;
  std::string reason;        // why an inapplicable bound was skipped

  bool holds() const { return holds_lower && holds_upper; }
};

BoundReport make_bound_report(std::string name, double value, std::optional<double> lower,
                              std::optional<double> upper, double rel_tol = kBoundRelTol);
BoundReport skipped_bound(std::string name, std::string reason);

/// Which regime p/q falls in, decided from sign(p*q) and |p| vs |q| so that
/// no division is involved. p == q is `at_least_one`; p == 0 is `unit_interval`.
enum class RatioCase { at_least_one, unit_interval, non_positive };
RatioCase classify_ratio(double p, double q);
std::string to_string(RatioCase c);

/// Two-sided comparison of alpha_p with alpha_q valid for all p and q != 0:
///   |p|/(|p|+|p-q|) min(a^{p-q}, b^{p-q}) alpha_q <= alpha_p
///     <= (|q|+|p-q|)/|q| max(a^{p-q}, b^{p-q}) alpha_q.
BoundReport power_comparison_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                   double p, double q, double rel_tol = kBoundRelTol);

/// The sharper case-wise comparison of alpha_p with alpha_q. The case is
/// appended to the report name.
BoundReport refined_power_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                double p, double q, double rel_tol = kBoundRelTol);

/// alpha_p bounded by beta_p: the refined bound with q = 2 - p after
/// rewriting alpha_{2-p} through beta_p. Requires p != 2.
BoundReport skew_comparison_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double p, double rel_tol = kBoundRelTol);

/// alpha_0 <= 2 min(||x||/||y||, ||y||/||x||) beta_0.
BoundReport skew_angular_cap(const NormSpec& spec, const Vector& x, const Vector& y,
                             double rel_tol = kBoundRelTol);

/// Dunkl-Williams, Gurarii and Hile. Inapplicable ones are returned with
/// applicable = false and a reason.
std::vector<BoundReport> classical_bounds(const NormSpec& spec, const Vector& x,
                                          const Vector& y, double p,
                                          double rel_tol = kBoundRelTol);

struct IntegralBound {
  BoundReport report;
  QuadratureResult quadrature;
};

/// int_0^1 || (1-t) ||x||^{s-1} x + t ||y||^{s-1} y ||^e dt. When e < 0 the
/// segment must stay away from the origin (linear independence); otherwise
/// ErrorCode::linear_dependence.
QuadratureResult normalized_segment_integral(const NormSpec& spec, const Vector& x,
                                             const Vector& y, double s, double e,
                                             double quad_tol);

/// alpha_p <= c alpha_q int_0^1 ||(1-t)||x||^{q-1}x + t||y||^{q-1}y||^{p/q-1} dt
/// with c = p/q when p/q >= 1 and c = (2q-p)/q otherwise (the latter needs
/// linearly independent x, y).
IntegralBound dragomir_integral_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                      double p, double q, double quad_tol = 1e-11,
                                      double rel_tol = kBoundRelTol);

/// The reverse (lower) bound obtained by exchanging p and q in the integral
/// bound. x, y must be linearly independent; p, q nonzero.
IntegralBound dragomir_reverse_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                     double p, double q, double quad_tol = 1e-11,
                                     double rel_tol = kBoundRelTol);

/// An ordered chain of quantities that must be nondecreasing.
struct BoundChain {
  std::string name;
  std::vector<std::string> labels;
  std::vector<double> terms;
  bool nondecreasing = true;
  double worst_rel_gap = 0.0;  // most negative (t[i+1]-t[i]) / max(|t[i]|,|t[i+1]|)
  std::vector<QuadratureResult> quadratures;
};

/// Refinement of Hile's inequality through the integral bound and the
/// Hermite-Hadamard inequality. Requires p/q >= 2 and ||x|| != ||y||:
///   alpha_p <= (p/q) alpha_q int ||segment||^{p/q-1}
///           <= (p/q) alpha_q int ((1-t)a^q + t b^q)^{p/q-1}
///            = (b^p - a^p)/(b^q - a^q) alpha_q
///           <= (p/q) alpha_q (a^{p-q} + b^{p-q})/2
///           <= (p/q) alpha_q max(a^{p-q}, b^{p-q}).
BoundChain hermite_hadamard_chain(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double p, double q, double quad_tol = 1e-12,
                                  double rel_tol = kBoundRelTol);

/// Inner-product chain alpha_0 <= 2||x-y|| int ||(1-t)x+ty||^{-1} dt
///                           <= 2||x-y||^2 / sqrt(||x||^2||y||^2 - <x,y>^2).
BoundChain angular_integral_chain(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double quad_tol = 1e-11, double rel_tol = kBoundRelTol);

/// sqrt(||x||^2||y||^2 - <x,y>^2) <= 2||x|| ||y|| ||x-y||^2 / || ||y||x - ||x||y ||.
/// Inner-product norms only; ||y||x == ||x||y is rejected.
BoundReport cauchy_schwarz_error_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                       double rel_tol = kBoundRelTol);

struct SweepRow {
  double eps = 0.0;
  double ratio = 0.0;
};

struct BestConstantSweep {
  double p = 0.0;
  double q = 0.0;
  RatioCase ratio_case = RatioCase::at_least_one;
  double limit = 0.0;  // p/q, or 2 - p/q
  std::vector<SweepRow> rows;
};

/// Ratio of alpha_p to the right-hand constant-free bound on the l1 family
/// x = (1+eps)^{(1-q)/q} (1, eps), y = (1, 0) in R^2. Tends to the sharp
/// constant as eps -> 0+.
BestConstantSweep best_constant_sweep(double p, double q, const std::vector<double>& eps);

}  // namespace pangular
