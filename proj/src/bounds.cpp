#include "pangular/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <variant>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"

namespace pangular {

namespace {

void require_nonzero(double v, const char* what) {
  if (v == 0.0 || !std::isfinite(v)) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + " must be finite and nonzero");
  }
}

double side_tolerance(double rel_tol, double value, std::optional<double> bound) {
  return rel_tol * std::max(std::abs(value), bound ? std::abs(*bound) : 0.0);
}

struct NormPair {
  double a;
  double b;
};

NormPair norms_of(const NormSpec& spec, const Vector& x, const Vector& y) {
  require_same_dimension(x, y);
  return {checked_norm(spec, x), checked_norm(spec, y)};
}

// Points in (0,1) where a coordinate of (1-t)u + t v changes sign; the
// integrand of a non-Euclidean norm has kinks there.
std::vector<double> coordinate_crossings(const Vector& u, const Vector& v) {
  std::vector<double> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if ((u[i] < 0.0 && v[i] > 0.0) || (u[i] > 0.0 && v[i] < 0.0)) {
      out.push_back(u[i] / (u[i] - v[i]));
    }
  }
  return out;
}

}  // namespace

BoundReport make_bound_report(std::string name, double value, std::optional<double> lower,
                              std::optional<double> upper, double rel_tol) {
  BoundReport r;
  r.name = std::move(name);
  r.value = value;
  r.lower = lower;
  r.upper = upper;
  r.tolerance = std::max(side_tolerance(rel_tol, value, lower),
                         side_tolerance(rel_tol, value, upper));
  if (lower) {
    r.slack_lower = value - *lower;
    r.holds_lower = r.slack_lower >= -r.tolerance;
  }
  if (upper) {
    r.slack_upper = *upper - value;
    r.holds_upper = r.slack_upper >= -r.tolerance;
  }
  return r;
}

BoundReport skipped_bound(std::string name, std::string reason) {
  BoundReport r;
  r.name = std::move(name);
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

RatioCase classify_ratio(double p, double q) {
  require_nonzero(q, "q");
  if (!std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "p must be finite");
  if (p == 0.0) return RatioCase::unit_interval;
  if ((p > 0.0) != (q > 0.0)) return RatioCase::non_positive;
  return std::abs(p) >= std::abs(q) ? RatioCase::at_least_one : RatioCase::unit_interval;
}

std::string to_string(RatioCase c) {
  switch (c) {
    case RatioCase::at_least_one: return "ratio_at_least_one";
    case RatioCase::unit_interval: return "ratio_in_unit_interval";
    case RatioCase::non_positive: return "ratio_non_positive";
  }
  return "unknown";
}

BoundReport power_comparison_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                   double p, double q, double rel_tol) {
  require_nonzero(q, "q");
  const auto [a, b] = norms_of(spec, x, y);
  const double aq = alpha_p(spec, x, y, q);
  const double pa = std::pow(a, p - q);
  const double pb = std::pow(b, p - q);
  const double lower = std::abs(p) / (std::abs(p) + std::abs(p - q)) * std::min(pa, pb) * aq;
  const double upper = (std::abs(q) + std::abs(p - q)) / std::abs(q) * std::max(pa, pb) * aq;
  return make_bound_report("power_comparison", alpha_p(spec, x, y, p), lower, upper, rel_tol);
}

namespace {

// Case-wise constants applied to a given value of alpha_q.
std::pair<double, double> refined_sides(RatioCase c, double p, double q, double a, double b,
                                        double alpha_q) {
  switch (c) {
    case RatioCase::at_least_one: {
      const double m = std::max(std::pow(a, p - q), std::pow(b, p - q));
      return {p / (2.0 * p - q) * m * alpha_q, p / q * m * alpha_q};
    }
    case RatioCase::unit_interval: {
      const double m = std::max(std::pow(a, q - p), std::pow(b, q - p));
      return {p / q * alpha_q / m, (2.0 * q - p) / q * alpha_q / m};
    }
    case RatioCase::non_positive: {
      const double ratio = std::max(std::pow(a, p), std::pow(b, p)) /
                           std::max(std::pow(a, q), std::pow(b, q));
      return {p / (2.0 * p - q) * ratio * alpha_q, (2.0 * q - p) / q * ratio * alpha_q};
    }
  }
  return {0.0, 0.0};
}

}  // namespace

BoundReport refined_power_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                double p, double q, double rel_tol) {
  const RatioCase c = classify_ratio(p, q);
  const auto [a, b] = norms_of(spec, x, y);
  const auto [lower, upper] = refined_sides(c, p, q, a, b, alpha_p(spec, x, y, q));
  return make_bound_report("refined_power[" + to_string(c) + "]", alpha_p(spec, x, y, p),
                           lower, upper, rel_tol);
}

BoundReport skew_comparison_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double p, double rel_tol) {
  if (p == 2.0) throw Error(ErrorCode::invalid_argument, "skew comparison needs p != 2");
  const double q = 2.0 - p;
  const RatioCase c = classify_ratio(p, q);
  const auto [a, b] = norms_of(spec, x, y);
  // alpha_{2-p} = beta_p / (a^{p-1} b^{p-1})
  const double alpha_q = beta_p(spec, x, y, p) / (std::pow(a, p - 1.0) * std::pow(b, p - 1.0));
  const auto [lower, upper] = refined_sides(c, p, q, a, b, alpha_q);
  return make_bound_report("skew_comparison[" + to_string(c) + "]", alpha_p(spec, x, y, p),
                           lower, upper, rel_tol);
}

BoundReport skew_angular_cap(const NormSpec& spec, const Vector& x, const Vector& y,
                             double rel_tol) {
  const auto [a, b] = norms_of(spec, x, y);
  const double upper = 2.0 * std::min(a / b, b / a) * beta_p(spec, x, y, 0.0);
  return make_bound_report("skew_angular_cap", alpha_p(spec, x, y, 0.0), std::nullopt, upper,
                           rel_tol);
}

std::vector<BoundReport> classical_bounds(const NormSpec& spec, const Vector& x,
                                          const Vector& y, double p, double rel_tol) {
  const auto [a, b] = norms_of(spec, x, y);
  const double d = norm_eval(spec, x - y);
  std::vector<BoundReport> out;
  out.push_back(make_bound_report("dunkl_williams", alpha_p(spec, x, y, 0.0), std::nullopt,
                                  4.0 * d / (a + b), rel_tol));
  if (p >= 1.0) {
    out.push_back(make_bound_report("gurarii", alpha_p(spec, x, y, p),
                                    std::pow(2.0, -p) * std::pow(d, p), std::nullopt, rel_tol));
  } else {
    out.push_back(skipped_bound("gurarii", "requires p >= 1"));
  }
  if (p < 1.0) {
    out.push_back(skipped_bound("hile", "requires p >= 1"));
  } else if (nearly_equal(a, b, kNormEqualityTol)) {
    out.push_back(skipped_bound("hile", "requires ||x|| != ||y||"));
  } else {
    const double c = (std::pow(b, p) - std::pow(a, p)) / (b - a);
    out.push_back(make_bound_report("hile", alpha_p(spec, x, y, p), std::nullopt, c * d, rel_tol));
  }
  return out;
}

QuadratureResult normalized_segment_integral(const NormSpec& spec, const Vector& x,
                                             const Vector& y, double s, double e,
                                             double quad_tol) {
  const auto [a, b] = norms_of(spec, x, y);
  const Vector u = std::pow(a, s - 1.0) * x;
  const Vector v = std::pow(b, s - 1.0) * y;
  const Vector dir = v - u;

  QuadratureOptions opts;
  opts.abs_tol = quad_tol;
  opts.rel_tol = quad_tol;
  if (!spec.has_inner_product()) opts.breakpoints = coordinate_crossings(u, v);
  // Divide by a bound on the segment's norm (the line minimum when e < 0,
  // the larger endpoint otherwise) so the integrand stays in (0, 1].
  double unit = std::max(norm_eval(spec, u), norm_eval(spec, v));
  if (e < 0.0) {
    const LineMinimum m = dir.is_zero() ? LineMinimum{0.0, 0.0} : min_over_line(spec, u, dir);
    if (dir.is_zero() || m.value < 1e-9 * unit) {
      throw Error(ErrorCode::linear_dependence,
                  "x and y are (numerically) linearly dependent: the segment passes within " +
                      std::to_string(m.value) + " of the origin");
    }
    if (m.t_star > 0.0 && m.t_star < 1.0) opts.graded_points.push_back(m.t_star);
    unit = m.value;
  }
  auto f = [&](double t) {
    return std::pow(norm_eval(spec, lincomb(1.0 - t, u, t, v)) / unit, e);
  };
  QuadratureResult r = integrate(f, 0.0, 1.0, opts);
  const double factor = std::pow(unit, e);
  if (!std::isfinite(factor * r.value) || factor * r.value == 0.0) {
    throw Error(ErrorCode::out_of_range,
                "segment integral leaves the double range (exponent " + std::to_string(e) + ")");
  }
  r.value *= factor;
  r.error_estimate *= factor;
  return r;
}

IntegralBound dragomir_integral_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                      double p, double q, double quad_tol, double rel_tol) {
  const RatioCase c = classify_ratio(p, q);
  const double factor = c == RatioCase::at_least_one ? p / q : (2.0 * q - p) / q;
  const double e = p / q - 1.0;
  auto quad = normalized_segment_integral(spec, x, y, q, e, quad_tol);
  const double upper = factor * alpha_p(spec, x, y, q) * quad.value;
  return {make_bound_report("dragomir_integral", alpha_p(spec, x, y, p), std::nullopt, upper,
                            rel_tol),
          quad};
}

namespace {

void require_independent(const NormSpec& spec, const Vector& x, const Vector& y) {
  const auto [a, b] = norms_of(spec, x, y);
  const Vector xn = (1.0 / a) * x;
  const Vector dir = (1.0 / b) * y - xn;
  if (dir.is_zero() || min_over_line(spec, xn, dir).value < 1e-9) {
    throw Error(ErrorCode::linear_dependence, "x and y must be linearly independent");
  }
}

}  // namespace

IntegralBound dragomir_reverse_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                     double p, double q, double quad_tol, double rel_tol) {
  require_nonzero(p, "p");
  const RatioCase c = classify_ratio(p, q);
  require_independent(spec, x, y);
  const double factor = c == RatioCase::unit_interval ? p / q : p / (2.0 * p - q);
  auto quad = normalized_segment_integral(spec, x, y, p, q / p - 1.0, quad_tol);
  const double lower = factor * alpha_p(spec, x, y, q) / quad.value;
  return {make_bound_report("dragomir_reverse", alpha_p(spec, x, y, p), lower, std::nullopt,
                            rel_tol),
          quad};
}

namespace {

void finish_chain(BoundChain& chain, double rel_tol) {
  chain.nondecreasing = true;
  chain.worst_rel_gap = 0.0;
  for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i) {
    const double lo = chain.terms[i];
    const double hi = chain.terms[i + 1];
    const double scale = std::max(std::abs(lo), std::abs(hi));
    const double gap = scale > 0.0 ? (hi - lo) / scale : 0.0;
    chain.worst_rel_gap = std::min(chain.worst_rel_gap, gap);
    if (gap < -rel_tol) chain.nondecreasing = false;
  }
}

}  // namespace

BoundChain hermite_hadamard_chain(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double p, double q, double quad_tol, double rel_tol) {
  const RatioCase c = classify_ratio(p, q);
  // p/q >= 2  <=>  same signs and |p| >= 2|q|
  if (c != RatioCase::at_least_one || std::abs(p) < 2.0 * std::abs(q)) {
    throw Error(ErrorCode::invalid_argument, "the Hermite-Hadamard chain needs p/q >= 2");
  }
  const auto [a, b] = norms_of(spec, x, y);
  if (nearly_equal(a, b, kNormEqualityTol)) {
    throw Error(ErrorCode::invalid_argument, "the Hermite-Hadamard chain needs ||x|| != ||y||");
  }
  const double r = p / q;
  const double aq = alpha_p(spec, x, y, q);
  const double na = std::pow(a, q);
  const double nb = std::pow(b, q);

  BoundChain chain;
  chain.name = "hermite_hadamard_chain";
  const auto seg = normalized_segment_integral(spec, x, y, q, r - 1.0, quad_tol);
  QuadratureOptions opts;
  opts.abs_tol = quad_tol;
  opts.rel_tol = quad_tol;
  const auto scalar =
      integrate([&](double t) { return std::pow((1.0 - t) * na + t * nb, r - 1.0); }, 0.0, 1.0,
                opts);
  const double pa = std::pow(a, p - q);
  const double pb = std::pow(b, p - q);

  chain.labels = {"alpha_p", "segment_integral", "scalar_integral", "hile_quotient",
                  "hermite_hadamard_midpoint", "max_power"};
  chain.terms = {alpha_p(spec, x, y, p),
                 r * aq * seg.value,
                 r * aq * scalar.value,
                 (std::pow(b, p) - std::pow(a, p)) / (nb - na) * aq,
                 r * aq * 0.5 * (pa + pb),
                 r * aq * std::max(pa, pb)};
  chain.quadratures = {seg, scalar};
  finish_chain(chain, rel_tol);
  return chain;
}

BoundChain angular_integral_chain(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double quad_tol, double rel_tol) {
  if (!spec.has_inner_product()) {
    throw Error(ErrorCode::no_inner_product, "angular integral chain needs an inner product");
  }
  const auto [a, b] = norms_of(spec, x, y);
  const double ip = inner_product(spec, x, y);
  const double disc = a * a * b * b - ip * ip;
  if (disc <= 1e-14 * a * a * b * b) {
    throw Error(ErrorCode::linear_dependence, "x and y must be linearly independent");
  }
  const double d = norm_eval(spec, x - y);
  // s = 1, e = -1: the segment between x and y themselves.
  const auto quad = normalized_segment_integral(spec, x, y, 1.0, -1.0, quad_tol);
  BoundChain chain;
  chain.name = "angular_integral_chain";
  chain.labels = {"alpha_0", "integral_bound", "cauchy_schwarz_cap"};
  chain.terms = {alpha_p(spec, x, y, 0.0), 2.0 * d * quad.value, 2.0 * d * d / std::sqrt(disc)};
  chain.quadratures = {quad};
  finish_chain(chain, rel_tol);
  return chain;
}

BoundReport cauchy_schwarz_error_bound(const NormSpec& spec, const Vector& x, const Vector& y,
                                       double rel_tol) {
  if (!spec.has_inner_product()) {
    throw Error(ErrorCode::no_inner_product, "Cauchy-Schwarz error bound needs an inner product");
  }
  const auto [a, b] = norms_of(spec, x, y);
  const double den = norm_eval(spec, lincomb(b, x, -a, y));
  if (den <= 1e-14 * a * b) {
    throw Error(ErrorCode::invalid_argument, "||y||x == ||x||y: the bound is undefined");
  }
  const double ip = inner_product(spec, x, y);
  const double lhs = std::sqrt(std::max(0.0, a * a * b * b - ip * ip));
  const double d = norm_eval(spec, x - y);
  return make_bound_report("cauchy_schwarz_error", lhs, std::nullopt, 2.0 * a * b * d * d / den,
                           rel_tol);
}

BestConstantSweep best_constant_sweep(double p, double q, const std::vector<double>& eps) {
  BestConstantSweep sweep;
  sweep.p = p;
  sweep.q = q;
  sweep.ratio_case = classify_ratio(p, q);
  sweep.limit = sweep.ratio_case == RatioCase::at_least_one ? p / q : 2.0 - p / q;
  if (eps.empty()) throw Error(ErrorCode::invalid_argument, "epsilon list is empty");
  const NormSpec l1 = NormSpec::l1();
  for (double e : eps) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw Error(ErrorCode::invalid_argument, "epsilons must be positive");
    }
    const Vector x = std::pow(1.0 + e, (1.0 - q) / q) * Vector{1.0, e};
    const Vector y{1.0, 0.0};
    const double a = norm_eval(l1, x);
    const double b = norm_eval(l1, y);
    const double ap = alpha_p(l1, x, y, p);
    const double aq = alpha_p(l1, x, y, q);
    double ratio = 0.0;
    switch (sweep.ratio_case) {
      case RatioCase::at_least_one:
        ratio = ap / (aq * std::max(std::pow(a, p - q), std::pow(b, p - q)));
        break;
      case RatioCase::unit_interval:
        ratio = ap / aq * std::max(std::pow(a, q - p), std::pow(b, q - p));
        break;
      case RatioCase::non_positive:
        ratio = ap / (aq * std::max(std::pow(a, p), std::pow(b, p)) /
                      std::max(std::pow(a, q), std::pow(b, q)));
        break;
    }
    sweep.rows.push_back({e, ratio});
  }
  return sweep;
}

}  // namespace pangular
