#include "pangular/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"

namespace pangular {

namespace {

// |r| up to 1 + kBoundarySlack counts as the boundary |r| = 1.
constexpr double kBoundarySlack = 1e-12;

struct Discriminant {
  double a;
  double b;
  double ip;
  double d;  // sqrt(a^2 b^2 - <x,y>^2)
};

Discriminant discriminant(const NormSpec& spec, const Vector& x, const Vector& y) {
  if (!spec.has_inner_product()) {
    throw Error(ErrorCode::no_inner_product,
                "series expansions need an inner-product norm, got " + spec.name());
  }
  require_same_dimension(x, y);
  const double a = checked_norm(spec, x);
  const double b = checked_norm(spec, y);
  const double ip = inner_product(spec, x, y);
  const double disc = a * a * b * b - ip * ip;
  if (disc <= 1e-14 * a * a * b * b) {
    throw Error(ErrorCode::linear_dependence, "x and y are (numerically) linearly dependent");
  }
  return {a, b, ip, std::sqrt(disc)};
}

// Fills value/order/tail for prefactor * sum c_k z^k, z = r^2.
void evaluate(SeriesEvaluation& ev, double prefactor, double r, std::size_t K) {
  const double ar = std::abs(r);
  const double z = std::min(ar * ar, 1.0);
  ev.ratio = std::min(ar, 1.0);
  ev.in_domain = true;
  ev.order = K;
  ev.value = prefactor * binomial_half_partial_sum(z, K);
  ev.tail_bound = prefactor * series_tail_bound(z, K);
  ev.slow_convergence = z >= 1.0;
}

struct Orientation {
  double prefactor;
  double r;
};

// alpha_p[x,y] = ||x||^{p-1} ||x + t y|| with t = -(||y||/||x||)^{p-1}.
Orientation alpha_orientation(double a, double b, double ip, double d, double p) {
  const double prefactor = d / (std::pow(a, 1.0 - p) * b);
  const double r = (std::pow(a, 1.0 - p) * std::pow(b, 1.0 + p) - ip) / d;
  return {prefactor, r};
}

template <class Eval>
SeriesEvaluation adapt(Eval&& eval, double tol) {
  SeriesEvaluation ev;
  for (std::size_t K = 8;; K *= 2) {
    ev = eval(K);
    if (!ev.in_domain || ev.tail_bound <= tol) break;
    if (K >= kMaxSeriesOrder) {
      ev.slow_convergence = true;
      break;
    }
  }
  return ev;
}

}  // namespace

double binomial_half(std::size_t k) {
  double c = 1.0;
  for (std::size_t j = 0; j < k; ++j) {
    c *= (0.5 - static_cast<double>(j)) / static_cast<double>(j + 1);
  }
  return c;
}

double binomial_half_partial_sum(double z, std::size_t K) {
  double c = 1.0;
  double zk = 1.0;
  double sum = 1.0;
  for (std::size_t k = 0; k < K; ++k) {
    c *= (0.5 - static_cast<double>(k)) / static_cast<double>(k + 1);
    zk *= z;
    sum += c * zk;
  }
  return sum;
}

double series_tail_bound(double z, std::size_t K) {
  const double cap = K == 0 ? 1.0 : 2.0 / std::sqrt(static_cast<double>(K));
  if (z >= 1.0) return cap;
  if (z <= 0.0) return 0.0;
  const double geometric =
      std::abs(binomial_half(K + 1)) * std::pow(z, static_cast<double>(K + 1)) / (1.0 - z);
  return std::min(geometric, cap);
}

SeriesEvaluation norm_line_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double t, std::size_t K) {
  const auto [a, b, ip, d] = discriminant(spec, x, y);
  const double r = (t * b * b + ip) / d;
  if (!(std::abs(r) <= 1.0 + kBoundarySlack)) {
    throw Error(ErrorCode::out_of_domain,
                "t = " + std::to_string(t) + " lies outside the convergence window (|r| = " +
                    std::to_string(std::abs(r)) + ")");
  }
  (void)a;
  SeriesEvaluation ev;
  ev.form = "norm_line";
  evaluate(ev, d / b, r, K);
  return ev;
}

CosineWindow alpha_p_cosine_window(double norm_x, double norm_y, double p) {
  const double rho = std::pow(norm_y / norm_x, p);
  const double room = 2.0 - rho * rho;
  if (room < 0.0) return {0.0, 0.0, true};
  const double s = std::sqrt(room);
  return {0.5 * (rho - s), 0.5 * (rho + s), false};
}

SeriesEvaluation alpha_p_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                double p, std::size_t K) {
  if (!std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "p must be finite");
  const auto [a, b, ip, d] = discriminant(spec, x, y);
  const Orientation direct = alpha_orientation(a, b, ip, d, p);
  const Orientation reversed = alpha_orientation(b, a, ip, d, p);
  const bool use_reversed = std::abs(reversed.r) < std::abs(direct.r);
  const Orientation& o = use_reversed ? reversed : direct;

  SeriesEvaluation ev;
  ev.form = "alpha_p";
  ev.swapped = use_reversed;
  if (!(std::abs(o.r) <= 1.0 + kBoundarySlack)) {
    ev.ratio = std::abs(o.r);
    ev.in_domain = false;
    return ev;
  }
  evaluate(ev, o.prefactor, o.r, K);
  return ev;
}

SeriesEvaluation alpha_p_series_adaptive(const NormSpec& spec, const Vector& x,
                                         const Vector& y, double p, double tol) {
  return adapt([&](std::size_t K) { return alpha_p_series(spec, x, y, p, K); }, tol);
}

SeriesEvaluation alpha_zero_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                   std::size_t K) {
  const auto [a, b, ip, d] = discriminant(spec, x, y);
  const double ab = a * b;
  const double prefactor = d / ab;
  SeriesEvaluation ev;
  if (ip >= 0.0) {
    ev.form = "angular_nonnegative_ip";
    evaluate(ev, prefactor, std::sqrt((ab - ip) / (ab + ip)), K);
    return ev;
  }
  // alpha[x,y] = sqrt(4 - alpha[x,-y]^2), and <x,-y> > 0.
  ev.form = "angular_reflected";
  const double z = (ab + ip) / (ab - ip);
  const double sum = binomial_half_partial_sum(z, K);
  const double tau = series_tail_bound(z, K);
  const double reflected = prefactor * sum;
  const double value = std::sqrt(std::max(0.0, 4.0 - reflected * reflected));
  // |alpha^2[x,-y] - (P S_K)^2| <= P^2 tau (2 S_K + tau) =: delta.
  const double delta = prefactor * prefactor * tau * (2.0 * sum + tau);
  ev.in_domain = true;
  ev.order = K;
  ev.ratio = std::sqrt(z);
  ev.value = value;
  ev.tail_bound = value > 0.0 ? std::min(std::sqrt(delta), delta / value) : std::sqrt(delta);
  ev.slow_convergence = z >= 1.0;
  return ev;
}

SeriesEvaluation alpha_zero_series_adaptive(const NormSpec& spec, const Vector& x,
                                            const Vector& y, double tol) {
  return adapt([&](std::size_t K) { return alpha_zero_series(spec, x, y, K); }, tol);
}

}  // namespace pangular
