#include "pangular/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <string>

#include "pangular/error.hpp"

namespace pangular {

namespace {

// Kronrod abscissae in descending order; odd indices are the Gauss nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& o) const { return error < o.error; }
};

double checked_eval(const std::function<double(double)>& f, double t) {
  const double v = f(t);
  if (!std::isfinite(v)) {
    throw Error(ErrorCode::quadrature_failed,
                "integrand is not finite at t = " + std::to_string(t));
  }
  return v;
}

Segment gauss_kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked_eval(f, center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const double pair = checked_eval(f, center - dx) + checked_eval(f, center + dx);
    kronrod += kWgk[j] * pair;
    if (j % 2 == 1) gauss += kWg[j / 2] * pair;
  }
  return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options) {
  if (!(a <= b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw Error(ErrorCode::invalid_argument, "quadrature needs a finite range a <= b");
  }
  QuadratureResult result;
  if (a == b) return result;

  std::vector<double> cuts{a};
  for (double g : options.graded_points) {
    if (g > a && g < b) cuts.push_back(g);
    if (g >= a && g <= b) result.singular_endpoint = true;
  }
  for (double k : options.breakpoints) {
    if (k > a && k < b) cuts.push_back(k);
  }
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Segment> heap;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Segment s = gauss_kronrod(f, cuts[i], cuts[i + 1]);
    total += s.value;
    error += s.error;
    heap.push(s);
  }

  auto tolerance = [&] { return std::max(options.abs_tol, options.rel_tol * std::abs(total)); };
  while (error > tolerance()) {
    if (heap.size() >= options.max_subdivisions) {
      throw Error(ErrorCode::quadrature_failed,
                  "quadrature tolerance not met: error estimate " + std::to_string(error) +
                      " after " + std::to_string(heap.size()) + " subintervals");
    }
    const Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw Error(ErrorCode::quadrature_failed, "subinterval width fell below machine resolution");
    }
    const Segment left = gauss_kronrod(f, worst.a, mid);
    const Segment right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
  }

  // Re-sum from the leaves to shed the drift of the running updates.
  total = 0.0;
  error = 0.0;
  result.subdivisions = heap.size();
  while (!heap.empty()) {
    total += heap.top().value;
    error += heap.top().error;
    heap.pop();
  }
  result.value = total;
  result.error_estimate = error;
  return result;
}

}  // namespace pangular
