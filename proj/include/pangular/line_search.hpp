#pragma once

#include <cmath>
#include <cstddef>

namespace pangular {

struct ScalarMinimum {
  double x = 0.0;
  double value = 0.0;
  std::size_t iterations = 0;
};

/// Golden-section search for the minimum of a unimodal f on [lo, hi].
/// Stops when the bracket is narrower than x_tol or after max_iter steps.
template <class F>
ScalarMinimum golden_section_minimize(F&& f, double lo, double hi, double x_tol,
                                      std::size_t max_iter = 400) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  std::size_t it = 0;
  for (; it < max_iter && (hi - lo) > x_tol; ++it) {
    if (fc <= fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  const double mid = 0.5 * (lo + hi);
  const double fm = f(mid);
  ScalarMinimum best{mid, fm, it};
  if (fc < best.value) best = {c, fc, it};
  if (fd < best.value) best = {d, fd, it};
  return best;
}

}  // namespace pangular
