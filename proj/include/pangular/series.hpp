#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "pangular/norm.hpp"
#include "pangular/vector.hpp"

namespace pangular {

/// Largest order tried by the adaptive evaluators.
inline constexpr std::size_t kMaxSeriesOrder = std::size_t{1} << 16;

struct SeriesEvaluation {
  std::optional<double> value;  // empty when out of domain
  std::size_t order = 0;        // K: terms k = 0..K were summed
  double ratio = 0.0;           // |r|; the series runs in r^2
  double tail_bound = 0.0;      // bound on |limit - value|, prefactor included
  bool in_domain = false;
  bool slow_convergence = false;  // |r| = 1, or the adaptive tolerance was not reached
  bool swapped = false;           // the roles of x and y were exchanged
  std::string form;               // which expansion produced the value
};

/// binom(1/2, k) by the ratio recurrence.
double binomial_half(std::size_t k);

/// sum_{k<=K} binom(1/2, k) z^k for z in [0, 1].
double binomial_half_partial_sum(double z, std::size_t K);

/// Bound on |sum_{k>K} binom(1/2, k) z^k| for z in [0, 1]: the geometric
/// bound |c_{K+1}| z^{K+1}/(1-z) when z < 1, capped by 2/sqrt(K) from
/// |c_k| <= k^{-3/2}.
double series_tail_bound(double z, std::size_t K);

/// ||x + t y|| as a binomial series around the foot of the perpendicular.
/// Throws out_of_domain if |r| > 1 and linear_dependence for parallel x, y.
SeriesEvaluation norm_line_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                  double t, std::size_t K);

/// alpha_p as a binomial series. The orientation with the smaller |r| is
/// used; if neither has |r| <= 1 the result has in_domain = false and no value.
SeriesEvaluation alpha_p_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                double p, std::size_t K);

/// K doubles from 8 until tail_bound <= tol or K reaches kMaxSeriesOrder.
SeriesEvaluation alpha_p_series_adaptive(const NormSpec& spec, const Vector& x,
                                         const Vector& y, double p, double tol = 1e-12);

/// The angular distance alpha_0 as a series in (ab - <x,y>)/(ab + <x,y>) when
/// <x,y> >= 0, and through alpha[x,y]^2 = 4 - alpha[x,-y]^2 otherwise.
SeriesEvaluation alpha_zero_series(const NormSpec& spec, const Vector& x, const Vector& y,
                                   std::size_t K);
SeriesEvaluation alpha_zero_series_adaptive(const NormSpec& spec, const Vector& x,
                                            const Vector& y, double tol = 1e-12);

/// The cosine window [lo, hi] that <x,y>/(||x|| ||y||) must lie in for the
/// alpha_p series in the given orientation; empty when (||y||/||x||)^{2p} > 2.
struct CosineWindow {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = false;
};
CosineWindow alpha_p_cosine_window(double norm_x, double norm_y, double p);

}  // namespace pangular
