#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pangular/vector.hpp"

namespace pangular {

/// Sentinel exponent for the maximum norm.
inline constexpr double kInfinityExponent = std::numeric_limits<double>::infinity();

/// Default relative tolerance for floating-point comparisons.
inline constexpr double kDefaultRelTol = 1e-12;

struct LpNorm {
  double r = 2.0;  // in [1, inf]
};

struct WeightedLp {
  std::vector<double> weights;  // positive, one per coordinate
  double r = 2.0;
};

/// Row-major symmetric positive-definite matrix G; ||v||^2 = v^T G v.
struct GramEuclidean {
  std::size_t n = 0;
  std::vector<double> g;

  double at(std::size_t i, std::size_t j) const { return g[i * n + j]; }
};

/// A concrete norm on R^n. Construct through the validating factories.
class NormSpec {
 public:
  using Variant = std::variant<LpNorm, WeightedLp, GramEuclidean>;

  static NormSpec lp(double r);
  static NormSpec l1() { return lp(1.0); }
  static NormSpec l2() { return lp(2.0); }
  static NormSpec linf() { return lp(kInfinityExponent); }
  static NormSpec weighted_lp(std::vector<double> weights, double r);
  /// Throws unless G is square, symmetric and positive definite.
  static NormSpec gram(std::size_t n, std::vector<double> row_major);
  static NormSpec identity_gram(std::size_t n);

  const Variant& variant() const noexcept { return v_; }

  /// Fixed dimension for weighted and Gram norms; plain l^r accepts any n.
  std::optional<std::size_t> dimension() const noexcept;
  bool has_inner_product() const noexcept;
  bool accepts(const Vector& v) const noexcept;

  /// Short human-readable name, e.g. "l1", "linf", "gram(3)".
  std::string name() const;

 private:
  explicit NormSpec(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// ||v|| under `spec`. Throws on dimension mismatch or non-finite entries.
double norm_eval(const NormSpec& spec, const Vector& v);

/// <u, v> = u^T G v. Throws ErrorCode::no_inner_product unless spec is Gram.
double inner_product(const NormSpec& spec, const Vector& u, const Vector& v);

struct LineMinimum {
  double t_star = 0.0;
  double value = 0.0;
};

/// argmin over real t of ||a + t b||. Closed form for Gram norms, golden
/// section over the convex map otherwise. b must be nonzero.
LineMinimum min_over_line(const NormSpec& spec, const Vector& a, const Vector& b);

namespace detail {
/// The golden-section route, exposed so tests can compare it with the
/// closed form on inner-product norms.
LineMinimum min_over_line_numeric(const NormSpec& spec, const Vector& a, const Vector& b);
}  // namespace detail

}  // namespace pangular
