#include "pangular/norm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "pangular/error.hpp"
#include "pangular/line_search.hpp"

namespace pangular {

namespace {

void validate_exponent(double r) {
  if (std::isnan(r) || r < 1.0) {
    throw Error(ErrorCode::invalid_argument, "norm exponent must lie in [1, inf]");
  }
}

// ||(s_i v_i)||_r with s = nullptr meaning unit weights. Scaled by the
// largest magnitude so that neither tiny nor huge entries under/overflow.
double lr_norm(std::span<const double> v, const double* s, double r) {
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    m = std::max(m, std::abs(s ? s[i] * v[i] : v[i]));
  }
  if (m == 0.0 || std::isinf(r)) return m;
  double acc = 0.0;
  if (r == 1.0) {
    for (std::size_t i = 0; i < v.size(); ++i) acc += std::abs(s ? s[i] * v[i] : v[i]);
    return acc;
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double e = std::abs(s ? s[i] * v[i] : v[i]) / m;
    acc += (r == 2.0) ? e * e : std::pow(e, r);
  }
  return m * ((r == 2.0) ? std::sqrt(acc) : std::pow(acc, 1.0 / r));
}

double quadratic_form(const GramEuclidean& g, const Vector& u, const Vector& v) {
  double acc = 0.0;
  for (std::size_t i = 0; i < g.n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < g.n; ++j) row += g.at(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

void check_vector(const NormSpec& spec, const Vector& v) {
  if (!spec.accepts(v)) {
    throw Error(ErrorCode::dimension_mismatch,
                "vector of dimension " + std::to_string(v.size()) +
                    " does not match norm " + spec.name());
  }
  if (!v.is_finite()) {
    throw Error(ErrorCode::non_finite, "vector has a non-finite entry");
  }
}

}  // namespace

NormSpec NormSpec::lp(double r) {
  validate_exponent(r);
  return NormSpec(LpNorm{r});
}

NormSpec NormSpec::weighted_lp(std::vector<double> weights, double r) {
  validate_exponent(r);
  if (weights.empty()) {
    throw Error(ErrorCode::invalid_argument, "weighted norm needs at least one weight");
  }
  for (double w : weights) {
    if (!(w > 0.0) || !std::isfinite(w)) {
      throw Error(ErrorCode::invalid_argument, "weights must be positive and finite");
    }
  }
  return NormSpec(WeightedLp{std::move(weights), r});
}

NormSpec NormSpec::gram(std::size_t n, std::vector<double> g) {
  if (n == 0 || g.size() != n * n) {
    throw Error(ErrorCode::invalid_argument, "Gram matrix must be a nonempty n x n array");
  }
  double scale = 0.0;
  for (double e : g) {
    if (!std::isfinite(e)) throw Error(ErrorCode::non_finite, "Gram matrix has a non-finite entry");
    scale = std::max(scale, std::abs(e));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(g[i * n + j] - g[j * n + i]) > 1e-12 * scale) {
        throw Error(ErrorCode::invalid_argument, "Gram matrix is not symmetric");
      }
    }
  }
  // Cholesky: positive definite iff every pivot is positive.
  std::vector<double> l(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    double d = g[j * n + j];
    for (std::size_t k = 0; k < j; ++k) d -= l[j * n + k] * l[j * n + k];
    if (!(d > 1e-14 * scale)) {
      throw Error(ErrorCode::invalid_argument, "Gram matrix is not positive definite");
    }
    l[j * n + j] = std::sqrt(d);
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = g[i * n + j];
      for (std::size_t k = 0; k < j; ++k) s -= l[i * n + k] * l[j * n + k];
      l[i * n + j] = s / l[j * n + j];
    }
  }
  return NormSpec(GramEuclidean{n, std::move(g)});
}

NormSpec NormSpec::identity_gram(std::size_t n) {
  std::vector<double> g(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) g[i * n + i] = 1.0;
  return gram(n, std::move(g));
}

std::optional<std::size_t> NormSpec::dimension() const noexcept {
  if (const auto* w = std::get_if<WeightedLp>(&v_)) return w->weights.size();
  if (const auto* g = std::get_if<GramEuclidean>(&v_)) return g->n;
  return std::nullopt;
}

bool NormSpec::has_inner_product() const noexcept {
  return std::holds_alternative<GramEuclidean>(v_);
}

bool NormSpec::accepts(const Vector& v) const noexcept {
  if (v.empty()) return false;
  const auto n = dimension();
  return !n || *n == v.size();
}

std::string NormSpec::name() const {
  auto exponent = [](double r) {
    if (std::isinf(r)) return std::string("inf");
    std::ostringstream os;
    os << r;
    return os.str();
  };
  if (const auto* l = std::get_if<LpNorm>(&v_)) return "l" + exponent(l->r);
  if (const auto* w = std::get_if<WeightedLp>(&v_)) {
    return "weighted_l" + exponent(w->r) + "(" + std::to_string(w->weights.size()) + ")";
  }
  return "gram(" + std::to_string(std::get<GramEuclidean>(v_).n) + ")";
}

double norm_eval(const NormSpec& spec, const Vector& v) {
  check_vector(spec, v);
  const auto& var = spec.variant();
  if (const auto* l = std::get_if<LpNorm>(&var)) return lr_norm(v.coords(), nullptr, l->r);
  if (const auto* w = std::get_if<WeightedLp>(&var)) {
    return lr_norm(v.coords(), w->weights.data(), w->r);
  }
  const auto& g = std::get<GramEuclidean>(var);
  return std::sqrt(std::max(0.0, quadratic_form(g, v, v)));
}

double inner_product(const NormSpec& spec, const Vector& u, const Vector& v) {
  const auto* g = std::get_if<GramEuclidean>(&spec.variant());
  if (!g) {
    throw Error(ErrorCode::no_inner_product, "norm " + spec.name() + " has no inner product");
  }
  check_vector(spec, u);
  check_vector(spec, v);
  return quadratic_form(*g, u, v);
}

namespace detail {

LineMinimum min_over_line_numeric(const NormSpec& spec, const Vector& a, const Vector& b) {
  const double nb = norm_eval(spec, b);
  if (nb == 0.0) throw Error(ErrorCode::zero_vector, "line direction b must be nonzero");
  const double na = norm_eval(spec, a);
  if (na == 0.0) return {0.0, 0.0};
  // ||a + t b|| >= |t| ||b|| - ||a|| > ||a|| = f(0) once |t| > 2||a||/||b||.
  const double reach = 2.0 * na / nb;
  auto f = [&](double t) { return norm_eval(spec, lincomb(1.0, a, t, b)); };
  const auto m = golden_section_minimize(f, -reach, reach, 1e-13 * reach);
  if (na <= m.value) return {0.0, na};
  return {m.x, m.value};
}

}  // namespace detail

LineMinimum min_over_line(const NormSpec& spec, const Vector& a, const Vector& b) {
  if (!spec.has_inner_product()) return detail::min_over_line_numeric(spec, a, b);
  const double bb = inner_product(spec, b, b);
  if (bb == 0.0) throw Error(ErrorCode::zero_vector, "line direction b must be nonzero");
  const double aa = inner_product(spec, a, a);
  const double ab = inner_product(spec, a, b);
  const double t = -ab / bb;
  const double disc = std::max(0.0, aa * bb - ab * ab);
  return {t, std::sqrt(disc) / std::sqrt(bb)};
}

}  // namespace pangular
