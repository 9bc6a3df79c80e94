#include "pangular/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/sampling.hpp"

namespace pangular {

std::string to_string(Verdict v) {
  return v == Verdict::consistent_with_inner_product ? "ConsistentWithInnerProduct"
                                                     : "CounterexampleFound";
}

std::vector<double> lambda_grid(std::size_t points) {
  if (points < 2) return {1.0};
  std::vector<double> grid;
  for (std::size_t i = 0; i < points; ++i) {
    const double e = -3.0 + 6.0 * static_cast<double>(i) / static_cast<double>(points - 1);
    grid.push_back(std::pow(10.0, e));
  }
  if (points % 2 == 1) {
    grid[points / 2] = 1.0;
  } else {
    grid.push_back(1.0);
    std::sort(grid.begin(), grid.end());
  }
  return grid;
}

namespace {

// Pairs with a coordinate-free size below this (after normalization) are
// skipped: they sit in the numerically degenerate corner of X \ {0}.
constexpr double kMinCanonicalSize = 1e-4;

enum class Side { alpha_below_beta, alpha_above_beta };

Side violating_side(double p) { return p > 1.0 ? Side::alpha_below_beta : Side::alpha_above_beta; }

// Margins evaluated on stored data. Search and replay share these, so a
// recorded witness reproduces its margin exactly.
Witness alpha_beta_margin(const NormSpec& spec, const Vector& x, const Vector& y, double p,
                          Side side) {
  Witness w;
  w.x = x;
  w.y = y;
  w.p = p;
  w.lhs = alpha_p(spec, x, y, p);
  w.rhs = beta_p(spec, x, y, p);
  w.margin = side == Side::alpha_below_beta ? w.rhs - w.lhs : w.lhs - w.rhs;
  return w;
}

Witness identity_margin(const NormSpec& spec, const Vector& x, const Vector& y, double p) {
  Witness w;
  w.x = x;
  w.y = y;
  w.p = p;
  w.lhs = alpha_p(spec, x, y, p);
  const ClosedFormRadicand r = closed_form_radicand(spec, x, y, p);
  w.radicand = r.value;
  if (r.value < -kRadicandTol * r.scale) {
    // No real right-hand side exists; measure how far alpha^2 is from it.
    w.rhs = 0.0;
    w.margin = std::sqrt(w.lhs * w.lhs - r.value);
  } else {
    w.rhs = std::sqrt(std::max(r.value, 0.0));
    w.margin = std::abs(w.lhs - w.rhs);
  }
  return w;
}

Witness shifted_margin(const NormSpec& spec, const Vector& x, const Vector& y) {
  Witness w;
  w.x = x;
  w.y = y;
  const double a = norm_eval(spec, x);
  const double b = norm_eval(spec, y);
  w.lhs = norm_eval(spec, lincomb(1.0 / (1.0 + a), x, -1.0 / (1.0 + b), y));
  w.rhs = norm_eval(spec, lincomb(1.0 / (1.0 + b), x, -1.0 / (1.0 + a), y));
  w.margin = w.lhs - w.rhs;
  return w;
}

Witness lorch_margin(const NormSpec& spec, const Vector& x, const Vector& y, double lambda) {
  Witness w;
  w.x = x;
  w.y = y;
  w.lambda = lambda;
  w.lhs = norm_eval(spec, x + y);
  w.rhs = norm_eval(spec, lincomb(lambda, x, 1.0 / lambda, y));
  w.margin = w.lhs - w.rhs;
  return w;
}

Witness ficken_margin(const NormSpec& spec, const Vector& x, const Vector& y, double lambda) {
  Witness w;
  w.x = x;
  w.y = y;
  w.lambda = lambda;
  w.lhs = norm_eval(spec, lincomb(lambda, x, 1.0 / lambda, y));
  w.rhs = norm_eval(spec, lincomb(1.0 / lambda, x, lambda, y));
  w.margin = std::abs(w.lhs - w.rhs);
  return w;
}

struct Probe {
  Witness witness;
  Vector base_x;  // the point the refinement perturbs
  Vector base_y;
};

using Evaluator = std::function<std::optional<Probe>(const Vector&, const Vector&)>;
using Sampler = std::function<std::pair<Vector, Vector>(Rng&, std::size_t)>;

struct Criterion {
  std::string name;
  Sampler sample;
  Evaluator evaluate;
  std::size_t probes_per_eval = 1;
};

std::optional<std::pair<Vector, Vector>> max_abs_normalized(const Vector& x, const Vector& y) {
  const double c = std::max(x.max_abs(), y.max_abs());
  if (!(c > 0.0) || !std::isfinite(c)) return std::nullopt;
  Vector xn = (1.0 / c) * x;
  Vector yn = (1.0 / c) * y;
  if (xn.max_abs() < kMinCanonicalSize || yn.max_abs() < kMinCanonicalSize) return std::nullopt;
  return std::make_pair(std::move(xn), std::move(yn));
}

std::optional<std::pair<Vector, Vector>> unit_normalized(const NormSpec& spec, const Vector& x,
                                                         const Vector& y) {
  const double a = norm_eval(spec, x);
  const double b = norm_eval(spec, y);
  if (!(a > kMinCanonicalSize) || !(b > kMinCanonicalSize)) return std::nullopt;
  return std::make_pair((1.0 / a) * x, (1.0 / b) * y);
}

Sampler sphere_and_radius(const NormSpec& spec) {
  return [spec](Rng& rng, std::size_t n) {
    Vector x = unit_sphere_sample(spec, rng, n);
    Vector y = unit_sphere_sample(spec, rng, n);
    y *= log_uniform(rng, 1e-2, 1e2);
    return std::make_pair(std::move(x), std::move(y));
  };
}

Sampler two_radii(const NormSpec& spec) {
  return [spec](Rng& rng, std::size_t n) {
    Vector x = unit_sphere_sample(spec, rng, n);
    x *= log_uniform(rng, 1e-2, 1e2);
    Vector y = unit_sphere_sample(spec, rng, n);
    y *= log_uniform(rng, 1e-2, 1e2);
    return std::make_pair(std::move(x), std::move(y));
  };
}

Sampler unit_pair(const NormSpec& spec) {
  return [spec](Rng& rng, std::size_t n) {
    Vector x = unit_sphere_sample(spec, rng, n);
    Vector y = unit_sphere_sample(spec, rng, n);
    return std::make_pair(std::move(x), std::move(y));
  };
}

Criterion alpha_beta_criterion(const NormSpec& spec, double p, Side side, std::string name) {
  Criterion c;
  c.name = std::move(name);
  c.sample = sphere_and_radius(spec);
  c.evaluate = [spec, p, side](const Vector& x, const Vector& y) -> std::optional<Probe> {
    auto pair = max_abs_normalized(x, y);
    if (!pair) return std::nullopt;
    return Probe{alpha_beta_margin(spec, pair->first, pair->second, p, side), pair->first,
                 pair->second};
  };
  return c;
}

Criterion identity_criterion(const NormSpec& spec, double p) {
  Criterion c;
  c.name = "identity";
  c.sample = sphere_and_radius(spec);
  c.evaluate = [spec, p](const Vector& x, const Vector& y) -> std::optional<Probe> {
    auto pair = max_abs_normalized(x, y);
    if (!pair) return std::nullopt;
    return Probe{identity_margin(spec, pair->first, pair->second, p), pair->first,
                 pair->second};
  };
  return c;
}

constexpr double kShiftScales[] = {1.0, 10.0, 100.0, 1000.0};

Criterion shifted_criterion(const NormSpec& spec) {
  Criterion c;
  c.name = "shifted";
  c.sample = two_radii(spec);
  c.probes_per_eval = std::size(kShiftScales);
  c.evaluate = [spec](const Vector& x, const Vector& y) -> std::optional<Probe> {
    if (!x.is_finite() || !y.is_finite()) return std::nullopt;
    std::optional<Probe> best;
    for (double n : kShiftScales) {
      Witness w = shifted_margin(spec, n * x, n * y);
      w.scale = n;
      if (!best || w.margin > best->witness.margin) best = Probe{std::move(w), x, y};
    }
    return best;
  };
  return c;
}

template <class Margin>
Criterion grid_criterion(const NormSpec& spec, std::string name, std::size_t points,
                         Margin margin) {
  Criterion c;
  c.name = std::move(name);
  c.sample = unit_pair(spec);
  const std::vector<double> grid = lambda_grid(points);
  c.probes_per_eval = grid.size();
  c.evaluate = [spec, grid, margin](const Vector& x, const Vector& y) -> std::optional<Probe> {
    auto pair = unit_normalized(spec, x, y);
    if (!pair) return std::nullopt;
    std::optional<Probe> best;
    for (double lambda : grid) {
      Witness w = margin(spec, pair->first, pair->second, lambda);
      if (!best || w.margin > best->witness.margin) best = Probe{std::move(w), x, y};
    }
    return best;
  };
  return c;
}

std::optional<Probe> safe_evaluate(const Criterion& c, const Vector& x, const Vector& y) {
  try {
    auto probe = c.evaluate(x, y);
    if (probe && !std::isfinite(probe->witness.margin)) return std::nullopt;
    return probe;
  } catch (const Error&) {
    // Perturbations can reach zero or out-of-range vectors; such points are
    // simply not candidates.
    return std::nullopt;
  }
}

struct SearchOutcome {
  std::optional<Probe> best;
  std::size_t trials = 0;
};

SearchOutcome search(const Criterion& c, const NormSpec& spec, const SearchConfig& cfg) {
  const std::size_t n = resolve_dimension(spec, cfg.dimension);
  std::vector<std::optional<Probe>> probes(cfg.samples);
  for_each_index(cfg.execution, cfg.samples, [&](std::size_t i) {
    Rng rng = sample_rng(cfg.seed, i);
    auto [x, y] = c.sample(rng, n);
    probes[i] = safe_evaluate(c, x, y);
  });

  SearchOutcome out;
  out.trials = cfg.samples * c.probes_per_eval;
  for (auto& p : probes) {
    if (p && (!out.best || p->witness.margin > out.best->witness.margin)) out.best = std::move(p);
  }
  if (!out.best) return out;

  // Greedy coordinate refinement of the best sample.
  Probe best = *out.best;
  double step = cfg.initial_step;
  for (std::size_t sweep = 0; sweep < cfg.refine_steps; ++sweep) {
    bool improved = false;
    const double size = std::max(best.base_x.max_abs(), best.base_y.max_abs());
    for (std::size_t j = 0; j < 2 * n; ++j) {
      for (double sign : {1.0, -1.0}) {
        Vector x = best.base_x;
        Vector y = best.base_y;
        double& coord = j < n ? x[j] : y[j - n];
        coord += sign * step * size;
        auto candidate = safe_evaluate(c, x, y);
        out.trials += c.probes_per_eval;
        if (candidate && candidate->witness.margin > best.witness.margin) {
          best = std::move(*candidate);
          improved = true;
          break;
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  out.best = std::move(best);
  return out;
}

CertificateVerdict finish(const Criterion& c, const NormSpec& spec, const SearchConfig& cfg,
                          SearchOutcome outcome) {
  CertificateVerdict v;
  v.criterion = c.name;
  v.norm = spec.name();
  v.trials = outcome.trials;
  v.tolerance = cfg.tolerance;
  if (outcome.best) {
    v.witness = std::move(outcome.best->witness);
    v.max_margin = v.witness->margin;
  } else {
    v.max_margin = -std::numeric_limits<double>::infinity();
  }
  if (v.witness && v.max_margin > cfg.tolerance) {
    v.verdict = Verdict::counterexample_found;
    v.note = "witness violates the condition by more than the tolerance";
  } else {
    v.verdict = Verdict::consistent_with_inner_product;
    v.note = kConsistentNote;
  }
  return v;
}

void require_p_not_one(double p, const char* what) {
  if (!std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "p must be finite");
  if (p == 1.0) {
    throw Error(ErrorCode::invalid_argument, std::string(what) + " is vacuous at p = 1");
  }
}

void require_budget(const SearchConfig& cfg) {
  if (cfg.samples == 0) throw Error(ErrorCode::invalid_argument, "sample count must be positive");
  if (!(cfg.tolerance >= 0.0)) throw Error(ErrorCode::invalid_argument, "tolerance must be >= 0");
}

Vector unit_axis(const NormSpec& spec, std::size_t dimension) {
  Vector a(resolve_dimension(spec, dimension), 0.0);
  a[0] = 1.0;
  const double len = norm_eval(spec, a);
  return (1.0 / len) * std::move(a);
}

}  // namespace

CertificateVerdict certify_alpha_beta(const NormSpec& spec, double p, const SearchConfig& cfg) {
  require_p_not_one(p, "the alpha/beta criterion");
  require_budget(cfg);
  const Criterion c = alpha_beta_criterion(spec, p, violating_side(p), "alpha-beta");
  return finish(c, spec, cfg, search(c, spec, cfg));
}

CertificateVerdict certify_identity(const NormSpec& spec, double p, const SearchConfig& cfg) {
  require_p_not_one(p, "the closed-form identity criterion");
  require_budget(cfg);
  const Criterion c = identity_criterion(spec, p);
  return finish(c, spec, cfg, search(c, spec, cfg));
}

CertificateVerdict certify_shifted(const NormSpec& spec, const SearchConfig& cfg) {
  require_budget(cfg);
  const Criterion c = shifted_criterion(spec);
  return finish(c, spec, cfg, search(c, spec, cfg));
}

CertificateVerdict lorch_probe(const NormSpec& spec, const SearchConfig& cfg) {
  require_budget(cfg);
  const Criterion c = grid_criterion(spec, "lorch", cfg.lambda_points, lorch_margin);
  return finish(c, spec, cfg, search(c, spec, cfg));
}

CertificateVerdict ficken_probe(const NormSpec& spec, const SearchConfig& cfg) {
  require_budget(cfg);
  const Criterion c = grid_criterion(spec, "ficken", cfg.lambda_points, ficken_margin);
  return finish(c, spec, cfg, search(c, spec, cfg));
}

DualWitness dual_witness(const NormSpec& spec, double p, const SearchConfig& cfg) {
  if (spec.has_inner_product()) {
    throw Error(ErrorCode::invalid_argument,
                "dual witnesses exist only for norms without an inner product");
  }
  require_p_not_one(p, "the dual witness");
  require_budget(cfg);
  const Vector a = unit_axis(spec, cfg.dimension);
  const Vector a2 = 2.0 * a;

  DualWitness d;
  auto find = [&](Side side, bool& from_collinear) {
    Witness collinear = alpha_beta_margin(spec, a, a2, p, side);
    if (collinear.margin > cfg.tolerance) {
      from_collinear = true;
      return collinear;
    }
    const Criterion c = alpha_beta_criterion(spec, p, side, "dual");
    SearchOutcome out = search(c, spec, cfg);
    if (!out.best || !(out.best->witness.margin > cfg.tolerance)) {
      throw Error(ErrorCode::search_exhausted,
                  "no dual witness found within the search budget (p = " + std::to_string(p) +
                      ")");
    }
    return out.best->witness;
  };
  d.alpha_below_beta = find(Side::alpha_below_beta, d.below_from_collinear);
  d.alpha_above_beta = find(Side::alpha_above_beta, d.above_from_collinear);
  return d;
}

Witness replay_witness(const std::string& criterion, const NormSpec& spec, const Witness& w) {
  auto need = [&](const std::optional<double>& v, const char* what) {
    if (!v) throw Error(ErrorCode::invalid_argument, criterion + " witness lacks " + what);
    return *v;
  };
  Witness r;
  if (criterion == "alpha-beta") {
    const double p = need(w.p, "p");
    r = alpha_beta_margin(spec, w.x, w.y, p, violating_side(p));
  } else if (criterion == "identity") {
    r = identity_margin(spec, w.x, w.y, need(w.p, "p"));
  } else if (criterion == "shifted") {
    r = shifted_margin(spec, w.x, w.y);
    r.scale = w.scale;
  } else if (criterion == "lorch") {
    r = lorch_margin(spec, w.x, w.y, need(w.lambda, "lambda"));
  } else if (criterion == "ficken") {
    r = ficken_margin(spec, w.x, w.y, need(w.lambda, "lambda"));
  } else {
    throw Error(ErrorCode::invalid_argument, "unknown criterion " + criterion);
  }
  return r;
}

const std::vector<std::string>& criterion_names() {
  static const std::vector<std::string> names{"alpha-beta", "identity", "shifted", "lorch",
                                              "ficken"};
  return names;
}

CertificateVerdict run_criterion(const std::string& criterion, const NormSpec& spec, double p,
                                 const SearchConfig& cfg) {
  if (criterion == "alpha-beta") return certify_alpha_beta(spec, p, cfg);
  if (criterion == "identity") return certify_identity(spec, p, cfg);
  if (criterion == "shifted") return certify_shifted(spec, cfg);
  if (criterion == "lorch") return lorch_probe(spec, cfg);
  if (criterion == "ficken") return ficken_probe(spec, cfg);
  throw Error(ErrorCode::invalid_argument, "unknown criterion " + criterion);
}

}  // namespace pangular
