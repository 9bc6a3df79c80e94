#include "pangular/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/sampling.hpp"

namespace pangular {

namespace {

Vector unit_axis(const NormSpec& spec, std::size_t dimension) {
  Vector a(resolve_dimension(spec, dimension), 0.0);
  a[0] = 1.0;
  const double len = norm_eval(spec, a);
  return (1.0 / len) * std::move(a);
}

struct TripleCheck {
  double symmetry_slack = 0.0;
  bool identity_ok = true;
  double triangle_slack = 0.0;
  std::array<Vector, 3> triangle_order;
};

TripleCheck check_triple(const NormSpec& spec, double p, const Vector& x, const Vector& y,
                         const Vector& z) {
  TripleCheck c;
  const double xy = alpha_p(spec, x, y, p);
  const double yx = alpha_p(spec, y, x, p);
  const double yz = alpha_p(spec, y, z, p);
  const double xz = alpha_p(spec, x, z, p);
  c.symmetry_slack = xy == yx ? 0.0 : -std::abs(xy - yx) / std::max(xy, yx);
  c.identity_ok = alpha_p(spec, x, x, p) == 0.0 && (x == y || xy > 0.0);

  // Each side against the sum of the other two.
  const std::array<std::array<double, 3>, 3> sides{{{xz, xy, yz}, {xy, xz, yz}, {yz, xy, xz}}};
  const std::array<std::array<const Vector*, 3>, 3> orders{
      {{&x, &y, &z}, {&x, &z, &y}, {&y, &x, &z}}};
  c.triangle_slack = 1.0;
  for (std::size_t k = 0; k < 3; ++k) {
    const double longest = sides[k][0];
    const double detour = sides[k][1] + sides[k][2];
    const double scale = std::max(longest, detour);
    const double slack = scale > 0.0 ? (detour - longest) / scale : 0.0;
    if (slack < c.triangle_slack) {
      c.triangle_slack = slack;
      c.triangle_order = {*orders[k][0], *orders[k][1], *orders[k][2]};
    }
  }
  return c;
}

}  // namespace

MetricAuditReport metric_audit_alpha(const NormSpec& spec, double p, std::size_t samples,
                                     std::uint64_t seed, std::size_t dimension, Execution ex) {
  if (p == 0.0) {
    throw Error(ErrorCode::invalid_argument,
                "alpha_0 is not a metric on X \\ {0}: alpha_0[a, 2a] = 0 with a != 2a");
  }
  if (!std::isfinite(p)) throw Error(ErrorCode::invalid_argument, "p must be finite");
  const std::size_t n = resolve_dimension(spec, dimension);

  std::vector<TripleCheck> checks(samples);
  std::vector<std::array<Vector, 3>> triples(samples);
  for_each_index(ex, samples, [&](std::size_t i) {
    Rng rng = sample_rng(seed, i);
    Vector x = nonzero_gaussian_vector(spec, rng, n);
    Vector y = nonzero_gaussian_vector(spec, rng, n);
    Vector z = nonzero_gaussian_vector(spec, rng, n);
    checks[i] = check_triple(spec, p, x, y, z);
    triples[i] = {std::move(x), std::move(y), std::move(z)};
  });

  MetricAuditReport r;
  r.p = p;
  r.norm = spec.name();
  r.dimension = n;
  r.samples = samples;
  r.seed = seed;
  r.symmetry.name = "symmetry";
  r.identity.name = "identity_of_indiscernibles";
  r.triangle.name = "triangle";
  r.triangle.worst_slack = samples ? 1.0 : 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const TripleCheck& c = checks[i];
    if (c.symmetry_slack < 0.0) {
      ++r.symmetry.failures;
      if (c.symmetry_slack < r.symmetry.worst_slack) {
        r.symmetry.worst_slack = c.symmetry_slack;
        r.symmetry.worst_witness = triples[i];
      }
    }
    if (!c.identity_ok) {
      ++r.identity.failures;
      if (!r.identity.worst_witness) {
        r.identity.worst_slack = -1.0;
        r.identity.worst_witness = triples[i];
      }
    }
    if (c.triangle_slack < -kTriangleRelTol) ++r.triangle.failures;
    if (c.triangle_slack < r.triangle.worst_slack) {
      r.triangle.worst_slack = c.triangle_slack;
      r.triangle.worst_witness = c.triangle_order;
    }
  }
  r.symmetry.passed = r.symmetry.failures == 0;
  r.identity.passed = r.identity.failures == 0;
  r.triangle.passed = r.triangle.failures == 0;
  return r;
}

TriangleWitness beta_triangle_triple(const NormSpec& spec, double p, double parameter,
                                     std::size_t dimension) {
  if (p == 1.0) {
    throw Error(ErrorCode::invalid_argument, "beta_1 is the norm distance, which is a metric");
  }
  if (!(parameter > 0.0)) throw Error(ErrorCode::invalid_argument, "scan parameter must be > 0");
  const Vector a = unit_axis(spec, dimension);
  TriangleWitness w;
  w.p = p;
  w.parameter = parameter;
  if (p > 1.0) {
    w.x = a;
    w.y = -a;
    w.z = parameter * a;
  } else {
    w.x = 2.0 * a;
    w.y = parameter * a;
    w.z = a;
  }
  w.lhs = beta_p(spec, w.x, w.y, p);
  w.rhs = beta_p(spec, w.x, w.z, p) + beta_p(spec, w.z, w.y, p);
  w.margin = w.lhs - w.rhs;
  return w;
}

TriangleWitness beta_non_metric_witness(const NormSpec& spec, double p, std::size_t dimension) {
  for (int k = 1; k <= 30; ++k) {
    TriangleWitness w = beta_triangle_triple(spec, p, std::ldexp(1.0, -k), dimension);
    if (w.margin > 1e-12 * w.lhs) return w;
  }
  throw Error(ErrorCode::search_exhausted,
              "no triangle violation for beta_p down to parameter 2^-30 (p = " +
                  std::to_string(p) + ")");
}

std::vector<NonequivalenceRow> nonequivalence_table(double p, double q, double t,
                                                    const std::vector<double>& n_list) {
  if (p == 0.0 || q == 0.0 || p == q) {
    throw Error(ErrorCode::invalid_argument, "p and q must be distinct and nonzero");
  }
  if (!(t > 0.0) || t == 1.0) throw Error(ErrorCode::invalid_argument, "t must be > 0 and != 1");
  if (n_list.empty()) throw Error(ErrorCode::invalid_argument, "n list is empty");
  const NormSpec l2 = NormSpec::l2();
  const Vector a{1.0, 0.0};
  std::vector<NonequivalenceRow> rows;
  for (double n : n_list) {
    if (!(n > 0.0)) throw Error(ErrorCode::invalid_argument, "n must be positive");
    NonequivalenceRow row;
    row.n = n;
    row.constant = std::pow(n, q - p) * std::abs(1.0 - std::pow(t, p)) /
                   std::abs(1.0 - std::pow(t, q));
    const Vector x = (1.0 / n) * a;
    const Vector y = (t / n) * a;
    row.kernel_ratio = alpha_p(l2, x, y, p) / alpha_p(l2, x, y, q);
    rows.push_back(row);
  }
  return rows;
}

TranslationWitness translation_triple(const NormSpec& spec, double p, double lambda, double mu,
                                      double gamma, std::size_t dimension) {
  const Vector a = unit_axis(spec, dimension);
  TranslationWitness w;
  w.p = p;
  w.lambda = lambda;
  w.mu = mu;
  w.gamma = gamma;
  w.x = lambda * a;
  w.y = gamma * a;
  w.z = mu * a;
  w.shifted = alpha_p(spec, w.x + w.z, w.y + w.z, p);
  w.original = alpha_p(spec, w.x, w.y, p);
  w.gap = std::abs(w.shifted - w.original);
  return w;
}

TranslationWitness translation_invariance_probe(const NormSpec& spec, double p,
                                                std::size_t dimension) {
  if (p == 1.0) {
    throw Error(ErrorCode::invalid_argument, "alpha_1 is the norm distance: translation invariant");
  }
  if (p == 0.0) return translation_triple(spec, p, 1.0, -2.0, -1.0, dimension);
  for (int k = 1; k <= 30; ++k) {
    const double gamma = std::ldexp(1.0, p > 0.0 ? -k : k);
    TranslationWitness w = translation_triple(spec, p, 1.0, 1.0, gamma, dimension);
    if (w.gap > 1e-6) return w;
  }
  throw Error(ErrorCode::search_exhausted, "no translation gap found for p = " + std::to_string(p));
}

ConsistencyReport consistency_check(const NormSpec& spec, double p, const SequenceLaw& seq,
                                    const std::vector<std::size_t>& checkpoints, double tol) {
  if (p == 0.0) throw Error(ErrorCode::invalid_argument, "p must be nonzero");
  if (seq.limit.is_zero()) {
    throw Error(ErrorCode::invalid_argument, "the limit candidate must lie in X \\ {0}");
  }
  const std::vector<std::size_t> marks =
      checkpoints.empty() ? std::vector<std::size_t>{10, 100, 1000, 10000, 100000, 1000000}
                          : checkpoints;
  ConsistencyReport r;
  r.p = p;
  r.description = seq.description;
  for (std::size_t n : marks) {
    ConsistencyRow row;
    row.n = n;
    for (std::size_t k : {n, n + 1}) {
      const Vector xk = seq.term(k);
      row.alpha_one = std::max(row.alpha_one, alpha_p(spec, xk, seq.limit, 1.0));
      row.alpha_p = std::max(row.alpha_p, alpha_p(spec, xk, seq.limit, p));
    }
    r.rows.push_back(row);
  }
  r.converges_alpha_one = r.rows.back().alpha_one <= tol;
  r.converges_alpha_p = r.rows.back().alpha_p <= tol;
  return r;
}

namespace {

SequenceExperiment run_sequence(std::string set, std::string law, double exponent,
                                const std::vector<double>& indices, bool grows) {
  const NormSpec l2 = NormSpec::l2();
  const Vector a{1.0, 0.0};
  SequenceExperiment e;
  e.set = std::move(set);
  e.sequence = std::move(law);
  e.exponent = exponent;
  e.cauchy = true;
  for (double n : indices) {
    if (!(n >= 1.0)) throw Error(ErrorCode::invalid_argument, "indices must be >= 1");
    ModulusRow row;
    row.index = n;
    // The terms are collinear, so alpha_e[x_m, x_n] = |m^s - n^s| with s the
    // signed power of the index law; its supremum over m, n >= N is N^s.
    const double s = grows ? exponent : -exponent;
    row.modulus = std::pow(n, s);
    const double far = 1000.0 * n;
    const Vector xn = (grows ? n : 1.0 / n) * a;
    const Vector xf = (grows ? far : 1.0 / far) * a;
    row.sampled = alpha_p(l2, xn, xf, exponent);
    if (!e.rows.empty() && !(row.modulus < e.rows.back().modulus)) e.cauchy = false;
    e.rows.push_back(row);
  }
  return e;
}

}  // namespace

std::pair<SequenceExperiment, SequenceExperiment> completeness_experiment(
    double p, double q, const std::vector<double>& indices) {
  if (!(p > 0.0) || !(q < 0.0)) {
    throw Error(ErrorCode::invalid_argument, "the completeness experiment needs p > 0 > q");
  }
  const std::vector<double> marks =
      indices.empty() ? std::vector<double>{1, 10, 100, 1000, 1e4, 1e5, 1e6} : indices;
  SequenceExperiment a = run_sequence("A = {t a : t >= 1}", "x_n = n a", q, marks, true);
  a.limit_in_set = false;
  a.limit_note =
      "a limit x in A would need ||x||^(q-1) x = lim n^q a = 0, impossible for x != 0";
  SequenceExperiment b = run_sequence("B = {t a : 0 < t <= 1}", "x_n = a / n", p, marks, false);
  b.limit_in_set = false;
  b.limit_note = "x_n -> 0 in norm, and 0 is not in B";
  return {std::move(a), std::move(b)};
}

}  // namespace pangular
