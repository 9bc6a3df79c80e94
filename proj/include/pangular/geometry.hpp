#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "pangular/norm.hpp"
#include "pangular/parallel.hpp"
#include "pangular/vector.hpp"

namespace pangular {

/// Relative slack allowed in the triangle inequality.
inline constexpr double kTriangleRelTol = 1e-9;

struct AxiomResult {
  std::string name;
  bool passed = true;
  std::size_t failures = 0;
  double worst_slack = 0.0;  // relative; negative means violated
  std::optional<std::array<Vector, 3>> worst_witness;
};

struct MetricAuditReport {
  double p = 0.0;
  std::string norm;
  std::size_t dimension = 0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  AxiomResult symmetry;
  AxiomResult identity;
  AxiomResult triangle;

  bool all_pass() const { return symmetry.passed && identity.passed && triangle.passed; }
};

/// Samples random triples in X \ {0} and checks the metric axioms for
/// alpha_p. p = 0 is rejected (alpha_0[a, 2a] = 0).
MetricAuditReport metric_audit_alpha(const NormSpec& spec, double p, std::size_t samples,
                                     std::uint64_t seed, std::size_t dimension = 0,
                                     Execution ex = Execution::parallel);

/// A triple with lhs > rhs in the triangle inequality for the stated metric.
struct TriangleWitness {
  double p = 0.0;
  double parameter = 0.0;  // t (p > 1) or s (p < 1)
  Vector x;
  Vector y;
  Vector z;
  double lhs = 0.0;  // d(x, y)
  double rhs = 0.0;  // d(x, z) + d(z, y)
  double margin = 0.0;
};

/// The beta_p triangle triple at a given scan parameter: (a, -a, t a) for
/// p > 1, (2a, s a, a) for p < 1, with a a unit vector of spec.
TriangleWitness beta_triangle_triple(const NormSpec& spec, double p, double parameter,
                                     std::size_t dimension = 0);

/// Scans the parameter over 2^-1, ..., 2^-30 and returns the first triple
/// that violates the triangle inequality for beta_p. p = 1 is rejected.
TriangleWitness beta_non_metric_witness(const NormSpec& spec, double p,
                                        std::size_t dimension = 0);

struct NonequivalenceRow {
  double n = 0.0;
  double constant = 0.0;      // n^{q-p} |1-t^p| / |1-t^q|
  double kernel_ratio = 0.0;  // alpha_p / alpha_q on the embedded pair (a/n, t a/n)
};

/// Smallest M with alpha_p <= M alpha_q on the collinear pair (a/n, t a/n).
std::vector<NonequivalenceRow> nonequivalence_table(double p, double q, double t,
                                                    const std::vector<double>& n_list);

struct TranslationWitness {
  double p = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double gamma = 0.0;
  Vector x;  // lambda a
  Vector y;  // gamma a
  Vector z;  // mu a
  double shifted = 0.0;   // alpha_p[x + z, y + z]
  double original = 0.0;  // alpha_p[x, y]
  double gap = 0.0;
};

/// The collinear translation triple at explicit scalars.
TranslationWitness translation_triple(const NormSpec& spec, double p, double lambda, double mu,
                                      double gamma, std::size_t dimension = 0);

/// A triple with alpha_p[x+z, y+z] != alpha_p[x, y]; p = 1 is rejected.
TranslationWitness translation_invariance_probe(const NormSpec& spec, double p,
                                                std::size_t dimension = 0);

/// A sequence given by a closed-form index law together with the candidate
/// limit it is tested against.
struct SequenceLaw {
  std::string description;
  std::function<Vector(std::size_t)> term;
  Vector limit;
};

struct ConsistencyRow {
  std::size_t n = 0;
  double alpha_one = 0.0;  // max over n, n+1 of alpha_1[x_k, limit]
  double alpha_p = 0.0;
};

struct ConsistencyReport {
  double p = 0.0;
  std::string description;
  std::vector<ConsistencyRow> rows;
  bool converges_alpha_one = false;
  bool converges_alpha_p = false;
  bool agree() const { return converges_alpha_one == converges_alpha_p; }
};

/// Convergence verdicts of the sequence under alpha_1 and alpha_p: the
/// distance to the limit at the last checkpoint must fall below tol.
ConsistencyReport consistency_check(const NormSpec& spec, double p, const SequenceLaw& seq,
                                    const std::vector<std::size_t>& checkpoints = {},
                                    double tol = 1e-4);

struct ModulusRow {
  double index = 0.0;     // N
  double modulus = 0.0;   // sup_{m,n >= N} d(x_m, x_n), closed form
  double sampled = 0.0;   // d(x_N, x_{1000 N}) from the general kernel
};

struct SequenceExperiment {
  std::string set;          // "A = {t a : t >= 1}" or "B = {t a : 0 < t <= 1}"
  std::string sequence;     // index law
  double exponent = 0.0;    // the metric alpha_e under which it is Cauchy
  std::vector<ModulusRow> rows;
  bool cauchy = false;      // modulus strictly decreasing towards 0
  bool limit_in_set = false;
  std::string limit_note;
};

/// The Cauchy-without-limit witnesses for p > 0 > q: n a in A under alpha_q
/// and a/n in B under alpha_p.
std::pair<SequenceExperiment, SequenceExperiment> completeness_experiment(
    double p, double q, const std::vector<double>& indices = {});

}  // namespace pangular
