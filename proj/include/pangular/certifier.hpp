#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pangular/norm.hpp"
#include "pangular/parallel.hpp"
#include "pangular/vector.hpp"

namespace pangular {

struct SearchConfig {
  std::size_t dimension = 0;  // 0: the norm's own dimension, else 2
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::size_t refine_steps = 100;  // coordinate sweeps
  double initial_step = 0.25;      // halved whenever a sweep finds no improvement
  double tolerance = 1e-8;         // absolute, on normalized witnesses
  std::size_t lambda_points = 61;  // log grid over [1e-3, 1e3]
  Execution execution = Execution::parallel;
};

enum class Verdict { consistent_with_inner_product, counterexample_found };
std::string to_string(Verdict v);

inline constexpr const char* kConsistentNote = "no counterexample at this budget, not a proof";

struct Witness {
  Vector x;
  Vector y;
  std::optional<double> p;
  std::optional<double> lambda;
  std::optional<double> scale;     // shifted criterion: the pair is (n x0, n y0) with n = scale
  std::optional<double> radicand;  // identity criterion
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
};

struct CertificateVerdict {
  std::string criterion;
  std::string norm;
  Verdict verdict = Verdict::consistent_with_inner_product;
  std::optional<Witness> witness;  // the best probe; a counterexample when found
  std::size_t trials = 0;          // objective evaluations (pairs x lambdas for grid criteria)
  double max_margin = 0.0;
  double tolerance = 0.0;
  std::string note;
};

/// alpha_p >= beta_p (p > 1), alpha_p <= beta_p (p < 1).
CertificateVerdict certify_alpha_beta(const NormSpec& spec, double p, const SearchConfig& cfg);

/// alpha_p equals the square root of the inner-product radicand.
CertificateVerdict certify_identity(const NormSpec& spec, double p, const SearchConfig& cfg);

/// || x/(1+||x||) - y/(1+||y||) || <= || x/(1+||y||) - y/(1+||x||) ||, also on n x, n y.
CertificateVerdict certify_shifted(const NormSpec& spec, const SearchConfig& cfg);

/// Equal norms imply ||x + y|| <= ||lambda x + y/lambda||.
CertificateVerdict lorch_probe(const NormSpec& spec, const SearchConfig& cfg);

/// Equal norms imply ||lambda x + y/lambda|| = ||x/lambda + lambda y||.
CertificateVerdict ficken_probe(const NormSpec& spec, const SearchConfig& cfg);

struct DualWitness {
  Witness alpha_below_beta;  // margin = beta_p - alpha_p > 0
  Witness alpha_above_beta;  // margin = alpha_p - beta_p > 0
  bool below_from_collinear = false;
  bool above_from_collinear = false;
};

/// One pair on each side of alpha_p = beta_p in a norm without inner
/// product. Collinear pairs (a, 2a) are tried before searching.
DualWitness dual_witness(const NormSpec& spec, double p, const SearchConfig& cfg);

/// Re-evaluates a recorded witness under the named criterion.
Witness replay_witness(const std::string& criterion, const NormSpec& spec, const Witness& w);

/// Names accepted by run_criterion: alpha-beta, identity, shifted, lorch, ficken.
const std::vector<std::string>& criterion_names();
CertificateVerdict run_criterion(const std::string& criterion, const NormSpec& spec, double p,
                                 const SearchConfig& cfg);

/// Log grid of lambda values over [1e-3, 1e3], always containing 1.
std::vector<double> lambda_grid(std::size_t points);

}  // namespace pangular
