#include "pangular/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "pangular/bounds.hpp"
#include "pangular/certifier.hpp"
#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/geometry.hpp"
#include "pangular/sampling.hpp"
#include "pangular/series.hpp"

namespace pangular {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

std::size_t random_dimension(Rng& rng) {
  return static_cast<std::size_t>(std::uniform_int_distribution<int>(2, 5)(rng));
}

// Each check derives its own stream so they can be run independently.
std::uint64_t stream_seed(const AcceptanceOptions& o, std::uint64_t id) {
  return splitmix64(o.seed ^ (id * 0x100000001b3ULL));
}

double rel_gap(double a, double b) {
  const double s = std::max(std::abs(a), std::abs(b));
  return s > 0.0 ? std::abs(a - b) / s : 0.0;
}

}  // namespace

CriterionResult check_kernel_identities(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  constexpr std::size_t kSamples = 10000;
  const std::uint64_t seed = stream_seed(opts, 1);
  std::vector<double> rel(kSamples);
  for_each_index(opts.execution, kSamples, [&](std::size_t i) {
    Rng rng = sample_rng(seed, i);
    const std::size_t n = random_dimension(rng);
    const NormSpec spec = random_norm(rng, n);
    const Vector x = nonzero_gaussian_vector(spec, rng, n);
    const Vector y = nonzero_gaussian_vector(spec, rng, n);
    const double p = uniform(rng, -3.0, 3.0);
    const double beta = beta_p(spec, x, y, p);
    const double other = std::pow(norm_eval(spec, x), p - 1.0) *
                         std::pow(norm_eval(spec, y), p - 1.0) * alpha_p(spec, x, y, 2.0 - p);
    const double scale = std::max(beta, other);
    rel[i] = scale > 0.0 ? relation_pp_residual(spec, x, y, p) / scale : 0.0;
  });
  const double worst = *std::max_element(rel.begin(), rel.end());
  CriterionResult r;
  r.id = 1;
  r.name = "kernel identities";
  r.seconds = seconds_since(t0);
  r.passed = worst <= 1e-12 && r.seconds < 5.0;
  r.detail = "max relative skew-relation residual " + sci(worst) + " over " +
             std::to_string(kSamples) + " samples (<= 1e-12), " + sci(r.seconds) + " s (< 5 s)";
  r.metrics = {{"samples", kSamples}, {"max_rel_residual", worst}};
  return r;
}

CriterionResult check_closed_form(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  constexpr std::size_t kSamples = 10000;
  const std::uint64_t seed = stream_seed(opts, 2);
  std::vector<double> rel(kSamples);
  for_each_index(opts.execution, kSamples, [&](std::size_t i) {
    Rng rng = sample_rng(seed, i);
    const std::size_t n = random_dimension(rng);
    const NormSpec spec = random_gram(rng, n);
    const Vector x = nonzero_gaussian_vector(spec, rng, n);
    const Vector y = nonzero_gaussian_vector(spec, rng, n);
    const double p = uniform(rng, -3.0, 3.0);
    rel[i] = rel_gap(alpha_p(spec, x, y, p), alpha_p_closed_form_ips(spec, x, y, p));
  });
  const double worst = *std::max_element(rel.begin(), rel.end());
  const NormSpec euclid = NormSpec::identity_gram(2);
  const double reg = alpha_p_closed_form_ips(euclid, {3.0, 0.0}, {0.0, 4.0}, 2.0);
  const double reg_err = std::abs(reg - std::sqrt(337.0)) / std::sqrt(337.0);
  CriterionResult r;
  r.id = 2;
  r.name = "closed-form equivalence";
  r.seconds = seconds_since(t0);
  r.passed = worst <= 1e-10 && reg_err <= 1e-12;
  r.detail = "max relative gap " + sci(worst) + " over " + std::to_string(kSamples) +
             " Gram pairs (<= 1e-10); sqrt(337) regression error " + sci(reg_err);
  r.metrics = {{"samples", kSamples}, {"max_rel_gap", worst}, {"regression_rel_err", reg_err}};
  return r;
}

CriterionResult check_bound_sandwich(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  constexpr std::size_t kSamples = 10000;
  struct Row {
    double worst_slack = std::numeric_limits<double>::infinity();
    bool refinement = true;
  };
  CriterionResult r;
  r.id = 3;
  r.name = "bound sandwich";
  r.passed = true;
  const RatioCase cases[] = {RatioCase::at_least_one, RatioCase::unit_interval,
                             RatioCase::non_positive};
  std::ostringstream detail;
  for (int c = 0; c < 3; ++c) {
    const std::uint64_t seed = stream_seed(opts, 30 + c);
    std::vector<Row> rows(kSamples);
    for_each_index(opts.execution, kSamples, [&](std::size_t i) {
      Rng rng = sample_rng(seed, i);
      const std::size_t n = random_dimension(rng);
      const NormSpec spec = random_norm(rng, n);
      const Vector x = nonzero_gaussian_vector(spec, rng, n);
      const Vector y = nonzero_gaussian_vector(spec, rng, n);
      const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const double q = sign * uniform(rng, 0.2, 3.0);
      const double u = c == 0 ? uniform(rng, 1.0, 4.0)
                              : c == 1 ? uniform(rng, 0.0, 1.0) : uniform(rng, -3.0, 0.0);
      const double p = u * q;
      if (classify_ratio(p, q) != cases[c]) return;  // u at a case boundary
      const BoundReport weak = power_comparison_bound(spec, x, y, p, q);
      const BoundReport sharp = refined_power_bound(spec, x, y, p, q);
      Row row;
      for (const BoundReport* b : {&weak, &sharp}) {
        for (const auto& [side, slack] : {std::pair{b->lower, b->slack_lower},
                                          std::pair{b->upper, b->slack_upper}}) {
          if (!side) continue;
          const double scale = std::max(std::abs(*side), b->value);
          if (scale > 0.0) row.worst_slack = std::min(row.worst_slack, slack / scale);
        }
      }
      // The sharper bound tightens the lower side for p/q >= 1 and the upper
      // side for 0 <= p/q <= 1.
      constexpr double kTie = 1e-12;
      if (c == 0) row.refinement = *sharp.lower >= *weak.lower * (1.0 - kTie);
      if (c == 1) row.refinement = *sharp.upper <= *weak.upper * (1.0 + kTie);
      rows[i] = row;
    });
    double worst = std::numeric_limits<double>::infinity();
    std::size_t refinement_failures = 0;
    for (const Row& row : rows) {
      worst = std::min(worst, row.worst_slack);
      if (!row.refinement) ++refinement_failures;
    }
    const bool ok = worst >= -1e-9 && refinement_failures == 0;
    r.passed = r.passed && ok;
    detail << to_string(cases[c]) << ": worst rel slack " << sci(worst) << ", refinement failures "
           << refinement_failures << "; ";
    r.metrics[to_string(cases[c])] = {{"samples", kSamples},
                                      {"worst_rel_slack", worst},
                                      {"refinement_failures", refinement_failures}};
  }
  r.seconds = seconds_since(t0);
  r.detail = detail.str() + "tolerance -1e-9";
  return r;
}

CriterionResult check_best_constants(const AcceptanceOptions&) {
  const auto t0 = Clock::now();
  CriterionResult r;
  r.id = 4;
  r.name = "best constants";
  r.passed = true;
  std::ostringstream detail;
  const std::pair<double, double> pq[] = {{2.0, 1.0}, {3.0, 2.0}, {1.0, 2.0}};
  for (const auto& [p, q] : pq) {
    const BestConstantSweep s = best_constant_sweep(p, q, {1e-6});
    const double expected = p / q >= 1.0 ? p / q : 2.0 - p / q;
    const double err = std::abs(s.rows.front().ratio - expected);
    r.passed = r.passed && err <= 1e-5 && s.limit == expected;
    detail << "(" << p << "," << q << ") ratio " << s.rows.front().ratio << " vs " << expected
           << " err " << sci(err) << "; ";
    r.metrics.push_back({{"p", p}, {"q", q}, {"ratio", s.rows.front().ratio}, {"limit", expected}});
  }
  r.seconds = seconds_since(t0);
  r.passed = r.passed && r.seconds < 1.0;
  r.detail = detail.str() + sci(r.seconds) + " s (< 1 s)";
  return r;
}

CriterionResult check_hermite_hadamard_chain(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  constexpr std::size_t kSamples = 1000;
  const std::uint64_t seed = stream_seed(opts, 5);
  std::vector<double> gaps(kSamples, 0.0);
  std::vector<int> flags(kSamples, 1);
  for_each_index(opts.execution, kSamples, [&](std::size_t i) {
    Rng rng = sample_rng(seed, i);
    for (;;) {
      const std::size_t n = random_dimension(rng);
      const NormSpec spec = random_norm(rng, n);
      const Vector x = nonzero_gaussian_vector(spec, rng, n);
      const Vector y = nonzero_gaussian_vector(spec, rng, n);
      if (nearly_equal(norm_eval(spec, x), norm_eval(spec, y), 1e-6)) continue;
      const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
      const double q = sign * uniform(rng, 0.25, 2.0);
      const double p = q * uniform(rng, 2.0, 4.0);
      const BoundChain c = hermite_hadamard_chain(spec, x, y, p, q);
      gaps[i] = c.worst_rel_gap;
      flags[i] = c.nondecreasing ? 1 : 0;
      return;
    }
  });
  const double worst = *std::min_element(gaps.begin(), gaps.end());
  const auto failures = std::count(flags.begin(), flags.end(), 0);

  const BoundChain reg =
      hermite_hadamard_chain(NormSpec::l2(), {3.0, 0.0}, {0.0, 4.0}, 2.0, 1.0);
  const bool tail_ok = std::abs(reg.terms[3] - 35.0) <= 1e-9 * 35.0 &&
                       std::abs(reg.terms[4] - 35.0) <= 1e-9 * 35.0 &&
                       std::abs(reg.terms[5] - 40.0) <= 1e-9 * 40.0;
  const bool quad_ok = reg.terms[1] > 18.357 && reg.terms[1] < 35.0;

  CriterionResult r;
  r.id = 5;
  r.name = "Hermite-Hadamard chain";
  r.seconds = seconds_since(t0);
  r.passed = failures == 0 && worst >= -1e-9 && reg.nondecreasing && tail_ok && quad_ok;
  std::ostringstream d;
  d << "worst rel gap " << sci(worst) << " over " << kSamples << " samples with p/q >= 2 ("
    << failures << " non-monotone); regression chain [";
  for (std::size_t k = 0; k < reg.terms.size(); ++k) d << (k ? ", " : "") << reg.terms[k];
  d << "]";
  r.detail = d.str();
  r.metrics = {{"samples", kSamples}, {"worst_rel_gap", worst}, {"regression", reg.terms}};
  return r;
}

CriterionResult check_series_oracle(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  constexpr std::size_t kSamples = 1000;
  const std::uint64_t seed = stream_seed(opts, 6);
  struct Row {
    double excess = 0.0;   // |series - direct| - tail_bound
    bool fast_ok = true;   // tail_bound <= 1e-10 whenever |r| <= 0.9
    double ratio = 0.0;
  };
  std::vector<Row> rows(kSamples);
  for_each_index(opts.execution, kSamples, [&](std::size_t i) {
    Rng rng = sample_rng(seed, i);
    for (;;) {
      const std::size_t n = random_dimension(rng);
      const NormSpec spec = random_gram(rng, n);
      const Vector x = nonzero_gaussian_vector(spec, rng, n, 0.1);
      const Vector y = nonzero_gaussian_vector(spec, rng, n, 0.1);
      // Every fourth sample exercises the angular-distance expansions.
      const bool angular = i % 4 == 3;
      const double p = angular ? 0.0 : uniform(rng, -2.0, 2.0);
      const SeriesEvaluation s = angular ? alpha_zero_series_adaptive(spec, x, y)
                                         : alpha_p_series_adaptive(spec, x, y, p);
      if (!s.in_domain) continue;
      const double direct = alpha_p(spec, x, y, p);
      Row row;
      row.excess = std::abs(*s.value - direct) - s.tail_bound;
      row.ratio = s.ratio;
      row.fast_ok = s.ratio > 0.9 || s.tail_bound <= 1e-10;
      rows[i] = row;
      return;
    }
  });
  double worst = -1.0;
  std::size_t slow_failures = 0;
  for (const Row& row : rows) {
    worst = std::max(worst, row.excess);
    if (!row.fast_ok) ++slow_failures;
  }
  const NormSpec euclid = NormSpec::identity_gram(2);
  const Vector x{1.0, 0.0};
  const Vector y{std::sqrt(3.0) / 2.0, 0.5};
  const double target = std::sqrt(2.0 - std::sqrt(3.0));
  const SeriesEvaluation reg_p = alpha_p_series_adaptive(euclid, x, y, 0.0);
  const SeriesEvaluation reg_0 = alpha_zero_series_adaptive(euclid, x, y);
  const double reg_err = std::max(std::abs(*reg_p.value - target), std::abs(*reg_0.value - target));

  CriterionResult r;
  r.id = 6;
  r.name = "series oracle";
  r.seconds = seconds_since(t0);
  r.passed = worst <= 1e-12 && slow_failures == 0 && reg_err <= 1e-9;
  r.detail = "max(|series - direct| - tail_bound) " + sci(worst) + " over " +
             std::to_string(kSamples) + " in-domain pairs (<= 1e-12); " +
             std::to_string(slow_failures) + " pairs with |r| <= 0.9 missing 1e-10; " +
             "sqrt(2 - sqrt3) regression error " + sci(reg_err);
  r.metrics = {{"samples", kSamples}, {"max_excess", worst}, {"regression_err", reg_err}};
  return r;
}

CriterionResult check_metric_audits(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  Rng gram_rng = sample_rng(stream_seed(opts, 7), 0);
  const std::vector<NormSpec> norms{NormSpec::l1(), NormSpec::l2(), NormSpec::linf(),
                                    random_gram(gram_rng, 3)};
  CriterionResult r;
  r.id = 7;
  r.name = "metric audits";
  r.passed = true;
  std::size_t audits = 0;
  double worst = 1.0;
  for (const NormSpec& spec : norms) {
    for (double p : {-2.0, -1.0, 0.5, 2.0, 3.0}) {
      const MetricAuditReport a =
          metric_audit_alpha(spec, p, 10000, stream_seed(opts, 70 + audits), 3, opts.execution);
      ++audits;
      worst = std::min(worst, a.triangle.worst_slack);
      if (!a.all_pass()) {
        r.passed = false;
        r.metrics["failures"].push_back({{"norm", spec.name()}, {"p", p}});
      }
    }
  }
  const TriangleWitness w = beta_triangle_triple(NormSpec::l2(), 2.0, 0.5);
  const TriangleWitness scanned = beta_non_metric_witness(NormSpec::l2(), 2.0);
  const bool witness_ok = w.margin == 1.0 && scanned.parameter == 0.5 && scanned.margin == 1.0;
  r.passed = r.passed && witness_ok;
  r.seconds = seconds_since(t0);
  r.detail = std::to_string(audits) + " audits x 10000 triples all pass: " +
             (r.passed ? "yes" : "no") + " (worst triangle rel slack " + sci(worst) +
             "); beta_2 witness at t = 0.5 margin " + std::to_string(w.margin);
  r.metrics["audits"] = audits;
  r.metrics["worst_triangle_slack"] = worst;
  r.metrics["beta_margin"] = w.margin;
  return r;
}

CriterionResult check_certifier(const AcceptanceOptions& opts) {
  const auto t0 = Clock::now();
  CriterionResult r;
  r.id = 8;
  r.name = "certifier soundness and effectiveness";
  r.passed = true;
  std::ostringstream d;

  // Soundness: 10^5 probes per criterion, split over Gram norms in R^2..R^5.
  double sound_worst = -1.0;
  std::size_t sound_failures = 0;
  constexpr std::size_t kProbesPerDimension = 25000;
  for (std::size_t n = 2; n <= 5; ++n) {
    Rng rng = sample_rng(stream_seed(opts, 80), n);
    const NormSpec spec = random_gram(rng, n);
    for (const std::string& name : criterion_names()) {
      SearchConfig cfg;
      cfg.dimension = n;
      cfg.seed = stream_seed(opts, 81 + n);
      cfg.execution = opts.execution;
      const std::size_t per_eval =
          name == "shifted" ? 4 : (name == "lorch" || name == "ficken") ? cfg.lambda_points : 1;
      cfg.samples = (kProbesPerDimension + per_eval - 1) / per_eval;
      const CertificateVerdict v = run_criterion(name, spec, 2.0, cfg);
      sound_worst = std::max(sound_worst, v.max_margin);
      if (v.verdict != Verdict::consistent_with_inner_product || v.max_margin > 1e-10) {
        ++sound_failures;
      }
    }
  }
  d << "Gram: " << sound_failures << " non-consistent verdicts, max margin " << sci(sound_worst)
    << " (<= 1e-10); ";

  // Effectiveness on l1 in R^2 at the default budget.
  std::size_t found = 0;
  std::size_t runs = 0;
  double replay_err = 0.0;
  for (std::uint64_t seed = 0; seed <= 9; ++seed) {
    for (const std::string& name : criterion_names()) {
      SearchConfig cfg;
      cfg.seed = seed;
      cfg.execution = opts.execution;
      const CertificateVerdict v = run_criterion(name, NormSpec::l1(), 2.0, cfg);
      ++runs;
      if (v.verdict == Verdict::counterexample_found) {
        ++found;
        const Witness again = replay_witness(name, NormSpec::l1(), *v.witness);
        replay_err = std::max(replay_err, std::abs(again.margin - v.witness->margin));
      }
    }
  }
  d << "l1: " << found << "/" << runs << " counterexamples, replay error " << sci(replay_err)
    << "; ";

  const NormSpec l1 = NormSpec::l1();
  const Vector x{1.0, 0.0};
  const Vector y{5.0 / 6.0, 11.0 / 30.0};
  const double a = alpha_p(l1, x, y, 2.0);
  const double b = beta_p(l1, x, y, 2.0);
  const bool fixed_ok = std::abs(a - 0.44) <= 1e-12 && std::abs(b - 11.0 / 15.0) <= 1e-12;
  d << "fixed witness alpha " << a << ", beta " << b << "; ";

  r.seconds = seconds_since(t0);
  r.passed = sound_failures == 0 && found == runs && replay_err <= 1e-12 && fixed_ok &&
             r.seconds < 60.0;
  d << sci(r.seconds) << " s (< 60 s)";
  r.detail = d.str();
  r.metrics = {{"gram_max_margin", sound_worst},
               {"gram_failures", sound_failures},
               {"l1_found", found},
               {"l1_runs", runs},
               {"replay_error", replay_err}};
  return r;
}

CriterionResult check_topology(const AcceptanceOptions&) {
  const auto t0 = Clock::now();
  CriterionResult r;
  r.id = 9;
  r.name = "topology experiments";
  double worst = 0.0;
  const std::pair<double, double> pq[] = {{1.0, 2.0}, {2.0, 1.0}, {-1.0, 0.5}, {0.5, 3.0}};
  for (const auto& [p, q] : pq) {
    const auto rows = nonequivalence_table(p, q, 0.5, {10, 100, 1000, 10000});
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
      const double ratio = rows[k + 1].constant / rows[k].constant;
      worst = std::max(worst, rel_gap(ratio, std::pow(10.0, q - p)));
    }
  }
  const auto [set_a, set_b] = completeness_experiment(1.0, -1.0);
  bool modulus_ok = true;
  for (const ModulusRow& row : set_a.rows) {
    if (row.index >= 100 && row.modulus > 0.01) modulus_ok = false;
  }
  r.seconds = seconds_since(t0);
  r.passed = worst <= 1e-12 && modulus_ok && set_a.cauchy && !set_a.limit_in_set &&
             set_b.cauchy && !set_b.limit_in_set;
  std::ostringstream d;
  d << "decade ratio error " << sci(worst) << " (<= 1e-12); alpha_-1 modulus of n a at N = 100: "
    << set_a.rows[2].modulus << ", Cauchy " << (set_a.cauchy ? "yes" : "no") << ", limit in A "
    << (set_a.limit_in_set ? "yes" : "no");
  r.detail = d.str();
  r.metrics = {{"decade_ratio_err", worst}, {"modulus_at_100", set_a.rows[2].modulus}};
  return r;
}

const std::vector<AcceptanceCheck>& acceptance_checks() {
  static const std::vector<AcceptanceCheck> checks{
      check_kernel_identities, check_closed_form,     check_bound_sandwich,
      check_best_constants,    check_hermite_hadamard_chain, check_series_oracle,
      check_metric_audits,     check_certifier,       check_topology};
  return checks;
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts) {
  std::vector<CriterionResult> out;
  int id = 0;
  for (const auto& check : acceptance_checks()) {
    ++id;
    try {
      out.push_back(check(opts));
    } catch (const std::exception& e) {
      CriterionResult r;
      r.id = id;
      r.name = "criterion " + std::to_string(id);
      r.passed = false;
      r.detail = std::string("raised: ") + e.what();
      out.push_back(r);
    }
  }
  return out;
}

std::string format_result_line(const CriterionResult& r) {
  return std::string(r.passed ? "PASS" : "FAIL") + " [" + std::to_string(r.id) + "] " + r.name +
         ": " + r.detail;
}

}  // namespace pangular
