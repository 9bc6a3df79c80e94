#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pangular/bounds.hpp"
#include "pangular/certifier.hpp"
#include "pangular/distances.hpp"
#include "pangular/error.hpp"
#include "pangular/geometry.hpp"
#include "pangular/sampling.hpp"
#include "pangular/serialize.hpp"
#include "pangular/series.hpp"
#include "pangular/verify.hpp"

namespace pangular::cli {

namespace {

using Json = nlohmann::json;

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("PANGULAR_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorCode::parse_error, std::string("PANGULAR_SEED is not an integer: ") + s);
    }
  }
  return 0;
}

// Where an inner product is required, plain l2 is read as the identity Gram
// norm of the vectors' dimension.
NormSpec with_inner_product(const NormSpec& spec, std::size_t n) {
  if (const auto* lp = std::get_if<LpNorm>(&spec.variant()); lp && lp->r == 2.0) {
    return NormSpec::identity_gram(n);
  }
  return spec;
}

template <class T>
T get_or(const Json& c, const char* key, T fallback) {
  return c.contains(key) && !c.at(key).is_null() ? c.at(key).get<T>() : fallback;
}

double require_number(const Json& c, const char* key) {
  if (!c.contains(key) || c.at(key).is_null()) {
    throw Error(ErrorCode::invalid_argument, std::string("missing --") + key);
  }
  return c.at(key).get<double>();
}

Vector require_vector(const Json& c, const char* key) {
  if (!c.contains(key) || c.at(key).is_null()) {
    throw Error(ErrorCode::invalid_argument, std::string("missing --") + key);
  }
  return vector_from_json(c.at(key));
}

std::vector<double> require_list(const Json& c, const char* key) {
  const auto v = get_or<std::vector<double>>(c, key, {});
  if (v.empty()) throw Error(ErrorCode::invalid_argument, std::string("empty --") + key + " list");
  return v;
}

SearchConfig search_config(const Json& c) {
  SearchConfig cfg;
  cfg.dimension = get_or<std::size_t>(c, "dimension", 0);
  cfg.samples = get_or<std::size_t>(c, "samples", cfg.samples);
  cfg.seed = get_or<std::uint64_t>(c, "seed", 0);
  cfg.refine_steps = get_or<std::size_t>(c, "refine_steps", cfg.refine_steps);
  cfg.tolerance = get_or<double>(c, "tolerance", cfg.tolerance);
  cfg.lambda_points = get_or<std::size_t>(c, "lambda_points", cfg.lambda_points);
  cfg.execution = execution_from_string(get_or<std::string>(c, "execution", "parallel"));
  return cfg;
}

int cmd_compute(const Json& c, Json& body) {
  const Vector x = require_vector(c, "x");
  const Vector y = require_vector(c, "y");
  const NormSpec spec = with_inner_product(norm_from_json(c.at("norm")), x.size());
  const double p = require_number(c, "p");
  const AngularResult r = angular(spec, x, y, p);
  body = {{"p", p},
          {"alpha", r.alpha},
          {"beta", r.beta},
          {"skew_relation_residual", relation_pp_residual(spec, x, y, p)}};
  if (spec.has_inner_product()) {
    const double cf = alpha_p_closed_form_ips(spec, x, y, p);
    body["closed_form"] = {{"value", cf}, {"abs_diff", std::abs(cf - r.alpha)}};
    body["sign_identity"] = {{"value", sign_identity_ips(spec, x, y, p)},
                             {"alpha2_minus_beta2", r.alpha * r.alpha - r.beta * r.beta}};
  }
  return kOk;
}

BoundReport guarded(const std::string& name, const std::function<BoundReport()>& f) {
  try {
    return f();
  } catch (const Error& e) {
    return skipped_bound(name, e.what());
  }
}

int cmd_bounds(const Json& c, Json& body) {
  const Vector x = require_vector(c, "x");
  const Vector y = require_vector(c, "y");
  const NormSpec spec = norm_from_json(c.at("norm"));
  const double p = require_number(c, "p");
  const double q = require_number(c, "q");
  const double quad_tol = get_or<double>(c, "quad_tol", 1e-11);

  if (get_or<bool>(c, "chain", false)) {
    const BoundChain chain = hermite_hadamard_chain(spec, x, y, p, q, quad_tol);
    body = {{"chain", chain}};
    return chain.nondecreasing ? kOk : kViolation;
  }

  std::vector<BoundReport> rows;
  rows.push_back(power_comparison_bound(spec, x, y, p, q));
  rows.push_back(refined_power_bound(spec, x, y, p, q));
  rows.push_back(p == 2.0 ? skipped_bound("skew_comparison", "requires p != 2")
                          : skew_comparison_bound(spec, x, y, p));
  rows.push_back(p == 0.0 ? skew_angular_cap(spec, x, y)
                          : skipped_bound("skew_angular_cap", "concerns p = 0 only"));
  for (auto& b : classical_bounds(spec, x, y, p)) rows.push_back(std::move(b));
  rows.push_back(guarded("dragomir_integral", [&] {
    return dragomir_integral_bound(spec, x, y, p, q, quad_tol).report;
  }));
  rows.push_back(guarded("dragomir_reverse", [&] {
    return dragomir_reverse_bound(spec, x, y, p, q, quad_tol).report;
  }));
  rows.push_back(spec.has_inner_product()
                     ? guarded("cauchy_schwarz_error",
                               [&] { return cauchy_schwarz_error_bound(spec, x, y); })
                     : skipped_bound("cauchy_schwarz_error", "needs an inner-product norm"));

  bool all_hold = true;
  std::size_t applicable = 0;
  for (const auto& r : rows) {
    if (!r.applicable) continue;
    ++applicable;
    all_hold = all_hold && r.holds();
  }
  body = {{"bounds", rows}, {"applicable", applicable}, {"all_hold", all_hold}};
  if (spec.has_inner_product()) {
    try {
      const BoundChain chain = angular_integral_chain(spec, x, y, quad_tol);
      body["angular_integral_chain"] = chain;
      all_hold = all_hold && chain.nondecreasing;
      body["all_hold"] = all_hold;
    } catch (const Error& e) {
      body["angular_integral_chain"] = {{"applicable", false}, {"reason", e.what()}};
    }
  }
  return all_hold ? kOk : kViolation;
}

SequenceLaw make_sequence(const std::string& name, std::size_t n) {
  Vector a(n, 0.0);
  a[0] = 1.0;
  if (name == "shrink") {
    return {"x_n = (1 + 1/n) a", [a](std::size_t k) { return (1.0 + 1.0 / k) * a; }, a};
  }
  if (name == "grow") {
    return {"x_n = n a", [a](std::size_t k) { return static_cast<double>(k) * a; }, a};
  }
  if (name == "alternate") {
    if (n < 2) throw Error(ErrorCode::invalid_argument, "alternating sequence needs n >= 2");
    Vector b(n, 0.0);
    b[1] = 1.0;
    return {"x_n alternates e1, e2", [a, b](std::size_t k) { return k % 2 ? b : a; }, a};
  }
  throw Error(ErrorCode::invalid_argument, "unknown sequence " + name);
}

int cmd_audit(const Json& c, Json& body, std::string& csv, bool want_csv) {
  const NormSpec spec = norm_from_json(c.at("norm"));
  const auto sections = get_or<std::vector<std::string>>(c, "sections", {});
  if (sections.empty()) {
    throw Error(ErrorCode::invalid_argument,
                "select at least one of --metric, --beta-witness, --nonequiv, --translation, "
                "--completeness, --consistency");
  }
  const std::size_t dim = resolve_dimension(spec, get_or<std::size_t>(c, "dimension", 0));
  int status = kOk;
  std::vector<CsvTable> tables;
  body = Json::object();
  for (const std::string& s : sections) {
    if (s == "metric") {
      const MetricAuditReport r = metric_audit_alpha(
          spec, require_number(c, "p"), get_or<std::size_t>(c, "samples", 10000),
          get_or<std::uint64_t>(c, "seed", 0), dim,
          execution_from_string(get_or<std::string>(c, "execution", "parallel")));
      body["metric"] = r;
      if (!r.all_pass()) status = kViolation;
    } else if (s == "beta-witness") {
      const double p = require_number(c, "p");
      const TriangleWitness w = c.contains("t") && !c.at("t").is_null()
                                    ? beta_triangle_triple(spec, p, c.at("t").get<double>(), dim)
                                    : beta_non_metric_witness(spec, p, dim);
      body["beta_witness"] = w;
    } else if (s == "nonequiv") {
      const double p = require_number(c, "p");
      const double q = require_number(c, "q");
      const auto rows = nonequivalence_table(p, q, get_or<double>(c, "t", 0.5),
                                             require_list(c, "n"));
      body["nonequivalence"] = {{"p", p}, {"q", q}, {"rows", rows}};
      CsvTable t{{"nonequivalence table p=" + format_double(p) + " q=" + format_double(q)},
                 {"n", "constant", "kernel_ratio"},
                 {}};
      for (const auto& r : rows) t.rows.push_back({r.n, r.constant, r.kernel_ratio});
      tables.push_back(std::move(t));
    } else if (s == "translation") {
      const double p = require_number(c, "p");
      body["translation"] =
          c.contains("gamma") && !c.at("gamma").is_null()
              ? translation_triple(spec, p, 1.0, 1.0, c.at("gamma").get<double>(), dim)
              : translation_invariance_probe(spec, p, dim);
    } else if (s == "completeness") {
      const auto [a, b] = completeness_experiment(get_or<double>(c, "p", 1.0),
                                                  get_or<double>(c, "q", -1.0),
                                                  get_or<std::vector<double>>(c, "indices", {}));
      body["completeness"] = Json::array({a, b});
      for (const SequenceExperiment* e : {&a, &b}) {
        CsvTable t{{e->set + ", " + e->sequence + ", metric alpha_" + format_double(e->exponent)},
                   {"N", "modulus", "sampled"},
                   {}};
        for (const auto& r : e->rows) t.rows.push_back({r.index, r.modulus, r.sampled});
        tables.push_back(std::move(t));
      }
    } else if (s == "consistency") {
      const double p = require_number(c, "p");
      Json reports = Json::array();
      for (const char* name : {"shrink", "alternate", "grow"}) {
        const ConsistencyReport r = consistency_check(spec, p, make_sequence(name, dim));
        if (!r.agree()) status = kViolation;
        reports.push_back(r);
      }
      body["consistency"] = reports;
    } else {
      throw Error(ErrorCode::invalid_argument, "unknown audit section " + s);
    }
  }
  if (want_csv) {
    if (tables.empty()) {
      throw Error(ErrorCode::invalid_argument,
                  "CSV output is available for --nonequiv and --completeness tables only");
    }
    for (std::size_t i = 0; i < tables.size(); ++i) csv += (i ? "\n" : "") + to_csv(tables[i]);
  }
  return status;
}

int cmd_certify(const Json& c, Json& body) {
  const NormSpec spec = norm_from_json(c.at("norm"));
  const std::string criterion = get_or<std::string>(c, "criterion", "");
  const SearchConfig cfg = search_config(c);
  const double p = get_or<double>(c, "p", 2.0);
  if (criterion == "dual") {
    body = dual_witness(spec, p, cfg);
    return kViolation;
  }
  const auto& names = criterion_names();
  if (std::find(names.begin(), names.end(), criterion) == names.end()) {
    throw Error(ErrorCode::invalid_argument,
                "unknown criterion '" + criterion +
                    "' (alpha-beta, identity, shifted, lorch, ficken, dual)");
  }
  const CertificateVerdict v = run_criterion(criterion, spec, p, cfg);
  body = v;
  return v.verdict == Verdict::counterexample_found ? kViolation : kOk;
}

int cmd_sweep(const Json& c, Json& body, std::string& csv, bool want_csv) {
  const std::string mode = get_or<std::string>(c, "mode", "");
  CsvTable t;
  if (mode == "best-constant") {
    const BestConstantSweep s =
        best_constant_sweep(require_number(c, "p"), require_number(c, "q"), require_list(c, "eps"));
    body = s;
    t.comments = {"best-constant sweep p=" + format_double(s.p) + " q=" + format_double(s.q) +
                      " case=" + to_string(s.ratio_case),
                  "limit=" + format_double(s.limit)};
    t.header = {"eps", "ratio"};
    for (const auto& r : s.rows) t.rows.push_back({r.eps, r.ratio});
  } else if (mode == "series") {
    const Vector x = require_vector(c, "x");
    const Vector y = require_vector(c, "y");
    const NormSpec spec = with_inner_product(norm_from_json(c.at("norm")), x.size());
    const double p = require_number(c, "p");
    const auto orders = require_list(c, "K");
    const double direct = alpha_p(spec, x, y, p);
    Json rows = Json::array();
    t.comments = {"series sweep p=" + format_double(p), "limit=" + format_double(direct)};
    t.header = {"K", "value", "tail_bound"};
    for (double k : orders) {
      if (!(k >= 0.0) || k != std::floor(k)) {
        throw Error(ErrorCode::invalid_argument, "K must be a nonnegative integer");
      }
      const auto K = static_cast<std::size_t>(k);
      const SeriesEvaluation s =
          p == 0.0 ? alpha_zero_series(spec, x, y, K) : alpha_p_series(spec, x, y, p, K);
      if (!s.in_domain) {
        throw Error(ErrorCode::out_of_domain,
                    "the pair lies outside the convergence window in both orientations");
      }
      rows.push_back(s);
      t.rows.push_back({k, *s.value, s.tail_bound});
    }
    body = {{"p", p}, {"limit", direct}, {"rows", rows}};
  } else {
    throw Error(ErrorCode::invalid_argument, "choose --best-constant or --series");
  }
  if (want_csv) csv = to_csv(t);
  return kOk;
}

int cmd_verify_all(const Json& c, Json& body, std::ostream& err, Json* timings) {
  AcceptanceOptions opts;
  opts.seed = get_or<std::uint64_t>(c, "seed", opts.seed);
  opts.execution = execution_from_string(get_or<std::string>(c, "execution", "parallel"));
  bool all = true;
  Json results = Json::array();
  for (const CriterionResult& r : run_acceptance(opts)) {
    err << format_result_line(r) << '\n';
    all = all && r.passed;
    if (timings) (*timings)[std::to_string(r.id)] = r.seconds;
    results.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                       {"metrics", r.metrics}});
  }
  body = {{"criteria", results}, {"all_passed", all}};
  return all ? kOk : kViolation;
}

}  // namespace

int execute(const Json& config, Json& body, std::string& csv, std::ostream& err,
            Json* timings) {
  const std::string command = config.at("command").get<std::string>();
  const bool want_csv = get_or<std::string>(config, "format", "json") == "csv";
  if (want_csv && command != "audit" && command != "sweep") {
    throw Error(ErrorCode::invalid_argument, "CSV output is available for tables only");
  }
  if (command == "compute") return cmd_compute(config, body);
  if (command == "bounds") return cmd_bounds(config, body);
  if (command == "audit") return cmd_audit(config, body, csv, want_csv);
  if (command == "certify") return cmd_certify(config, body);
  if (command == "sweep") return cmd_sweep(config, body, csv, want_csv);
  if (command == "verify-all") return cmd_verify_all(config, body, err, timings);
  throw Error(ErrorCode::invalid_argument, "unknown command " + command);
}

namespace {

struct Options {
  std::string norm = "l2";
  std::optional<double> p;
  std::optional<double> q;
  std::string x;
  std::string y;
  std::optional<std::uint64_t> seed;
  std::size_t samples = 0;
  std::size_t dimension = 0;
  std::string format;
  std::string output;
  bool serial = false;
  // bounds
  bool chain = false;
  double quad_tol = 1e-11;
  // audit
  bool metric = false, beta_witness = false, nonequiv = false, translation = false,
       completeness = false, consistency = false;
  std::optional<double> t;
  std::optional<double> gamma;
  std::string n_list;
  std::string indices;
  // certify
  std::string criterion;
  std::size_t refine_steps = 100;
  double tolerance = 1e-8;
  std::size_t lambda_points = 61;
  // sweep
  bool best_constant = false;
  bool series = false;
  std::string eps;
  std::string orders;
  // replay
  std::string config_path;
};

void add_common(CLI::App* sub, Options& o, bool vectors) {
  sub->add_option("--norm", o.norm, "l1, l2, linf, lp:<r>, norm JSON or a JSON file");
  sub->add_option("--format", o.format, "json or csv");
  sub->add_option("--output,-o", o.output, "write the report to this file");
  if (vectors) {
    sub->add_option("--x", o.x, "vector as 1,2,3, a JSON array or a JSON file");
    sub->add_option("--y", o.y, "vector as 1,2,3, a JSON array or a JSON file");
  }
}

void add_sampling(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "random seed (default: $PANGULAR_SEED or 0)");
  sub->add_option("--samples", o.samples, "number of random samples");
  sub->add_option("--dim", o.dimension, "dimension for norms without a fixed one");
  sub->add_flag("--serial", o.serial, "run the serial reference path");
}

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

Json build_config(const std::string& command, const Options& o) {
  Json c;
  c["command"] = command;
  const std::string format =
      o.format.empty() ? (command == "sweep" ? "csv" : "json") : o.format;
  if (format != "json" && format != "csv") {
    throw Error(ErrorCode::invalid_argument, "format must be json or csv");
  }
  c["format"] = format;
  c["norm"] = norm_to_json(parse_norm(o.norm));
  c["p"] = optional_json(o.p);
  c["q"] = optional_json(o.q);
  if (!o.x.empty()) c["x"] = to_json_value(parse_vector(o.x));
  if (!o.y.empty()) c["y"] = to_json_value(parse_vector(o.y));
  c["execution"] = o.serial ? "serial" : "parallel";
  const std::uint64_t seed = o.seed ? *o.seed : default_seed();

  if (command == "bounds") {
    c["chain"] = o.chain;
    c["quad_tol"] = o.quad_tol;
  } else if (command == "audit") {
    std::vector<std::string> sections;
    if (o.metric) sections.push_back("metric");
    if (o.beta_witness) sections.push_back("beta-witness");
    if (o.nonequiv) sections.push_back("nonequiv");
    if (o.translation) sections.push_back("translation");
    if (o.completeness) sections.push_back("completeness");
    if (o.consistency) sections.push_back("consistency");
    c["sections"] = sections;
    c["seed"] = seed;
    c["samples"] = o.samples ? o.samples : 10000;
    c["dimension"] = o.dimension;
    c["t"] = optional_json(o.t);
    c["gamma"] = optional_json(o.gamma);
    c["n"] = o.n_list.empty() ? std::vector<double>{10, 100, 1000} : parse_number_list(o.n_list);
    c["indices"] = o.indices.empty() ? std::vector<double>{} : parse_number_list(o.indices);
  } else if (command == "certify") {
    c["criterion"] = o.criterion;
    c["seed"] = seed;
    c["samples"] = o.samples ? o.samples : SearchConfig{}.samples;
    c["dimension"] = o.dimension;
    c["refine_steps"] = o.refine_steps;
    c["tolerance"] = o.tolerance;
    c["lambda_points"] = o.lambda_points;
    if (!o.p) c["p"] = 2.0;
  } else if (command == "sweep") {
    if (o.best_constant == o.series) {
      throw Error(ErrorCode::invalid_argument, "choose exactly one of --best-constant, --series");
    }
    c["mode"] = o.best_constant ? "best-constant" : "series";
    c["eps"] = o.eps.empty() ? std::vector<double>{} : parse_number_list(o.eps);
    c["K"] = o.orders.empty() ? std::vector<double>{} : parse_number_list(o.orders);
  } else if (command == "verify-all") {
    if (o.seed) c["seed"] = *o.seed;
  }
  c["output"] = o.output;
  return c;
}

Json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, "invalid JSON in " + path + ": " + e.what());
  }
  // Accept a bare config or a full report that embeds one.
  if (j.contains("config")) j = j.at("config");
  if (!j.is_object() || !j.contains("command")) {
    throw Error(ErrorCode::parse_error, path + " holds no run configuration");
  }
  return j;
}

int emit(const Json& config, std::ostream& out, std::ostream& err) {
  Json body;
  std::string csv;
  Json timings = Json::object();
  const int status = execute(config, body, csv, err, &timings);
  std::string text;
  if (get_or<std::string>(config, "format", "json") == "csv") {
    text = csv;
  } else {
    // Wall-clock data lives in the header only, so bodies compare across runs.
    Json header = {{"tool", kToolName}, {"version", kToolVersion}, {"timestamp", utc_timestamp()}};
    if (!timings.empty()) header["timings_seconds"] = timings;
    const Json report = {{"header", header}, {"config", config}, {"body", body}};
    text = report.dump(2) + "\n";
  }
  const std::string path = get_or<std::string>(config, "output", "");
  if (path.empty()) {
    out << text;
  } else {
    std::ofstream f(path);
    if (!f) throw Error(ErrorCode::invalid_argument, "cannot write " + path);
    f << text;
  }
  return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-angular and skew p-angular distances on finite-dimensional normed spaces"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Options o;

  auto* compute = app.add_subcommand("compute", "alpha_p, beta_p and their identities for x, y");
  add_common(compute, o, true);
  compute->add_option("--p", o.p, "exponent")->required();

  auto* bounds = app.add_subcommand("bounds", "evaluate every bound on alpha_p for x, y");
  add_common(bounds, o, true);
  bounds->add_option("--p", o.p, "exponent")->required();
  bounds->add_option("--q", o.q, "comparison exponent")->required();
  bounds->add_flag("--chain", o.chain, "emit the Hermite-Hadamard chain (p/q >= 2)");
  bounds->add_option("--quad-tol", o.quad_tol, "quadrature tolerance");

  auto* audit = app.add_subcommand("audit", "metric audits and topology experiments");
  add_common(audit, o, false);
  add_sampling(audit, o);
  audit->add_option("--p", o.p, "exponent");
  audit->add_option("--q", o.q, "second exponent");
  audit->add_flag("--metric", o.metric, "metric axioms of alpha_p on random triples");
  audit->add_flag("--beta-witness", o.beta_witness, "triangle violation for beta_p");
  audit->add_flag("--nonequiv", o.nonequiv, "constants needed to compare alpha_p and alpha_q");
  audit->add_flag("--translation", o.translation, "translation-invariance counterexample");
  audit->add_flag("--completeness", o.completeness, "Cauchy sequences without limits");
  audit->add_flag("--consistency", o.consistency, "convergence under alpha_1 versus alpha_p");
  audit->add_option("--t", o.t, "scan parameter or ratio t");
  audit->add_option("--gamma", o.gamma, "translation scalar");
  audit->add_option("--n", o.n_list, "comma-separated scales n");
  audit->add_option("--indices", o.indices, "comma-separated indices N");

  auto* certify = app.add_subcommand("certify", "search for inner-product violations");
  add_common(certify, o, false);
  add_sampling(certify, o);
  certify->add_option("--criterion", o.criterion,
                      "alpha-beta, identity, shifted, lorch, ficken or dual")
      ->required();
  certify->add_option("--p", o.p, "exponent (alpha-beta, identity, dual)");
  certify->add_option("--refine-steps", o.refine_steps, "coordinate refinement sweeps");
  certify->add_option("--tolerance", o.tolerance, "violation tolerance");
  certify->add_option("--lambda-points", o.lambda_points, "lambda grid size");

  auto* sweep = app.add_subcommand("sweep", "best-constant and series convergence tables");
  add_common(sweep, o, true);
  sweep->add_flag("--best-constant", o.best_constant, "ratio sweep towards the sharp constant");
  sweep->add_flag("--series", o.series, "partial sums of the series for alpha_p");
  sweep->add_option("--p", o.p, "exponent");
  sweep->add_option("--q", o.q, "comparison exponent");
  sweep->add_option("--eps", o.eps, "comma-separated epsilons");
  sweep->add_option("--K", o.orders, "comma-separated series orders");

  auto* verify = app.add_subcommand("verify-all", "run the acceptance suite");
  verify->add_option("--seed", o.seed, "base seed");
  verify->add_flag("--serial", o.serial, "run the serial reference path");
  verify->add_option("--output,-o", o.output, "write the report to this file");

  auto* replay = app.add_subcommand("replay", "rerun the configuration embedded in a report");
  replay->add_option("--config", o.config_path, "report or config JSON")->required();
  replay->add_option("--output,-o", o.output, "write the report to this file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    Json config;
    if (name == "replay") {
      config = load_config(o.config_path);
      config["output"] = o.output;
    } else {
      config = build_config(name, o);
    }
    return emit(config, out, err);
  } catch (const Error& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

}  // namespace pangular::cli
