#include "pangular/serialize.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pangular/error.hpp"

namespace pangular {

namespace {

Json exponent_to_json(double r) {
  if (std::isinf(r)) return "inf";
  return r;
}

double exponent_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "infinity") return kInfinityExponent;
    throw Error(ErrorCode::parse_error, "norm exponent must be a number or \"inf\", got " + s);
  }
  if (!j.is_number()) throw Error(ErrorCode::parse_error, "norm exponent must be a number");
  return j.get<double>();
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

double parse_double(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "inf") return kInfinityExponent;
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw Error(ErrorCode::parse_error, "not a number: '" + std::string(s) + "'");
  }
  return v;
}

std::optional<Json> read_json_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, "invalid JSON in " + path + ": " + e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

Json norm_to_json(const NormSpec& spec) {
  return std::visit(
      [](const auto& n) -> Json {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LpNorm>) {
          return {{"kind", "lp"}, {"r", exponent_to_json(n.r)}};
        } else if constexpr (std::is_same_v<T, WeightedLp>) {
          return {{"kind", "weighted_lp"}, {"r", exponent_to_json(n.r)}, {"weights", n.weights}};
        } else {
          Json rows = Json::array();
          for (std::size_t i = 0; i < n.n; ++i) {
            Json row = Json::array();
            for (std::size_t k = 0; k < n.n; ++k) row.push_back(n.at(i, k));
            rows.push_back(row);
          }
          return {{"kind", "gram"}, {"gram", rows}};
        }
      },
      spec.variant());
}

NormSpec norm_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw Error(ErrorCode::parse_error, "norm JSON must be an object with a \"kind\"");
  }
  const auto kind = j.at("kind").get<std::string>();
  try {
    if (kind == "lp") return NormSpec::lp(exponent_from_json(j.at("r")));
    if (kind == "weighted_lp") {
      return NormSpec::weighted_lp(j.at("weights").get<std::vector<double>>(),
                                   exponent_from_json(j.at("r")));
    }
    if (kind == "gram") {
      const auto rows = j.at("gram").get<std::vector<std::vector<double>>>();
      std::vector<double> flat;
      for (const auto& row : rows) {
        if (row.size() != rows.size()) {
          throw Error(ErrorCode::parse_error, "gram matrix must be square");
        }
        flat.insert(flat.end(), row.begin(), row.end());
      }
      return NormSpec::gram(rows.size(), std::move(flat));
    }
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed norm JSON: ") + e.what());
  }
  throw Error(ErrorCode::parse_error, "unknown norm kind " + kind);
}

NormSpec parse_norm(const std::string& text) {
  if (text == "l1") return NormSpec::l1();
  if (text == "l2") return NormSpec::l2();
  if (text == "linf") return NormSpec::linf();
  if (text.rfind("lp:", 0) == 0) return NormSpec::lp(parse_double(text.substr(3)));
  if (!text.empty() && text.front() == '{') return norm_from_json(parse_json_text(text));
  if (auto j = read_json_file(text)) return norm_from_json(*j);
  throw Error(ErrorCode::parse_error,
              "unknown norm '" + text + "' (expected l1, l2, linf, lp:<r>, JSON or a JSON file)");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::string_view rest = text;
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(parse_double(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::parse_error, "vector JSON must be an array");
  std::vector<double> c;
  for (const auto& e : j) {
    if (!e.is_number()) throw Error(ErrorCode::parse_error, "vector entries must be numbers");
    c.push_back(e.get<double>());
  }
  if (c.empty()) throw Error(ErrorCode::parse_error, "empty vector");
  Vector v(std::move(c));
  if (!v.is_finite()) throw Error(ErrorCode::non_finite, "vector has non-finite entries");
  return v;
}

Vector parse_vector(const std::string& text) {
  if (!text.empty() && text.front() == '[') return vector_from_json(parse_json_text(text));
  if (auto j = read_json_file(text)) return vector_from_json(*j);
  Vector v(parse_number_list(text));
  if (!v.is_finite()) throw Error(ErrorCode::non_finite, "vector has non-finite entries");
  return v;
}

Json to_json_value(const Vector& v) { return Json(v.data()); }

void to_json(Json& j, const BoundReport& r) {
  j = {{"name", r.name},
       {"applicable", r.applicable},
       {"lower", optional_number(r.lower)},
       {"upper", optional_number(r.upper)},
       {"value", r.value},
       {"slack_lower", r.lower ? Json(r.slack_lower) : Json(nullptr)},
       {"slack_upper", r.upper ? Json(r.slack_upper) : Json(nullptr)},
       {"holds", r.holds()},
       {"holds_lower", r.holds_lower},
       {"holds_upper", r.holds_upper},
       {"tolerance", r.tolerance}};
  if (!r.applicable) {
    j = {{"name", r.name}, {"applicable", false}, {"reason", r.reason}};
  }
}

void to_json(Json& j, const QuadratureResult& q) {
  j = {{"value", q.value},
       {"error_estimate", q.error_estimate},
       {"subdivisions", q.subdivisions},
       {"singular_endpoint", q.singular_endpoint}};
}

void to_json(Json& j, const BoundChain& c) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    terms.push_back({{"label", c.labels[i]}, {"value", c.terms[i]}});
  }
  j = {{"name", c.name},
       {"terms", terms},
       {"nondecreasing", c.nondecreasing},
       {"worst_rel_gap", c.worst_rel_gap},
       {"quadratures", c.quadratures}};
}

void to_json(Json& j, const BestConstantSweep& s) {
  Json rows = Json::array();
  for (const auto& r : s.rows) rows.push_back({{"eps", r.eps}, {"ratio", r.ratio}});
  j = {{"p", s.p}, {"q", s.q}, {"case", to_string(s.ratio_case)}, {"limit", s.limit},
       {"rows", rows}};
}

void to_json(Json& j, const SeriesEvaluation& s) {
  j = {{"form", s.form},
       {"in_domain", s.in_domain},
       {"value", optional_number(s.value)},
       {"order", s.order},
       {"ratio", s.ratio},
       {"tail_bound", s.in_domain ? Json(s.tail_bound) : Json(nullptr)},
       {"slow_convergence", s.slow_convergence},
       {"swapped", s.swapped}};
}

namespace {

Json triple_json(const std::optional<std::array<Vector, 3>>& t) {
  if (!t) return nullptr;
  return Json::array({to_json_value((*t)[0]), to_json_value((*t)[1]), to_json_value((*t)[2])});
}

}  // namespace

void to_json(Json& j, const AxiomResult& a) {
  j = {{"axiom", a.name},
       {"passed", a.passed},
       {"failures", a.failures},
       {"worst_rel_slack", a.worst_slack},
       {"worst_witness", triple_json(a.worst_witness)}};
}

void to_json(Json& j, const MetricAuditReport& r) {
  j = {{"p", r.p},
       {"norm", r.norm},
       {"dimension", r.dimension},
       {"samples", r.samples},
       {"seed", r.seed},
       {"all_pass", r.all_pass()},
       {"axioms", Json::array({r.symmetry, r.identity, r.triangle})}};
}

void to_json(Json& j, const TriangleWitness& w) {
  j = {{"p", w.p},
       {"parameter", w.parameter},
       {"x", to_json_value(w.x)},
       {"y", to_json_value(w.y)},
       {"z", to_json_value(w.z)},
       {"lhs", w.lhs},
       {"rhs", w.rhs},
       {"margin", w.margin}};
}

void to_json(Json& j, const NonequivalenceRow& r) {
  j = {{"n", r.n}, {"constant", r.constant}, {"kernel_ratio", r.kernel_ratio}};
}

void to_json(Json& j, const TranslationWitness& w) {
  j = {{"p", w.p},
       {"lambda", w.lambda},
       {"mu", w.mu},
       {"gamma", w.gamma},
       {"x", to_json_value(w.x)},
       {"y", to_json_value(w.y)},
       {"z", to_json_value(w.z)},
       {"shifted", w.shifted},
       {"original", w.original},
       {"gap", w.gap}};
}

void to_json(Json& j, const ConsistencyReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"alpha_1", row.alpha_one}, {"alpha_p", row.alpha_p}});
  }
  j = {{"p", r.p},
       {"sequence", r.description},
       {"rows", rows},
       {"converges_alpha_1", r.converges_alpha_one},
       {"converges_alpha_p", r.converges_alpha_p},
       {"agree", r.agree()}};
}

void to_json(Json& j, const SequenceExperiment& e) {
  Json rows = Json::array();
  for (const auto& r : e.rows) {
    rows.push_back({{"N", r.index}, {"modulus", r.modulus}, {"sampled", r.sampled}});
  }
  j = {{"set", e.set},
       {"sequence", e.sequence},
       {"metric_exponent", e.exponent},
       {"rows", rows},
       {"cauchy", e.cauchy},
       {"limit_in_set", e.limit_in_set},
       {"limit_note", e.limit_note}};
}

void to_json(Json& j, const Witness& w) {
  j = {{"x", to_json_value(w.x)},
       {"y", to_json_value(w.y)},
       {"lhs", w.lhs},
       {"rhs", w.rhs},
       {"margin", w.margin}};
  if (w.p) j["p"] = *w.p;
  if (w.lambda) j["lambda"] = *w.lambda;
  if (w.scale) j["scale"] = *w.scale;
  if (w.radicand) j["radicand"] = *w.radicand;
}

Witness witness_from_json(const Json& j) {
  try {
    Witness w;
    w.x = vector_from_json(j.at("x"));
    w.y = vector_from_json(j.at("y"));
    w.lhs = j.at("lhs").get<double>();
    w.rhs = j.at("rhs").get<double>();
    w.margin = j.at("margin").get<double>();
    if (j.contains("p")) w.p = j.at("p").get<double>();
    if (j.contains("lambda")) w.lambda = j.at("lambda").get<double>();
    if (j.contains("scale")) w.scale = j.at("scale").get<double>();
    if (j.contains("radicand")) w.radicand = j.at("radicand").get<double>();
    return w;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::parse_error, std::string("malformed witness: ") + e.what());
  }
}

void to_json(Json& j, const CertificateVerdict& v) {
  j = {{"criterion", v.criterion},
       {"norm", v.norm},
       {"verdict", to_string(v.verdict)},
       {"witness", v.witness ? Json(*v.witness) : Json(nullptr)},
       {"trials", v.trials},
       {"max_margin", v.max_margin},
       {"tolerance", v.tolerance},
       {"note", v.note}};
}

void to_json(Json& j, const DualWitness& d) {
  j = {{"alpha_below_beta", d.alpha_below_beta},
       {"alpha_above_beta", d.alpha_above_beta},
       {"below_from_collinear", d.below_from_collinear},
       {"above_from_collinear", d.above_from_collinear}};
}

std::string to_csv(const CsvTable& table) {
  std::ostringstream out;
  for (const auto& c : table.comments) out << "# " << c << '\n';
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
    out << '\n';
  }
  return out.str();
}

}  // namespace pangular
