#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pangular/bounds.hpp"
#include "pangular/certifier.hpp"
#include "pangular/geometry.hpp"
#include "pangular/norm.hpp"
#include "pangular/series.hpp"
#include "pangular/vector.hpp"

namespace pangular {

using Json = nlohmann::json;

/// {"kind": "lp"|"weighted_lp"|"gram", "r": number|"inf", "weights": [...], "gram": [[...]]}
Json norm_to_json(const NormSpec& spec);
NormSpec norm_from_json(const Json& j);

/// "l1", "l2", "linf", "lp:<r>", inline JSON, or the path of a JSON file.
NormSpec parse_norm(const std::string& text);

/// "3,0", a JSON array, or the path of a JSON file holding an array.
Vector parse_vector(const std::string& text);

/// Comma-separated list of doubles.
std::vector<double> parse_number_list(const std::string& text);

Json to_json_value(const Vector& v);
Vector vector_from_json(const Json& j);

void to_json(Json& j, const BoundReport& r);
void to_json(Json& j, const QuadratureResult& q);
void to_json(Json& j, const BoundChain& c);
void to_json(Json& j, const BestConstantSweep& s);
void to_json(Json& j, const SeriesEvaluation& s);
void to_json(Json& j, const AxiomResult& a);
void to_json(Json& j, const MetricAuditReport& r);
void to_json(Json& j, const TriangleWitness& w);
void to_json(Json& j, const NonequivalenceRow& r);
void to_json(Json& j, const TranslationWitness& w);
void to_json(Json& j, const ConsistencyReport& r);
void to_json(Json& j, const SequenceExperiment& e);
void to_json(Json& j, const Witness& w);
void to_json(Json& j, const CertificateVerdict& v);
void to_json(Json& j, const DualWitness& d);

Witness witness_from_json(const Json& j);

/// Minimal CSV writer: a header row followed by numeric rows. Optional
/// leading comment lines start with '#'.
struct CsvTable {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
std::string to_csv(const CsvTable& table);

/// Shortest representation that parses back to the same double.
std::string format_double(double v);

}  // namespace pangular
