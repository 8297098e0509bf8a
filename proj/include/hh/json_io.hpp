#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hh/verify.hpp"

namespace hh {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// Fields referenced by scalars of one artifact, written once as a table.
class FieldTable {
 public:
  FieldTable() = default;
  /// Rebuilds (and interns) the fields of a parsed table.
  explicit FieldTable(const Json& j);
  int index_of(const FieldPtr& f);
  const FieldPtr& at(int k) const;
  Json to_json() const;

 private:
  std::vector<FieldPtr> fields_;
};

Json field_to_json(const FieldPtr& f);
FieldPtr field_from_json(const Json& j);

Json to_json(const Rat& r);
Rat rat_from_json(const Json& j);
Json to_json(const QI& z);
QI qi_from_json(const Json& j);
/// Binary float as its exact rational value.
Json real_to_json(const Real& r);
Real real_from_json(const Json& j);

Json to_json(const AlgScalar& s, FieldTable& t);
AlgScalar scalar_from_json(const Json& j, const FieldTable& t);
Json to_json(const ParamPoly& p, FieldTable& t);
ParamPoly param_poly_from_json(const Json& j, const FieldTable& t);
Json to_json(const PSeries& s, FieldTable& t);
PSeries series_from_json(const Json& j, const FieldTable& t);

// Top-level artifacts: each carries schema_version, kind and (when needed) a
// field table.
Json to_json(const SeriesSolution& s);
SeriesSolution solution_from_json(const Json& j);

Json to_json(const ConvergenceCert& c);
ConvergenceCert cert_from_json(const Json& j);

Json to_json(const MatchResult& m);
MatchResult match_from_json(const Json& j);

Json to_json(const std::vector<ResonancePair>& pairs, const Rat& lambda);
std::vector<ResonancePair> resonance_pairs_from_json(const Json& j);

/// One pass/fail line of a verification report.
struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
  /// First failing location (e.g. an exponent), empty when passing.
  std::string location;
};

struct Report {
  std::string kind;  // "verification", "classification", ...
  std::string subject;
  std::vector<Check> checks;
  /// Free-form extra data (already JSON).
  Json data = Json::object();
  bool pass() const;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

/// Pretty-printed with sorted keys and a trailing newline.
std::string dump(const Json& j);
Json parse_json(const std::string& text);

/// Writes via a temporary file in the same directory and renames it.
void write_file_atomic(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace hh
