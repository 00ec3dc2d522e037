#pragma once

#include <json.hpp>
#include <string>

#include "derilab/chord.hpp"
#include "derilab/homology.hpp"

namespace derilab {

inline constexpr const char* kToolName = "derilab";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSchema = "derilab/1";

using Json = nlohmann::json;

Json h1_report_json(const H1Report& rep);

Json certificate_json(const ReductionCertificate& cert);
ReductionCertificate certificate_from_json(const Json& j);

// Top-level report document: schema/version header, config echo, results
// array, timing. Deterministic except for the timing fields.
Json report_document(const Json& config, const Json& results, double seconds, long long checks,
                     long long failures);

// Flat CSV projection of the results array: scalar fields become columns,
// nested values are serialized in place.
std::string results_csv(const Json& results);

// Content-addressed result cache, one file per request digest; entries are
// revalidated against the basis digest before reuse.
bool cache_lookup(const std::string& dir, const H1Report& probe, H1Report& out);
void cache_store(const std::string& dir, const H1Report& rep);

}  // namespace derilab
