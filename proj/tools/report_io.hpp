#pragma once

// CSV and JSON encodings of congruence reports. Columns are fixed:
// identity,p,n,lhs,rhs,outcome,reason. Missing n/lhs/rhs are empty in CSV
// and null in JSON.

#include <iosfwd>
#include <span>
#include <vector>

#include <json.hpp>

#include "euler_forge/verifier.hpp"

namespace euler_forge::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

void write_reports_csv(std::ostream& out, std::span<const CongruenceReport> reports);

Json reports_to_json(std::span<const CongruenceReport> reports);
/// Throws std::invalid_argument on malformed records.
std::vector<CongruenceReport> reports_from_json(const Json& doc);

void write_reports(std::ostream& out, std::span<const CongruenceReport> reports, Format format);

}  // namespace euler_forge::cli
