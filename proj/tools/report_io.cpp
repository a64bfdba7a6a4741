#include "report_io.hpp"

#include <ostream>
#include <stdexcept>
#include <string>

namespace euler_forge::cli {

void write_reports_csv(std::ostream& out, std::span<const CongruenceReport> reports) {
  out << "identity,p,n,lhs,rhs,outcome,reason\n";
  for (const auto& r : reports) {
    out << identity_tag(r.identity) << ',' << r.p << ',';
    if (r.n) out << *r.n;
    out << ',';
    if (r.lhs) out << r.lhs->value();
    out << ',';
    if (r.rhs) out << r.rhs->value();
    out << ',' << outcome_name(r.outcome) << ',' << r.reason << '\n';
  }
}

Json reports_to_json(std::span<const CongruenceReport> reports) {
  Json doc = Json::array();
  for (const auto& r : reports) {
    Json row;
    row["identity"] = identity_tag(r.identity);
    row["p"] = r.p;
    row["n"] = r.n ? Json(*r.n) : Json(nullptr);
    row["lhs"] = r.lhs ? Json(r.lhs->value()) : Json(nullptr);
    row["rhs"] = r.rhs ? Json(r.rhs->value()) : Json(nullptr);
    row["outcome"] = outcome_name(r.outcome);
    row["reason"] = r.reason;
    doc.push_back(std::move(row));
  }
  return doc;
}

std::vector<CongruenceReport> reports_from_json(const Json& doc) {
  if (!doc.is_array()) throw std::invalid_argument("reports: expected a JSON array");
  std::vector<CongruenceReport> out;
  out.reserve(doc.size());
  for (const auto& row : doc) {
    CongruenceReport r;
    const auto id = parse_identity(row.at("identity").get<std::string>());
    if (!id) throw std::invalid_argument("reports: unknown identity " + row.at("identity").dump());
    r.identity = *id;
    r.p = row.at("p").get<std::uint64_t>();
    if (!row.at("n").is_null()) r.n = row.at("n").get<std::uint64_t>();
    auto residue = [&](const char* key) -> std::optional<Residue> {
      if (row.at(key).is_null()) return std::nullopt;
      return Residue::from_signed(row.at(key).get<std::int64_t>(), r.p);
    };
    r.lhs = residue("lhs");
    r.rhs = residue("rhs");
    const auto outcome = parse_outcome(row.at("outcome").get<std::string>());
    if (!outcome) throw std::invalid_argument("reports: unknown outcome " + row.at("outcome").dump());
    r.outcome = *outcome;
    r.reason = row.at("reason").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

void write_reports(std::ostream& out, std::span<const CongruenceReport> reports, Format format) {
  if (format == Format::Csv) {
    write_reports_csv(out, reports);
  } else {
    out << reports_to_json(reports).dump(2) << '\n';
  }
}

}  // namespace euler_forge::cli
