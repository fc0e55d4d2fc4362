// psgkit/serialize.hpp - DOT, JSON and report renderings
//
// GraphDocument (JSON):
//   {"kind": "spt" | "psg",
//    "root": <id>,                      spt only
//    "ontology": <ontology id>,         psg only
//    "nodes": [{"id", "label", "level" (psg only), "occurrences"}],
//    "edges": [{"from", "to", "kind": "child" | "minimum" | "potential"}],
//    "stats": {...}}                    informational, ignored on read
#pragma once

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "psgkit/graph.hpp"
#include "psgkit/ontology.hpp"
#include "psgkit/similarity.hpp"

namespace psgkit
{

std::string to_dot(const Spt & spt);
/// Clusters are named "level k"; the deepest level is flagged syntactic.
std::string to_dot(const Psg & psg);
/// Clusters carry the ontology's level names and kinds.
std::string to_dot(const Psg & psg, const PslOntology & o);

nlohmann::json to_json_document(const Spt & spt);
nlohmann::json to_json_document(const Psg & psg);
std::string to_json(const Spt & spt);
std::string to_json(const Psg & psg);

using AnyGraph = std::variant<Spt, Psg>;

/// Throws SchemaError on malformed documents, dangling edge endpoints, or
/// duplicate PSG labels.
AnyGraph from_json(std::string_view text);
AnyGraph from_json_document(const nlohmann::json & doc);

/// Five-step worked listing with exact fractions and percentages.
std::string report_to_text(const SimilarityReport & r, std::string_view title = {});

inline constexpr std::string_view kReportCsvHeader =
  "n1,n2,i1,i2,p1,p2,eta,lower,range_lo,range_hi,average";

/// One CSV data row (no trailing newline), percent values with 2 decimals.
std::string report_to_csv_row(const SimilarityReport & r);
/// Header line plus one row, each terminated by '\n'.
std::string report_to_csv(const SimilarityReport & r);

nlohmann::json report_to_json(const SimilarityReport & r);

}  // namespace psgkit
