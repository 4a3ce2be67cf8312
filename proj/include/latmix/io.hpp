#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "latmix/invariants.hpp"
#include "latmix/oracles.hpp"

namespace latmix {

inline constexpr const char* kToolVersion = "0.1.0";

/// Validated input document: a support collection plus optional metadata.
struct CollectionDocument {
    SupportCollection collection;
    std::string name;
    std::vector<std::string> labels;    // per-support, optional
    std::vector<std::string> warnings;  // e.g. deduplicated points
};

/// Accepts either the JSON schema or the whitespace-tolerant text format
/// (one support per line, points as (a,b,...) groups).
CollectionDocument parse_collection(const std::string& text);

nlohmann::json collection_to_json(const CollectionDocument& doc);

/// 64-bit FNV-1a of the canonical serialized collection, as hex.
std::string input_digest(const CollectionDocument& doc);

nlohmann::json subset_to_json(const IndexSubset& j);  // 1-based
nlohmann::json polytope_to_json(const LatticePolytope& p);
nlohmann::json defect_report_to_json(const DefectReport& r, std::size_t num_supports);
nlohmann::json structure_to_json(const ZeroSetStructure& s);
nlohmann::json invariant_report_to_json(const InvariantReport& r);

/// Full ReportDocument wrapper with version, digest, and timing.
nlohmann::json report_document(const nlohmann::json& body, const CollectionDocument& doc,
                               std::uint64_t timing_ms);

std::string defect_report_to_text(const DefectReport& r);
std::string structure_to_text(const ZeroSetStructure& s);
std::string invariant_report_to_text(const InvariantReport& r);

std::string rational_to_string(const Rat& x);

}  // namespace latmix
