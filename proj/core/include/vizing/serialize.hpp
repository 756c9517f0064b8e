#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "vizing/bounds.hpp"
#include "vizing/classify.hpp"
#include "vizing/domination.hpp"
#include "vizing/fair_reception.hpp"

namespace vizing {

/// Keys keep insertion order so emitted documents are stable and readable.
using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const DominationCertificate& cert);
Json to_json(const PowerResult& result);
Json to_json(const ClassProfile& profile);
Json to_json(const StructureDecomposition& decomposition);
Json to_json(const FairReception& fr, const FairVerdict* verdict = nullptr);
Json to_json(const BoundRow& row);
Json to_json(const BoundReport& report);

/// Reads {"sets": [[...], ...]} (other keys ignored) into a user-supplied reception.
FairReception fair_reception_from_json(const Graph& g, const nlohmann::json& doc);

std::string csv_header();
std::string to_csv_row(const BoundReport& report);

}  // namespace vizing
