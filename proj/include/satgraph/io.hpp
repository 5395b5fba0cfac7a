#pragma once

#include <json.hpp>
#include <string>

#include "satgraph/constructions.hpp"
#include "satgraph/search.hpp"
#include "satgraph/verify.hpp"

namespace satgraph {

// Edge-list JSON graph: {"k": ..., "n": ..., "edges": [[u, v], ...]}.
nlohmann::json graph_to_json(const Subgraph& g);
Subgraph graph_from_json(const nlohmann::json& j);

// Report schema (stable, golden-tested):
// {t, kt_free, witness, non_completing, missing_checked, is_saturated,
//  edge_count, host:{k, n}}
nlohmann::json report_to_json(const SaturationReport& rep, const Subgraph& g);

nlohmann::json density_to_json(const Subgraph& g);
std::string density_to_csv(const Subgraph& g);

}  // namespace satgraph
