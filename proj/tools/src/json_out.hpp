#pragma once

#include <nlohmann/json.hpp>

#include "geoinsert/consistency.hpp"
#include "geoinsert/partners.hpp"
#include "geoinsert/st_friendly.hpp"

namespace geoinsert::cli {

using nlohmann::json;

// {faces: [...], crossed_edges: [[left, right], ...]} plus raw node/edge ids
json path_json(const ExtendedDual& ed, const DualPath& p);

// vertex -> label, None omitted
json labeling_json(const InducedLabeling& l);

json postconditions_json(const Postconditions& pc);
json partner_json(const PartnerSystem& sys);

// flags of every alive edge, keyed by the ids of a snapshot
json mixed_sidecar(const StFriendlyGraph& sf, const std::vector<int>& id_of);

}  // namespace geoinsert::cli
