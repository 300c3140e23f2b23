#pragma once

#include <string>

#include <json.hpp>

#include "loops/extension.hpp"
#include "loops/fischer.hpp"
#include "loops/sts.hpp"
#include "loops/tables.hpp"
#include "loops/weighted.hpp"

namespace loops {

using Json = nlohmann::ordered_json;

// Tables: {"order": n, "table": [[...]], "identity": i}
Json loop_to_json(const LoopTable& l);
LoopTable loop_from_json(const Json& j);

// Groups: a table object, or a short name ("Z8", "S3", "Z4xZ2", ...)
Json group_to_json(const GroupTable& g);
GroupTable group_from_json(const Json& j);

// {"n": n, "blocks": [[a,b,c],...]}
Json sts_to_json(const SteinerTripleSystem& s);
SteinerTripleSystem sts_from_json(const Json& j);

// Steiner loops additionally accept {"sts": ...} or the names "order4"/"fano".
LoopTable steiner_loop_from_json(const Json& j);

// {"s":…, "a":…, "h": {"1": i, ...}, "diag": {...}}
Json weighted_to_json(const WeightedSteinerLoop& w);
WeightedSteinerLoop weighted_from_json(const Json& j);

// {"s":…, "a":…, "f": [[...]], "variant": "standard"|"star"|"starstar"}
Json extension_to_json(const ExtensionSpec& spec);
ExtensionSpec extension_from_json(const Json& j);

// {"sts":…, "g":…, "w": {"1": i, …}}
Json weighted_sts_to_json(const WeightedSTS& ws);
WeightedSTS weighted_sts_from_json(const Json& j);

Json load_json_file(const std::string& path);           // throws IoError
void save_json_file(const std::string& path, const Json& j);

// A spec file is either an extension object or a weighted object (detected by
// the presence of "f" vs "h").
ExtensionSpec spec_from_json(const Json& j);

}  // namespace loops
