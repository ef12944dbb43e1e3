#pragma once

#include <json.hpp>

#include "hcaudit/compare.hpp"
#include "hcaudit/decider.hpp"
#include "hcaudit/digraph.hpp"
#include "hcaudit/oracle.hpp"

namespace hcaudit {

using Json = nlohmann::ordered_json;

Json digraph_to_json(const Digraph& d);
Digraph digraph_from_json(const Json& j);

/// Fixed field names: kind, rank, components, witness, matchings_examined.
/// Absent optionals serialize as null.
Json verdict_to_json(const Verdict& v);
Verdict verdict_from_json(const Json& j);

Json oracle_to_json(const OracleResult& r);
OracleResult oracle_from_json(const Json& j);

/// Timing fields are emitted only on request: the default report is
/// byte-identical across identical runs.
Json record_to_json(const ComparisonRecord& rec, bool include_timings = false);

}  // namespace hcaudit
