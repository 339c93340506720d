#pragma once

#include <vector>

#include "json.hpp"
#include "svcp/covers.hpp"
#include "svcp/formulas.hpp"
#include "svcp/pebbling.hpp"
#include "svcp/reductions.hpp"
#include "svcp/solver.hpp"

namespace svcp {

// Key order is insertion order so that output is byte-stable.
using Json = nlohmann::ordered_json;

// Sorted 1-based vertex list.
Json to_json(VertexSet s);
Json to_json(const std::vector<VertexSet>& sets);
Json to_json(const Distribution& d);
Json to_json(const MoveCertificate& c);
Json to_json(const FormulaResult& r);
// Wall time is nondeterministic, so it is only included on request.
Json to_json(const InvariantReport& r, bool include_timing = false);
Json to_json(const SandwichReport& r, bool include_timing = false);
Json to_json(const CorrespondenceReport& r);
Json to_json(const ApexProbe& p);

Json graph_summary(const Graph& g);

}  // namespace svcp
