#pragma once

#include <json.hpp>

#include "rcm/connectivity.hpp"
#include "rcm/extremal.hpp"
#include "rcm/minor.hpp"
#include "rcm/reducer.hpp"

// JSON views of results. Field order is fixed so output is byte-stable.
namespace rcm {

using Json = nlohmann::ordered_json;

Json to_json(const VertexSet& s);
Json to_json(const RootSequence& seq);
/// {"roots": [...], "branch_sets": [[...], ...]}
Json to_json(const RootSequence& seq, const MinorModel& m);
/// {"A": [...], "B": [...], "separator": [...], "order": n}
Json to_json(const Separation& sep);
Json to_json(const PathSystem& ps);
Json to_json(const MassedReport& r);
Json to_json(const CycleLinkReport& r);
Json to_json(const ExtremalCertificate& c);
Json to_json(const ReductionStep& step);
Json to_json(const ReductionTrace& trace);
Json to_json(const RootSequence& seq, const SolveResult& r);

MinorModel model_from_json(const Json& j);

}  // namespace rcm
