#pragma once

#include <json.hpp>

#include "mgw/cayley.hpp"
#include "mgw/hall.hpp"
#include "mgw/qiwitness.hpp"
#include "mgw/small_cancellation.hpp"

namespace mgw {

using Json = nlohmann::json;

Json to_json(const Ball& b);
Json to_json(const MetricReport& r);
Json to_json(const WitnessPair& p);
Json to_json(const CheckReport& r);
Json to_json(const CountingCertificate& c);
Json to_json(const SearchOutcome& o);
Json to_json(const QiScanReport& r);
Json to_json(const HallElement& x);

// Reads the witness layout written by to_json(WitnessPair).
WitnessPair witness_from_json(const Json& j, int source_rank, int target_rank);

}  // namespace mgw
