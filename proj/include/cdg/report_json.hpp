#pragma once

// JSON views of the report types. Keys keep insertion order so output is
// stable; timing fields are omitted when `timing` is false.

#include <json.hpp>

#include "cdg/gvd.hpp"
#include "cdg/groebner.hpp"
#include "cdg/verifier.hpp"

namespace cdg {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSweepSchema = "cdg-sweep/1";

Json to_json(const SPairVerdict& v);
Json to_json(const GroebnerReport& r, bool timing = true);
Json to_json(const KRReport& r);
Json to_json(const ObstructionWitness& w);
Json to_json(const ClassificationRecord& r, bool timing = true);
Json to_json(const SweepSummary& s, bool timing = true);
Json to_json(const SuiteResult& s);
Json to_json(const FixtureResult& f, bool timing = true);

}  // namespace cdg
