#pragma once

#include <json.hpp>

#include "ic/census.hpp"
#include "ic/formulas.hpp"
#include "ic/game.hpp"
#include "ic/oracle.hpp"
#include "ic/recognition.hpp"

namespace ic {

using Json = nlohmann::ordered_json;

// Counts are written as decimal strings so 128-bit values survive any reader.
Json to_json(const CycleCensus& c);
Json to_json(const PathCensus& c, int x, int y);
Json to_json(const TreeStats& t);
Json to_json(const ClusterPartition& p);
Json to_json(const FamilyId& id);
Json to_json(const RecognitionReport& r);
Json to_json(const GameVerdict& v);
Json to_json(const AtypicalReport& r);
Json to_json(const LocalStructure& s);
Json to_json(const SweepResult& r);
Json to_json(const UniquenessReport& r);

/// Reads {"clusters": [[...]], "cyclic": bool}; throws InputError on bad shape.
ClusterPartition partition_from_json(const Json& j);

}  // namespace ic
