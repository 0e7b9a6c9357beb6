#pragma once

#include <json.hpp>

#include "zigzag/enumerate.hpp"
#include "zigzag/formulas.hpp"
#include "zigzag/matching.hpp"
#include "zigzag/permutation.hpp"
#include "zigzag/verify.hpp"

namespace zigzag {

// JSON schemas, kept minimal and sorted for diffability:
//   permutation {"labels":[...],"word":[...]}
//   matching    {"arcs":[[opener,closer],...],"labels":[...]}   arcs sorted by closer
//   pair        {"above":<matching>,"below":<matching>}
//   census      {"entries":[{"count":...,"peaks":[...]},...],"n":...}
// Counts render as JSON numbers while they fit 64 bits and as decimal
// strings beyond that.

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const Matching& m);
nlohmann::json to_json(const MatchingPair& pair);
nlohmann::json to_json(const Census& census);
nlohmann::json to_json(const CountReport& report);
nlohmann::json to_json(const TheoremReport& report);
nlohmann::json to_json(const LemmaReport& report);
nlohmann::json to_json(const BijectionReport& report);
nlohmann::json count_to_json(int128 v);

Permutation permutation_from_json(const nlohmann::json& j);
Matching matching_from_json(const nlohmann::json& j);
MatchingPair pair_from_json(const nlohmann::json& j);

}  // namespace zigzag
