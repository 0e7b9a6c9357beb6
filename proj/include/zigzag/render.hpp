#pragma once

#include <string>

#include "zigzag/bijections.hpp"
#include "zigzag/matching.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// "5 3 8 1 4 2 7 6"
std::string to_string(const Permutation& p);

/// "(6,7)(2,4)(1,8,3,5)"
std::string to_string(const CyclePermutation& cp);

/// "{4,5,7,8}"
std::string to_string(const PeakSet& s);

/// "{1,8},{2,4},{3,5},{6,7}" (arc order: by closer)
std::string arcs_to_string(const Matching& m);

/// Text drawing in the style of an arc diagram: above arcs stacked over the
/// vertex line, below arcs mirrored under it. The single-matching overload
/// draws all arcs above the line.
std::string ascii_diagram(const MatchingPair& pair);
std::string ascii_diagram(const Matching& m);

/// Graphviz export: vertices on one rank in label order, above arcs plain,
/// below arcs dashed.
std::string dot_diagram(const MatchingPair& pair);

/// Multi-line rendering of the full encoding trace.
std::string trace_to_string(const MapTrace& trace, bool with_diagram);

}  // namespace zigzag
