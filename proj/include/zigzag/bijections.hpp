#pragma once

#include "zigzag/matching.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// Cuts an up-down word at its left-to-right minima into cycles. Each
/// maximal segment starts at a minimum, so the segments are valid standard
/// cycles and appear in decreasing-minimum order already. For even-length
/// input every cycle is even and up-down. The word must be up-down and of
/// even length, or start with its minimum label (the single-cycle case).
CyclePermutation tau(const Permutation& p);

/// Erases the parentheses: concatenates the cycle words in stored order.
/// Requires a cycle up-down input whose concatenation is again up-down
/// (always true when all cycles are even); then tau(tau_inverse(cp)) == cp
/// and tau_inverse(tau(p)) == p.
Permutation tau_inverse(const CyclePermutation& cp);

/// Draws the functional graph of a cycle up-down permutation with all
/// cycles even: an arc from a to sigma(a) above the line when a < sigma(a),
/// below otherwise. Both arc families are perfect matchings on the labels
/// and agree on openers and closers.
MatchingPair to_arc_diagram(const CyclePermutation& cp);

/// Reads the permutation back out of an arc diagram: openers map along
/// their above arc, closers map backwards along their below arc. Inverse of
/// to_arc_diagram; the result is always cycle up-down with even cycles.
CyclePermutation from_arc_diagram(const MatchingPair& pair);

/// Encodes an alternating permutation of [2k] as an arc diagram:
/// to_arc_diagram(tau(reverse(p))). The closer set of the result equals the
/// peak set of p.
MatchingPair even_encode(const Permutation& p);

/// Inverse of even_encode: reverse(tau_inverse(from_arc_diagram(pair))).
Permutation even_decode(const MatchingPair& pair);

/// Encodes an alternating permutation of [2k+1]: append the label 0 to the
/// word (it stays alternating, now of even length on {0,...,2k+1}), reverse,
/// apply tau (0 is the unique left-to-right minimum, so the result is one
/// even cycle), and draw the arc diagram. The closer set equals the peak set
/// of p and the diagram's arc union is a single cycle.
MatchingPair odd_encode(const Permutation& p);

/// Inverse of odd_encode. The pair must live on {0,...,2k+1} and its arc
/// union must be a single cycle, otherwise the embedded word does not end
/// with 0 and no preimage exists.
Permutation odd_decode(const MatchingPair& pair);

/// One worked stage-by-stage run of the encoding chain, for tracing and
/// golden checks. Dispatches on the parity of the input length.
struct MapTrace {
    Permutation input;      // alternating word as given
    bool odd = false;       // whether the 0-append embedding was used
    Permutation embedded;   // input, or input with 0 appended
    Permutation reversed;   // reverse(embedded)
    CyclePermutation cycles;  // tau(reversed)
    MatchingPair diagram;   // to_arc_diagram(cycles)
    PeakSet peaks;          // peak_values(input) == closer_set(diagram.above())
};
MapTrace trace_map(const Permutation& p);

}  // namespace zigzag
