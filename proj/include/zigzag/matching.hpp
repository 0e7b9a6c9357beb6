#pragma once

#include <compare>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "zigzag/int128.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// A pair (opener, closer) with opener < closer.
using Arc = std::pair<Label, Label>;

/// A perfect matching on an ordered label set of even size: the arcs
/// partition the labels, and within each arc the opener is the smaller
/// endpoint. Arcs are stored canonically, sorted by closer, so equal
/// matchings compare equal and enumeration output is stable.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Arc> arcs);

    const std::vector<Arc>& arcs() const { return arcs_; }
    const std::vector<Label>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }

    friend auto operator<=>(const Matching&, const Matching&) = default;

private:
    std::vector<Arc> arcs_;      // (opener, closer), sorted by closer
    std::vector<Label> labels_;  // sorted
};

/// All closers (larger endpoints), sorted. Together with the opener set it
/// partitions the label set.
PeakSet closer_set(const Matching& m);

/// All openers (smaller endpoints), sorted.
std::vector<Label> opener_set(const Matching& m);

/// An arc diagram: one matching drawn above the vertex line and one below,
/// on the same labels, with identical opener and closer sets.
class MatchingPair {
public:
    MatchingPair() = default;
    MatchingPair(Matching above, Matching below);

    const Matching& above() const { return above_; }
    const Matching& below() const { return below_; }
    const std::vector<Label>& labels() const { return above_.labels(); }

    friend auto operator<=>(const MatchingPair&, const MatchingPair&) = default;

private:
    Matching above_;
    Matching below_;
};

// --- counting ----------------------------------------------------------------

/// (2k-1)!! with (-1)!! = 1: the number of matchings on [2k].
int128 count_all_matchings(int k);

/// Number of matchings on [2k] whose closer set is exactly `closers`.
/// Processing closers left to right, the j-th closer can pick any of
/// i_j - 2j + 1 still-unused openers before it; the count is the product of
/// those choices, clamped to 0 as soon as one prefix runs out of openers.
int128 count_matchings_with_closers(const PeakSet& closers, int k);

// --- enumeration -------------------------------------------------------------
//
// Enumeration is closer-driven backtracking: closers are processed in
// increasing order and each picks a smaller unused opener, openers tried in
// increasing order. Output order is therefore deterministic. Visitors return
// false to stop early.

using MatchingVisitor = std::function<bool(const Matching&)>;
using PairVisitor = std::function<bool(const MatchingPair&)>;

/// Exactly the matchings on `labels` whose closer set equals `closers`.
/// Infeasible closer sets yield an empty stream; closers outside the label
/// set are an error.
void enumerate_matchings_with_closers(const PeakSet& closers,
                                      std::span<const Label> labels,
                                      const MatchingVisitor& visit);
std::vector<Matching> collect_matchings_with_closers(const PeakSet& closers,
                                                     std::span<const Label> labels);

/// The Cartesian square of the matching stream, packaged as MatchingPair
/// (above varies slowest).
void enumerate_independent_pairs(const PeakSet& closers,
                                 std::span<const Label> labels,
                                 const PairVisitor& visit);
std::vector<MatchingPair> collect_independent_pairs(const PeakSet& closers,
                                                    std::span<const Label> labels);

/// Number of connected components of the multigraph on the pair's labels
/// whose edges are the above and below arcs together. Every component is a
/// closed walk alternating between above and below arcs.
int union_cycle_count(const MatchingPair& pair);

/// Exactly the pairs with union_cycle_count == 1, built constructively:
/// the above matching is enumerated freely, then the below matching is built
/// closer by closer, skipping at each non-final closer the one opener that
/// would close a circuit among the arcs drawn so far. The label set must
/// contain 0 (the extra opener of the odd-length embedding).
void enumerate_single_cycle_pairs(const PeakSet& closers,
                                  std::span<const Label> labels,
                                  const PairVisitor& visit);
std::vector<MatchingPair> collect_single_cycle_pairs(const PeakSet& closers,
                                                     std::span<const Label> labels);

/// Closed-form stream lengths for the single-cycle construction on
/// {0,...,2k+1} with closer set {i_1 < ... < i_{k+1} = 2k+1}: the above
/// matching has prod_{j<=k} (i_j - 2j + 2) completions (the extra opener 0
/// widens every choice by one) and the below matching prod_{j<=k}
/// (i_j - 2j + 1) (one opener per closer is ruled out by the circuit
/// condition). Clamped to 0 when any factor is <= 0.
int128 count_odd_above(const PeakSet& closers);
int128 count_odd_below(const PeakSet& closers);

}  // namespace zigzag
