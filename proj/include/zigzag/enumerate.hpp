#pragma once

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "zigzag/int128.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// Visitor over one-line words of [n]; return false to stop. The span
/// aliases scratch storage and is only valid during the call.
using WordVisitor = std::function<bool(std::span<const Label>)>;

/// Every alternating permutation of [n], each exactly once, in lexicographic
/// word order. Backtracking extends a prefix only while the alternation
/// constraint holds, so the work is proportional to the surviving tree, not
/// to n!.
void for_each_alternating(int n, const WordVisitor& visit);

/// The shard of for_each_alternating whose words start with `first`.
/// Shards over first = 1..n partition the full stream.
void for_each_alternating_with_first(int n, Label first, const WordVisitor& visit);

/// Same generator with the ascent-first pattern (up-down words).
void for_each_up_down(int n, const WordVisitor& visit);

std::vector<Permutation> gen_alternating(int n);
std::vector<Permutation> gen_up_down(int n);

/// Definition filters: scan all n! words and keep the matching ones. They
/// exist to check the pruned generators at small n, so they must stay
/// independent of them. Guarded to n <= 10.
std::vector<Permutation> filter_alternating_all_words(int n);
std::vector<Permutation> filter_up_down_all_words(int n);

/// Every cycle up-down permutation of [2k] with all cycles even, generated
/// from the definition: the smallest unplaced label starts a cycle, which is
/// grown under the up-down constraint and may close at any even length.
void for_each_cycle_updown_even(int k, const std::function<bool(const CyclePermutation&)>& visit);
std::vector<CyclePermutation> gen_cycle_updown_even(int k);

/// Definition filter for the above (scans all (2k)! words); k <= 4 is
/// comfortable, guarded to 2k <= 10.
std::vector<CyclePermutation> filter_cycle_updown_even_all_words(int k);

/// Alternating permutations of [n] grouped by peak set.
struct Census {
    int n = 0;
    std::map<PeakSet, int128> entries;
    int128 total = 0;
};

/// Serial reference census: one pass over for_each_alternating.
Census peak_set_census(int n);

/// OpenMP census: shards the backtracking tree by first word element and
/// merges the per-shard maps. jobs <= 0 means the OpenMP default. Results
/// are identical to the serial census.
Census peak_set_census_parallel(int n, int jobs = 0);

}  // namespace zigzag
