#pragma once

#include <functional>
#include <vector>

#include "zigzag/int128.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// Default bound on n for Euler numbers and the closed-form counts; can be
/// raised by callers (the CLI reads an environment override) since every
/// arithmetic step is overflow-checked anyway.
inline constexpr int kEulerCapDefault = 30;

/// A closed-form count together with the factors whose product it is. When
/// any factor is <= 0 the count is clamped to 0 (the formula counts a set
/// that is empty for such peak sets); the raw factors are kept so an
/// infeasible set can be explained.
struct CountReport {
    PeakSet peaks;
    int128 count = 0;
    std::vector<long long> factors;
};

/// Number of alternating permutations of [2k] with peak set
/// {i_1 < ... < i_k = 2k}: the product over j <= k-1 of (i_j - 2j + 1)^2.
/// The stored factors are the squares. Entries must lie in [2, 2k] and end
/// at 2k.
CountReport s_count(const PeakSet& peaks, int k);

/// Number of alternating permutations of [2k+1] with peak set
/// {i_1 < ... < i_{k+1} = 2k+1}: the product over j <= k of
/// (i_j - 2j + 2)(i_j - 2j + 1). The stored factors interleave the two
/// parenthesised terms per j.
CountReport t_count(const PeakSet& peaks, int k);

/// Dispatches on the parity of n: s_count for n = 2k, t_count for n = 2k+1.
CountReport theorem_count(const PeakSet& peaks, int n);

/// E_n, the number of alternating permutations of [n], by the boustrophedon
/// triangle recurrence. Exact; throws beyond the cap or on overflow.
int128 euler_number(int n, int cap = kEulerCapDefault);

/// All strictly increasing candidate peak sets for length n: ceil(n/2)
/// entries from [2, n] ending at n. Includes sets whose count is 0.
/// Emitted in lexicographic order; the visitor returns false to stop.
void for_each_candidate_peak_set(int n, const std::function<bool(const PeakSet&)>& visit);
std::vector<PeakSet> candidate_peak_sets(int n);

}  // namespace zigzag
