#pragma once

#include <compare>
#include <span>
#include <utility>
#include <vector>

namespace zigzag {

using Label = int;

/// A permutation of a finite ordered label set, stored in one-line notation.
/// word()[i] is the image of the i-th smallest label, so for the usual label
/// set 1..n the word is just sigma_1 ... sigma_n. Labels are non-negative and
/// need not start at 1: the odd-length arc-diagram embedding works on
/// 0..2k+1 directly.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Label> word);

    const std::vector<Label>& word() const { return word_; }
    const std::vector<Label>& labels() const { return labels_; }
    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }

    /// Functional view: the image of label l.
    Label image_of(Label l) const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Label> word_;
    std::vector<Label> labels_;  // word_, sorted
};

/// A permutation in standard cycle form: every cycle starts at its minimum,
/// and cycles are listed by strictly decreasing first entry. This makes the
/// form canonical, so two equal permutations compare equal structurally.
class CyclePermutation {
public:
    CyclePermutation() = default;
    explicit CyclePermutation(std::vector<std::vector<Label>> cycles);

    const std::vector<std::vector<Label>>& cycles() const { return cycles_; }
    const std::vector<Label>& labels() const { return labels_; }
    int size() const { return static_cast<int>(labels_.size()); }

    friend auto operator<=>(const CyclePermutation&, const CyclePermutation&) = default;

private:
    std::vector<std::vector<Label>> cycles_;
    std::vector<Label> labels_;  // sorted union of the cycles
};

/// A strictly increasing set of values. Peak sets of alternating permutations
/// and closer sets of matchings are both carried in this type; the two
/// coincide under the arc-diagram encoding. Entries are >= 1 so that the
/// single-letter word "1" (whose only entry is a peak against the 0
/// sentinels) has a representable peak set; the counting formulas impose
/// their own >= 2 lower bound.
class PeakSet {
public:
    PeakSet() = default;
    explicit PeakSet(std::vector<int> values);

    const std::vector<int>& values() const { return values_; }
    int size() const { return static_cast<int>(values_.size()); }
    bool empty() const { return values_.empty(); }
    bool contains(int v) const;

    friend auto operator<=>(const PeakSet&, const PeakSet&) = default;

private:
    std::vector<int> values_;
};

// --- structural predicates on words -----------------------------------------
//
// The span overloads avoid constructing Permutation values in enumeration
// inner loops; the Permutation overloads are the public entry points.

/// sigma_1 > sigma_2 < sigma_3 > ... (strict throughout). Words of length
/// 0 and 1 are vacuously alternating.
bool is_alternating_word(std::span<const Label> word);
bool is_alternating(const Permutation& p);

/// sigma_1 < sigma_2 > sigma_3 < ... (reverse alternating).
bool is_up_down_word(std::span<const Label> word);
bool is_up_down(const Permutation& p);

/// Reverses the one-line word. An involution; maps alternating words of even
/// length onto up-down words and back.
Permutation reverse(const Permutation& p);

/// The set of values sigma_i with sigma_{i-1} < sigma_i > sigma_{i+1}, under
/// boundary sentinels sigma_0 = sigma_{n+1} = 0. Labels must all be positive
/// so the sentinel sits strictly below them. The out-parameter overload
/// reuses the vector's capacity in enumeration loops.
std::vector<int> peak_values_of_word(std::span<const Label> word);
void peak_values_of_word(std::span<const Label> word, std::vector<int>& out);
PeakSet peak_values(const Permutation& p);

/// Positions (1-based) and values of the left-to-right minima, in order.
/// The value sequence is strictly decreasing.
std::vector<std::pair<int, Label>> left_to_right_minima(const Permutation& p);

/// True iff every cycle word is up-down. Length-1 cycles pass vacuously.
bool is_cycle_up_down(const CyclePermutation& cp);

/// True iff every cycle has even length.
bool all_cycles_even(const CyclePermutation& cp);

/// Decomposes the functional view of p into standard cycle form.
CyclePermutation to_cycle_form(const Permutation& p);

/// Applies the cycles as a function, producing one-line notation on the
/// union label set. Inverse of to_cycle_form.
Permutation from_cycle_form(const CyclePermutation& cp);

}  // namespace zigzag
