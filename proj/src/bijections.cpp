#include "zigzag/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

namespace {

void require(bool cond, const char* what) {
    if (!cond) throw std::invalid_argument(what);
}

// Labels must be exactly lo, lo+1, ..., hi.
bool labels_are_range(const std::vector<Label>& labels, Label lo, Label hi) {
    if (static_cast<int>(labels.size()) != hi - lo + 1) return false;
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] != lo + static_cast<Label>(i)) return false;
    return true;
}

}  // namespace

CyclePermutation tau(const Permutation& p) {
    require(is_up_down(p), "tau needs an up-down word");
    require(p.size() % 2 == 0 || (!p.empty() && p.word().front() == p.labels().front()),
            "tau needs even length or a word starting at its minimum");
    const auto& w = p.word();
    auto minima = left_to_right_minima(p);
    std::vector<std::vector<Label>> cycles;
    cycles.reserve(minima.size());
    for (std::size_t m = 0; m < minima.size(); ++m) {
        std::size_t begin = static_cast<std::size_t>(minima[m].first) - 1;
        std::size_t end = m + 1 < minima.size()
                              ? static_cast<std::size_t>(minima[m + 1].first) - 1
                              : w.size();
        cycles.emplace_back(w.begin() + begin, w.begin() + end);
    }
    return CyclePermutation(std::move(cycles));
}

Permutation tau_inverse(const CyclePermutation& cp) {
    require(is_cycle_up_down(cp), "tau_inverse needs a cycle up-down permutation");
    std::vector<Label> word;
    word.reserve(cp.labels().size());
    for (const auto& cyc : cp.cycles()) word.insert(word.end(), cyc.begin(), cyc.end());
    require(is_up_down_word(word),
            "tau_inverse: cycle words do not concatenate to an up-down word");
    return Permutation(std::move(word));
}

MatchingPair to_arc_diagram(const CyclePermutation& cp) {
    require(all_cycles_even(cp), "arc diagram needs all cycles even");
    require(is_cycle_up_down(cp), "arc diagram needs a cycle up-down permutation");
    std::vector<Arc> above, below;
    for (const auto& cyc : cp.cycles()) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Label from = cyc[i];
            Label to = cyc[(i + 1) % cyc.size()];
            if (from < to)
                above.emplace_back(from, to);
            else
                below.emplace_back(to, from);
        }
    }
    return MatchingPair(Matching(std::move(above)), Matching(std::move(below)));
}

CyclePermutation from_arc_diagram(const MatchingPair& pair) {
    const auto& labels = pair.labels();
    std::vector<Label> word(labels.size());
    auto index_of = [&](Label l) {
        return static_cast<std::size_t>(
            std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
    };
    for (const auto& [o, c] : pair.above().arcs()) word[index_of(o)] = c;
    for (const auto& [o, c] : pair.below().arcs()) word[index_of(c)] = o;
    CyclePermutation cp = to_cycle_form(Permutation(std::move(word)));
    require(all_cycles_even(cp) && is_cycle_up_down(cp),
            "arc diagram does not describe a cycle up-down permutation");
    return cp;
}

MatchingPair even_encode(const Permutation& p) {
    require(is_alternating(p), "even_encode needs an alternating word");
    require(p.size() % 2 == 0, "even_encode needs even length");
    require(labels_are_range(p.labels(), 1, p.size()), "even_encode needs labels 1..2k");
    return to_arc_diagram(tau(reverse(p)));
}

Permutation even_decode(const MatchingPair& pair) {
    require(labels_are_range(pair.labels(), 1, static_cast<Label>(pair.labels().size())),
            "even_decode needs labels 1..2k");
    return reverse(tau_inverse(from_arc_diagram(pair)));
}

MatchingPair odd_encode(const Permutation& p) {
    require(is_alternating(p), "odd_encode needs an alternating word");
    require(p.size() % 2 == 1, "odd_encode needs odd length");
    require(labels_are_range(p.labels(), 1, p.size()), "odd_encode needs labels 1..2k+1");
    std::vector<Label> embedded = p.word();
    embedded.push_back(0);
    return to_arc_diagram(tau(reverse(Permutation(std::move(embedded)))));
}

Permutation odd_decode(const MatchingPair& pair) {
    require(labels_are_range(pair.labels(), 0, static_cast<Label>(pair.labels().size()) - 1),
            "odd_decode needs labels 0..2k+1");
    require(union_cycle_count(pair) == 1,
            "odd_decode needs a single arc cycle (a proper subset of arcs closes a circle)");
    Permutation embedded = reverse(tau_inverse(from_arc_diagram(pair)));
    std::vector<Label> word = embedded.word();
    // The single cycle starts at the minimum label 0, so after reversal the
    // appended 0 sits at the end again.
    word.pop_back();
    return Permutation(std::move(word));
}

MapTrace trace_map(const Permutation& p) {
    require(is_alternating(p), "trace needs an alternating word");
    require(!p.empty(), "trace needs a non-empty word");
    require(labels_are_range(p.labels(), 1, p.size()), "trace needs labels 1..n");
    MapTrace t;
    t.input = p;
    t.odd = p.size() % 2 == 1;
    if (t.odd) {
        std::vector<Label> w = p.word();
        w.push_back(0);
        t.embedded = Permutation(std::move(w));
    } else {
        t.embedded = p;
    }
    t.reversed = reverse(t.embedded);
    t.cycles = tau(t.reversed);
    t.diagram = to_arc_diagram(t.cycles);
    t.peaks = peak_values(p);
    return t;
}

}  // namespace zigzag
