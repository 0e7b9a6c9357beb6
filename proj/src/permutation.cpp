#include "zigzag/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

Permutation::Permutation(std::vector<Label> word) : word_(std::move(word)) {
    labels_ = word_;
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0)
            throw std::invalid_argument("permutation labels must be non-negative");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw std::invalid_argument("permutation word repeats a label");
    }
}

Label Permutation::image_of(Label l) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), l);
    if (it == labels_.end() || *it != l)
        throw std::invalid_argument("label not in permutation domain");
    return word_[static_cast<std::size_t>(it - labels_.begin())];
}

CyclePermutation::CyclePermutation(std::vector<std::vector<Label>> cycles)
    : cycles_(std::move(cycles)) {
    for (std::size_t c = 0; c < cycles_.size(); ++c) {
        const auto& cyc = cycles_[c];
        if (cyc.empty())
            throw std::invalid_argument("cycle form contains an empty cycle");
        if (*std::min_element(cyc.begin(), cyc.end()) != cyc.front())
            throw std::invalid_argument("cycle does not start at its minimum");
        if (c > 0 && cycles_[c - 1].front() <= cyc.front())
            throw std::invalid_argument("cycles not ordered by decreasing minimum");
        labels_.insert(labels_.end(), cyc.begin(), cyc.end());
    }
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0)
            throw std::invalid_argument("cycle labels must be non-negative");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw std::invalid_argument("cycles are not disjoint");
    }
}

PeakSet::PeakSet(std::vector<int> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] < 1)
            throw std::invalid_argument("peak set entries must be >= 1");
        if (i > 0 && values_[i] <= values_[i - 1])
            throw std::invalid_argument("peak set must be strictly increasing");
    }
}

bool PeakSet::contains(int v) const {
    return std::binary_search(values_.begin(), values_.end(), v);
}

namespace {

// Checks strict alternation; `descent_first` selects which comparison starts.
bool alternates(std::span<const Label> w, bool descent_first) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        bool want_descent = (i % 2 == 0) == descent_first;
        if (want_descent ? w[i] <= w[i + 1] : w[i] >= w[i + 1]) return false;
    }
    return true;
}

}  // namespace

bool is_alternating_word(std::span<const Label> word) { return alternates(word, true); }
bool is_alternating(const Permutation& p) { return is_alternating_word(p.word()); }

bool is_up_down_word(std::span<const Label> word) { return alternates(word, false); }
bool is_up_down(const Permutation& p) { return is_up_down_word(p.word()); }

Permutation reverse(const Permutation& p) {
    std::vector<Label> w(p.word().rbegin(), p.word().rend());
    return Permutation(std::move(w));
}

void peak_values_of_word(std::span<const Label> word, std::vector<int>& out) {
    out.clear();
    const std::size_t n = word.size();
    for (std::size_t i = 0; i < n; ++i) {
        Label prev = i > 0 ? word[i - 1] : 0;
        Label next = i + 1 < n ? word[i + 1] : 0;
        if (prev < word[i] && word[i] > next) out.push_back(word[i]);
    }
    std::sort(out.begin(), out.end());
}

std::vector<int> peak_values_of_word(std::span<const Label> word) {
    std::vector<int> peaks;
    peak_values_of_word(word, peaks);
    return peaks;
}

PeakSet peak_values(const Permutation& p) {
    if (!p.empty() && p.labels().front() < 1)
        throw std::invalid_argument("peak detection requires positive labels (0 is the boundary sentinel)");
    return PeakSet(peak_values_of_word(p.word()));
}

std::vector<std::pair<int, Label>> left_to_right_minima(const Permutation& p) {
    std::vector<std::pair<int, Label>> minima;
    const auto& w = p.word();
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (minima.empty() || w[i] < minima.back().second)
            minima.emplace_back(static_cast<int>(i) + 1, w[i]);
    }
    return minima;
}

bool is_cycle_up_down(const CyclePermutation& cp) {
    for (const auto& cyc : cp.cycles())
        if (!is_up_down_word(cyc)) return false;
    return true;
}

bool all_cycles_even(const CyclePermutation& cp) {
    for (const auto& cyc : cp.cycles())
        if (cyc.size() % 2 != 0) return false;
    return true;
}

CyclePermutation to_cycle_form(const Permutation& p) {
    const auto& labels = p.labels();
    std::vector<char> visited(labels.size(), 0);
    std::vector<std::vector<Label>> cycles;
    // Scanning starts in increasing label order, so each new cycle begins at
    // its minimum and the collected list is ordered by increasing minimum.
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (visited[i]) continue;
        std::vector<Label> cyc;
        std::size_t j = i;
        while (!visited[j]) {
            visited[j] = 1;
            cyc.push_back(labels[j]);
            Label img = p.word()[j];
            j = static_cast<std::size_t>(
                std::lower_bound(labels.begin(), labels.end(), img) - labels.begin());
        }
        cycles.push_back(std::move(cyc));
    }
    std::reverse(cycles.begin(), cycles.end());
    return CyclePermutation(std::move(cycles));
}

Permutation from_cycle_form(const CyclePermutation& cp) {
    const auto& labels = cp.labels();
    std::vector<Label> word(labels.size());
    for (const auto& cyc : cp.cycles()) {
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            Label from = cyc[i];
            Label to = cyc[(i + 1) % cyc.size()];
            auto idx = static_cast<std::size_t>(
                std::lower_bound(labels.begin(), labels.end(), from) - labels.begin());
            word[idx] = to;
        }
    }
    return Permutation(std::move(word));
}

}  // namespace zigzag
