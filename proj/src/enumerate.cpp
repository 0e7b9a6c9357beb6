#include "zigzag/enumerate.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace zigzag {

namespace {

// Extends word[0..pos) over the unused labels of [n]. `descent_first` picks
// the alternation pattern; the comparison against the previous entry is the
// pruning step. Returns false if the visitor stopped the stream.
bool extend_zigzag(std::vector<Label>& word, std::size_t pos, unsigned used, int n,
                   bool descent_first, const WordVisitor& visit) {
    if (pos == static_cast<std::size_t>(n))
        return visit(std::span<const Label>(word.data(), word.size()));
    bool want_descent = pos % 2 == 1 ? descent_first : !descent_first;
    Label prev = pos > 0 ? word[pos - 1] : 0;
    for (Label v = 1; v <= n; ++v) {
        if (used & (1u << v)) continue;
        if (pos > 0 && (want_descent ? v >= prev : v <= prev)) continue;
        word[pos] = v;
        if (!extend_zigzag(word, pos + 1, used | (1u << v), n, descent_first, visit))
            return false;
    }
    return true;
}

void run_zigzag(int n, bool descent_first, const WordVisitor& visit) {
    if (n < 0) throw std::invalid_argument("word length must be >= 0");
    if (n > 30) throw std::invalid_argument("word length beyond enumeration range");
    std::vector<Label> word(n);
    if (n == 0) {
        visit(std::span<const Label>());
        return;
    }
    extend_zigzag(word, 0, 0, n, descent_first, visit);
}

}  // namespace

void for_each_alternating(int n, const WordVisitor& visit) {
    run_zigzag(n, true, visit);
}

void for_each_alternating_with_first(int n, Label first, const WordVisitor& visit) {
    if (n <= 0 || first < 1 || first > n)
        throw std::invalid_argument("shard needs 1 <= first <= n");
    std::vector<Label> word(n);
    word[0] = first;
    extend_zigzag(word, 1, 1u << first, n, true, visit);
}

void for_each_up_down(int n, const WordVisitor& visit) {
    run_zigzag(n, false, visit);
}

namespace {

std::vector<Permutation> collect_words(int n, bool descent_first) {
    std::vector<Permutation> out;
    run_zigzag(n, descent_first, [&](std::span<const Label> w) {
        out.emplace_back(std::vector<Label>(w.begin(), w.end()));
        return true;
    });
    return out;
}

std::vector<Permutation> filter_words(int n, bool descent_first) {
    if (n < 0 || n > 10)
        throw std::invalid_argument("definition filter is limited to n <= 10");
    std::vector<Label> word(n);
    std::iota(word.begin(), word.end(), 1);
    std::vector<Permutation> out;
    do {
        bool keep = descent_first ? is_alternating_word(word) : is_up_down_word(word);
        if (keep) out.emplace_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

}  // namespace

std::vector<Permutation> gen_alternating(int n) { return collect_words(n, true); }
std::vector<Permutation> gen_up_down(int n) { return collect_words(n, false); }
std::vector<Permutation> filter_alternating_all_words(int n) { return filter_words(n, true); }
std::vector<Permutation> filter_up_down_all_words(int n) { return filter_words(n, false); }

namespace {

struct CycleBuilder {
    int n = 0;
    unsigned used = 0;
    std::vector<std::vector<Label>> cycles;
    std::vector<Label> current;
    const std::function<bool(const CyclePermutation&)>* visit = nullptr;

    Label smallest_unused() const {
        for (Label v = 1; v <= n; ++v)
            if (!(used & (1u << v))) return v;
        return -1;
    }

    bool emit() {
        // Cycles were opened at increasing minima; canonical order is the
        // reverse.
        std::vector<std::vector<Label>> ordered(cycles.rbegin(), cycles.rend());
        return (*visit)(CyclePermutation(std::move(ordered)));
    }

    bool close_or_grow() {
        if (current.size() % 2 == 0 && !current.empty()) {
            cycles.push_back(current);
            std::vector<Label> saved = std::move(current);
            bool keep_going = start_next_cycle();
            current = std::move(saved);
            cycles.pop_back();
            if (!keep_going) return false;
        }
        // Grow: the next entry ascends after an odd prefix, descends after
        // an even one (the head is the cycle minimum, so the first step is
        // always an ascent).
        bool want_ascent = current.size() % 2 == 1;
        Label prev = current.back();
        for (Label v = 1; v <= n; ++v) {
            if (used & (1u << v)) continue;
            if (want_ascent ? v <= prev : v >= prev) continue;
            used |= 1u << v;
            current.push_back(v);
            bool keep_going = close_or_grow();
            current.pop_back();
            used &= ~(1u << v);
            if (!keep_going) return false;
        }
        return true;
    }

    bool start_next_cycle() {
        Label head = smallest_unused();
        if (head < 0) return emit();
        used |= 1u << head;
        current.assign(1, head);
        bool keep_going = close_or_grow();
        current.clear();
        used &= ~(1u << head);
        return keep_going;
    }
};

}  // namespace

void for_each_cycle_updown_even(int k,
                                const std::function<bool(const CyclePermutation&)>& visit) {
    if (k < 0) throw std::invalid_argument("cycle generation needs k >= 0");
    if (k == 0) {
        visit(CyclePermutation());
        return;
    }
    CycleBuilder builder;
    builder.n = 2 * k;
    builder.visit = &visit;
    builder.start_next_cycle();
}

std::vector<CyclePermutation> gen_cycle_updown_even(int k) {
    std::vector<CyclePermutation> out;
    for_each_cycle_updown_even(k, [&](const CyclePermutation& cp) {
        out.push_back(cp);
        return true;
    });
    return out;
}

std::vector<CyclePermutation> filter_cycle_updown_even_all_words(int k) {
    if (k < 0 || 2 * k > 10)
        throw std::invalid_argument("definition filter is limited to 2k <= 10");
    std::vector<Label> word(2 * k);
    std::iota(word.begin(), word.end(), 1);
    std::vector<CyclePermutation> out;
    do {
        CyclePermutation cp = to_cycle_form(Permutation(word));
        if (is_cycle_up_down(cp) && all_cycles_even(cp)) out.push_back(std::move(cp));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

namespace {

// Accumulates into plain-vector keys with a reused scratch buffer, so the
// per-word cost is one peak scan and one map probe with no allocation (new
// map nodes appear only on first sight of a peak set).
struct CensusAccumulator {
    std::map<std::vector<int>, int128> counts;
    std::vector<int> scratch;
    int128 total = 0;

    void add(std::span<const Label> word) {
        peak_values_of_word(word, scratch);
        auto it = counts.find(scratch);
        if (it == counts.end())
            counts.emplace(scratch, 1);
        else
            it->second = checked_add(it->second, 1);
        total = checked_add(total, 1);
    }

    void merge_into(Census& census) const {
        for (const auto& [peaks, count] : counts) {
            int128& slot = census.entries[PeakSet(peaks)];
            slot = checked_add(slot, count);
        }
        census.total = checked_add(census.total, total);
    }
};

}  // namespace

Census peak_set_census(int n) {
    Census census;
    census.n = n;
    CensusAccumulator acc;
    for_each_alternating(n, [&](std::span<const Label> w) {
        acc.add(w);
        return true;
    });
    acc.merge_into(census);
    return census;
}

Census peak_set_census_parallel(int n, int jobs) {
    Census census;
    census.n = n;
    if (n <= 0) return peak_set_census(n);

    std::vector<CensusAccumulator> shards(n);
#ifdef _OPENMP
    int workers = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (int first = 1; first <= n; ++first) {
        CensusAccumulator& local = shards[first - 1];
        for_each_alternating_with_first(n, first, [&](std::span<const Label> w) {
            local.add(w);
            return true;
        });
    }
    for (const CensusAccumulator& local : shards) local.merge_into(census);
    return census;
}

}  // namespace zigzag
