// Acceptance suite: every check below is exact, and each prints one
// pass/fail line. The process exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "zigzag/bijections.hpp"
#include "zigzag/enumerate.hpp"
#include "zigzag/formulas.hpp"
#include "zigzag/matching.hpp"
#include "zigzag/render.hpp"
#include "zigzag/verify.hpp"

using namespace zigzag;

namespace {

int failures = 0;
std::string detail;

void expect(bool ok, const std::string& what) {
    if (!ok && detail.size() < 500) detail += (detail.empty() ? "" : "; ") + what;
}

double run_criterion(int id, const char* name, const std::function<void()>& body) {
    detail.clear();
    auto start = std::chrono::steady_clock::now();
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = detail.empty();
    if (!ok) ++failures;
    std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", id, name,
                seconds, ok ? "" : " -- ", ok ? "" : detail.c_str());
    std::fflush(stdout);
    return seconds;
}

Permutation perm(std::vector<Label> w) { return Permutation(std::move(w)); }

// ---- criterion 1: golden stage-by-stage traces -----------------------------

void criterion_golden_traces() {
    MapTrace even = trace_map(perm({5, 3, 8, 1, 4, 2, 7, 6}));
    expect(to_string(even.reversed) == "6 7 2 4 1 8 3 5", "even reverse stage");
    expect(to_string(even.cycles) == "(6,7)(2,4)(1,8,3,5)", "even cycle stage");
    expect(even.diagram.above() == Matching({{1, 8}, {2, 4}, {3, 5}, {6, 7}}),
           "even above arcs");
    expect(even.diagram.below() == Matching({{1, 5}, {2, 4}, {3, 8}, {6, 7}}),
           "even below arcs");

    MapTrace odd = trace_map(perm({8, 6, 7, 3, 4, 1, 9, 2, 5}));
    expect(to_string(odd.cycles) == "(0,5,2,9,1,4,3,7,6,8)", "odd single cycle");
    expect(odd.diagram.above() == Matching({{0, 5}, {1, 4}, {2, 9}, {3, 7}, {6, 8}}),
           "odd above arcs");
    expect(odd.diagram.below() == Matching({{0, 8}, {1, 9}, {2, 5}, {3, 4}, {6, 7}}),
           "odd below arcs");

    // Both traces together, averaged over repeats, must stay under 1 ms.
    const int reps = 200;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < reps; ++i) {
        trace_map(perm({5, 3, 8, 1, 4, 2, 7, 6}));
        trace_map(perm({8, 6, 7, 3, 4, 1, 9, 2, 5}));
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start).count() / reps;
    expect(ms < 1.0, "trace pair took " + std::to_string(ms) + " ms");
}

// ---- criteria 2 and 3: peak-set counts vs census ---------------------------

void criterion_theorem(const std::vector<int>& lengths,
                       const std::vector<std::pair<int, long long>>& totals,
                       double budget_seconds) {
    auto start = std::chrono::steady_clock::now();
    for (int n : lengths) {
        TheoremReport r = verify_theorem(n, /*jobs=*/1);
        expect(r.ok(), "mismatches at n=" + std::to_string(n));
        expect(r.census.total == r.euler, "census total at n=" + std::to_string(n));
        for (const auto& [tn, expected] : totals)
            if (tn == n)
                expect(r.census.total == expected,
                       "frozen total at n=" + std::to_string(n));
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < budget_seconds,
           "exceeded " + std::to_string(budget_seconds) + " s budget");
}

// ---- criterion 4: closer-set counts vs streams ------------------------------

void criterion_lemma() {
    auto start = std::chrono::steady_clock::now();
    const long long double_factorials[] = {1, 1, 3, 15, 105, 945, 10395};
    for (int k = 1; k <= 6; ++k) {
        LemmaReport r = verify_lemma(k);
        expect(r.ok(), "mismatches at k=" + std::to_string(k));
        expect(r.total_enumerated == double_factorials[k],
               "total at k=" + std::to_string(k));
    }
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    expect(seconds < 30.0, "exceeded 30 s budget");
}

// ---- criterion 5: even-cycle generator count and tau bijection --------------

void criterion_cycle_updown() {
    for (int k = 1; k <= 5; ++k) {
        auto direct = gen_cycle_updown_even(k);
        expect(static_cast<int128>(direct.size()) == euler_number(2 * k),
               "generator count at k=" + std::to_string(k));

        std::set<CyclePermutation> image;
        int128 words = 0;
        bool roundtrips = true, valid_image = true;
        for_each_up_down(2 * k, [&](std::span<const Label> w) {
            Permutation p(std::vector<Label>(w.begin(), w.end()));
            CyclePermutation cp = tau(p);
            valid_image = valid_image && is_cycle_up_down(cp) && all_cycles_even(cp);
            roundtrips = roundtrips && tau_inverse(cp) == p;
            image.insert(cp);
            words = checked_add(words, 1);
            return true;
        });
        expect(roundtrips, "tau roundtrip at k=" + std::to_string(k));
        expect(valid_image, "tau image predicate at k=" + std::to_string(k));
        expect(words == euler_number(2 * k), "up-down count at k=" + std::to_string(k));
        expect(image.size() == direct.size() &&
                   image == std::set<CyclePermutation>(direct.begin(), direct.end()),
               "tau image = even-cycle generator output at k=" + std::to_string(k));
    }
}

// ---- criterion 6: bijection suites ------------------------------------------

void criterion_bijections(const std::vector<int>& lengths) {
    for (int n : lengths) {
        BijectionReport r = verify_bijections(n);
        expect(r.ok(), "failures at n=" + std::to_string(n));
        expect(r.roundtrips == euler_number(n), "roundtrips at n=" + std::to_string(n));
    }
}

// ---- criterion 7: odd-case factorization ------------------------------------

void criterion_odd_factorization() {
    for (int n = 3; n <= 9; n += 2) {
        std::vector<Label> labels(n + 1);
        std::iota(labels.begin(), labels.end(), 0);
        for_each_candidate_peak_set(n, [&](const PeakSet& closers) {
            int128 above = count_odd_above(closers);
            int128 below = count_odd_below(closers);
            int128 filtered = 0;
            enumerate_independent_pairs(closers, labels, [&](const MatchingPair& p) {
                if (union_cycle_count(p) == 1) filtered = checked_add(filtered, 1);
                return true;
            });
            int128 formula = t_count(closers, (n - 1) / 2).count;
            expect(checked_mul(above, below) == filtered,
                   "factor product vs filter at n=" + std::to_string(n) + " " +
                       to_string(closers));
            expect(filtered == formula, "filter vs closed form at n=" + std::to_string(n) +
                                            " " + to_string(closers));
            return true;
        });
    }
}

// ---- criterion 8: zero feasibility -------------------------------------------

void criterion_zero_feasibility() {
    bool saw_clamped_candidate = false;
    for (int n = 2; n <= 11; ++n) {
        Census census = peak_set_census(n);
        for_each_candidate_peak_set(n, [&](const PeakSet& peaks) {
            int128 formula = theorem_count(peaks, n).count;
            auto it = census.entries.find(peaks);
            int128 actual = it == census.entries.end() ? 0 : it->second;
            expect((formula == 0) == (actual == 0),
                   "zero feasibility at n=" + std::to_string(n) + " " + to_string(peaks));
            if (formula == 0) saw_clamped_candidate = true;
            return true;
        });
    }
    expect(saw_clamped_candidate, "no clamped candidate covered");
    expect(theorem_count(PeakSet({2, 3, 5}), 5).count == 0, "{2,3,5} must clamp to 0");
}

}  // namespace

int main() {
    run_criterion(1, "golden traces (worked examples, < 1 ms)", criterion_golden_traces);
    run_criterion(2, "even-length peak counts vs census, n <= 12", [] {
        criterion_theorem({2, 4, 6, 8, 10, 12}, {{4, 5}, {8, 1385}, {12, 2702765}}, 120.0);
    });
    run_criterion(3, "odd-length peak counts vs census, n <= 11", [] {
        criterion_theorem({3, 5, 7, 9, 11}, {{5, 16}, {9, 7936}, {11, 353792}}, 60.0);
    });
    run_criterion(4, "closer-set counts vs streams, k <= 6", criterion_lemma);
    run_criterion(5, "even-cycle counts and tau bijection, k <= 5", criterion_cycle_updown);
    run_criterion(6, "encode/decode suites, even n <= 10 and odd n <= 9", [] {
        criterion_bijections({2, 4, 6, 8, 10, 1, 3, 5, 7, 9});
    });
    run_criterion(7, "odd-case factorization, n <= 9", criterion_odd_factorization);
    run_criterion(8, "zero feasibility, n <= 11", criterion_zero_feasibility);

    if (failures == 0)
        std::printf("all acceptance criteria passed\n");
    else
        std::printf("%d acceptance criteria FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
