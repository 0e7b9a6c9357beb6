#include "zigzag/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zigzag {

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
    for (auto& [o, c] : arcs_) {
        if (o == c) throw std::invalid_argument("matching arc joins a label to itself");
        if (o > c) std::swap(o, c);
    }
    std::sort(arcs_.begin(), arcs_.end(),
              [](const Arc& a, const Arc& b) { return a.second < b.second; });
    labels_.reserve(arcs_.size() * 2);
    for (const auto& [o, c] : arcs_) {
        labels_.push_back(o);
        labels_.push_back(c);
    }
    std::sort(labels_.begin(), labels_.end());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i] < 0)
            throw std::invalid_argument("matching labels must be non-negative");
        if (i > 0 && labels_[i] == labels_[i - 1])
            throw std::invalid_argument("matching arcs do not partition the labels");
    }
}

PeakSet closer_set(const Matching& m) {
    std::vector<int> closers;
    closers.reserve(m.arcs().size());
    for (const auto& [o, c] : m.arcs()) closers.push_back(c);
    return PeakSet(std::move(closers));  // arcs sorted by closer, closers distinct
}

std::vector<Label> opener_set(const Matching& m) {
    std::vector<Label> openers;
    openers.reserve(m.arcs().size());
    for (const auto& [o, c] : m.arcs()) openers.push_back(o);
    std::sort(openers.begin(), openers.end());
    return openers;
}

MatchingPair::MatchingPair(Matching above, Matching below)
    : above_(std::move(above)), below_(std::move(below)) {
    if (above_.labels() != below_.labels())
        throw std::invalid_argument("above and below matchings use different labels");
    if (closer_set(above_) != closer_set(below_))
        throw std::invalid_argument("above and below matchings disagree on closers");
}

int128 count_all_matchings(int k) {
    if (k < 0) throw std::invalid_argument("matching count needs k >= 0");
    int128 r = 1;
    for (int odd = 3; odd <= 2 * k - 1; odd += 2) r = checked_mul(r, odd);
    return r;
}

int128 count_matchings_with_closers(const PeakSet& closers, int k) {
    if (closers.size() != k)
        throw std::invalid_argument("closer set size must equal k");
    if (k > 0 && closers.values().back() > 2 * k)
        throw std::invalid_argument("closer entries must lie in [2k]");
    int128 r = 1;
    for (int j = 1; j <= k; ++j) {
        long long factor = closers.values()[j - 1] - 2LL * j + 1;
        if (factor <= 0) return 0;
        r = checked_mul(r, factor);
    }
    return r;
}

namespace {

struct CloserPlan {
    std::vector<Label> closers;
    std::vector<Label> openers;  // labels minus closers, sorted
    bool feasible = false;       // openers and closers are equinumerous
};

CloserPlan plan_closers(const PeakSet& closers, std::span<const Label> labels) {
    CloserPlan plan;
    plan.closers = std::vector<Label>(closers.values().begin(), closers.values().end());
    std::vector<Label> sorted(labels.begin(), labels.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("label set contains duplicates");
    for (Label c : plan.closers) {
        if (!std::binary_search(sorted.begin(), sorted.end(), c))
            throw std::invalid_argument("closer set is not a subset of the labels");
    }
    std::set_difference(sorted.begin(), sorted.end(), plan.closers.begin(),
                        plan.closers.end(), std::back_inserter(plan.openers));
    plan.feasible = plan.openers.size() == plan.closers.size();
    return plan;
}

// Shared backtracking core. `excluded(j)` names one opener the j-th closer
// must skip (or -1); used by the single-cycle construction.
template <typename Excluded, typename Emit>
bool match_closers(const CloserPlan& plan, std::vector<Label>& choice,
                   std::vector<char>& used, std::size_t j, const Excluded& excluded,
                   const Emit& emit) {
    if (j == plan.closers.size()) return emit(choice);
    Label closer = plan.closers[j];
    Label skip = excluded(j, choice);
    for (std::size_t oi = 0; oi < plan.openers.size(); ++oi) {
        Label opener = plan.openers[oi];
        if (opener >= closer) break;  // openers sorted
        if (used[oi] || opener == skip) continue;
        used[oi] = 1;
        choice[j] = opener;
        bool keep_going = match_closers(plan, choice, used, j + 1, excluded, emit);
        used[oi] = 0;
        if (!keep_going) return false;
    }
    return true;
}

Matching matching_from_choices(const std::vector<Label>& closers,
                               const std::vector<Label>& choice) {
    std::vector<Arc> arcs;
    arcs.reserve(closers.size());
    for (std::size_t j = 0; j < closers.size(); ++j)
        arcs.emplace_back(choice[j], closers[j]);
    return Matching(std::move(arcs));
}

}  // namespace

void enumerate_matchings_with_closers(const PeakSet& closers,
                                      std::span<const Label> labels,
                                      const MatchingVisitor& visit) {
    CloserPlan plan = plan_closers(closers, labels);
    if (!plan.feasible) return;
    if (plan.closers.empty()) {
        visit(Matching());
        return;
    }
    std::vector<Label> choice(plan.closers.size());
    std::vector<char> used(plan.openers.size(), 0);
    match_closers(
        plan, choice, used, 0, [](std::size_t, const std::vector<Label>&) { return -1; },
        [&](const std::vector<Label>& ch) {
            return visit(matching_from_choices(plan.closers, ch));
        });
}

std::vector<Matching> collect_matchings_with_closers(const PeakSet& closers,
                                                     std::span<const Label> labels) {
    std::vector<Matching> out;
    enumerate_matchings_with_closers(closers, labels, [&](const Matching& m) {
        out.push_back(m);
        return true;
    });
    return out;
}

void enumerate_independent_pairs(const PeakSet& closers,
                                 std::span<const Label> labels,
                                 const PairVisitor& visit) {
    std::vector<Matching> all = collect_matchings_with_closers(closers, labels);
    for (const Matching& above : all)
        for (const Matching& below : all)
            if (!visit(MatchingPair(above, below))) return;
}

std::vector<MatchingPair> collect_independent_pairs(const PeakSet& closers,
                                                    std::span<const Label> labels) {
    std::vector<MatchingPair> out;
    enumerate_independent_pairs(closers, labels, [&](const MatchingPair& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

int union_cycle_count(const MatchingPair& pair) {
    const auto& labels = pair.labels();
    std::vector<int> parent(labels.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](Label l) {
        return static_cast<int>(std::lower_bound(labels.begin(), labels.end(), l) -
                                labels.begin());
    };
    int components = static_cast<int>(labels.size());
    auto join = [&](const Arc& a) {
        int ra = find(index_of(a.first));
        int rb = find(index_of(a.second));
        if (ra != rb) {
            parent[ra] = rb;
            --components;
        }
    };
    for (const Arc& a : pair.above().arcs()) join(a);
    for (const Arc& a : pair.below().arcs()) join(a);
    return components;
}

void enumerate_single_cycle_pairs(const PeakSet& closers,
                                  std::span<const Label> labels,
                                  const PairVisitor& visit) {
    if (std::find(labels.begin(), labels.end(), 0) == labels.end())
        throw std::invalid_argument("single-cycle pairs need the label 0 (the extra opener)");
    CloserPlan plan = plan_closers(closers, labels);
    if (!plan.feasible) return;

    Label max_label = *std::max_element(labels.begin(), labels.end());
    std::vector<Label> above_partner(max_label + 1, -1);
    std::vector<Label> below_partner(max_label + 1, -1);

    // From a closer, the only incident arc drawn so far is its above arc.
    // Alternating above/below steps walk to the far end of its path; joining
    // the two ends of one path is what would close a circuit early.
    auto path_end_from = [&](Label closer) {
        Label cur = above_partner[closer];
        while (below_partner[cur] >= 0) cur = above_partner[below_partner[cur]];
        return cur;
    };

    bool stop = false;
    enumerate_matchings_with_closers(closers, labels, [&](const Matching& above) {
        for (const auto& [o, c] : above.arcs()) {
            above_partner[o] = c;
            above_partner[c] = o;
        }
        std::vector<Label> choice(plan.closers.size());
        std::vector<char> used(plan.openers.size(), 0);
        auto excluded = [&](std::size_t j, const std::vector<Label>& ch) -> Label {
            if (j + 1 == plan.closers.size()) return -1;  // last arc closes the cycle
            for (std::size_t jj = 0; jj < j; ++jj) {
                below_partner[plan.closers[jj]] = ch[jj];
                below_partner[ch[jj]] = plan.closers[jj];
            }
            Label end = path_end_from(plan.closers[j]);
            for (std::size_t jj = 0; jj < j; ++jj) {
                below_partner[plan.closers[jj]] = -1;
                below_partner[ch[jj]] = -1;
            }
            return end;
        };
        match_closers(plan, choice, used, 0, excluded,
                      [&](const std::vector<Label>& ch) {
                          if (!visit(MatchingPair(
                                  above, matching_from_choices(plan.closers, ch)))) {
                              stop = true;
                              return false;
                          }
                          return true;
                      });
        for (const auto& [o, c] : above.arcs()) {
            above_partner[o] = -1;
            above_partner[c] = -1;
        }
        return !stop;
    });
}

std::vector<MatchingPair> collect_single_cycle_pairs(const PeakSet& closers,
                                                     std::span<const Label> labels) {
    std::vector<MatchingPair> out;
    enumerate_single_cycle_pairs(closers, labels, [&](const MatchingPair& p) {
        out.push_back(p);
        return true;
    });
    return out;
}

namespace {

int odd_case_k(const PeakSet& closers) {
    if (closers.empty())
        throw std::invalid_argument("odd-case closer set must be non-empty");
    int k = closers.size() - 1;
    if (closers.values().back() != 2 * k + 1)
        throw std::invalid_argument("odd-case closer set must end at 2k+1");
    return k;
}

int128 clamped_product(const PeakSet& closers, int k, int offset) {
    int128 r = 1;
    for (int j = 1; j <= k; ++j) {
        long long factor = closers.values()[j - 1] - 2LL * j + offset;
        if (factor <= 0) return 0;
        r = checked_mul(r, factor);
    }
    return r;
}

}  // namespace

int128 count_odd_above(const PeakSet& closers) {
    int k = odd_case_k(closers);
    return clamped_product(closers, k, 2);
}

int128 count_odd_below(const PeakSet& closers) {
    int k = odd_case_k(closers);
    return clamped_product(closers, k, 1);
}

}  // namespace zigzag
