#include <doctest.h>

#include <set>

#include "oracle_helpers.hpp"
#include "zigzag/bijections.hpp"
#include "zigzag/enumerate.hpp"

using namespace zigzag;

namespace {

Permutation perm(std::vector<Label> w) { return Permutation(std::move(w)); }

CyclePermutation cycles(std::vector<std::vector<Label>> c) {
    return CyclePermutation(std::move(c));
}

MatchingPair fig1() {
    return {Matching({{1, 8}, {2, 4}, {3, 5}, {6, 7}}),
            Matching({{1, 5}, {2, 4}, {3, 8}, {6, 7}})};
}

MatchingPair fig2() {
    return {Matching({{0, 5}, {1, 4}, {2, 9}, {3, 7}, {6, 8}}),
            Matching({{0, 8}, {1, 9}, {2, 5}, {3, 4}, {6, 7}})};
}

}  // namespace

TEST_CASE("tau cuts an up-down word at its left-to-right minima") {
    CHECK(tau(perm({6, 7, 2, 4, 1, 8, 3, 5})) == cycles({{6, 7}, {2, 4}, {1, 8, 3, 5}}));
    CHECK(tau(perm({0, 5, 2, 9, 1, 4, 3, 7, 6, 8})) ==
          cycles({{0, 5, 2, 9, 1, 4, 3, 7, 6, 8}}));
    CHECK(tau(perm({1, 2})) == cycles({{1, 2}}));
    CHECK_THROWS_AS(tau(perm({2, 1})), std::invalid_argument);     // not up-down
    CHECK_THROWS_AS(tau(perm({2, 3, 1})), std::invalid_argument);  // odd, min not first
}

TEST_CASE("tau_inverse concatenates the cycle words") {
    CHECK(tau_inverse(cycles({{6, 7}, {2, 4}, {1, 8, 3, 5}})) ==
          perm({6, 7, 2, 4, 1, 8, 3, 5}));
    CHECK(tau_inverse(cycles({{1, 2}})) == perm({1, 2}));
    CHECK_THROWS_AS(tau_inverse(cycles({{1, 2, 4, 3}})), std::invalid_argument);
    // cycle up-down, but the concatenation 2 4 3 1 5 is not up-down
    CHECK_THROWS_AS(tau_inverse(cycles({{2, 4, 3}, {1, 5}})), std::invalid_argument);
}

TEST_CASE("tau round trips over every up-down word of [2k], 2k <= 8") {
    for (int n = 2; n <= 8; n += 2) {
        std::set<CyclePermutation> image;
        for (const Permutation& p : gen_up_down(n)) {
            CyclePermutation cp = tau(p);
            REQUIRE(is_cycle_up_down(cp));
            REQUIRE(all_cycles_even(cp));
            REQUIRE(tau_inverse(cp) == p);
            image.insert(cp);
        }
        // tau is injective and lands exactly on the even-cycle generators.
        auto direct = gen_cycle_updown_even(n / 2);
        CHECK(image == std::set<CyclePermutation>(direct.begin(), direct.end()));
    }
}

TEST_CASE("arc diagrams of the worked examples") {
    CHECK(to_arc_diagram(cycles({{6, 7}, {2, 4}, {1, 8, 3, 5}})) == fig1());
    CHECK(to_arc_diagram(cycles({{0, 5, 2, 9, 1, 4, 3, 7, 6, 8}})) == fig2());
    MatchingPair trivial = to_arc_diagram(cycles({{1, 2}}));
    CHECK(trivial.above() == Matching({{1, 2}}));
    CHECK(trivial.below() == Matching({{1, 2}}));
    CHECK_THROWS_AS(to_arc_diagram(cycles({{1, 3, 2}})), std::invalid_argument);
    CHECK_THROWS_AS(to_arc_diagram(cycles({{2}, {1}})), std::invalid_argument);
}

TEST_CASE("from_arc_diagram inverts to_arc_diagram") {
    CHECK(from_arc_diagram(fig1()) == cycles({{6, 7}, {2, 4}, {1, 8, 3, 5}}));
    CHECK(from_arc_diagram(fig2()) == cycles({{0, 5, 2, 9, 1, 4, 3, 7, 6, 8}}));
    CHECK(from_arc_diagram(MatchingPair(Matching({{1, 2}}), Matching({{1, 2}}))) ==
          cycles({{1, 2}}));

    for (int k = 1; k <= 4; ++k) {
        for (const CyclePermutation& cp : gen_cycle_updown_even(k))
            REQUIRE(from_arc_diagram(to_arc_diagram(cp)) == cp);
    }
}

TEST_CASE("even encoding reproduces the worked example") {
    CHECK(even_encode(perm({5, 3, 8, 1, 4, 2, 7, 6})) == fig1());
    MatchingPair smallest = even_encode(perm({2, 1}));
    CHECK(smallest.above() == Matching({{1, 2}}));
    CHECK(smallest.below() == Matching({{1, 2}}));
    CHECK_THROWS_AS(even_encode(perm({1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(even_encode(perm({2, 1, 3})), std::invalid_argument);
}

TEST_CASE("even decoding inverts the worked example") {
    CHECK(even_decode(fig1()) == perm({5, 3, 8, 1, 4, 2, 7, 6}));
    CHECK(even_decode(MatchingPair(Matching({{1, 2}}), Matching({{1, 2}}))) == perm({2, 1}));
}

TEST_CASE("even bijection: closer set is the peak set, decode inverts (n <= 8)") {
    for (int n : {2, 4, 6, 8}) {
        for_each_alternating(n, [&](std::span<const Label> w) {
            Permutation p(std::vector<Label>(w.begin(), w.end()));
            MatchingPair pair = even_encode(p);
            REQUIRE(closer_set(pair.above()) == peak_values(p));
            REQUIRE(even_decode(pair) == p);
            return true;
        });
    }
}

TEST_CASE("odd encoding reproduces the worked example") {
    CHECK(odd_encode(perm({8, 6, 7, 3, 4, 1, 9, 2, 5})) == fig2());
    MatchingPair smallest = odd_encode(perm({1}));
    CHECK(smallest.above() == Matching({{0, 1}}));
    CHECK(smallest.below() == Matching({{0, 1}}));
    CHECK_THROWS_AS(odd_encode(perm({2, 1})), std::invalid_argument);
}

TEST_CASE("odd decoding inverts the worked example") {
    CHECK(odd_decode(fig2()) == perm({8, 6, 7, 3, 4, 1, 9, 2, 5}));
    CHECK(odd_decode(MatchingPair(Matching({{0, 1}}), Matching({{0, 1}}))) == perm({1}));
    // two separate circles: not decodable
    MatchingPair two_circles(Matching({{0, 1}, {2, 3}}), Matching({{0, 1}, {2, 3}}));
    CHECK_THROWS_AS(odd_decode(two_circles), std::invalid_argument);
    // labels must contain 0
    CHECK_THROWS_AS(odd_decode(MatchingPair(Matching({{1, 2}}), Matching({{1, 2}}))),
                    std::invalid_argument);
}

TEST_CASE("odd bijection: single cycle, closer set = peak set, round trip (n <= 7)") {
    for (int n : {1, 3, 5, 7}) {
        for_each_alternating(n, [&](std::span<const Label> w) {
            Permutation p(std::vector<Label>(w.begin(), w.end()));
            MatchingPair pair = odd_encode(p);
            REQUIRE(union_cycle_count(pair) == 1);
            REQUIRE(closer_set(pair.above()) == peak_values(p));
            REQUIRE(odd_decode(pair) == p);
            return true;
        });
    }
}

TEST_CASE("trace stages match the worked examples") {
    MapTrace even = trace_map(perm({5, 3, 8, 1, 4, 2, 7, 6}));
    CHECK_FALSE(even.odd);
    CHECK(even.reversed == perm({6, 7, 2, 4, 1, 8, 3, 5}));
    CHECK(even.cycles == cycles({{6, 7}, {2, 4}, {1, 8, 3, 5}}));
    CHECK(even.diagram == fig1());
    CHECK(even.peaks.values() == std::vector<int>{4, 5, 7, 8});

    MapTrace odd = trace_map(perm({8, 6, 7, 3, 4, 1, 9, 2, 5}));
    CHECK(odd.odd);
    CHECK(odd.embedded == perm({8, 6, 7, 3, 4, 1, 9, 2, 5, 0}));
    CHECK(odd.reversed == perm({0, 5, 2, 9, 1, 4, 3, 7, 6, 8}));
    CHECK(odd.cycles == cycles({{0, 5, 2, 9, 1, 4, 3, 7, 6, 8}}));
    CHECK(odd.diagram == fig2());
    CHECK(odd.peaks.values() == std::vector<int>{4, 5, 7, 8, 9});

    CHECK_THROWS_AS(trace_map(perm({1, 2})), std::invalid_argument);
}
