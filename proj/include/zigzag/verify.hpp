#pragma once

#include <string>
#include <vector>

#include "zigzag/enumerate.hpp"
#include "zigzag/int128.hpp"
#include "zigzag/permutation.hpp"

namespace zigzag {

/// One disagreement between a closed-form count and an exhaustive count.
struct Mismatch {
    PeakSet peaks;
    int128 expected = 0;  // closed form
    int128 actual = 0;    // enumerated / census
    std::string what;     // which comparison failed
};

/// Closed-form peak-set counts vs. the exhaustive census of [n], candidate
/// set by candidate set, plus the total-vs-Euler-number check. Mismatches
/// are report content, not errors.
struct TheoremReport {
    int n = 0;
    Census census;
    int128 formula_total = 0;
    int128 euler = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};
TheoremReport verify_theorem(int n, int jobs = 1);

/// Closer-set matching counts vs. stream lengths over every k-subset of
/// [2k], plus the (2k-1)!! total check.
struct LemmaReport {
    int k = 0;
    int128 total_enumerated = 0;
    int128 double_factorial = 0;
    std::vector<Mismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};
LemmaReport verify_lemma(int k);

/// One failed roundtrip or set-level disagreement in the bijection suite.
struct BijectionFailure {
    Permutation witness;  // empty for per-peak-set failures
    PeakSet peaks;
    std::string what;
};

/// Runs the full encoding/decoding suite over every alternating permutation
/// of [n]: closer set == peak set, decode(encode(p)) == p, injectivity, and
/// per peak set the image size vs. both the pair enumeration and the closed
/// form (odd pairs must also be single cycles).
struct BijectionReport {
    int n = 0;
    int128 roundtrips = 0;
    std::vector<BijectionFailure> failures;
    bool ok() const { return failures.empty(); }
};
BijectionReport verify_bijections(int n);

}  // namespace zigzag
