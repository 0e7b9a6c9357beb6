#include "zigzag/formulas.hpp"

#include <stdexcept>

namespace zigzag {

namespace {

void validate_candidate(const PeakSet& peaks, int count, int last, const char* who) {
    if (peaks.size() != count)
        throw std::invalid_argument(std::string(who) + ": wrong number of peak entries");
    if (peaks.values().front() < 2)
        throw std::invalid_argument(std::string(who) + ": peak entries must be >= 2");
    if (peaks.values().back() != last)
        throw std::invalid_argument(std::string(who) + ": peak set must end at n");
}

int128 product_or_zero(const std::vector<long long>& factors) {
    int128 r = 1;
    for (long long f : factors) {
        if (f <= 0) return 0;
        r = checked_mul(r, f);
    }
    return r;
}

}  // namespace

CountReport s_count(const PeakSet& peaks, int k) {
    if (k < 1) throw std::invalid_argument("s_count: k must be >= 1");
    validate_candidate(peaks, k, 2 * k, "s_count");
    CountReport report;
    report.peaks = peaks;
    for (int j = 1; j <= k - 1; ++j) {
        long long base = peaks.values()[j - 1] - 2LL * j + 1;
        // A base below -1 is always preceded by a base of 0 (consecutive
        // bases drop by at most 1), so squaring cannot hide a sign.
        report.factors.push_back(base <= 0 ? base : base * base);
    }
    report.count = product_or_zero(report.factors);
    return report;
}

CountReport t_count(const PeakSet& peaks, int k) {
    if (k < 1) throw std::invalid_argument("t_count: k must be >= 1");
    validate_candidate(peaks, k + 1, 2 * k + 1, "t_count");
    CountReport report;
    report.peaks = peaks;
    for (int j = 1; j <= k; ++j) {
        long long v = peaks.values()[j - 1];
        report.factors.push_back(v - 2LL * j + 2);
        report.factors.push_back(v - 2LL * j + 1);
    }
    report.count = product_or_zero(report.factors);
    return report;
}

CountReport theorem_count(const PeakSet& peaks, int n) {
    if (n < 2) throw std::invalid_argument("theorem_count: n must be >= 2");
    return n % 2 == 0 ? s_count(peaks, n / 2) : t_count(peaks, (n - 1) / 2);
}

int128 euler_number(int n, int cap) {
    if (n < 0) throw std::invalid_argument("euler_number: n must be >= 0");
    if (n > cap) throw std::invalid_argument("euler_number: n exceeds the configured cap");
    // Boustrophedon sweep: row[0] = 1, then each row accumulates the previous
    // one read in reverse; the last entry of row n is E_n.
    std::vector<int128> row = {1};
    for (int m = 1; m <= n; ++m) {
        std::vector<int128> next(m + 1);
        next[0] = 0;
        for (int j = 1; j <= m; ++j) next[j] = checked_add(next[j - 1], row[m - j]);
        row = std::move(next);
    }
    return row.back();
}

void for_each_candidate_peak_set(int n, const std::function<bool(const PeakSet&)>& visit) {
    if (n < 2) throw std::invalid_argument("candidate peak sets need n >= 2");
    int entries = (n + 1) / 2;
    // Choose entries-1 values from {2, ..., n-1}; n itself is forced.
    std::vector<int> chosen(entries);
    chosen[entries - 1] = n;
    auto rec = [&](auto&& self, int pos, int low) -> bool {
        if (pos == entries - 1) return visit(PeakSet(chosen));
        for (int v = low; v <= n - 1 - (entries - 2 - pos); ++v) {
            chosen[pos] = v;
            if (!self(self, pos + 1, v + 1)) return false;
        }
        return true;
    };
    rec(rec, 0, 2);
}

std::vector<PeakSet> candidate_peak_sets(int n) {
    std::vector<PeakSet> out;
    for_each_candidate_peak_set(n, [&](const PeakSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace zigzag
