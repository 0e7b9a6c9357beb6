// zigzag: exact counting, enumeration, and verified bijections for
// alternating permutations with a given peak set, and for matchings with a
// given closer set.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "zigzag/bijections.hpp"
#include "zigzag/enumerate.hpp"
#include "zigzag/formulas.hpp"
#include "zigzag/json_io.hpp"
#include "zigzag/matching.hpp"
#include "zigzag/render.hpp"
#include "zigzag/verify.hpp"

namespace {

using namespace zigzag;
using nlohmann::json;

int euler_cap() {
    if (const char* env = std::getenv("ZIGZAG_EULER_CAP")) {
        int cap = std::atoi(env);
        if (cap <= 0) throw std::invalid_argument("ZIGZAG_EULER_CAP must be a positive integer");
        return cap;
    }
    return kEulerCapDefault;
}

PeakSet parse_peaks(const std::string& text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("empty entry in peak list");
        values.push_back(std::stoi(item));
    }
    return PeakSet(std::move(values));
}

// "4..9" or "7"
std::pair<int, int> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        int v = std::stoi(text);
        return {v, v};
    }
    int lo = std::stoi(text.substr(0, dots));
    int hi = std::stoi(text.substr(dots + 2));
    if (lo > hi) throw std::invalid_argument("range lower bound exceeds upper bound");
    return {lo, hi};
}

int run_euler(int max_n, const std::string& format) {
    int cap = euler_cap();
    if (max_n > cap)
        throw std::invalid_argument("euler: max n exceeds the cap (raise ZIGZAG_EULER_CAP)");
    if (format == "json") {
        json values = json::array();
        for (int n = 0; n <= max_n; ++n) values.push_back(count_to_json(euler_number(n, cap)));
        std::cout << json{{"max_n", max_n}, {"values", values}}.dump() << '\n';
    } else {
        for (int n = 0; n <= max_n; ++n) {
            std::string value = to_string(euler_number(n, cap));
            std::cout << "E_" << n << " = " << value << '\n';
        }
    }
    return 0;
}

int run_count(int n, const std::string& peaks_text, const std::string& format) {
    CountReport report = theorem_count(parse_peaks(peaks_text), n);
    if (format == "json") {
        std::cout << to_json(report).dump() << '\n';
    } else {
        std::cout << "peaks:   " << to_string(report.peaks) << '\n';
        std::cout << "count:   " << to_string(report.count) << '\n';
        std::cout << "factors:";
        for (long long f : report.factors) std::cout << ' ' << f;
        std::cout << '\n';
    }
    return 0;
}

int run_census(int n, int jobs, const std::string& format) {
    Census census = jobs == 1 ? peak_set_census(n) : peak_set_census_parallel(n, jobs);
    if (format == "json") {
        std::cout << to_json(census).dump() << '\n';
    } else {
        for (const auto& [peaks, count] : census.entries)
            std::cout << to_string(peaks) << ' ' << to_string(count) << '\n';
        std::cout << "total " << to_string(census.total) << '\n';
    }
    return 0;
}

int run_matchings(int n, const std::string& closers_text, bool count_only, bool diagram,
                  const std::string& format) {
    if (n <= 0 || n % 2 != 0)
        throw std::invalid_argument("matchings: --n must be a positive even label count");
    PeakSet closers = parse_peaks(closers_text);
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), 1);
    if (count_only) {
        int128 formula = count_matchings_with_closers(closers, n / 2);
        int128 enumerated = 0;
        enumerate_matchings_with_closers(closers, labels, [&](const Matching&) {
            enumerated = checked_add(enumerated, 1);
            return true;
        });
        std::cout << "formula    " << to_string(formula) << '\n';
        std::cout << "enumerated " << to_string(enumerated) << '\n';
        return formula == enumerated ? 0 : 1;
    }
    enumerate_matchings_with_closers(closers, labels, [&](const Matching& m) {
        if (format == "json")
            std::cout << to_json(m).dump() << '\n';
        else if (diagram)
            std::cout << ascii_diagram(m) << '\n';
        else
            std::cout << arcs_to_string(m) << '\n';
        return true;
    });
    return 0;
}

int run_map(const std::vector<int>& word, const std::string& format, bool diagram) {
    MapTrace trace = trace_map(Permutation(std::vector<Label>(word.begin(), word.end())));
    if (format == "json") {
        json j{{"above", to_json(trace.diagram.above())},
               {"below", to_json(trace.diagram.below())},
               {"closers", closer_set(trace.diagram.above()).values()},
               {"cycles", trace.cycles.cycles()},
               {"odd", trace.odd},
               {"peaks", trace.peaks.values()},
               {"reverse", trace.reversed.word()},
               {"word", trace.input.word()}};
        if (trace.odd) j["embedded"] = trace.embedded.word();
        std::cout << j.dump() << '\n';
    } else if (format == "dot") {
        std::cout << dot_diagram(trace.diagram);
    } else {
        std::cout << trace_to_string(trace, diagram);
    }
    return 0;
}

int run_verify(bool theorem, bool lemma, bool bijections, const std::string& n_range,
               const std::string& k_range, int jobs, const std::string& format) {
    if (!theorem && !lemma && !bijections)
        throw std::invalid_argument("verify: pick at least one of --theorem, --lemma, --bijections");
    bool all_ok = true;
    json results = json::array();
    auto note = [&](const std::string& line, bool ok, const json& j) {
        all_ok = all_ok && ok;
        if (format == "json")
            results.push_back(j);
        else
            std::cout << line << (ok ? ": ok" : ": MISMATCH") << '\n';
    };
    if (theorem) {
        auto [lo, hi] = parse_range(n_range);
        for (int n = lo; n <= hi; ++n) {
            TheoremReport r = verify_theorem(n, jobs);
            std::ostringstream line;
            line << "theorem n=" << n << " (census total " << to_string(r.census.total)
                 << ", " << r.census.entries.size() << " peak sets)";
            note(line.str(), r.ok(), to_json(r));
            if (!r.ok() && format != "json")
                for (const Mismatch& m : r.mismatches)
                    std::cout << "  " << to_string(m.peaks) << ' ' << m.what << ": expected "
                              << to_string(m.expected) << ", got " << to_string(m.actual)
                              << '\n';
        }
    }
    if (lemma) {
        auto [lo, hi] = parse_range(k_range);
        for (int k = lo; k <= hi; ++k) {
            LemmaReport r = verify_lemma(k);
            std::ostringstream line;
            line << "lemma k=" << k << " (total " << to_string(r.total_enumerated) << " = "
                 << to_string(r.double_factorial) << ")";
            note(line.str(), r.ok(), to_json(r));
        }
    }
    if (bijections) {
        auto [lo, hi] = parse_range(n_range);
        for (int n = lo; n <= hi; ++n) {
            BijectionReport r = verify_bijections(n);
            std::ostringstream line;
            line << "bijections n=" << n << " (" << to_string(r.roundtrips) << " roundtrips)";
            note(line.str(), r.ok(), to_json(r));
            if (!r.ok() && format != "json")
                for (const BijectionFailure& f : r.failures)
                    std::cout << "  " << to_string(f.peaks) << ' ' << f.what << '\n';
        }
    }
    if (format == "json") std::cout << results.dump() << '\n';
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alternating permutations, peak sets, and arc-diagram bijections"};
    app.require_subcommand(1);
    app.fallthrough();  // --format may follow the subcommand name

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}))
        ->capture_default_str();

    int exit_code = 0;

    auto* euler = app.add_subcommand("euler", "table of Euler numbers E_0..E_n");
    int euler_max = 10;
    euler->add_option("--max-n", euler_max, "largest n to print")->required();
    euler->callback([&] { exit_code = run_euler(euler_max, format); });

    auto* count = app.add_subcommand("count", "closed-form count for one peak set");
    int count_n = 0;
    std::string count_peaks;
    count->add_option("--n", count_n, "word length")->required();
    count->add_option("--peaks", count_peaks, "comma-separated peak set")->required();
    count->callback([&] { exit_code = run_count(count_n, count_peaks, format); });

    auto* census = app.add_subcommand("census", "exhaustive peak-set census of [n]");
    int census_n = 0;
    int census_jobs = 0;
    census->add_option("--n", census_n, "word length")->required();
    census->add_option("--jobs", census_jobs, "worker count (default: all cores, 1 = serial)");
    census->callback([&] { exit_code = run_census(census_n, census_jobs, format); });

    auto* matchings = app.add_subcommand("matchings", "matchings with a given closer set");
    int matchings_n = 0;
    std::string matchings_closers;
    bool count_only = false;
    bool matchings_diagram = false;
    matchings->add_option("--n", matchings_n, "label count (even)")->required();
    matchings->add_option("--closers", matchings_closers, "comma-separated closer set")
        ->required();
    matchings->add_flag("--count-only", count_only, "print formula and stream length only");
    matchings->add_flag("--diagram", matchings_diagram, "draw each matching as arcs");
    matchings->callback([&] {
        exit_code =
            run_matchings(matchings_n, matchings_closers, count_only, matchings_diagram, format);
    });

    auto* map = app.add_subcommand("map", "trace the encoding of one alternating word");
    std::vector<int> map_word;
    bool map_diagram = false;
    map->add_option("word", map_word, "alternating word, space-separated")->required();
    map->add_flag("--diagram", map_diagram, "append an ASCII arc diagram");
    map->callback([&] { exit_code = run_map(map_word, format, map_diagram); });

    auto* verify = app.add_subcommand("verify", "cross-check formulas against enumeration");
    bool v_theorem = false, v_lemma = false, v_bijections = false;
    std::string v_n = "2..8", v_k = "1..4";
    int v_jobs = 0;
    verify->add_flag("--theorem", v_theorem, "peak-set counts vs census");
    verify->add_flag("--lemma", v_lemma, "closer-set counts vs streams");
    verify->add_flag("--bijections", v_bijections, "encode/decode roundtrips");
    verify->add_option("--n", v_n, "n or n range, e.g. 4..9");
    verify->add_option("--k", v_k, "k or k range for --lemma");
    verify->add_option("--jobs", v_jobs, "census workers (default: all cores, 1 = serial)");
    verify->callback([&] {
        exit_code = run_verify(v_theorem, v_lemma, v_bijections, v_n, v_k, v_jobs, format);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return exit_code;
}
