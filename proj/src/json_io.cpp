#include "zigzag/json_io.hpp"

#include <stdexcept>

namespace zigzag {

using nlohmann::json;

json count_to_json(int128 v) {
    if (fits_int64(v)) return static_cast<std::int64_t>(v);
    return to_string(v);
}

json to_json(const Permutation& p) {
    return json{{"labels", p.labels()}, {"word", p.word()}};
}

json to_json(const Matching& m) {
    json arcs = json::array();
    for (const auto& [o, c] : m.arcs()) arcs.push_back(json::array({o, c}));
    return json{{"arcs", arcs}, {"labels", m.labels()}};
}

json to_json(const MatchingPair& pair) {
    return json{{"above", to_json(pair.above())}, {"below", to_json(pair.below())}};
}

json to_json(const Census& census) {
    json entries = json::array();
    for (const auto& [peaks, count] : census.entries)
        entries.push_back(json{{"count", count_to_json(count)}, {"peaks", peaks.values()}});
    return json{{"entries", entries}, {"n", census.n}};
}

json to_json(const CountReport& report) {
    return json{{"count", count_to_json(report.count)},
                {"factors", report.factors},
                {"peaks", report.peaks.values()}};
}

namespace {

json mismatches_to_json(const std::vector<Mismatch>& mismatches) {
    json out = json::array();
    for (const Mismatch& m : mismatches)
        out.push_back(json{{"actual", count_to_json(m.actual)},
                           {"expected", count_to_json(m.expected)},
                           {"peaks", m.peaks.values()},
                           {"what", m.what}});
    return out;
}

}  // namespace

json to_json(const TheoremReport& report) {
    return json{{"census_total", count_to_json(report.census.total)},
                {"euler", count_to_json(report.euler)},
                {"formula_total", count_to_json(report.formula_total)},
                {"mismatches", mismatches_to_json(report.mismatches)},
                {"n", report.n},
                {"ok", report.ok()}};
}

json to_json(const LemmaReport& report) {
    return json{{"double_factorial", count_to_json(report.double_factorial)},
                {"k", report.k},
                {"mismatches", mismatches_to_json(report.mismatches)},
                {"ok", report.ok()},
                {"total_enumerated", count_to_json(report.total_enumerated)}};
}

json to_json(const BijectionReport& report) {
    json failures = json::array();
    for (const BijectionFailure& f : report.failures)
        failures.push_back(json{{"peaks", f.peaks.values()},
                                {"what", f.what},
                                {"witness", f.witness.word()}});
    return json{{"failures", failures},
                {"n", report.n},
                {"ok", report.ok()},
                {"roundtrips", count_to_json(report.roundtrips)}};
}

namespace {

std::vector<Label> labels_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw std::invalid_argument(std::string("missing array field: ") + key);
    return j.at(key).get<std::vector<Label>>();
}

}  // namespace

Permutation permutation_from_json(const json& j) {
    Permutation p(labels_field(j, "word"));
    if (labels_field(j, "labels") != p.labels())
        throw std::invalid_argument("labels field disagrees with the word");
    return p;
}

Matching matching_from_json(const json& j) {
    std::vector<Arc> arcs;
    for (const auto& a : j.at("arcs")) {
        if (!a.is_array() || a.size() != 2)
            throw std::invalid_argument("arc entries must be [opener, closer] pairs");
        arcs.emplace_back(a[0].get<Label>(), a[1].get<Label>());
    }
    Matching m(std::move(arcs));
    if (labels_field(j, "labels") != m.labels())
        throw std::invalid_argument("labels field disagrees with the arcs");
    return m;
}

MatchingPair pair_from_json(const json& j) {
    return MatchingPair(matching_from_json(j.at("above")),
                        matching_from_json(j.at("below")));
}

}  // namespace zigzag
