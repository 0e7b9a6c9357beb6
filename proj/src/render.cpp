#include "zigzag/render.hpp"

#include <algorithm>
#include <sstream>

namespace zigzag {

std::string to_string(const Permutation& p) {
    std::string out;
    for (std::size_t i = 0; i < p.word().size(); ++i) {
        if (i > 0) out += ' ';
        out += std::to_string(p.word()[i]);
    }
    return out;
}

std::string to_string(const CyclePermutation& cp) {
    std::string out;
    for (const auto& cyc : cp.cycles()) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(cyc[i]);
        }
        out += ')';
    }
    return out;
}

std::string to_string(const PeakSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.values().size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(s.values()[i]);
    }
    return out + "}";
}

std::string arcs_to_string(const Matching& m) {
    std::string out;
    for (std::size_t i = 0; i < m.arcs().size(); ++i) {
        if (i > 0) out += ',';
        out += '{' + std::to_string(m.arcs()[i].first) + ',' +
               std::to_string(m.arcs()[i].second) + '}';
    }
    return out;
}

namespace {

struct ArcLayout {
    int lo = 0;   // column of the opener
    int hi = 0;   // column of the closer
    int row = 0;  // 1 = next to the vertex line
};

// Shorter arcs hug the vertex line; arcs sharing a row may not overlap.
std::vector<ArcLayout> layout_arcs(const std::vector<Arc>& arcs,
                                   const std::vector<int>& column,
                                   const std::vector<Label>& labels) {
    auto col = [&](Label l) {
        return column[std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()];
    };
    std::vector<ArcLayout> layout;
    layout.reserve(arcs.size());
    for (const auto& [o, c] : arcs) layout.push_back({col(o), col(c), 0});
    std::sort(layout.begin(), layout.end(), [](const ArcLayout& a, const ArcLayout& b) {
        return a.hi - a.lo != b.hi - b.lo ? a.hi - a.lo < b.hi - b.lo : a.lo < b.lo;
    });
    for (std::size_t i = 0; i < layout.size(); ++i) {
        for (int row = 1;; ++row) {
            bool free = true;
            for (std::size_t j = 0; j < i; ++j)
                if (layout[j].row == row && layout[j].lo <= layout[i].hi &&
                    layout[i].lo <= layout[j].hi) {
                    free = false;
                    break;
                }
            if (free) {
                layout[i].row = row;
                break;
            }
        }
    }
    return layout;
}

// One block of arc rows; `corner` distinguishes above ('.') from below (').
std::vector<std::string> arc_block(const std::vector<ArcLayout>& layout, int width,
                                   char corner) {
    int rows = 0;
    for (const ArcLayout& a : layout) rows = std::max(rows, a.row);
    std::vector<std::string> grid(rows, std::string(width, ' '));
    auto& at = grid;
    for (const ArcLayout& a : layout) {
        std::string& line = at[a.row - 1];
        for (int c = a.lo + 1; c < a.hi; ++c) line[c] = '-';
        line[a.lo] = corner;
        line[a.hi] = corner;
    }
    for (const ArcLayout& a : layout) {
        for (int r = 0; r < a.row - 1; ++r) {
            for (int c : {a.lo, a.hi}) at[r][c] = at[r][c] == '-' ? '+' : '|';
        }
    }
    return grid;
}

std::string rstrip(std::string s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
    return s;
}

}  // namespace

namespace {

std::string draw_diagram(const std::vector<Label>& labels, const std::vector<Arc>& above_arcs,
                         const std::vector<Arc>* below_arcs) {
    if (labels.empty()) return "(empty diagram)\n";
    std::vector<int> column(labels.size());
    std::string vertex_line;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i > 0) vertex_line += "  ";
        column[i] = static_cast<int>(vertex_line.size());
        vertex_line += std::to_string(labels[i]);
    }
    int width = static_cast<int>(vertex_line.size());

    auto above = arc_block(layout_arcs(above_arcs, column, labels), width, '.');

    std::string out;
    for (auto it = above.rbegin(); it != above.rend(); ++it) out += rstrip(*it) + '\n';
    out += vertex_line + '\n';
    if (below_arcs) {
        auto below = arc_block(layout_arcs(*below_arcs, column, labels), width, '\'');
        for (const std::string& line : below) out += rstrip(line) + '\n';
    }
    return out;
}

}  // namespace

std::string ascii_diagram(const MatchingPair& pair) {
    const std::vector<Arc>& below = pair.below().arcs();
    return draw_diagram(pair.labels(), pair.above().arcs(), &below);
}

std::string ascii_diagram(const Matching& m) {
    return draw_diagram(m.labels(), m.arcs(), nullptr);
}

std::string dot_diagram(const MatchingPair& pair) {
    std::ostringstream out;
    out << "graph arc_diagram {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    out << "  { rank=same;";
    for (Label l : pair.labels()) out << ' ' << l << ';';
    out << " }\n";
    const auto& labels = pair.labels();
    for (std::size_t i = 0; i + 1 < labels.size(); ++i)
        out << "  " << labels[i] << " -- " << labels[i + 1] << " [style=invis];\n";
    for (const auto& [o, c] : pair.above().arcs())
        out << "  " << o << " -- " << c << " [constraint=false];\n";
    for (const auto& [o, c] : pair.below().arcs())
        out << "  " << o << " -- " << c << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

std::string trace_to_string(const MapTrace& trace, bool with_diagram) {
    std::ostringstream out;
    out << "word:     " << to_string(trace.input) << '\n';
    out << "peaks:    " << to_string(trace.peaks) << '\n';
    if (trace.odd) out << "embedded: " << to_string(trace.embedded) << '\n';
    out << "reverse:  " << to_string(trace.reversed) << '\n';
    out << "cycles:   " << to_string(trace.cycles) << '\n';
    out << "above:    " << arcs_to_string(trace.diagram.above()) << '\n';
    out << "below:    " << arcs_to_string(trace.diagram.below()) << '\n';
    out << "closers:  " << to_string(closer_set(trace.diagram.above())) << '\n';
    if (with_diagram) out << '\n' << ascii_diagram(trace.diagram);
    return out.str();
}

}  // namespace zigzag
