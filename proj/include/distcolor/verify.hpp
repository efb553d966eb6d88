#pragma once

#include "distcolor/graph.hpp"

#include <optional>
#include <vector>

namespace distcolor {

// Partial or total coloring; 0 = uncolored, colors are positive.
struct ColorAssignment {
    std::vector<int> color;
    int palette_bound = 0;  // 0 = unknown

    explicit ColorAssignment(int n = 0, int bound = 0) : color(n, 0), palette_bound(bound) {}

    bool total() const {
        for (int c : color)
            if (c == 0) return false;
        return true;
    }
    int max_color() const {
        int m = 0;
        for (int c : color) m = std::max(m, c);
        return m;
    }
};

struct VerifyReport {
    long monochromatic_edges = 0;
    long list_violations = 0;
    long uncolored_nodes = 0;
    bool proper() const { return monochromatic_edges == 0; }
    bool valid() const { return proper() && list_violations == 0 && uncolored_nodes == 0; }
};

inline VerifyReport verify_coloring(const SimGraph& g, const ColorAssignment& a,
                                    const std::vector<std::vector<int>>* lists = nullptr) {
    VerifyReport r;
    for (int v = 0; v < g.n(); ++v) {
        int c = a.color[v];
        if (c == 0) {
            ++r.uncolored_nodes;
            continue;
        }
        if (lists) {
            const auto& L = (*lists)[v];
            if (std::find(L.begin(), L.end(), c) == L.end()) ++r.list_violations;
        }
    }
    for (const auto& e : g.edges())
        if (a.color[e.u] != 0 && a.color[e.u] == a.color[e.v]) ++r.monochromatic_edges;
    return r;
}

// Checks properness of a plain color vector on the edges selected by `keep`
// (all edges when keep is null). Uncolored (0) never conflicts.
inline bool proper_on(const SimGraph& g, const std::vector<int>& color,
                      const std::vector<char>* keep = nullptr) {
    for (int e = 0; e < g.m(); ++e) {
        if (keep && !(*keep)[e]) continue;
        const auto& ed = g.edges()[e];
        if (color[ed.u] != 0 && color[ed.u] == color[ed.v]) return false;
    }
    return true;
}

}  // namespace distcolor
