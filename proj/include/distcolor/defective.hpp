#pragma once

#include "distcolor/graph.hpp"
#include "distcolor/setfamily.hpp"
#include "distcolor/trace.hpp"

#include <algorithm>
#include <vector>

namespace distcolor {

struct DefectReport {
    std::vector<Rat> node_mono;  // per node, weight of incident monochromatic edges
    Rat total_mono = 0;
    Rat total_weight = 0;
};

// Recomputes the defect of an assignment from scratch; the edge mask selects
// which edges count.
inline DefectReport defect_report(const SimGraph& g, const std::vector<int>& assignment,
                                  const std::vector<char>* edge_keep = nullptr) {
    DefectReport r;
    r.node_mono.assign(g.n(), Rat(0));
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        Rat w = g.weight_or_one(e);
        r.total_weight += w;
        const auto& ed = g.edges()[e];
        if (assignment[ed.u] == assignment[ed.v]) {
            r.total_mono += w;
            r.node_mono[ed.u] += w;
            r.node_mono[ed.v] += w;
        }
    }
    return r;
}

struct DefectiveColoring {
    std::vector<int> assignment;  // colors in [num_colors]
    int num_colors = 0;
    DefectReport report;
};

// q sequential phases by schedule color; each node picks the color in [C]
// minimizing monochromatic weight toward already-decided neighbors. The
// minimum is at most the average, so total monochromatic weight <= W/C.
inline DefectiveColoring greedy_avg_defective(const SimGraph& g, const std::vector<int>& schedule,
                                              int C, const std::vector<char>* edge_keep = nullptr,
                                              MetricsTrace* trace = nullptr) {
    if (C < 1) throw std::invalid_argument("greedy_avg_defective: C >= 1 required");
    int q = 0;
    for (int v = 0; v < g.n(); ++v) q = std::max(q, schedule[v]);
    std::vector<std::vector<int>> phase(q + 1);
    for (int v = 0; v < g.n(); ++v) phase[schedule[v]].push_back(v);

    DefectiveColoring out;
    out.num_colors = C;
    out.assignment.assign(g.n(), 0);
    for (int i = 1; i <= q; ++i) {
        long msgs = 0;
        for (int v : phase[i]) {
            std::map<int, Rat> toward;  // decided-neighbor weight per color
            for (auto [u, e] : g.adj(v)) {
                if (edge_keep && !(*edge_keep)[e]) continue;
                if (schedule[u] == i)
                    throw ImproperInputError("greedy_avg_defective: schedule not proper on kept edges");
                if (out.assignment[u] != 0) toward[out.assignment[u]] += g.weight_or_one(e);
            }
            int best = 0;
            if (int(toward.size()) < C) {
                // smallest color in [C] with no decided-neighbor weight
                int cand = 1;
                for (const auto& [c, w] : toward) {
                    if (c != cand) break;
                    ++cand;
                }
                best = cand;
            } else {
                for (const auto& [c, w] : toward)
                    if (best == 0 || w < toward.at(best)) best = c;
            }
            out.assignment[v] = best;
            msgs += g.degree(v);
        }
        if (trace) trace->charge_round(bit_width_of(std::uint64_t(C)), msgs);
    }
    out.report = defect_report(g, out.assignment, edge_keep);
    return out;
}

namespace detail {

// Subgraph on the nodes with node_keep set, using only the masked edges.
// Returned original-index map follows the subgraph's node order.
inline std::pair<SimGraph, std::vector<int>> masked_subgraph(const SimGraph& g,
                                                             const std::vector<char>& node_keep,
                                                             const std::vector<char>* edge_keep) {
    std::vector<long long> ids;
    std::vector<int> orig;
    for (int v = 0; v < g.n(); ++v)
        if (node_keep[v]) {
            ids.push_back(g.id(v));
            orig.push_back(v);
        }
    std::vector<std::pair<long long, long long>> edges;
    std::vector<Rat> w;
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        const auto& ed = g.edges()[e];
        if (node_keep[ed.u] && node_keep[ed.v]) {
            edges.push_back({g.id(ed.u), g.id(ed.v)});
            w.push_back(g.weight_or_one(e));
        }
    }
    return {SimGraph::build(std::move(ids), edges, std::move(w)), std::move(orig)};
}

inline int ceil_frac_int(const Rat& num, const Rat& den) {
    Int c = rat_ceil(num / den);
    if (c > 1000000000) throw std::invalid_argument("palette bound overflows");
    return int(c);
}

}  // namespace detail

// Weighted average eps-relative defective ceil(2/eps)-coloring. eps >= 1/2:
// one per-node defective pass at eps/2, then greedy on the bichromatic
// remainder. eps < 1/2: per-node pass at 1/4 splits the nodes into s classes
// whose monochromatic subgraphs carry <= W/4 weight; those vertex-disjoint
// subgraphs are recursed at 2*eps and the combined s*ceil(1/eps)-coloring
// schedules a final greedy pass.
inline DefectiveColoring recursive_avg_defective(const SimGraph& g, const std::vector<int>& schedule,
                                                 const Rat& eps,
                                                 const std::vector<char>* edge_keep = nullptr,
                                                 MetricsTrace* trace = nullptr) {
    if (eps <= 0) throw std::invalid_argument("recursive_avg_defective: eps > 0 required");
    int C = detail::ceil_frac_int(Rat(2), eps);

    bool any_edge = false;
    for (int e = 0; e < g.m() && !any_edge; ++e)
        if (!edge_keep || (*edge_keep)[e]) any_edge = true;
    if (!any_edge) {
        DefectiveColoring out;
        out.num_colors = C;
        out.assignment.assign(g.n(), 1);
        out.report = defect_report(g, out.assignment, edge_keep);
        return out;
    }

    if (eps >= Rat(1, 2)) {
        auto wd = weighted_defective(g, schedule, eps / 2, edge_keep, trace);
        auto out = greedy_avg_defective(g, wd.coloring, C, &wd.edge_keep, trace);
        out.report = defect_report(g, out.assignment, edge_keep);
        return out;
    }

    auto wd = weighted_defective(g, schedule, Rat(1, 4), edge_keep, trace);
    int sub_colors = detail::ceil_frac_int(Rat(1), eps);

    // recurse on each class's monochromatic subgraph (kept intra-class edges)
    std::vector<int> klass = wd.coloring;
    std::vector<int> classes(klass);
    std::sort(classes.begin(), classes.end());
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());

    std::vector<int> class_rank(g.n());
    std::vector<std::vector<int>> members(classes.size());
    for (int v = 0; v < g.n(); ++v) {
        int r = int(std::lower_bound(classes.begin(), classes.end(), klass[v]) - classes.begin());
        class_rank[v] = r;
        members[r].push_back(v);
    }
    std::vector<std::vector<int>> class_edges(classes.size());
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        const auto& ed = g.edges()[e];
        if (klass[ed.u] == klass[ed.v]) class_edges[class_rank[ed.u]].push_back(e);
    }

    std::vector<int> combined(g.n(), 0);
    long par_rounds = 0, par_bits = 0, par_msgs = 0;
    for (std::size_t ci = 0; ci < classes.size(); ++ci) {
        std::vector<long long> ids;
        std::vector<int> orig;
        for (int v : members[ci]) {
            ids.push_back(g.id(v));
            orig.push_back(v);
        }
        std::vector<std::pair<long long, long long>> sub_e;
        std::vector<Rat> sub_w;
        for (int e : class_edges[ci]) {
            const auto& ed = g.edges()[e];
            sub_e.push_back({g.id(ed.u), g.id(ed.v)});
            sub_w.push_back(g.weight_or_one(e));
        }
        if (sub_e.empty()) {
            for (int v : members[ci]) combined[v] = int(ci) * sub_colors + 1;
            continue;
        }
        SimGraph sub = SimGraph::build(std::move(ids), sub_e, std::move(sub_w));
        std::vector<int> sub_schedule(sub.n());
        for (int k = 0; k < sub.n(); ++k) sub_schedule[k] = schedule[orig[k]];
        MetricsTrace sub_trace(trace ? trace->model() : Model::local());
        auto rec = recursive_avg_defective(sub, sub_schedule, 2 * eps, nullptr, &sub_trace);
        for (int k = 0; k < sub.n(); ++k)
            combined[orig[k]] = int(ci) * sub_colors + rec.assignment[k];
        par_rounds = std::max(par_rounds, sub_trace.rounds());
        par_bits = std::max(par_bits, sub_trace.max_message_bits());
        par_msgs += sub_trace.total_messages();
    }
    // classes are vertex-disjoint, so the recursions run in parallel
    if (trace && par_rounds > 0)
        trace->charge_rounds(par_rounds, par_bits, par_msgs / par_rounds);

    // drop edges the combined coloring leaves monochromatic (recursion defect)
    std::vector<char> keep2 = edge_keep ? *edge_keep : std::vector<char>(g.m(), 1);
    for (int e = 0; e < g.m(); ++e) {
        const auto& ed = g.edges()[e];
        if (keep2[e] && combined[ed.u] == combined[ed.v]) keep2[e] = 0;
    }
    auto out = greedy_avg_defective(g, combined, C, &keep2, trace);
    out.report = defect_report(g, out.assignment, edge_keep);
    return out;
}

// Weighted average (1+delta)/C-relative defective C-coloring. Small palettes
// go straight to the greedy pass; otherwise a per-node defective pass at
// delta/(2C) and a recursive pass at (delta/2)/C shrink the schedule first.
inline DefectiveColoring avg_defective(const SimGraph& g, const std::vector<int>& schedule, int C,
                                       const Rat& delta, const std::vector<char>* edge_keep = nullptr,
                                       MetricsTrace* trace = nullptr) {
    if (C < 1 || delta <= 0) throw std::invalid_argument("avg_defective: C >= 1, delta > 0 required");
    int q = 0;
    for (int v = 0; v < g.n(); ++v) q = std::max(q, schedule[v]);
    if (Rat(q) <= Rat(C) / delta) {
        auto out = greedy_avg_defective(g, schedule, C, edge_keep, trace);
        out.report = defect_report(g, out.assignment, edge_keep);
        return out;
    }
    auto wd = weighted_defective(g, schedule, delta / (2 * C), edge_keep, trace);
    auto rec = recursive_avg_defective(g, wd.coloring, delta / (2 * C), &wd.edge_keep, trace);
    std::vector<char> keep2 = wd.edge_keep;
    for (int e = 0; e < g.m(); ++e) {
        const auto& ed = g.edges()[e];
        if (keep2[e] && rec.assignment[ed.u] == rec.assignment[ed.v]) keep2[e] = 0;
    }
    auto out = greedy_avg_defective(g, rec.assignment, C, &keep2, trace);
    out.report = defect_report(g, out.assignment, edge_keep);
    return out;
}

}  // namespace distcolor
