#pragma once

#include "distcolor/coloring.hpp"

#include <algorithm>
#include <vector>

namespace distcolor {

struct WeightedISResult {
    std::vector<char> in_set;
    Rat selected_weight = 0;
    Rat total_weight = 0;
    int merged_palette = 0;
};

// Constant-fraction weighted independent set on a degree-<=4 graph. The seed
// coloring is reduced to its fixed point, merged greedily down to 5 classes,
// then one pass over the classes: an undecided node joins iff no neighbor has
// joined and it outweighs every still-undecided neighbor (ties to the smaller
// id); everyone else is decided out. Chains of declined nodes have length at
// most the class count, so the selected weight is at least W/(4+1)^(5+1).
inline WeightedISResult weighted_is(const SimGraph& h, const std::vector<Rat>& w,
                                    const std::vector<int>& seed_coloring,
                                    MetricsTrace* trace = nullptr) {
    if (h.max_degree() > 4) throw InstanceError("weighted_is requires max degree <= 4");
    WeightedISResult res;
    res.in_set.assign(h.n(), 0);
    for (int v = 0; v < h.n(); ++v) res.total_weight += w[v];
    if (h.n() == 0) return res;

    auto lin = linial_color(h, seed_coloring, std::max(1, h.max_degree()), trace);
    int lin_classes = 0;
    for (int v = 0; v < h.n(); ++v) lin_classes = std::max(lin_classes, lin.coloring[v]);

    // merge to 5 classes: smallest free color among already-merged neighbors
    std::vector<int> cls(h.n(), 0);
    for (int i = 1; i <= lin_classes; ++i) {
        long msgs = 0;
        for (int v = 0; v < h.n(); ++v) {
            if (lin.coloring[v] != i) continue;
            bool used[6] = {};
            for (auto [u, e] : h.adj(v))
                if (cls[u] >= 1 && cls[u] <= 5) used[cls[u]] = true;
            for (int c = 1; c <= 5; ++c)
                if (!used[c]) {
                    cls[v] = c;
                    break;
                }
            msgs += h.degree(v);
        }
        if (trace) trace->charge_round(3, msgs);
    }
    res.merged_palette = 5;

    std::vector<char> joined(h.n(), 0), decided(h.n(), 0);
    for (int i = 1; i <= 5; ++i) {
        long msgs = 0;
        std::vector<int> act;
        for (int v = 0; v < h.n(); ++v)
            if (cls[v] == i && !decided[v]) act.push_back(v);
        for (int v : act) {
            bool blocked = false, heaviest = true;
            for (auto [u, e] : h.adj(v)) {
                if (joined[u]) blocked = true;
                if (!decided[u] && cls[u] != i) {
                    if (w[u] > w[v] || (w[u] == w[v] && h.id(u) < h.id(v))) heaviest = false;
                }
            }
            if (!blocked && heaviest) joined[v] = 1;
            msgs += h.degree(v);
        }
        for (int v : act) decided[v] = 1;
        if (trace) trace->charge_round(1, msgs);
    }
    for (int v = 0; v < h.n(); ++v)
        if (joined[v]) {
            res.in_set[v] = 1;
            res.selected_weight += w[v];
        }
    // provable floor (Delta+1)^(c0+1) = 5^6, plus the stronger asserted floor
    if (res.selected_weight * 15625 < res.total_weight)
        throw std::logic_error("weighted_is below its provable weight floor");
    if (res.selected_weight * 2048 < res.total_weight)
        throw std::logic_error("weighted_is below the asserted 1/2048 floor");
    return res;
}

struct WeightedPartialStats {
    Rat total_weight = 0, colored_weight = 0;
    int repetitions = 0;
    std::vector<Rat> per_rep_colored;
};

// Weighted partial list coloring, LOCAL: round the usual fractional spread
// under the weighted monochromatic cost (w_u + w_v per monochromatic edge,
// initial cost <= 2W), keep the nodes with fewer than 4 same-color neighbors
// (weight >= W/3), and commit a constant-fraction weighted independent set of
// their conflict graph; repeat until at least half the weight is colored.
inline ColorAssignment weighted_partial_local(const ListColoringInstance& inst,
                                              const std::vector<Rat>& weights,
                                              const std::vector<int>& helper,
                                              MetricsTrace* trace = nullptr,
                                              WeightedPartialStats* stats = nullptr) {
    inst.validate();
    const SimGraph& g = inst.graph;
    Rat W = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (weights[v] < 0) throw InstanceError("negative node weight");
        W += weights[v];
    }
    if (stats) stats->total_weight = W;

    ColorAssignment out(g.n(), inst.palette);
    Rat colored = 0;
    for (int rep = 0; rep < 8; ++rep) {
        if (2 * colored >= W) break;
        auto lists = detail::residual_lists(g, inst.lists, out.color);
        std::vector<char> unc(g.n(), 0);
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) unc[v] = 1;
        auto [gr, orig] = g.induced(unc);
        Rat Wr = 0;
        std::vector<Rat> wr(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            wr[k] = weights[orig[k]];
            Wr += wr[k];
        }

        long long den = 1;
        std::vector<std::vector<int>> hat(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            const auto& L = lists[orig[k]];
            if (int(L.size()) < gr.degree(k) + 1)
                throw std::logic_error("residual instance lost the degree+1 condition");
            long long hd = detail::pow2_at_most(gr.degree(k) + 1);
            hat[k].assign(L.begin(), L.begin() + hd);
            den = std::max(den, hd);
        }
        FractionalLabeling x(gr.n(), den);
        for (int k = 0; k < gr.n(); ++k) {
            std::vector<FractionalLabeling::Entry> e;
            long long hd = (long long)hat[k].size();
            for (int c : hat[k]) e.push_back({c, den / hd});
            x.set(k, std::move(e));
        }
        WeightedMonoCost cost(wr);
        Rat c_in = fractional_cost(gr, x, cost);
        if (c_in > 2 * Wr) throw std::logic_error("initial weighted cost exceeds 2W");

        std::vector<int> schedule(gr.n());
        for (int k = 0; k < gr.n(); ++k) schedule[k] = helper[orig[k]];
        auto fr = full_round(gr, x, cost, schedule, Rat(1, 3), nullptr, trace);

        std::vector<int> tent(gr.n());
        for (int k = 0; k < gr.n(); ++k) tent[k] = fr.labeling.integral_label(k);
        std::vector<char> mono(gr.m(), 0);
        std::vector<int> monodeg(gr.n(), 0);
        for (int e = 0; e < gr.m(); ++e) {
            const auto& ed = gr.edges()[e];
            if (tent[ed.u] == tent[ed.v]) {
                mono[e] = 1;
                ++monodeg[ed.u];
                ++monodeg[ed.v];
            }
        }
        std::vector<char> low(gr.n(), 0);
        Rat w_low = 0;
        for (int k = 0; k < gr.n(); ++k)
            if (monodeg[k] < 4) {
                low[k] = 1;
                w_low += wr[k];
            }
        if (3 * w_low < Wr) throw std::logic_error("low-conflict weight below W/3");

        auto [hg, horig] = detail::masked_subgraph(gr, low, &mono);
        std::vector<Rat> hw(hg.n());
        std::vector<int> seed(hg.n());
        for (int k = 0; k < hg.n(); ++k) {
            hw[k] = wr[horig[k]];
            seed[k] = helper[orig[horig[k]]];
        }
        auto is = weighted_is(hg, hw, seed, trace);
        Rat gained = 0;
        for (int k = 0; k < hg.n(); ++k)
            if (is.in_set[k]) {
                out.color[orig[horig[k]]] = tent[horig[k]];
                gained += hw[k];
            }
        colored += gained;
        if (stats) {
            ++stats->repetitions;
            stats->per_rep_colored.push_back(gained);
        }
    }
    if (2 * colored < W)
        throw std::logic_error("weighted_partial_local: repetition cap exceeded");
    if (stats) stats->colored_weight = colored;
    return out;
}

// CONGEST variant: the partition-tree pipeline with the weighted potential
// w_v * d(v)/|L_v|; after the H levels the nodes with at most 3 same-candidate
// neighbors hold at least a quarter of the weight and a weighted independent
// set of their conflict graph commits.
inline ColorAssignment weighted_partial_congest(const ListColoringInstance& inst,
                                                const std::vector<Rat>& weights,
                                                const std::vector<int>& helper,
                                                MetricsTrace* trace = nullptr,
                                                WeightedPartialStats* stats = nullptr) {
    inst.validate();
    const SimGraph& g = inst.graph;
    int C = inst.palette;
    if (C < 1) throw InstanceError("palette bound required");
    int K = std::max(2, int(std::sqrt(double(floor_log2(std::uint64_t(std::max(2, C)))))));
    int H = std::max(1, int(std::ceil(std::log(double(std::max(2, C))) / std::log(double(K)))));
    int rho_exp = ceil_log2(std::uint64_t(10) * K * H);
    long long Q = 1LL << rho_exp;

    Rat W = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (weights[v] < 0) throw InstanceError("negative node weight");
        W += weights[v];
    }
    if (stats) stats->total_weight = W;

    ColorAssignment out(g.n(), C);
    Rat colored = 0;
    for (int rep = 0; rep < 8; ++rep) {
        if (2 * colored >= W) break;
        auto lists = detail::residual_lists(g, inst.lists, out.color);
        std::vector<char> unc(g.n(), 0);
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) unc[v] = 1;
        auto [gr, orig] = g.induced(unc);
        Rat Wr = 0;
        std::vector<Rat> wr(gr.n());
        std::vector<int> schedule(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            wr[k] = weights[orig[k]];
            Wr += wr[k];
            schedule[k] = helper[orig[k]];
        }

        std::vector<std::pair<int, int>> range(gr.n(), {1, C});
        std::vector<std::vector<int>> L(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            L[k] = lists[orig[k]];
            if (int(L[k].size()) < gr.degree(k) + 1)
                throw std::logic_error("residual instance lost the degree+1 condition");
        }
        std::vector<char> alive(gr.m(), 1);
        auto potential = [&]() {
            Rat phi = 0;
            for (int k = 0; k < gr.n(); ++k) {
                int d = 0;
                for (auto [u, e] : gr.adj(k))
                    if (alive[e]) ++d;
                if (d > 0) phi += wr[k] * Rat(d, long(L[k].size()));
            }
            return phi;
        };
        Rat phi_prev = potential();
        if (phi_prev > Wr) throw std::logic_error("initial weighted potential exceeds W");
        Rat growth_bound =
            (Rat(1) + Rat(1, 2 * H)) * (Rat(1) + Rat(1, 4 * H)) * (Rat(1) + Rat(1, 4 * H));

        for (int level = 0; level < H; ++level) {
            std::vector<std::vector<long long>> cnt(gr.n(), std::vector<long long>(K + 1, 0));
            for (int k = 0; k < gr.n(); ++k)
                for (int c : L[k])
                    for (int j = 1; j <= K; ++j) {
                        auto [lo, hi] = detail::child_range(range[k].first, range[k].second, K, j);
                        if (c >= lo && c <= hi) {
                            ++cnt[k][j];
                            break;
                        }
                    }
            FractionalLabeling x(gr.n(), Q);
            for (int k = 0; k < gr.n(); ++k) {
                long long Ls = (long long)L[k].size();
                std::vector<long long> units(K + 1, 0);
                long long total = 0;
                for (int j = 1; j <= K; ++j) {
                    units[j] = cnt[k][j] * Q / Ls;
                    total += units[j];
                }
                long long deficit = Q - total;
                for (int j = 1; j <= K && deficit > 0; ++j) {
                    long long add = std::min(units[j] / (4 * H), deficit);
                    units[j] += add;
                    deficit -= add;
                }
                if (deficit > 0) throw std::logic_error("perturbation residue undistributable");
                std::vector<FractionalLabeling::Entry> e;
                for (int j = 1; j <= K; ++j)
                    if (units[j] > 0) e.push_back({j, units[j]});
                x.set(k, std::move(e));
            }
            DiagonalCost cost([&](int k, int j) {
                return cnt[k][j] > 0 ? wr[k] / cnt[k][j] : Rat(0);
            });
            auto fr = full_round(gr, x, cost, schedule, Rat(1, 2 * H), &alive, trace);
            for (int k = 0; k < gr.n(); ++k) {
                int j = fr.labeling.integral_label(k);
                if (cnt[k][j] == 0) throw std::logic_error("node chose an empty color range");
                auto [lo, hi] = detail::child_range(range[k].first, range[k].second, K, j);
                range[k] = {lo, hi};
                std::vector<int> nl;
                for (int c : L[k])
                    if (c >= lo && c <= hi) nl.push_back(c);
                L[k] = std::move(nl);
            }
            for (int e = 0; e < gr.m(); ++e) {
                const auto& ed = gr.edges()[e];
                if (alive[e] && range[ed.u] != range[ed.v]) alive[e] = 0;
            }
            Rat phi_now = potential();
            if (phi_prev > 0 && phi_now > growth_bound * phi_prev)
                throw std::logic_error("per-level potential growth exceeded its bound");
            phi_prev = phi_now;
        }
        if (phi_prev > 3 * Wr) throw std::logic_error("weighted potential exceeds 3W after levels");

        std::vector<int> cand(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            if (L[k].size() != 1) throw std::logic_error("list not a singleton after all levels");
            cand[k] = L[k][0];
        }
        std::vector<int> confdeg(gr.n(), 0);
        std::vector<char> conf(gr.m(), 0);
        for (int e = 0; e < gr.m(); ++e) {
            const auto& ed = gr.edges()[e];
            if (alive[e] && cand[ed.u] == cand[ed.v]) {
                conf[e] = 1;
                ++confdeg[ed.u];
                ++confdeg[ed.v];
            }
        }
        std::vector<char> low(gr.n(), 0);
        Rat w_low = 0;
        for (int k = 0; k < gr.n(); ++k)
            if (confdeg[k] < 4) {
                low[k] = 1;
                w_low += wr[k];
            }
        if (4 * w_low < Wr) throw std::logic_error("low-conflict weight below W/4");

        auto [hg, horig] = detail::masked_subgraph(gr, low, &conf);
        std::vector<Rat> hw(hg.n());
        std::vector<int> seed(hg.n());
        for (int k = 0; k < hg.n(); ++k) {
            hw[k] = wr[horig[k]];
            seed[k] = helper[orig[horig[k]]];
        }
        auto is = weighted_is(hg, hw, seed, trace);
        Rat gained = 0;
        for (int k = 0; k < hg.n(); ++k)
            if (is.in_set[k]) {
                out.color[orig[horig[k]]] = cand[horig[k]];
                gained += hw[k];
            }
        colored += gained;
        if (stats) {
            ++stats->repetitions;
            stats->per_rep_colored.push_back(gained);
        }
    }
    if (2 * colored < W)
        throw std::logic_error("weighted_partial_congest: repetition cap exceeded");
    if (stats) stats->colored_weight = colored;
    return out;
}

struct BipartitionStats {
    int splits = 0;
    std::vector<long> intra_edges_after_splits;  // per outer iteration
    std::vector<int> committed;
    int palette_used = 0;
};

// Repeated bipartition demo: k = ceil(log2 Delta) average defective 2-color
// splits at delta = 1/log2(Delta) leave only O(|E|/Delta) intra-part edges;
// each part then commits an MIS of its low-intra-degree nodes under a fresh
// per-(iteration, part) color. Palette O(Delta * log n).
inline ColorAssignment bipartition_demo(const SimGraph& g, MetricsTrace* trace = nullptr,
                                        BipartitionStats* stats = nullptr) {
    int delta_g = std::max(2, g.max_degree());
    int k = std::max(1, ceil_log2(std::uint64_t(delta_g)));
    Rat delta = Rat(1, std::max(1, floor_log2(std::uint64_t(delta_g))));
    auto helper = linial_color(g, g.id_coloring(), std::max(1, g.max_degree()), trace);
    if (stats) stats->splits = k;

    ColorAssignment out(g.n(), 0);
    int cap = 4 * detail::iteration_cap(g.n(), 12.0) + 4;
    for (int iter = 0; iter < cap; ++iter) {
        std::vector<char> unc(g.n(), 0);
        int nr = 0;
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) {
                unc[v] = 1;
                ++nr;
            }
        if (nr == 0) {
            if (stats) stats->palette_used = out.max_color();
            return out;
        }
        auto [gr, orig] = g.induced(unc);
        std::vector<int> schedule(gr.n());
        for (int j = 0; j < gr.n(); ++j) schedule[j] = helper.coloring[orig[j]];

        std::vector<int> part(gr.n(), 1);
        for (int s = 0; s < k; ++s) {
            // split every current part in two; parts are vertex-disjoint, so
            // one avg_defective call with intra-part edges kept handles all
            std::vector<char> intra(gr.m(), 0);
            for (int e = 0; e < gr.m(); ++e) {
                const auto& ed = gr.edges()[e];
                if (part[ed.u] == part[ed.v]) intra[e] = 1;
            }
            auto dc = avg_defective(gr, schedule, 2, delta, &intra, trace);
            for (int j = 0; j < gr.n(); ++j) part[j] = (part[j] - 1) * 2 + dc.assignment[j];
        }
        long intra_edges = 0;
        std::vector<int> intradeg(gr.n(), 0);
        std::vector<char> intra(gr.m(), 0);
        for (int e = 0; e < gr.m(); ++e) {
            const auto& ed = gr.edges()[e];
            if (part[ed.u] == part[ed.v]) {
                intra[e] = 1;
                ++intra_edges;
                ++intradeg[ed.u];
                ++intradeg[ed.v];
            }
        }
        std::vector<char> low(gr.n(), 0);
        for (int j = 0; j < gr.n(); ++j)
            if (intradeg[j] <= 4) low[j] = 1;
        auto [hg, horig] = detail::masked_subgraph(gr, low, &intra);
        std::vector<int> seed(hg.n());
        for (int j = 0; j < hg.n(); ++j) seed[j] = helper.coloring[orig[horig[j]]];
        auto in_is = mis(hg, seed, trace);
        int committed = 0;
        int base = iter * (1 << k);
        for (int j = 0; j < hg.n(); ++j)
            if (in_is[j]) {
                int v = horig[j];
                out.color[orig[v]] = base + part[v];
                ++committed;
            }
        if (committed == 0) throw std::logic_error("bipartition_demo made no progress");
        if (stats) {
            stats->intra_edges_after_splits.push_back(intra_edges);
            stats->committed.push_back(committed);
        }
    }
    throw std::logic_error("bipartition_demo: iteration cap exceeded");
}

}  // namespace distcolor
