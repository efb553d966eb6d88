#pragma once

#include "distcolor/rounding.hpp"
#include "distcolor/verify.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

namespace distcolor {

struct InstanceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// (degree+1)-list coloring instance: every node's list has more colors than
// the node has neighbors.
struct ListColoringInstance {
    SimGraph graph;
    std::vector<std::vector<int>> lists;  // sorted, unique, colors in [1..palette]
    int palette = 0;

    void validate() const {
        if (int(lists.size()) != graph.n()) throw InstanceError("one list per node required");
        for (int v = 0; v < graph.n(); ++v) {
            const auto& L = lists[v];
            if (int(L.size()) < graph.degree(v) + 1)
                throw InstanceError("list of node " + std::to_string(graph.id(v)) +
                                    " smaller than degree+1");
            for (std::size_t i = 0; i < L.size(); ++i) {
                if (L[i] < 1 || (palette > 0 && L[i] > palette))
                    throw InstanceError("list color out of palette range");
                if (i > 0 && L[i] <= L[i - 1]) throw InstanceError("lists must be sorted and unique");
            }
        }
    }

    static ListColoringInstance degree_plus_one(const SimGraph& g) {
        ListColoringInstance inst;
        inst.graph = g;
        inst.palette = g.max_degree() + 1;
        inst.lists.assign(g.n(), {});
        for (int v = 0; v < g.n(); ++v)
            for (int c = 1; c <= inst.palette; ++c) inst.lists[v].push_back(c);
        return inst;
    }
};

// Maximal independent set on a bounded-degree graph: reduce the seed coloring
// to its fixed-point palette, then greedily join class by class.
inline std::vector<char> mis(const SimGraph& h, const std::vector<int>& seed_coloring,
                             MetricsTrace* trace = nullptr) {
    if (h.n() == 0) return {};
    auto lin = linial_color(h, seed_coloring, std::max(1, h.max_degree()), trace);
    int classes = 0;
    for (int v = 0; v < h.n(); ++v) classes = std::max(classes, lin.coloring[v]);
    std::vector<char> joined(h.n(), 0), blocked(h.n(), 0);
    for (int i = 1; i <= classes; ++i) {
        long msgs = 0;
        for (int v = 0; v < h.n(); ++v) {
            if (lin.coloring[v] != i || blocked[v]) continue;
            joined[v] = 1;
            msgs += h.degree(v);
            for (auto [u, e] : h.adj(v)) blocked[u] = 1;
        }
        if (trace) trace->charge_round(1, msgs);
    }
    return joined;
}

namespace detail {

// residual lists: master lists minus the colors of already-colored neighbors
inline std::vector<std::vector<int>> residual_lists(const SimGraph& g,
                                                    const std::vector<std::vector<int>>& lists,
                                                    const std::vector<int>& color) {
    std::vector<std::vector<int>> out(g.n());
    for (int v = 0; v < g.n(); ++v) {
        if (color[v] != 0) continue;
        std::set<int> taken;
        for (auto [u, e] : g.adj(v))
            if (color[u] != 0) taken.insert(color[u]);
        for (int c : lists[v])
            if (!taken.count(c)) out[v].push_back(c);
    }
    return out;
}

inline int iteration_cap(int n, double shrink_denominator) {
    // smallest t with (1 - 1/shrink_denominator)^t * n < 1, plus one slack
    if (n <= 1) return 2;
    double base = shrink_denominator / (shrink_denominator - 1.0);
    return int(std::ceil(std::log(double(n)) / std::log(base))) + 1;
}

inline long long pow2_at_most(long long x) {
    long long p = 1;
    while (p * 2 <= x) p *= 2;
    return p;
}

}  // namespace detail

struct LocalIterStats {
    int uncolored = 0;
    Rat initial_cost;    // fractional cost before rounding
    long mono_edges = 0; // after rounding
    int safe_nodes = 0;  // <= 4 incident monochromatic edges
    int committed = 0;
};

struct LocalRunStats {
    std::uint64_t helper_palette = 0;
    int iteration_cap = 0;
    std::vector<LocalIterStats> iters;
};

// (degree+1)-list coloring in the LOCAL model: per iteration, spread each
// node's mass over its hd(v) first list colors (hd = largest power of two
// <= degree+1), round to an integral tentative color with full_round at
// eps = 1/4, and commit an MIS of the nodes with at most 4 monochromatic
// edges. Each iteration colors at least a tenth of the remaining nodes.
inline ColorAssignment local_list_coloring(const ListColoringInstance& inst,
                                           MetricsTrace* trace = nullptr,
                                           LocalRunStats* stats = nullptr) {
    inst.validate();
    const SimGraph& g = inst.graph;
    auto helper = linial_color(g, g.id_coloring(), std::max(1, g.max_degree()), trace);
    if (stats) {
        stats->helper_palette = helper.palette;
        stats->iteration_cap = detail::iteration_cap(g.n(), 10.0);
    }

    ColorAssignment out(g.n(), inst.palette);
    int cap = detail::iteration_cap(g.n(), 10.0);
    for (int iter = 0; iter < cap + 1; ++iter) {
        auto lists = detail::residual_lists(g, inst.lists, out.color);
        std::vector<char> unc(g.n(), 0);
        int nr = 0;
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) {
                unc[v] = 1;
                ++nr;
            }
        if (nr == 0) return out;
        auto [gr, orig] = g.induced(unc);

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
        MonoCost mc;
        Rat c_in = fractional_cost(gr, x, mc);
        if (c_in > nr) throw std::logic_error("initial fractional cost exceeds node count");

        std::vector<int> schedule(gr.n());
        for (int k = 0; k < gr.n(); ++k) schedule[k] = helper.coloring[orig[k]];
        auto fr = full_round(gr, x, mc, schedule, Rat(1, 4), nullptr, trace);

        std::vector<int> tent(gr.n());
        for (int k = 0; k < gr.n(); ++k) tent[k] = fr.labeling.integral_label(k);
        std::vector<char> mono(gr.m(), 0);
        std::vector<int> monodeg(gr.n(), 0);
        long mono_edges = 0;
        for (int e = 0; e < gr.m(); ++e) {
            const auto& ed = gr.edges()[e];
            if (tent[ed.u] == tent[ed.v]) {
                mono[e] = 1;
                ++mono_edges;
                ++monodeg[ed.u];
                ++monodeg[ed.v];
            }
        }
        if (Rat(mono_edges) > (Rat(1) + Rat(1, 4)) * c_in)
            throw std::logic_error("rounding exceeded its cost guarantee");
        if (mono_edges > 2 * nr) throw std::logic_error("monochromatic edges exceed 2n");

        std::vector<char> safe(gr.n(), 0);
        int n_safe = 0;
        for (int k = 0; k < gr.n(); ++k)
            if (monodeg[k] <= 4) {
                safe[k] = 1;
                ++n_safe;
            }
        if (2 * n_safe < nr) throw std::logic_error("fewer than half the nodes are safe");

        auto [hg, horig] = detail::masked_subgraph(gr, safe, &mono);
        std::vector<int> seed(hg.n());
        for (int k = 0; k < hg.n(); ++k) seed[k] = helper.coloring[orig[horig[k]]];
        auto in_is = mis(hg, seed, trace);
        int committed = 0;
        for (int k = 0; k < hg.n(); ++k)
            if (in_is[k]) {
                out.color[orig[horig[k]]] = tent[horig[k]];
                ++committed;
            }
        if (10 * committed < nr) throw std::logic_error("committed fewer than a tenth of the nodes");
        if (stats) stats->iters.push_back({nr, c_in, mono_edges, n_safe, committed});
    }
    throw std::logic_error("local_list_coloring: iteration cap exceeded");
}

struct CongestLevelStats {
    Rat phi_before, phi_after;
};

struct CongestIterStats {
    int uncolored = 0;
    Rat phi_initial, phi_final;
    std::vector<CongestLevelStats> levels;
    int safe_nodes = 0;
    int committed = 0;
};

struct CongestRunStats {
    int K = 0, H = 0;
    long long Q = 0;  // 1/rho
    std::uint64_t helper_palette = 0;
    std::vector<CongestIterStats> iters;
};

namespace detail {

// near-equal contiguous split of [lo,hi] into K parts; part j (1-based)
inline std::pair<int, int> child_range(int lo, int hi, int K, int j) {
    long long size = hi - lo + 1;
    long long base = size / K, extra = size % K;
    long long start = lo + (j - 1) * base + std::min<long long>(j - 1, extra);
    long long len = base + (j - 1 < extra ? 1 : 0);
    return {int(start), int(start + len - 1)};
}

}  // namespace detail

// (degree+1)-list coloring with small messages: H levels of color-space
// partitioning per outer iteration. Per level each node distributes mass over
// the K child ranges of its current range proportionally to its list, the
// values are perturbed to multiples of rho = 2^-ceil(log2(10KH)) without
// growing any entry by more than 1+1/(4H), and full_round at eps = 1/(2H)
// picks one range per node. After H levels every node holds one candidate
// color and the potential sum d'(v)/|L'_v| is below 3n; an MIS of the nodes
// with potential <= 4 commits.
inline ColorAssignment congest_list_coloring(const ListColoringInstance& inst,
                                             MetricsTrace* trace = nullptr,
                                             CongestRunStats* stats = nullptr) {
    inst.validate();
    const SimGraph& g = inst.graph;
    int C = inst.palette;
    if (C < 1) throw InstanceError("palette bound required");
    int K = std::max(2, int(std::sqrt(double(floor_log2(std::uint64_t(std::max(2, C)))))));
    int H = std::max(1, int(std::ceil(std::log(double(std::max(2, C))) / std::log(double(K)))));
    int rho_exp = ceil_log2(std::uint64_t(10) * K * H);
    long long Q = 1LL << rho_exp;

    auto helper = linial_color(g, g.id_coloring(), std::max(1, g.max_degree()), trace);
    if (stats) {
        stats->K = K;
        stats->H = H;
        stats->Q = Q;
        stats->helper_palette = helper.palette;
    }

    ColorAssignment out(g.n(), C);
    int cap = detail::iteration_cap(g.n(), 20.0);
    for (int iter = 0; iter < cap + 1; ++iter) {
        auto lists = detail::residual_lists(g, inst.lists, out.color);
        std::vector<char> unc(g.n(), 0);
        int nr = 0;
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) {
                unc[v] = 1;
                ++nr;
            }
        if (nr == 0) return out;
        auto [gr, orig] = g.induced(unc);

        std::vector<int> schedule(gr.n());
        for (int k = 0; k < gr.n(); ++k) schedule[k] = helper.coloring[orig[k]];

        // current state per node: color range and list inside it
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
                if (d > 0) phi += Rat(d, long(L[k].size()));
            }
            return phi;
        };

        CongestIterStats is;
        is.uncolored = nr;
        is.phi_initial = potential();
        if (is.phi_initial > nr) throw std::logic_error("initial potential exceeds node count");

        Rat growth_bound = (Rat(1) + Rat(1, 2 * H)) * (Rat(1) + Rat(1, 4 * H)) * (Rat(1) + Rat(1, 4 * H));
        Rat phi_prev = is.phi_initial;
        for (int level = 0; level < H; ++level) {
            // per node: list counts per child range
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
            // perturbation to rho-integral values, in integer units of rho
            FractionalLabeling x(gr.n(), Q);
            for (int k = 0; k < gr.n(); ++k) {
                long long Ls = (long long)L[k].size();
                std::vector<long long> units(K + 1, 0);
                long long total = 0;
                for (int j = 1; j <= K; ++j) {
                    units[j] = cnt[k][j] * Q / Ls;  // floor(x/rho)
                    total += units[j];
                }
                long long deficit = Q - total;
                for (int j = 1; j <= K && deficit > 0; ++j) {
                    long long room = units[j] / (4 * H);  // floor((x'/(4H))/rho)
                    long long add = std::min(room, deficit);
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
                return cnt[k][j] > 0 ? Rat(1, cnt[k][j]) : Rat(0);
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
            is.levels.push_back({phi_prev, phi_now});
            phi_prev = phi_now;
        }
        is.phi_final = phi_prev;
        if (is.phi_final > 3 * Rat(nr)) throw std::logic_error("potential exceeds 3n after all levels");

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
        std::vector<char> safe(gr.n(), 0);
        for (int k = 0; k < gr.n(); ++k)
            if (confdeg[k] <= 4) {
                safe[k] = 1;
                ++is.safe_nodes;
            }
        auto [hg, horig] = detail::masked_subgraph(gr, safe, &conf);
        std::vector<int> seed(hg.n());
        for (int k = 0; k < hg.n(); ++k) seed[k] = helper.coloring[orig[horig[k]]];
        auto in_is = mis(hg, seed, trace);
        for (int k = 0; k < hg.n(); ++k)
            if (in_is[k]) {
                out.color[orig[horig[k]]] = cand[horig[k]];
                ++is.committed;
            }
        if (20 * is.committed < nr)
            throw std::logic_error("committed fewer than a twentieth of the nodes");
        if (stats) stats->iters.push_back(std::move(is));
    }
    throw std::logic_error("congest_list_coloring: iteration cap exceeded");
}

// (Delta+1)-coloring by list coloring with the full palette {1..Delta+1}.
inline ColorAssignment delta_plus_one(const SimGraph& g, bool congest = true,
                                      MetricsTrace* trace = nullptr) {
    auto inst = ListColoringInstance::degree_plus_one(g);
    return congest ? congest_list_coloring(inst, trace) : local_list_coloring(inst, trace);
}

}  // namespace distcolor
