#pragma once

#include "distcolor/partial.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace distcolor {

struct PartitionStallError : std::runtime_error {
    PartitionStallError(std::string msg, std::vector<long long> ids)
        : std::runtime_error(std::move(msg)), stuck_ids(std::move(ids)) {}
    std::vector<long long> stuck_ids;  // residual subgraph that would not peel
};

// Node partition into layers 1..h; inter-layer edges are oriented toward the
// higher layer, same-layer edges stay unoriented.
struct Layering {
    SimGraph graph;
    std::vector<int> layer;  // 1..h per node index

    int h() const {
        int m = 0;
        for (int l : layer) m = std::max(m, l);
        return m;
    }
    // neighbors in the same or higher layers
    int up_degree(int v) const {
        int d = 0;
        for (auto [u, e] : graph.adj(v))
            if (layer[u] >= layer[v]) ++d;
        return d;
    }
    int max_up_degree() const {
        int d = 0;
        for (int v = 0; v < graph.n(); ++v) d = std::max(d, up_degree(v));
        return d;
    }
    void validate() const {
        if (int(layer.size()) != graph.n()) throw InstanceError("one layer index per node required");
        int hh = h();
        for (int l : layer)
            if (l < 1 || l > graph.n() || l > hh) throw InstanceError("layer index out of range");
    }

    void save(std::ostream& out) const {
        for (int v = 0; v < graph.n(); ++v) out << graph.id(v) << " " << layer[v] << "\n";
    }
    static std::vector<int> load(std::istream& in, const SimGraph& g) {
        std::map<long long, int> idx;
        for (int v = 0; v < g.n(); ++v) idx[g.id(v)] = v;
        std::vector<int> layer(g.n(), 0);
        std::string line;
        while (std::getline(in, line)) {
            auto hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            std::istringstream ls(line);
            long long id;
            int l;
            if (!(ls >> id >> l)) {
                std::istringstream probe(line);
                std::string any;
                if (probe >> any) throw InstanceError("malformed layering line");
                continue;
            }
            auto it = idx.find(id);
            if (it == idx.end()) throw InstanceError("layering mentions unknown node");
            layer[it->second] = l;
        }
        for (int l : layer)
            if (l < 1) throw InstanceError("layering does not cover all nodes");
        return layer;
    }
};

struct PathWeights {
    std::vector<Int> weight;  // per node
    Int total = 0;
    bool rounded = false;  // power-of-two transmission variant
};

inline Int roundup_pow2(const Int& x) {
    if (x <= 1) return 1;
    unsigned b = msb(x);  // floor(log2)
    Int p = Int(1) << b;
    return p == x ? p : p << 1;
}

// Forward pass over the layers: sources weigh 1, and every node weighs
// 1 + 2 * (sum of lower-layer neighbor weights). With `rounded` the received
// values are rounded up to powers of two first (exponent-encoded messages).
inline PathWeights compute_layer_weights(const Layering& lay, bool rounded = false,
                                         MetricsTrace* trace = nullptr) {
    lay.validate();
    const SimGraph& g = lay.graph;
    PathWeights pw;
    pw.rounded = rounded;
    pw.weight.assign(g.n(), Int(0));
    int h = lay.h();
    std::vector<std::vector<int>> by_layer(h + 1);
    for (int v = 0; v < g.n(); ++v) by_layer[lay.layer[v]].push_back(v);
    long max_exp = 1;
    for (int l = 1; l <= h; ++l) {
        long msgs = 0;
        for (int v : by_layer[l]) {
            Int w = 1;
            for (auto [u, e] : g.adj(v))
                if (lay.layer[u] < l) {
                    Int sent = rounded ? roundup_pow2(pw.weight[u]) : pw.weight[u];
                    w += 2 * sent;
                }
            pw.weight[v] = w;
            pw.total += w;
            msgs += g.degree(v);
            max_exp = std::max(max_exp, long(msb(w)) + 1);
        }
        // exponent encoding in the rounded variant, full value otherwise
        if (trace) trace->charge_round(rounded ? bit_width_of(std::uint64_t(max_exp)) : max_exp, msgs);
    }
    return pw;
}

// free = uncolored with every strictly-higher-layer neighbor colored
inline std::vector<char> free_nodes(const Layering& lay, const std::vector<int>& color) {
    std::vector<char> fr(lay.graph.n(), 0);
    for (int v = 0; v < lay.graph.n(); ++v) {
        if (color[v] != 0) continue;
        bool ok = true;
        for (auto [u, e] : lay.graph.adj(v))
            if (lay.layer[u] > lay.layer[v] && color[u] == 0) ok = false;
        fr[v] = ok;
    }
    return fr;
}

struct LayeredIterStats {
    Int residual_weight, free_weight, colored_weight;
};

struct LayeredRunStats {
    Int total_weight;
    int max_up_degree = 0;
    std::vector<LayeredIterStats> iters;
};

// List coloring of a layered graph with |L_v| >= up_degree(v)+1: repeatedly
// color at least half of the free nodes' weight via weighted partial list
// coloring. Free nodes always hold at least half the residual weight, so the
// residual weight shrinks by a factor >= 3/4 per iteration.
inline ColorAssignment layered_list_coloring(const Layering& lay,
                                             const std::vector<std::vector<int>>& lists,
                                             bool congest = false, MetricsTrace* trace = nullptr,
                                             LayeredRunStats* stats = nullptr) {
    lay.validate();
    const SimGraph& g = lay.graph;
    for (int v = 0; v < g.n(); ++v)
        if (int(lists[v].size()) < lay.up_degree(v) + 1)
            throw InstanceError("list of node " + std::to_string(g.id(v)) +
                                " smaller than up-degree+1");
    int palette = 0;
    for (const auto& L : lists)
        for (int c : L) palette = std::max(palette, c);

    auto pw = compute_layer_weights(lay, congest, trace);
    auto helper = linial_color(g, g.id_coloring(), std::max(1, g.max_degree()), trace);
    if (stats) {
        stats->total_weight = pw.total;
        stats->max_up_degree = lay.max_up_degree();
    }

    ColorAssignment out(g.n(), palette);
    // residual weight shrinks by >= 3/4 per iteration from at most n*(2u+1)^h
    long cap = 4 + long(std::ceil(double(msb(Int(pw.total + 1)) + 2) / std::log2(4.0 / 3.0)));
    for (long iter = 0; iter < cap; ++iter) {
        Int residual = 0;
        for (int v = 0; v < g.n(); ++v)
            if (out.color[v] == 0) residual += pw.weight[v];
        if (residual == 0) return out;  // every node weighs >= 1, so all colored
        auto fr = free_nodes(lay, out.color);
        Int free_w = 0;
        for (int v = 0; v < g.n(); ++v)
            if (fr[v]) free_w += pw.weight[v];
        if (2 * free_w < residual)
            throw std::logic_error("free nodes hold less than half the residual weight");

        auto rl = detail::residual_lists(g, lists, out.color);
        auto [gr, orig] = g.induced(fr);
        ListColoringInstance inst;
        inst.graph = gr;
        inst.palette = palette;
        inst.lists.resize(gr.n());
        std::vector<Rat> w(gr.n());
        std::vector<int> seed(gr.n());
        for (int k = 0; k < gr.n(); ++k) {
            inst.lists[k] = rl[orig[k]];
            w[k] = Rat(pw.weight[orig[k]]);
            seed[k] = helper.coloring[orig[k]];
        }
        auto part = congest ? weighted_partial_congest(inst, w, seed, trace)
                            : weighted_partial_local(inst, w, seed, trace);
        Int gained = 0;
        for (int k = 0; k < gr.n(); ++k)
            if (part.color[k] != 0) {
                out.color[orig[k]] = part.color[k];
                gained += pw.weight[orig[k]];
            }
        if (4 * (residual - gained) > 3 * residual)
            throw std::logic_error("residual weight shrank by less than a quarter");
        if (stats) stats->iters.push_back({residual, free_w, gained});
    }
    for (int v = 0; v < g.n(); ++v)
        if (out.color[v] == 0) throw std::logic_error("layered_list_coloring: iteration cap exceeded");
    return out;
}

// Peel nodes of residual degree <= floor((2+eps)*a) layer by layer. Stalls
// only if the arboricity bound is wrong.
inline Layering h_partition(const SimGraph& g, const Rat& a, const Rat& eps) {
    if (a <= 0 || eps <= 0) throw InstanceError("h_partition: a > 0 and eps > 0 required");
    Int thr = rat_floor((Rat(2) + eps) * a);
    Layering lay;
    lay.graph = g;
    lay.layer.assign(g.n(), 0);
    std::vector<int> resdeg(g.n());
    for (int v = 0; v < g.n(); ++v) resdeg[v] = g.degree(v);
    int remaining = g.n();
    int l = 0;
    while (remaining > 0) {
        ++l;
        std::vector<int> peel;
        for (int v = 0; v < g.n(); ++v)
            if (lay.layer[v] == 0 && Int(resdeg[v]) <= thr) peel.push_back(v);
        if (peel.empty()) {
            std::vector<long long> stuck;
            for (int v = 0; v < g.n(); ++v)
                if (lay.layer[v] == 0) stuck.push_back(g.id(v));
            throw PartitionStallError("h_partition stalled: " + std::to_string(stuck.size()) +
                                          " nodes all exceed degree " + thr.str() +
                                          " (arboricity bound too small)",
                                      std::move(stuck));
        }
        for (int v : peel) lay.layer[v] = l;
        for (int v : peel)
            for (auto [u, e] : g.adj(v))
                if (lay.layer[u] == 0) --resdeg[u];
        remaining -= int(peel.size());
    }
    return lay;
}

// Coloring with floor((2+eps)*a)+1 colors for graphs of arboricity <= a.
inline ColorAssignment arboricity_coloring(const SimGraph& g, const Rat& a, const Rat& eps,
                                           bool congest = false, MetricsTrace* trace = nullptr,
                                           LayeredRunStats* stats = nullptr) {
    auto lay = h_partition(g, a, eps);
    Int thr = rat_floor((Rat(2) + eps) * a);
    int colors = thr.convert_to<int>() + 1;
    std::vector<std::vector<int>> lists(g.n());
    for (int v = 0; v < g.n(); ++v)
        for (int c = 1; c <= colors; ++c) lists[v].push_back(c);
    return layered_list_coloring(lay, lists, congest, trace, stats);
}

}  // namespace distcolor
