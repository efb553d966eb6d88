#pragma once

#include "distcolor/graph.hpp"

#include <random>
#include <set>
#include <string>

namespace distcolor {

// Deterministic generators: identical (kind, params, seed) gives a
// bit-identical graph.

inline SimGraph gen_clique(int n) {
    std::vector<std::pair<long long, long long>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    std::vector<long long> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return SimGraph::build(ids, e);
}

inline SimGraph gen_cycle(int n) {
    if (n < 3) throw GraphError("cycle needs n >= 3");
    std::vector<std::pair<long long, long long>> e;
    for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
    return SimGraph::build({}, e);
}

inline SimGraph gen_path(int n) {
    std::vector<std::pair<long long, long long>> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    std::vector<long long> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return SimGraph::build(ids, e);
}

inline SimGraph gen_grid(int rows, int cols) {
    std::vector<std::pair<long long, long long>> e;
    auto at = [cols](int r, int c) { return (long long)r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) e.push_back({at(r, c), at(r, c + 1)});
            if (r + 1 < rows) e.push_back({at(r, c), at(r + 1, c)});
        }
    std::vector<long long> ids((std::size_t)rows * cols);
    for (std::size_t v = 0; v < ids.size(); ++v) ids[v] = (long long)v;
    return SimGraph::build(ids, e);
}

inline SimGraph gen_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<std::pair<long long, long long>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (dist(rng) < p) e.push_back({u, v});
    std::vector<long long> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return SimGraph::build(ids, e);
}

inline SimGraph gen_tree(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<long long, long long>> e;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> parent(0, v - 1);
        e.push_back({parent(rng), v});
    }
    std::vector<long long> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    return SimGraph::build(ids, e);
}

// Random d-regular graph via the pairing model, resampled until simple.
inline SimGraph gen_random_regular(int n, int d, std::uint64_t seed) {
    if ((long long)n * d % 2 != 0) throw GraphError("random_regular: n*d must be even");
    if (d >= n) throw GraphError("random_regular: d must be < n");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::vector<int> stubs((std::size_t)n * d);
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs[(std::size_t)v * d + k] = v;
        std::set<std::pair<int, int>> seen;
        std::vector<std::pair<long long, long long>> e;
        bool ok = true;
        while (!stubs.empty() && ok) {
            // draw pairs, rejecting loops and duplicates; restart when stuck
            ok = false;
            for (int tries = 0; tries < 200; ++tries) {
                std::uniform_int_distribution<std::size_t> pick(0, stubs.size() - 1);
                std::size_t i = pick(rng), j = pick(rng);
                int u = stubs[i], v = stubs[j];
                if (i == j || u == v) continue;
                auto key = std::minmax(u, v);
                if (seen.count({key.first, key.second})) continue;
                seen.insert({key.first, key.second});
                e.push_back({u, v});
                if (i < j) std::swap(i, j);
                stubs.erase(stubs.begin() + i);
                stubs.erase(stubs.begin() + j);
                ok = true;
                break;
            }
        }
        if (!ok) continue;
        return SimGraph::build({}, e);
    }
    throw GraphError("random_regular: failed to sample a simple graph");
}

struct LayeredGraph {
    SimGraph graph;
    std::vector<int> layer;  // 1..h per node index
};

// Random graph with a layer structure: edges go within a layer or between
// consecutive-ish layers; up-degrees stay <= up_deg.
inline LayeredGraph gen_layered(int n, int h, int up_deg, std::uint64_t seed) {
    if (h < 1 || n < h) throw GraphError("layered: need 1 <= h <= n");
    std::mt19937_64 rng(seed);
    std::vector<int> layer(n);
    for (int v = 0; v < n; ++v) layer[v] = 1 + (int)((long long)v * h / n);
    std::vector<std::vector<int>> by_layer(h + 1);
    for (int v = 0; v < n; ++v) by_layer[layer[v]].push_back(v);
    std::set<std::pair<int, int>> seen;
    std::vector<std::pair<long long, long long>> e;
    std::vector<int> updeg(n, 0);
    for (int v = 0; v < n; ++v) {
        std::uniform_int_distribution<int> cnt(0, up_deg);
        int want = cnt(rng);
        for (int t = 0; t < want && updeg[v] < up_deg; ++t) {
            std::uniform_int_distribution<int> lay(layer[v], h);
            int lv = lay(rng);
            auto& pool = by_layer[lv];
            if (pool.empty()) continue;
            std::uniform_int_distribution<int> pick(0, int(pool.size()) - 1);
            int u = pool[pick(rng)];
            if (u == v) continue;
            auto key = std::minmax(u, v);
            if (seen.count({key.first, key.second})) continue;
            // same-layer edges raise the up-degree of both endpoints
            if (layer[u] == layer[v] && updeg[u] >= up_deg) continue;
            seen.insert({key.first, key.second});
            e.push_back({v, u});
            ++updeg[v];
            if (layer[u] == layer[v]) ++updeg[u];
        }
    }
    std::vector<long long> ids(n);
    for (int v = 0; v < n; ++v) ids[v] = v;
    LayeredGraph out;
    out.graph = SimGraph::build(ids, e);
    out.layer = std::move(layer);
    return out;
}

struct GenParams {
    int n = 0;
    int d = 0;       // degree / up-degree / grid cols
    int h = 0;       // layers
    double p = 0.0;  // gnp
};

inline SimGraph generate(const std::string& kind, const GenParams& prm, std::uint64_t seed) {
    if (kind == "clique") return gen_clique(prm.n);
    if (kind == "cycle") return gen_cycle(prm.n);
    if (kind == "path") return gen_path(prm.n);
    if (kind == "grid") return gen_grid(prm.n, prm.d ? prm.d : prm.n);
    if (kind == "gnp") return gen_gnp(prm.n, prm.p, seed);
    if (kind == "tree") return gen_tree(prm.n, seed);
    if (kind == "random_regular") return gen_random_regular(prm.n, prm.d, seed);
    if (kind == "layered_dag") return gen_layered(prm.n, prm.h ? prm.h : 4, prm.d ? prm.d : 3, seed).graph;
    throw GraphError("unknown generator kind: " + kind);
}

// Deterministic pseudo-random edge weights (positive rationals with small
// denominators), for defect-bound test corpora.
inline std::vector<Rat> random_edge_weights(const SimGraph& g, std::uint64_t seed, int max_num = 16,
                                            int max_den = 8) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<Rat> w(g.m());
    for (int e = 0; e < g.m(); ++e) w[e] = Rat(num(rng), den(rng));
    return w;
}

inline std::vector<Rat> random_node_weights(int n, std::uint64_t seed, int max_num = 16, int max_den = 8) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(0, max_num);
    std::uniform_int_distribution<int> den(1, max_den);
    std::vector<Rat> w(n);
    for (int v = 0; v < n; ++v) w[v] = Rat(num(rng), den(rng));
    return w;
}

}  // namespace distcolor
