#pragma once

#include "distcolor/rational.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace distcolor {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable undirected simple graph. Nodes carry distinct integer ids; all
// algorithmic code works with dense indices 0..n-1, ids are kept for initial
// colorings and I/O.
class SimGraph {
public:
    struct Edge {
        int u, v;  // indices, u < v
    };

    SimGraph() = default;

    // edges are given over ids; ids not mentioned can be added via `isolated`.
    static SimGraph build(std::vector<long long> ids,
                          const std::vector<std::pair<long long, long long>>& id_edges,
                          std::vector<Rat> edge_weights = {}) {
        SimGraph g;
        for (auto [a, b] : id_edges) {
            ids.push_back(a);
            ids.push_back(b);
        }
        std::sort(ids.begin(), ids.end());
        ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
        g.ids_ = std::move(ids);
        auto index_of = [&g](long long id) {
            auto it = std::lower_bound(g.ids_.begin(), g.ids_.end(), id);
            return int(it - g.ids_.begin());
        };
        if (!edge_weights.empty() && edge_weights.size() != id_edges.size())
            throw GraphError("edge weight count does not match edge count");
        g.adj_.assign(g.ids_.size(), {});
        std::map<std::pair<int, int>, int> seen;
        for (std::size_t i = 0; i < id_edges.size(); ++i) {
            auto [a, b] = id_edges[i];
            if (a == b) throw GraphError("self-loop at node " + std::to_string(a));
            int u = index_of(a), v = index_of(b);
            if (u > v) std::swap(u, v);
            if (seen.count({u, v}))
                throw GraphError("duplicate edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
            if (!edge_weights.empty() && edge_weights[i] < 0)
                throw GraphError("negative edge weight");
            seen[{u, v}] = int(g.edges_.size());
            g.edges_.push_back({u, v});
            if (!edge_weights.empty()) g.weights_.push_back(edge_weights[i]);
        }
        for (int e = 0; e < int(g.edges_.size()); ++e) {
            g.adj_[g.edges_[e].u].push_back({g.edges_[e].v, e});
            g.adj_[g.edges_[e].v].push_back({g.edges_[e].u, e});
        }
        for (auto& nb : g.adj_)
            std::sort(nb.begin(), nb.end());
        return g;
    }

    int n() const { return int(ids_.size()); }
    int m() const { return int(edges_.size()); }
    long long id(int v) const { return ids_[v]; }
    const std::vector<long long>& ids() const { return ids_; }
    const std::vector<Edge>& edges() const { return edges_; }
    // neighbors as (neighbor index, edge index), sorted by neighbor
    const std::vector<std::pair<int, int>>& adj(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n(); ++v) d = std::max(d, degree(v));
        return d;
    }

    bool weighted() const { return !weights_.empty(); }
    const Rat& weight(int e) const { return weights_[e]; }
    Rat weight_or_one(int e) const { return weighted() ? weights_[e] : Rat(1); }
    Rat total_weight() const {
        Rat w = 0;
        for (int e = 0; e < m(); ++e) w += weight_or_one(e);
        return w;
    }

    void set_weights(std::vector<Rat> w) {
        if (int(w.size()) != m()) throw GraphError("weight count mismatch");
        for (auto& x : w)
            if (x < 0) throw GraphError("negative edge weight");
        weights_ = std::move(w);
    }

    // Induced subgraph on the nodes with keep[v] != 0. Returns the subgraph
    // and the original index of each subgraph node.
    std::pair<SimGraph, std::vector<int>> induced(const std::vector<char>& keep) const {
        std::vector<long long> sub_ids;
        std::vector<int> orig;
        for (int v = 0; v < n(); ++v)
            if (keep[v]) {
                sub_ids.push_back(ids_[v]);
                orig.push_back(v);
            }
        std::vector<std::pair<long long, long long>> sub_edges;
        std::vector<Rat> sub_w;
        for (int e = 0; e < m(); ++e) {
            if (keep[edges_[e].u] && keep[edges_[e].v]) {
                sub_edges.push_back({ids_[edges_[e].u], ids_[edges_[e].v]});
                if (weighted()) sub_w.push_back(weights_[e]);
            }
        }
        return {build(sub_ids, sub_edges, std::move(sub_w)), orig};
    }

    // Initial proper coloring from the unique ids: color(v) = id(v) + 1.
    // Requires non-negative ids.
    std::vector<int> id_coloring() const {
        std::vector<int> c(n());
        for (int v = 0; v < n(); ++v) {
            if (ids_[v] < 0) throw GraphError("id coloring requires non-negative ids");
            c[v] = int(ids_[v]) + 1;
        }
        return c;
    }

private:
    std::vector<long long> ids_;
    std::vector<Edge> edges_;
    std::vector<Rat> weights_;  // empty = unweighted
    std::vector<std::vector<std::pair<int, int>>> adj_;
};

inline Rat parse_rat(const std::string& tok) {
    // accepts "p", "p/q" and decimal "a.b"
    auto slash = tok.find('/');
    if (slash != std::string::npos) {
        Int num(tok.substr(0, slash)), den(tok.substr(slash + 1));
        if (den == 0) throw GraphError("zero denominator in weight");
        return Rat(num, den);
    }
    auto dot = tok.find('.');
    if (dot != std::string::npos) {
        std::string digits = tok.substr(0, dot) + tok.substr(dot + 1);
        bool neg = !digits.empty() && (digits[0] == '-' || digits[0] == '+');
        std::string body = neg ? digits.substr(1) : digits;
        // strip leading zeros: cpp_int would otherwise read them as octal
        std::size_t nz = body.find_first_not_of('0');
        body = nz == std::string::npos ? "0" : body.substr(nz);
        Int num(body);
        if (neg && digits[0] == '-') num = -num;
        Int den = 1;
        for (std::size_t i = dot + 1; i < tok.size(); ++i) den *= 10;
        return Rat(num, den);
    }
    return Rat(Int(tok));
}

// Edge-list text format: `u v [weight]` per line, `#` comments. Parsing is
// strict: malformed lines are errors.
inline SimGraph load_graph(std::istream& in) {
    std::vector<std::pair<long long, long long>> edges;
    std::vector<Rat> weights;
    std::vector<long long> isolated;
    bool any_weight = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty()) continue;
        try {
            if (toks.size() == 1) {
                isolated.push_back(std::stoll(toks[0]));
            } else if (toks.size() == 2 || toks.size() == 3) {
                edges.push_back({std::stoll(toks[0]), std::stoll(toks[1])});
                if (toks.size() == 3) {
                    any_weight = true;
                    weights.resize(edges.size() - 1, Rat(1));
                    weights.push_back(parse_rat(toks[2]));
                } else if (any_weight) {
                    weights.push_back(Rat(1));
                }
            } else {
                throw GraphError("too many fields");
            }
        } catch (const std::exception& e) {
            throw GraphError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!any_weight) weights.clear();
    return SimGraph::build(std::move(isolated), edges, std::move(weights));
}

inline SimGraph load_graph_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw GraphError("cannot open " + path);
    return load_graph(f);
}

// Node-weight sidecar: `u w_u` per line.
inline std::vector<Rat> load_node_weights(std::istream& in, const SimGraph& g) {
    std::vector<Rat> w(g.n(), Rat(1));
    std::map<long long, int> idx;
    for (int v = 0; v < g.n(); ++v) idx[g.id(v)] = v;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        long long u;
        std::string tok;
        if (!(ls >> u >> tok)) {
            std::istringstream probe(line);
            std::string any;
            if (probe >> any) throw GraphError("malformed node-weight line");
            continue;
        }
        auto it = idx.find(u);
        if (it == idx.end()) throw GraphError("node weight for unknown node " + std::to_string(u));
        Rat r = parse_rat(tok);
        if (r < 0) throw GraphError("negative node weight");
        w[it->second] = r;
    }
    return w;
}

}  // namespace distcolor
