#pragma once

#include "distcolor/defective.hpp"
#include "distcolor/labeling.hpp"

#include <algorithm>
#include <vector>

namespace distcolor {

namespace detail {
// per-message bits for exchanging a 1/(den)-integral distribution
inline long labeling_msg_bits(long long den, long label_space) {
    long by_value = long(den) * long(ceil_log2(std::uint64_t(std::max(2L, label_space))));
    long by_label = label_space * bit_width_of(std::uint64_t(den));
    return std::min(by_value, by_label);
}
}  // namespace detail

// Exact rounding step: 1/(2Q)-integral -> 1/Q-integral, phase by phase over
// the proper coloring's classes. Each node rounds down the half of its
// non-1/Q-integral labels with the largest marginal cost W_{v,l} (ties to the
// smaller label) and rounds up the rest, so the total cost cannot increase
// and x' <= 2x pointwise.
inline FractionalLabeling basic_round(const SimGraph& g, const FractionalLabeling& x,
                                      const EdgeCostFn& cost, const std::vector<int>& gamma,
                                      const std::vector<char>* edge_keep = nullptr,
                                      MetricsTrace* trace = nullptr) {
    if (x.n() != g.n()) throw LabelingError("labeling/graph size mismatch");
    if (x.den() % 2 != 0) throw LabelingError("basic_round: 1/(2Q)-integral input required");
    x.check_valid();
    long long den2 = x.den();  // 2Q
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        const auto& ed = g.edges()[e];
        if (gamma[ed.u] == gamma[ed.v])
            throw ImproperInputError("basic_round: coloring not proper on kept edges");
    }

    int classes = 0;
    for (int v = 0; v < g.n(); ++v) classes = std::max(classes, gamma[v]);
    std::vector<std::vector<int>> phase(classes + 1);
    for (int v = 0; v < g.n(); ++v) phase[gamma[v]].push_back(v);

    std::vector<std::vector<FractionalLabeling::Entry>> y(g.n());
    for (int v = 0; v < g.n(); ++v) y[v] = x.entries(v);

    long msg_bits = detail::labeling_msg_bits(den2, x.label_space_size());
    for (int i = 1; i <= classes; ++i) {
        long msgs = 0;
        for (int v : phase[i]) {
            msgs += g.degree(v);
            std::vector<int> odd;  // labels of v that are not yet 1/Q-integral
            for (const auto& [l, nn] : y[v])
                if (nn % 2 != 0) odd.push_back(l);
            if (odd.empty()) continue;
            if (odd.size() % 2 != 0)
                throw std::logic_error("basic_round: odd number of half-integral labels");

            // marginal costs; a positive constant factor does not change the
            // ordering, so uniform diagonal costs accumulate plain integers
            bool fast = cost.diagonal() && cost.uniform_diag();
            std::vector<long long> Wi(fast ? odd.size() : 0, 0);
            std::vector<Rat> W(fast ? 0 : odd.size(), Rat(0));
            for (auto [u, e] : g.adj(v)) {
                if (edge_keep && !(*edge_keep)[e]) continue;
                if (cost.diagonal()) {
                    for (std::size_t k = 0; k < odd.size(); ++k) {
                        auto it = std::lower_bound(y[u].begin(), y[u].end(),
                                                   FractionalLabeling::Entry{odd[k], 0});
                        if (it == y[u].end() || it->first != odd[k]) continue;
                        if (fast)
                            Wi[k] += it->second;
                        else
                            W[k] += Rat(it->second) *
                                    (cost.diag_coeff(v, odd[k]) + cost.diag_coeff(u, odd[k]));
                    }
                } else {
                    for (std::size_t k = 0; k < odd.size(); ++k)
                        for (const auto& [lu, nu] : y[u])
                            W[k] += Rat(nu) * cost.eval(v, odd[k], u, lu);
                }
            }
            std::vector<std::size_t> order(odd.size());
            for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
            std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
                if (fast) {
                    if (Wi[a] != Wi[b]) return Wi[a] > Wi[b];
                } else if (W[a] != W[b]) {
                    return W[a] > W[b];
                }
                return odd[a] < odd[b];
            });
            std::vector<FractionalLabeling::Entry> upd = y[v];
            auto adjust = [&upd](int label, long long delta) {
                auto it = std::lower_bound(upd.begin(), upd.end(),
                                           FractionalLabeling::Entry{label, 0});
                it->second += delta;
            };
            for (std::size_t k = 0; k < order.size(); ++k)
                adjust(odd[order[k]], k < order.size() / 2 ? -1 : +1);
            upd.erase(std::remove_if(upd.begin(), upd.end(),
                                     [](const FractionalLabeling::Entry& en) { return en.second == 0; }),
                      upd.end());
            y[v] = std::move(upd);
        }
        if (trace) trace->charge_round(msg_bits, msgs);
    }

    FractionalLabeling out(g.n(), den2 / 2);
    for (int v = 0; v < g.n(); ++v) {
        std::vector<FractionalLabeling::Entry> e = y[v];
        for (auto& [l, nn] : e) nn /= 2;
        out.set(v, std::move(e));
    }
    return out;
}

// Current edge costs as edge weights, zero on masked-out edges. Scaled by
// den^2 (integer-valued for uniform diagonal costs): the defective passes
// these weights feed only use relative weight bounds, which are invariant
// under scaling, and integer weights keep the exact arithmetic cheap.
inline std::vector<Rat> cost_weights(const SimGraph& g, const FractionalLabeling& x,
                                     const EdgeCostFn& cost, const std::vector<char>* edge_keep) {
    std::vector<Rat> w(g.m(), Rat(0));
    for (int e = 0; e < g.m(); ++e)
        if (!edge_keep || (*edge_keep)[e]) w[e] = edge_cost_scaled(g, e, x, cost);
    return w;
}

// Approximate rounding: a weighted (eps/3)-relative average defective
// coloring (edge weights = current edge costs) leaves monochromatic edges E0
// of cost <= eps/3 of the total; basic_round runs on the remainder with the
// defective coloring as schedule. E0 edges inflate by at most 4x (since
// x' <= 2x), so the total cost grows by at most 1+eps.
inline FractionalLabeling approx_round(const SimGraph& g, const FractionalLabeling& x,
                                       const EdgeCostFn& cost, const std::vector<int>& gamma,
                                       const Rat& eps, const std::vector<char>* edge_keep = nullptr,
                                       MetricsTrace* trace = nullptr) {
    if (eps <= 0) throw std::invalid_argument("approx_round: eps > 0 required");
    SimGraph gw = g;
    gw.set_weights(cost_weights(g, x, cost, edge_keep));
    auto def = recursive_avg_defective(gw, gamma, eps / 3, edge_keep, trace);
    std::vector<char> keep1 = edge_keep ? *edge_keep : std::vector<char>(g.m(), 1);
    for (int e = 0; e < g.m(); ++e) {
        const auto& ed = g.edges()[e];
        if (keep1[e] && def.assignment[ed.u] == def.assignment[ed.v]) keep1[e] = 0;
    }
    return basic_round(g, x, cost, def.assignment, &keep1, trace);
}

struct FullRoundResult {
    FractionalLabeling labeling;      // integral
    std::vector<int> schedule;        // defective coloring used for the stages
    std::vector<char> edge_keep;      // edges the stages were accounted on
    std::vector<int> removed_edges;   // dropped by the initial defective pass
};

// Full rounding of a 1/2^k-integral labeling to an integral one with total
// cost at most (1+eps) times the input cost. A per-node defective pass at
// delta = eps/(2Q^2) drops edges whose cost even worst-case rounding can only
// inflate to eps/2 of the total; k approx_round stages at eps/(4k) finish,
// since (1+eps/(4k))^k <= 1+eps/2 for eps <= 1.
inline FullRoundResult full_round(const SimGraph& g, const FractionalLabeling& x,
                                  const EdgeCostFn& cost, const std::vector<int>& gamma,
                                  const Rat& eps, const std::vector<char>* edge_keep = nullptr,
                                  MetricsTrace* trace = nullptr) {
    if (eps <= 0 || eps > 1) throw std::invalid_argument("full_round: eps in (0,1] required");
    long long Q = x.den();
    if ((Q & (Q - 1)) != 0) throw LabelingError("full_round: denominator must be a power of two");
    int k = floor_log2(std::uint64_t(Q));

    FullRoundResult res;
    res.edge_keep = edge_keep ? *edge_keep : std::vector<char>(g.m(), 1);
    res.schedule = gamma;
    if (k == 0) {
        res.labeling = x;
        res.labeling.check_valid();
        return res;
    }

    Rat delta = eps / (2 * Rat(Int(Q) * Q));
    SimGraph gw = g;
    gw.set_weights(cost_weights(g, x, cost, edge_keep));
    auto wd = weighted_defective(gw, gamma, delta, &res.edge_keep, trace);
    res.schedule = wd.coloring;
    res.edge_keep = wd.edge_keep;
    res.removed_edges = wd.removed_edges;

    FractionalLabeling cur = x;
    Rat stage_eps = eps / (4 * k);
    for (int stage = 0; stage < k; ++stage)
        cur = approx_round(g, cur, cost, res.schedule, stage_eps, &res.edge_keep, trace);
    if (!cur.is_integral()) throw std::logic_error("full_round: output not integral");
    res.labeling = std::move(cur);
    return res;
}

}  // namespace distcolor
