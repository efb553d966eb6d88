#pragma once

#include "distcolor/graph.hpp"
#include "distcolor/rational.hpp"
#include "distcolor/trace.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace distcolor {

struct ImproperInputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Family of subsets of [p^2]: member i is the graph of the i-th polynomial of
// degree <= d over GF(p) (coefficients = base-p digits of i). Two distinct
// members intersect in at most d points.
class PolySetFamily {
public:
    PolySetFamily(std::uint64_t p, int d) : p_(p), d_(d) {}

    std::uint64_t p() const { return p_; }
    int d() const { return d_; }
    std::uint64_t index_space() const {
        std::uint64_t s = 1;
        for (int j = 0; j <= d_; ++j) s *= p_;
        return s;
    }
    std::uint64_t palette() const { return p_ * p_; }

    std::vector<std::uint64_t> coeffs(std::uint64_t index) const {
        std::vector<std::uint64_t> c(d_ + 1);
        for (int j = 0; j <= d_; ++j) {
            c[j] = index % p_;
            index /= p_;
        }
        return c;
    }

    std::uint64_t eval(const std::vector<std::uint64_t>& c, std::uint64_t a) const {
        std::uint64_t r = 0;
        for (int j = d_; j >= 0; --j) r = (r * a + c[j]) % p_;
        return r;
    }

    // Member set as points a*p + poly(a), a in [p].
    std::vector<std::uint64_t> member(std::uint64_t index) const {
        auto c = coeffs(index);
        std::vector<std::uint64_t> s(p_);
        for (std::uint64_t a = 0; a < p_; ++a) s[a] = a * p_ + eval(c, a);
        return s;
    }

    // Points a where poly_i and poly_j agree. Linear differences are solved
    // directly; higher degrees scan GF(p).
    std::vector<std::uint64_t> agreements(std::uint64_t i, std::uint64_t j) const {
        auto ci = coeffs(i), cj = coeffs(j);
        std::vector<std::uint64_t> diff(d_ + 1);
        bool all_zero = true;
        int top = 0;
        for (int k = 0; k <= d_; ++k) {
            diff[k] = (ci[k] + p_ - cj[k]) % p_;
            if (diff[k] != 0) {
                all_zero = false;
                top = k;
            }
        }
        if (all_zero) throw std::invalid_argument("agreements of identical indices");
        if (top == 0) return {};  // nonzero constant: no agreement
        if (top == 1) {
            // diff[1]*a + diff[0] == 0  =>  a = -diff[0] * diff[1]^{-1}
            std::uint64_t inv = mod_pow(diff[1], p_ - 2);
            return {((p_ - diff[0]) % p_) * inv % p_};
        }
        std::vector<std::uint64_t> roots;
        for (std::uint64_t a = 0; a < p_; ++a) {
            std::uint64_t r = 0;
            for (int k = top; k >= 0; --k) r = (r * a + diff[k]) % p_;
            if (r == 0) roots.push_back(a);
        }
        return roots;
    }

private:
    std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e) const {
        std::uint64_t r = 1;
        b %= p_;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    }

    std::uint64_t p_;
    int d_;
};

struct FamilyParams {
    std::uint64_t p;
    int d;
};

// Constraint for one color-reduction round: the member picked by a node must
// survive either all neighbor members (proper) or all but an eps-fraction of
// the neighbor edge weight (defective).
struct Proper {
    int max_degree;
};
struct Defective {
    Rat eps;
};

namespace detail {
inline int min_cover_degree(std::uint64_t p, std::uint64_t q) {
    Int pw = p;
    int d = 0;
    while (pw < q) {
        pw *= p;
        ++d;
    }
    return d;
}
}  // namespace detail

// Smallest (by p^2, then d) prime/degree pair with p^(d+1) >= q and the
// round's survival constraint. p >= q with d = 0 is always admissible, so the
// ascending search terminates.
inline FamilyParams choose_params(std::uint64_t q, const Proper& c) {
    if (q < 2) q = 2;
    for (std::uint64_t p = 2;; p = next_prime(p + 1)) {
        int d = detail::min_cover_degree(p, q);
        if (p > std::uint64_t(c.max_degree) * std::uint64_t(d)) return {p, d};
    }
}

inline FamilyParams choose_params(std::uint64_t q, const Defective& c) {
    if (q < 2) q = 2;
    if (c.eps <= 0) throw std::invalid_argument("defective eps must be positive");
    for (std::uint64_t p = 2;; p = next_prime(p + 1)) {
        int d = detail::min_cover_degree(p, q);
        if (Rat(Int(p)) * c.eps >= d) return {p, d};
    }
}

// Palette reached when iterating proper color reduction until it stops
// shrinking, plus the number of reduction steps from q.
inline std::pair<std::uint64_t, int> linial_fixed_point(std::uint64_t q, int max_degree) {
    int steps = 0;
    for (;;) {
        FamilyParams fp = choose_params(q, Proper{max_degree});
        std::uint64_t next = fp.p * fp.p;
        if (next >= q) return {q, steps};
        q = next;
        ++steps;
    }
}

// One round of Linial-style color reduction: proper q-coloring -> proper
// p^2-coloring. Colors are 1-based.
inline std::vector<int> linial_reduce_step(const SimGraph& g, const std::vector<int>& coloring,
                                           int max_degree, MetricsTrace* trace = nullptr,
                                           const std::vector<char>* node_mask = nullptr) {
    std::uint64_t q = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!node_mask || (*node_mask)[v]) q = std::max<std::uint64_t>(q, coloring[v]);
    FamilyParams fp = choose_params(q, Proper{max_degree});
    PolySetFamily fam(fp.p, fp.d);

    std::vector<int> out(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) {
        if (node_mask && !(*node_mask)[v]) continue;
        std::uint64_t idx = std::uint64_t(coloring[v]) - 1;
        auto cv = fam.coeffs(idx);
        std::vector<char> forbidden(fp.p, 0);
        for (auto [u, e] : g.adj(v)) {
            if (node_mask && !(*node_mask)[u]) continue;
            if (coloring[u] == coloring[v])
                throw ImproperInputError("linial_reduce_step: input coloring not proper");
            for (std::uint64_t a : fam.agreements(idx, std::uint64_t(coloring[u]) - 1)) forbidden[a] = 1;
        }
        std::uint64_t pick = fp.p;  // sentinel
        for (std::uint64_t a = 0; a < fp.p; ++a)
            if (!forbidden[a]) {
                pick = a;
                break;
            }
        if (pick == fp.p) throw std::logic_error("linial_reduce_step: no free member element");
        out[v] = int(pick * fp.p + fam.eval(cv, pick)) + 1;
    }
    if (trace) trace->charge_round(bit_width_of(q - 1), 2L * g.m());
    return out;
}

struct LinialResult {
    std::vector<int> coloring;
    std::uint64_t palette;
    int reduction_rounds;
};

// Iterated color reduction from a given proper coloring (typically ids+1)
// down to the Delta-dependent fixed-point palette.
inline LinialResult linial_color(const SimGraph& g, std::vector<int> coloring, int max_degree,
                                 MetricsTrace* trace = nullptr,
                                 const std::vector<char>* node_mask = nullptr) {
    std::uint64_t q = 1;
    for (int v = 0; v < g.n(); ++v)
        if (!node_mask || (*node_mask)[v]) q = std::max<std::uint64_t>(q, coloring[v]);
    int rounds = 0;
    for (;;) {
        FamilyParams fp = choose_params(q, Proper{max_degree});
        if (fp.p * fp.p >= q) break;
        coloring = linial_reduce_step(g, coloring, max_degree, trace, node_mask);
        q = fp.p * fp.p;
        ++rounds;
    }
    return {std::move(coloring), q, rounds};
}

struct DefectiveStepResult {
    std::vector<int> coloring;       // 1..p^2 on participating nodes
    std::vector<int> removed_edges;  // kept edges that became monochromatic
    std::uint64_t palette;
    // per-node: weight removed this step and kept incident weight before it
    std::vector<Rat> removed_weight, kept_weight_before;
};

// One refinement round of per-node weighted defective coloring: each node
// keeps the member element minimizing the conflict weight against its
// neighbors' members; the minimum is at most (d/p) <= eps of the node's kept
// incident weight.
inline DefectiveStepResult defective_reduce_step(const SimGraph& g, const std::vector<int>& coloring,
                                                 const Rat& eps, const std::vector<char>* edge_keep,
                                                 MetricsTrace* trace = nullptr) {
    std::uint64_t q = 1;
    for (int v = 0; v < g.n(); ++v) q = std::max<std::uint64_t>(q, coloring[v]);
    FamilyParams fp = choose_params(q, Defective{eps});
    PolySetFamily fam(fp.p, fp.d);

    DefectiveStepResult res;
    res.palette = fam.palette();
    res.coloring.assign(g.n(), 0);
    res.removed_weight.assign(g.n(), Rat(0));
    res.kept_weight_before.assign(g.n(), Rat(0));

    for (int v = 0; v < g.n(); ++v) {
        std::uint64_t idx = std::uint64_t(coloring[v]) - 1;
        auto cv = fam.coeffs(idx);
        std::map<std::uint64_t, Rat> conflict;  // a -> conflicting weight
        for (auto [u, e] : g.adj(v)) {
            if (edge_keep && !(*edge_keep)[e]) continue;
            if (coloring[u] == coloring[v])
                throw ImproperInputError("defective_reduce_step: input not proper on kept edges");
            res.kept_weight_before[v] += g.weight_or_one(e);
            for (std::uint64_t a : fam.agreements(idx, std::uint64_t(coloring[u]) - 1))
                conflict[a] += g.weight_or_one(e);
        }
        // smallest a with zero conflict weight, else overall argmin
        std::uint64_t pick = fp.p;
        for (std::uint64_t cand = 0; cand < fp.p; ++cand) {
            auto it = conflict.find(cand);
            if (it == conflict.end() || it->second == 0) {
                pick = cand;
                break;
            }
        }
        if (pick == fp.p) {
            Rat best;
            bool first = true;
            for (std::uint64_t cand = 0; cand < fp.p; ++cand) {
                Rat w = conflict.at(cand);
                if (first || w < best) {
                    best = w;
                    pick = cand;
                    first = false;
                }
            }
        }
        res.coloring[v] = int(pick * fp.p + fam.eval(cv, pick)) + 1;
    }
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        const auto& ed = g.edges()[e];
        if (res.coloring[ed.u] == res.coloring[ed.v]) {
            res.removed_edges.push_back(e);
            res.removed_weight[ed.u] += g.weight_or_one(e);
            res.removed_weight[ed.v] += g.weight_or_one(e);
        }
    }
    if (trace) trace->charge_round(bit_width_of(q - 1), 2L * g.m());
    return res;
}

struct WeightedDefectiveResult {
    std::vector<int> coloring;  // proper on kept edges
    std::vector<char> edge_keep;
    std::vector<int> removed_edges;
    std::uint64_t palette;
    int steps;
    Rat step_eps;                          // per-step budget eps/S
    std::vector<DefectiveStepResult> step_reports;
};

// Per-node weighted defective coloring: iterated refinement with per-step
// budget eps/S, where S is the number of steps to the palette fixed point.
// Guarantees, per node v, removed incident weight <= eps * W(v).
inline WeightedDefectiveResult weighted_defective(const SimGraph& g, std::vector<int> coloring,
                                                 const Rat& eps, const std::vector<char>* edge_keep0,
                                                 MetricsTrace* trace = nullptr) {
    std::uint64_t q0 = 1;
    for (int v = 0; v < g.n(); ++v) q0 = std::max<std::uint64_t>(q0, coloring[v]);

    auto chain_steps = [&](int S) {
        Rat budget = eps / S;
        std::uint64_t q = q0;
        int steps = 0;
        for (;;) {
            FamilyParams fp = choose_params(q, Defective{budget});
            if (fp.p * fp.p >= q) return steps;
            q = fp.p * fp.p;
            ++steps;
        }
    };
    int S = 1;
    while (chain_steps(S) > S) ++S;

    WeightedDefectiveResult res;
    res.step_eps = eps / S;
    res.edge_keep = edge_keep0 ? *edge_keep0 : std::vector<char>(g.m(), 1);
    std::uint64_t q = q0;
    res.palette = q0;
    res.steps = 0;
    for (;;) {
        FamilyParams fp = choose_params(q, Defective{res.step_eps});
        if (fp.p * fp.p >= q) break;
        DefectiveStepResult st = defective_reduce_step(g, coloring, res.step_eps, &res.edge_keep, trace);
        coloring = st.coloring;
        for (int e : st.removed_edges) {
            res.edge_keep[e] = 0;
            res.removed_edges.push_back(e);
        }
        q = st.palette;
        res.palette = q;
        ++res.steps;
        res.step_reports.push_back(std::move(st));
    }
    res.coloring = std::move(coloring);
    return res;
}

}  // namespace distcolor
