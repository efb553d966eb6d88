#pragma once

#include "distcolor/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

namespace distcolor {

struct LabelingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fractional vertex labeling: per node a sparse distribution over integer
// labels, every value a multiple of 1/den, values summing to 1. Stored as
// integer numerators at the shared denominator.
class FractionalLabeling {
public:
    using Entry = std::pair<int, long long>;  // (label, numerator), numerator > 0

    FractionalLabeling() = default;
    FractionalLabeling(int n, long long den) : den_(den), vals_(n) {
        if (den < 1) throw LabelingError("denominator must be >= 1");
    }

    int n() const { return int(vals_.size()); }
    long long den() const { return den_; }

    void set(int v, std::vector<Entry> entries) {
        std::sort(entries.begin(), entries.end());
        long long sum = 0;
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (entries[i].second < 0) throw LabelingError("negative labeling value");
            if (i > 0 && entries[i].first == entries[i - 1].first)
                throw LabelingError("duplicate label");
            sum += entries[i].second;
        }
        if (sum != den_) throw LabelingError("labeling values must sum to 1");
        entries.erase(std::remove_if(entries.begin(), entries.end(),
                                     [](const Entry& e) { return e.second == 0; }),
                      entries.end());
        vals_[v] = std::move(entries);
    }

    const std::vector<Entry>& entries(int v) const { return vals_[v]; }

    long long num(int v, int label) const {
        auto it = std::lower_bound(vals_[v].begin(), vals_[v].end(), Entry{label, 0});
        return it != vals_[v].end() && it->first == label ? it->second : 0;
    }
    Rat value(int v, int label) const { return Rat(num(v, label), den_); }

    bool is_integral() const {
        for (const auto& e : vals_)
            if (e.size() != 1) return false;
        return true;
    }
    // unique label carrying the full mass (requires integral node)
    int integral_label(int v) const {
        if (vals_[v].size() != 1 || vals_[v][0].second != den_)
            throw LabelingError("node is not integrally labeled");
        return vals_[v][0].first;
    }

    // distinct labels used anywhere (the effective label space size)
    long label_space_size() const {
        std::map<int, char> seen;
        for (const auto& e : vals_)
            for (const auto& [l, nn] : e) seen[l] = 1;
        return long(seen.size());
    }

    void check_valid() const {
        for (int v = 0; v < n(); ++v) {
            long long sum = 0;
            for (const auto& [l, nn] : vals_[v]) sum += nn;
            if (sum != den_) throw LabelingError("labeling values must sum to 1");
        }
    }

    // Near-uniform 1/den-integral distribution over the given labels: each
    // label gets floor(den/k) or one more, smaller labels first.
    static FractionalLabeling spread(int n, const std::vector<std::vector<int>>& labels,
                                     long long den) {
        FractionalLabeling x(n, den);
        for (int v = 0; v < n; ++v) {
            std::vector<int> ls = labels[v];
            std::sort(ls.begin(), ls.end());
            if (ls.empty()) throw LabelingError("empty label set");
            long long k = (long long)ls.size();
            std::vector<Entry> e;
            for (long long i = 0; i < k; ++i)
                e.push_back({ls[i], den / k + (i < den % k ? 1 : 0)});
            x.set(v, std::move(e));
        }
        return x;
    }

private:
    long long den_ = 1;
    std::vector<std::vector<Entry>> vals_;
};

// Symmetric non-negative edge cost oracle c((u,l_u),(v,l_v)). Diagonal costs
// (nonzero only when l_u = l_v, decomposing as coeff(u,l)+coeff(v,l)) get a
// faster evaluation path.
class EdgeCostFn {
public:
    virtual ~EdgeCostFn() = default;
    virtual Rat eval(int u, int lu, int v, int lv) const = 0;
    virtual bool diagonal() const { return false; }
    virtual Rat diag_coeff(int /*v*/, int /*label*/) const {
        throw LabelingError("cost function is not diagonal");
    }
    // diag_coeff is one positive constant for every (node, label); enables
    // integer fast paths where only relative costs matter
    virtual bool uniform_diag() const { return false; }
};

// c = 1 iff labels match.
class MonoCost : public EdgeCostFn {
public:
    Rat eval(int, int lu, int, int lv) const override { return lu == lv ? Rat(1) : Rat(0); }
    bool diagonal() const override { return true; }
    Rat diag_coeff(int, int) const override { return Rat(1, 2); }
    bool uniform_diag() const override { return true; }
};

// c = [labels match] * (a_u + a_v) for per-node coefficients.
class WeightedMonoCost : public EdgeCostFn {
public:
    explicit WeightedMonoCost(std::vector<Rat> node_coeff) : a_(std::move(node_coeff)) {}
    Rat eval(int u, int lu, int v, int lv) const override {
        return lu == lv ? a_[u] + a_[v] : Rat(0);
    }
    bool diagonal() const override { return true; }
    Rat diag_coeff(int v, int) const override { return a_[v]; }

private:
    std::vector<Rat> a_;
};

// c = [labels match] * (f(u,l) + f(v,l)) for a per-(node,label) coefficient.
class DiagonalCost : public EdgeCostFn {
public:
    explicit DiagonalCost(std::function<Rat(int, int)> coeff) : f_(std::move(coeff)) {}
    Rat eval(int u, int lu, int v, int lv) const override {
        return lu == lv ? f_(u, lu) + f_(v, lv) : Rat(0);
    }
    bool diagonal() const override { return true; }
    Rat diag_coeff(int v, int label) const override { return f_(v, label); }

private:
    std::function<Rat(int, int)> f_;
};

// Explicit per-edge cost table, for tests with arbitrary symmetric costs.
class TableCost : public EdgeCostFn {
public:
    void set(int u, int lu, int v, int lv, const Rat& c) {
        if (c < 0) throw LabelingError("negative edge cost");
        table_[key(u, lu, v, lv)] = c;
    }
    Rat eval(int u, int lu, int v, int lv) const override {
        auto it = table_.find(key(u, lu, v, lv));
        return it == table_.end() ? Rat(0) : it->second;
    }

private:
    static std::tuple<int, int, int, int> key(int u, int lu, int v, int lv) {
        if (u > v) {
            std::swap(u, v);
            std::swap(lu, lv);
        }
        return {u, lu, v, lv};
    }
    std::map<std::tuple<int, int, int, int>, Rat> table_;
};

// Edge cost scaled by den^2, i.e. with the labeling values read as their
// integer numerators. Integer-only in the uniform-diagonal case.
inline Rat edge_cost_scaled(const SimGraph& g, int e, const FractionalLabeling& x,
                            const EdgeCostFn& cost) {
    const auto& ed = g.edges()[e];
    const auto& xu = x.entries(ed.u);
    const auto& xv = x.entries(ed.v);
    if (cost.diagonal()) {
        if (cost.uniform_diag()) {
            long long s = 0;
            std::size_t i = 0, j = 0;
            while (i < xu.size() && j < xv.size()) {
                if (xu[i].first < xv[j].first)
                    ++i;
                else if (xu[i].first > xv[j].first)
                    ++j;
                else {
                    s += xu[i].second * xv[j].second;
                    ++i;
                    ++j;
                }
            }
            return s == 0 ? Rat(0) : Rat(s) * 2 * cost.diag_coeff(0, 0);
        }
        Rat total = 0;
        std::size_t i = 0, j = 0;
        while (i < xu.size() && j < xv.size()) {
            if (xu[i].first < xv[j].first)
                ++i;
            else if (xu[i].first > xv[j].first)
                ++j;
            else {
                int l = xu[i].first;
                total += Rat(Int(xu[i].second) * xv[j].second) *
                         (cost.diag_coeff(ed.u, l) + cost.diag_coeff(ed.v, l));
                ++i;
                ++j;
            }
        }
        return total;
    }
    Rat total = 0;
    for (const auto& [lu, nu] : xu)
        for (const auto& [lv, nv] : xv)
            total += Rat(Int(nu) * nv) * cost.eval(ed.u, lu, ed.v, lv);
    return total;
}

// Exact cost of one edge under a fractional labeling.
inline Rat edge_frac_cost(const SimGraph& g, int e, const FractionalLabeling& x,
                          const EdgeCostFn& cost) {
    return edge_cost_scaled(g, e, x, cost) / Rat(Int(x.den()) * x.den());
}

// Total cost over the (masked) edge set; exact rational.
inline Rat fractional_cost(const SimGraph& g, const FractionalLabeling& x, const EdgeCostFn& cost,
                           const std::vector<char>* edge_keep = nullptr) {
    Rat total = 0;
    for (int e = 0; e < g.m(); ++e) {
        if (edge_keep && !(*edge_keep)[e]) continue;
        total += edge_cost_scaled(g, e, x, cost);
    }
    return total / Rat(Int(x.den()) * x.den());
}

}  // namespace distcolor
