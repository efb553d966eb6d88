#include "distcolor/generate.hpp"
#include "distcolor/layered.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>
#include <sstream>

using namespace distcolor;

namespace {

Layering path_layering(int n) {
    Layering lay;
    lay.graph = gen_path(n);
    lay.layer.resize(n);
    for (int v = 0; v < n; ++v) lay.layer[v] = v + 1;
    return lay;
}

// star: node 0 is the center in layer 2, m leaves in layer 1
Layering star_layering(int m) {
    std::vector<std::pair<long long, long long>> e;
    for (int i = 1; i <= m; ++i) e.push_back({0, i});
    Layering lay;
    lay.graph = SimGraph::build({}, e);
    lay.layer.assign(m + 1, 1);
    lay.layer[0] = 2;
    return lay;
}

std::vector<std::vector<int>> up_degree_lists(const Layering& lay, int extra, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    int top = lay.max_up_degree() + 1 + extra;
    std::vector<std::vector<int>> lists(lay.graph.n());
    for (int v = 0; v < lay.graph.n(); ++v) {
        int need = lay.up_degree(v) + 1;
        std::set<int> s;
        while (int(s.size()) < need) s.insert(1 + int(rng() % top));
        lists[v].assign(s.begin(), s.end());
    }
    return lists;
}

}  // namespace

TEST_CASE("compute_layer_weights: three-node path gives 1, 3, 7") {
    auto lay = path_layering(3);
    auto pw = compute_layer_weights(lay);
    CHECK(pw.weight == std::vector<Int>{1, 3, 7});
    CHECK(pw.total == 11);
}

TEST_CASE("compute_layer_weights: star center dominates the weight") {
    int m = 10;
    auto lay = star_layering(m);
    auto pw = compute_layer_weights(lay);
    CHECK(pw.weight[0] == 2 * m + 1);
    CHECK(pw.total == 3 * m + 1);

    // only the center is free initially, and it holds at least half the weight
    auto fr = free_nodes(lay, std::vector<int>(m + 1, 0));
    CHECK(fr[0]);
    for (int v = 1; v <= m; ++v) CHECK(!fr[v]);
    CHECK(2 * pw.weight[0] >= pw.total);
}

TEST_CASE("compute_layer_weights: rounded variant bounds") {
    auto lg = gen_layered(60, 5, 3, 9);
    Layering lay{lg.graph, lg.layer};
    auto exact = compute_layer_weights(lay, false);
    MetricsTrace tr;
    auto rounded = compute_layer_weights(lay, true, &tr);
    for (int v = 0; v < lay.graph.n(); ++v) {
        // rounding up only grows values, and by < 2x per crossed layer
        CHECK(rounded.weight[v] >= exact.weight[v]);
        CHECK(rounded.weight[v] <= (Int(1) << lay.layer[v]) * exact.weight[v]);
    }
    CHECK(tr.rounds() == lay.h());
    // exponent encoding: messages are log log sized, not value sized
    CHECK(tr.max_message_bits() <= bit_width_of(std::uint64_t(msb(rounded.total) + 2)));
}

TEST_CASE("roundup_pow2: fixed points and rounding") {
    CHECK(roundup_pow2(Int(0)) == 1);
    CHECK(roundup_pow2(Int(1)) == 1);
    CHECK(roundup_pow2(Int(2)) == 2);
    CHECK(roundup_pow2(Int(3)) == 4);
    CHECK(roundup_pow2(Int(1024)) == 1024);
    CHECK(roundup_pow2(Int(1025)) == 2048);
}

TEST_CASE("Layering: validation and save/load roundtrip") {
    Layering bad;
    bad.graph = gen_path(3);
    bad.layer = {1, 2};
    CHECK_THROWS_AS(bad.validate(), InstanceError);
    bad.layer = {1, 0, 2};
    CHECK_THROWS_AS(bad.validate(), InstanceError);

    auto lg = gen_layered(20, 4, 2, 3);
    Layering lay{lg.graph, lg.layer};
    std::ostringstream out;
    lay.save(out);
    std::istringstream in(out.str());
    CHECK(Layering::load(in, lg.graph) == lg.layer);

    std::istringstream incomplete("0 1\n");
    CHECK_THROWS_AS(Layering::load(incomplete, lg.graph), InstanceError);
    std::istringstream junk("0 x\n");
    CHECK_THROWS_AS(Layering::load(junk, lg.graph), InstanceError);
}

TEST_CASE("layered_list_coloring: random layered graphs, both models") {
    for (bool congest : {false, true}) {
        auto lg = gen_layered(congest ? 40 : 60, 4, 3, congest ? 31 : 17);
        Layering lay{lg.graph, lg.layer};
        auto lists = up_degree_lists(lay, 2, 5);
        LayeredRunStats st;
        auto a = layered_list_coloring(lay, lists, congest, nullptr, &st);
        INFO("congest=" << congest);
        REQUIRE(a.total());
        auto rep = verify_coloring(lay.graph, a, &lists);
        REQUIRE(rep.valid());
        // per-iteration invariants from the returned stats
        for (std::size_t i = 0; i < st.iters.size(); ++i) {
            const auto& it = st.iters[i];
            REQUIRE(2 * it.free_weight >= it.residual_weight);
            REQUIRE(4 * it.colored_weight >= it.residual_weight);
            if (i > 0)
                REQUIRE(4 * it.residual_weight <=
                        3 * st.iters[i - 1].residual_weight);
        }
    }
}

TEST_CASE("layered_list_coloring: rejects lists below up-degree+1") {
    auto lay = path_layering(3);
    std::vector<std::vector<int>> lists{{1}, {1}, {1}};  // up-degree of node 0 is 1
    CHECK_THROWS_AS(layered_list_coloring(lay, lists), InstanceError);
}

TEST_CASE("h_partition: trees peel with small up-degree") {
    auto tree = gen_tree(60, 4);
    auto lay = h_partition(tree, Rat(1), Rat(1, 2));
    lay.validate();
    CHECK(lay.max_up_degree() <= 2);  // floor((2 + 1/2) * 1)

    auto k5 = gen_clique(5);
    auto l5 = h_partition(k5, Rat(3), Rat(1, 2));
    CHECK(l5.h() == 1);  // all degrees below the threshold at once
}

TEST_CASE("h_partition: stalls with the offending nodes when a is too small") {
    auto k5 = gen_clique(5);
    try {
        h_partition(k5, Rat(1, 2), Rat(1, 2));
        FAIL("expected a stall");
    } catch (const PartitionStallError& e) {
        CHECK(e.stuck_ids.size() == 5);
    }
    CHECK_THROWS_AS(h_partition(k5, Rat(0), Rat(1)), InstanceError);
}

TEST_CASE("arboricity_coloring: trees and sparse graphs") {
    auto tree = gen_tree(50, 8);
    auto a = arboricity_coloring(tree, Rat(1), Rat(1, 2));
    REQUIRE(a.total());
    CHECK(verify_coloring(tree, a).proper());
    CHECK(a.max_color() <= 3);  // floor((2+1/2)*1) + 1

    SimGraph edgeless = SimGraph::build({0, 1, 2}, {});
    auto e = arboricity_coloring(edgeless, Rat(1), Rat(1));
    REQUIRE(e.total());

    auto g = gen_random_regular(40, 6, 14);
    auto b = arboricity_coloring(g, Rat(7, 2), Rat(1, 2), true);
    REQUIRE(b.total());
    CHECK(verify_coloring(g, b).proper());
    CHECK(b.max_color() <= int(rat_floor((Rat(2) + Rat(1, 2)) * Rat(7, 2))) + 1);
}
