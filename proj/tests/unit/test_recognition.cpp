#include <doctest.h>

#include <algorithm>
#include <random>

#include "ic/errors.hpp"
#include "ic/families.hpp"
#include "ic/recognition.hpp"
#include "support/oracles.hpp"

using namespace ic;

namespace {

Graph cycle_graph(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, e);
}

Graph complete_graph(int n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph::from_edge_list(n, e);
}

ClusterPartition singletons(int n, bool cyclic) {
    ClusterPartition p;
    p.cyclic = cyclic;
    for (int i = 0; i < n; ++i) p.clusters.push_back({i});
    return p;
}

bool has_tag(const std::vector<FamilyTag>& tags, FamilyTag t) { return std::find(tags.begin(), tags.end(), t) != tags.end(); }

}  // namespace

TEST_CASE("verify accepts constructed braids") {
    auto h = build_H(12);
    auto r = verify_braid(h.graph, h.partition);
    CHECK(r.verified);
    REQUIRE(r.family);
    CHECK(r.family->tag == FamilyTag::H);
    CHECK(r.cluster_sizes == std::vector<int>{3, 3, 3, 3});
    CHECK(std::all_of(r.intra.begin(), r.intra.end(), [](IntraKind k) { return k == IntraKind::empty; }));
    CHECK_FALSE(r.witness);

    auto c6 = verify_braid(cycle_graph(6), singletons(6, true));
    CHECK(c6.verified);

    auto g = build_G(16);
    auto rg = verify_braid(g.graph, g.partition);
    CHECK(rg.verified);
    CHECK(std::all_of(rg.intra.begin(), rg.intra.end(), [](IntraKind k) { return k == IntraKind::full; }));
}

TEST_CASE("verify reports a witness") {
    // cyclic singletons of K4: cluster 0 sees cluster 2
    auto r = verify_braid(complete_graph(4), singletons(4, true));
    CHECK_FALSE(r.verified);
    REQUIRE(r.witness);
    CHECK(r.witness->vertex == 0);
    CHECK(r.witness->condition == BraidWitness::Condition::outside_neighbor);
    CHECK(r.witness->other == 2);
    CHECK_FALSE(r.witness->describe().empty());

    // K4 split {0,1},{2},{3}: every cluster pair is consecutive when k = 3
    ClusterPartition three{{{0, 1}, {2}, {3}}, true};
    CHECK(verify_braid(complete_graph(4), three).verified);

    auto h = build_H(12);
    auto missing = h.graph.without_edge(0, 3);
    auto m = verify_braid(missing, h.partition);
    CHECK_FALSE(m.verified);
    REQUIRE(m.witness);
    CHECK(m.witness->vertex == 0);
    CHECK(m.witness->condition == BraidWitness::Condition::missing_neighbor);
    CHECK(m.witness->other == 3);
}

TEST_CASE("verify rejects malformed partitions") {
    auto g = cycle_graph(6);
    CHECK_THROWS_AS(verify_braid(g, ClusterPartition{{{0}, {}, {1}}, true}), InputError);
    CHECK_THROWS_AS(verify_braid(g, ClusterPartition{{{0}, {0}, {1}}, true}), InputError);
    CHECK_THROWS_AS(verify_braid(g, ClusterPartition{{{0}, {7}, {1}}, true}), InputError);
    CHECK_THROWS_AS(verify_braid(g, ClusterPartition{{{0}, {1}}, true}), InputError);
}

TEST_CASE("non-cyclic braids check central clusters only") {
    auto f = member_of_F(10, PathParity::all, 0);
    CHECK(verify_braid(f.graph, f.partition).verified);
    // end clusters are not sandwiched, so joining x to y is allowed
    CHECK(verify_braid(f.graph.with_edge(0, 9), f.partition).verified);
    // x reaching into the second central cluster is not
    auto r = verify_braid(f.graph.with_edge(0, 5), f.partition);
    CHECK_FALSE(r.verified);
    REQUIRE(r.witness);
    CHECK(r.witness->condition == BraidWitness::Condition::outside_neighbor);
}

TEST_CASE("discover") {
    auto g16 = discover_cyclic_braid(build_G(16).graph);
    REQUIRE(g16);
    auto sizes = g16->sizes();
    CHECK(std::count(sizes.begin(), sizes.end(), 4) == 1);
    auto r = verify_braid(build_G(16).graph, *g16);
    CHECK(std::all_of(r.intra.begin(), r.intra.end(), [](IntraKind k) { return k == IntraKind::full; }));

    std::vector<Edge> p5{{0, 1}, {1, 2}, {2, 3}, {3, 4}};
    CHECK_FALSE(discover_cyclic_braid(Graph::from_edge_list(5, p5)));
    CHECK_FALSE(discover_cyclic_braid(Graph(6)));

    auto h15 = build_H(15);
    CHECK_FALSE(discover_cyclic_braid(h15.graph.with_edge(0, 7)));

    // relabelling does not change the answer up to isomorphism
    std::mt19937_64 rng(31);
    for (int n : {14, 17, 20}) {
        auto e = build_E(n).graph;
        auto perm = testing::random_permutation(rng, n);
        auto found = discover_cyclic_braid(e.relabeled(perm));
        REQUIRE(found);
        CHECK(testing::is_cyclic_braid(e.relabeled(perm), found->clusters));
        auto s = found->sizes();
        auto want = E_cluster_sizes(n);
        std::sort(s.begin(), s.end());
        std::sort(want.begin(), want.end());
        CHECK(s == want);
    }
}

TEST_CASE("discovered partitions are genuine braids") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 200; ++t) {
        auto g = testing::random_graph(rng, 9, 0.5);
        for (const auto& p : all_cyclic_braid_partitions(g)) REQUIRE(testing::is_cyclic_braid(g, p.clusters));
        auto d = discover_cyclic_braid(g);
        if (d) CHECK(testing::is_cyclic_braid(g, d->clusters));
    }
}

TEST_CASE("classify") {
    CHECK(classify_family(build_E(15).graph)->tag == FamilyTag::E);
    CHECK(classify_family(build_G(16).graph)->tag == FamilyTag::G);
    CHECK(classify_family(build_H(16).graph)->tag == FamilyTag::H);
    CHECK_FALSE(classify_family(cycle_graph(9)));

    // E_n and H_n coincide when n is 0, 1 or 5 mod 6
    auto both = matching_families(build_E(18).graph);
    CHECK(has_tag(both, FamilyTag::H));
    CHECK(has_tag(both, FamilyTag::E));

    for (const auto& b : members_of_script_G(17)) CHECK(has_tag(matching_families(b.graph), FamilyTag::G_script));
}

TEST_CASE("path family classification") {
    for (int n = 10; n <= 16; ++n) {
        auto seqs = F_central_sequences(n, PathParity::odd);
        for (int v = 0; v < static_cast<int>(seqs.size()); ++v) {
            auto f = member_of_F(n, PathParity::odd, v);
            auto id = classify_path_family(f.graph, 0, n - 1, PathParity::odd);
            REQUIRE(id);
            CHECK(id->tag == FamilyTag::F_odd);
            CHECK(id->variant == v);
        }
    }
    auto f = member_of_F(8, PathParity::all, 0);
    CHECK(classify_path_family(f.graph, 0, 7, PathParity::all));
    CHECK_FALSE(classify_path_family(f.graph.with_edge(0, 4), 0, 7, PathParity::all));
    auto layered = layered_braid(f.graph, 0, 7);
    REQUIRE(layered);
    CHECK(layered->sizes() == std::vector<int>{1, 3, 3, 1});
}

TEST_CASE("maximal 3-braids") {
    auto h15 = maximal_3braids(build_H(15).graph);
    REQUIRE(h15.size() == 1);
    CHECK(h15[0].length() == 5);

    // random tree: no vertex has two joined 3-sets around it
    std::mt19937_64 rng(33);
    std::vector<Edge> tree;
    for (int v = 1; v < 20; ++v) tree.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
    CHECK(maximal_3braids(Graph::from_edge_list(20, tree)).empty());

    auto h12 = build_H(12).graph;
    auto edges = h12.edges();
    std::vector<Edge> joined = edges;
    for (auto [u, v] : edges) joined.emplace_back(u + 12, v + 12);
    joined.emplace_back(24, 0);
    joined.emplace_back(24, 12);
    auto two = maximal_3braids(Graph::from_edge_list(25, joined));
    REQUIRE(two.size() == 2);
    CHECK(two[0].covered() != two[1].covered());

    for (const auto& b : maximal_3braids(build_H(21).graph)) CHECK(verify_braid(build_H(21).graph, b).verified);
}
