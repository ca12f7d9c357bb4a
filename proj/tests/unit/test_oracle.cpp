#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "ic/census.hpp"
#include "ic/errors.hpp"
#include "ic/graph6.hpp"
#include "ic/oracle.hpp"
#include "support/oracles.hpp"

using namespace ic;

namespace {

Count brute_value(const Graph& g, Quantity q) {
    if (is_path_quantity(q)) {
        Count best = 0;
        for (int x = 0; x < g.order(); ++x)
            for (int y = x + 1; y < g.order(); ++y) {
                auto by_size = testing::subset_paths(g, x, y);
                Count v = 0;
                for (std::size_t s = 1; s < by_size.size(); ++s) {
                    const bool odd = s % 2 == 1;
                    if (q == Quantity::p2 || (q == Quantity::p2_odd && odd) || (q == Quantity::p2_even && !odd)) v += by_size[s];
                }
                best = std::max(best, v);
            }
        return best;
    }
    auto c = slow_census(g);
    switch (q) {
        case Quantity::m_odd: return c.odd();
        case Quantity::m_even: return c.even();
        case Quantity::m_odd_holes: return c.odd_holes();
        default: return c.total();
    }
}

std::string canonical_g6(const Graph& g) { return to_graph6(g.relabeled(canonical_labeling(g))); }

}  // namespace

TEST_CASE("quantity names") {
    for (auto q : {Quantity::m, Quantity::m_odd, Quantity::m_even, Quantity::m_odd_holes, Quantity::p2, Quantity::p2_odd, Quantity::p2_even})
        CHECK(parse_quantity(to_string(q)) == q);
    CHECK_THROWS_AS(parse_quantity("mm"), InputError);
    CHECK(is_path_quantity(Quantity::p2_odd));
    CHECK_FALSE(is_path_quantity(Quantity::m_odd_holes));
}

TEST_CASE("codes follow graph6 bit order") {
    // bit b is pair (i, j) in column order: (0,1), (0,2), (1,2), (0,3), ...
    CHECK(graph_from_code(4, 1).adjacent(0, 1));
    CHECK(graph_from_code(4, 2).adjacent(0, 2));
    CHECK(graph_from_code(4, 4).adjacent(1, 2));
    CHECK(graph_from_code(4, 8).adjacent(0, 3));
    std::mt19937_64 rng(51);
    for (int t = 0; t < 100; ++t) {
        const std::uint64_t code = rng() & ((std::uint64_t{1} << 21) - 1);
        auto g = graph_from_code(7, code);
        std::uint64_t back = 0;
        int bit = 0;
        for (int j = 1; j < 7; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g.adjacent(i, j)) back |= std::uint64_t{1} << bit;
        CHECK(back == code);
    }
}

TEST_CASE("small sweeps match brute force") {
    for (int n = 1; n <= 5; ++n)
        for (auto q : {Quantity::m, Quantity::m_odd, Quantity::m_even, Quantity::m_odd_holes, Quantity::p2, Quantity::p2_odd, Quantity::p2_even}) {
            if (is_path_quantity(q) && n < 2) continue;
            Count best = 0;
            std::set<std::string> classes;
            const std::uint64_t space = std::uint64_t{1} << (n * (n - 1) / 2);
            for (std::uint64_t code = 0; code < space; ++code) {
                auto g = graph_from_code(n, code);
                Count v = brute_value(g, q);
                if (v > best) {
                    best = v;
                    classes.clear();
                }
                if (v == best) classes.insert(canonical_g6(g));
            }
            auto r = exhaustive_max(n, q);
            INFO("n = " << n << " q = " << to_string(q));
            CHECK(r.max == best);
            CHECK(r.extremal_codes == std::vector<std::string>(classes.begin(), classes.end()));
            CHECK(r.graphs_scanned == space);
        }
}

TEST_CASE("sweep pins") {
    auto p4 = exhaustive_max(4, Quantity::p2);
    CHECK(p4.max == 2);
    auto c4 = Graph::from_edge_list(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(std::count(p4.extremal_codes.begin(), p4.extremal_codes.end(), canonical_g6(c4)) == 1);
    CHECK(exhaustive_max(5, Quantity::p2).max == 3);
    auto m4 = exhaustive_max(4, Quantity::m);
    CHECK(m4.max == 4);
    CHECK(m4.extremal_codes.size() == 1);
    CHECK(exhaustive_max(6, Quantity::p2).max == 4);
    CHECK(exhaustive_max(6, Quantity::p2).audits == 10);
}

TEST_CASE("sharded sweeps agree and resume from checkpoints") {
    auto whole = exhaustive_max(6, Quantity::m_odd_holes);
    const auto dir = std::filesystem::temp_directory_path() / "ic-sweep-test";
    std::filesystem::remove_all(dir);

    SweepOptions o;
    o.shards = 3;
    o.checkpoint_dir = dir.string();
    std::uint64_t scanned = 0;
    Count best = 0;
    for (int s = 0; s < 3; ++s) {
        o.shard = s;
        auto part = exhaustive_max(6, Quantity::m_odd_holes, o);
        scanned += part.graphs_scanned;
        best = std::max(best, part.max);
    }
    CHECK(scanned == whole.graphs_scanned);
    CHECK(best == whole.max);

    o.shard.reset();
    auto resumed = exhaustive_max(6, Quantity::m_odd_holes, o);
    CHECK(resumed.max == whole.max);
    CHECK(resumed.extremal_codes == whole.extremal_codes);

    std::ifstream in(dir / "sweep-n6-m_odd_holes-k3.txt");
    int lines = 0;
    for (std::string line; std::getline(in, line);) ++lines;
    CHECK(lines == 3);
    std::filesystem::remove_all(dir);

    o.checkpoint_dir.clear();
    o.threads = 3;
    o.shards = 7;
    CHECK(exhaustive_max(6, Quantity::m_odd_holes, o).extremal_codes == whole.extremal_codes);
}

TEST_CASE("sweep argument checks") {
    CHECK_THROWS_AS(exhaustive_max(9, Quantity::m), InputError);
    CHECK_THROWS_AS(exhaustive_max(8, Quantity::m), InputError);
    CHECK_THROWS_AS(exhaustive_max(0, Quantity::m), InputError);
    SweepOptions o;
    o.shards = 2;
    o.shard = 2;
    CHECK_THROWS_AS(exhaustive_max(5, Quantity::m, o), InputError);
    o.shards = 0;
    o.shard.reset();
    CHECK_THROWS_AS(exhaustive_max(5, Quantity::m, o), InputError);
}

TEST_CASE("extremal path graphs are braids") {
    auto r6 = verify_extremal_uniqueness(6);
    CHECK(r6.ok());
    CHECK(r6.max == 4);
    CHECK(r6.central_multisets == std::vector<std::vector<int>>{{2, 2}, {4}});
    auto r7 = verify_extremal_uniqueness(7);
    CHECK(r7.ok());
    CHECK(r7.central_multisets == std::vector<std::vector<int>>{{2, 3}});
    auto r4 = verify_extremal_uniqueness(4);
    CHECK(r4.central_multisets == std::vector<std::vector<int>>{{2}});
    CHECK_THROWS_AS(verify_extremal_uniqueness(8), InputError);
}
