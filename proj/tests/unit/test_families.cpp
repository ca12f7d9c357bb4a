#include <doctest.h>

#include <algorithm>
#include <set>

#include "ic/census.hpp"
#include "ic/errors.hpp"
#include "ic/families.hpp"
#include "ic/recognition.hpp"

using namespace ic;

namespace {

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

int count_of(const std::vector<int>& v, int x) { return static_cast<int>(std::count(v.begin(), v.end(), x)); }

}  // namespace

TEST_CASE("build_braid basics") {
    auto f8 = build_braid({{1, 3, 3, 1}, false, {}});
    CHECK(f8.graph.order() == 8);
    CHECK(count_induced_st_paths(f8.graph, 0, 7).p2() == 9);

    auto h9 = build_braid({{3, 3, 3}, true, {}});
    for (int v = 0; v < 9; ++v) CHECK(h9.graph.degree(v) == 6);

    auto c4 = build_braid({{2, 2}, false, {}});
    CHECK(c4.graph.edge_count() == 4);
    CHECK(count_induced_cycles(c4.graph).at(4) == 1);

    CHECK_THROWS_AS(build_braid({{3, 0, 3}, false, {}}), InputError);
    CHECK_THROWS_AS(build_braid({{3, 3}, true, {}}), InputError);
    CHECK_THROWS_AS(build_braid({{3, 3, 3}, false, {IntraPattern::explicit_list({{0, 3}})}}), InputError);
    CHECK_THROWS_AS(build_braid({{64, 65}, false, {}}), InputError);
}

TEST_CASE("explicit intra edges land in the right cluster") {
    BraidSpec spec{{2, 3, 2}, false, {IntraPattern::empty(), IntraPattern::explicit_list({{0, 2}}), IntraPattern::full()}};
    auto b = build_braid(spec);
    CHECK(b.graph.adjacent(2, 4));
    CHECK_FALSE(b.graph.adjacent(2, 3));
    CHECK(b.graph.adjacent(5, 6));
    CHECK_FALSE(b.graph.adjacent(0, 1));
    CHECK(verify_braid(b.graph, b.partition).verified);
}

TEST_CASE("H_n cluster sizes") {
    auto h12 = build_H(12);
    CHECK(h12.partition.sizes() == std::vector<int>{3, 3, 3, 3});
    for (int v = 0; v < 12; ++v) CHECK(h12.graph.degree(v) == 6);
    CHECK(sorted(H_cluster_sizes(13)) == std::vector<int>{3, 3, 3, 4});
    CHECK(sorted(H_cluster_sizes(11)) == std::vector<int>{2, 3, 3, 3});
    CHECK_THROWS_AS(build_H(7), InputError);
    for (int n = 8; n <= 60; ++n) {
        auto s = H_cluster_sizes(n);
        int total = 0;
        for (int x : s) total += x;
        CHECK(total == n);
        CHECK(count_of(s, 3) >= static_cast<int>(s.size()) - 1);
    }
}

TEST_CASE("G_n cluster sizes") {
    CHECK(sorted(G_cluster_sizes(14)) == std::vector<int>{2, 3, 3, 3, 3});
    auto g16 = sorted(G_cluster_sizes(16));
    CHECK(count_of(g16, 4) == 1);
    auto g18 = G_cluster_sizes(18);
    CHECK(std::vector<int>(g18.begin(), g18.begin() + 3) == std::vector<int>{2, 2, 2});
    auto built = build_G(18);
    // full intra: the size-3 clusters are triangles
    CHECK(built.graph.adjacent(6, 7));
    CHECK_THROWS_AS(build_G(13), InputError);
    for (int n = 14; n <= 60; ++n) {
        auto s = G_cluster_sizes(n);
        CHECK(s.size() % 2 == 1);  // odd k keeps the all-cluster cycle odd
    }
}

TEST_CASE("E_n cluster sizes") {
    auto e18 = E_cluster_sizes(18);
    CHECK(e18 == std::vector<int>{3, 3, 3, 3, 3, 3});
    auto e15 = E_cluster_sizes(15);
    CHECK(std::vector<int>(e15.begin(), e15.begin() + 3) == std::vector<int>{2, 2, 2});
    CHECK(sorted(E_cluster_sizes(17)) == std::vector<int>{2, 3, 3, 3, 3, 3});
    for (int n = 14; n <= 60; ++n) CHECK(E_cluster_sizes(n).size() % 2 == 0);
}

TEST_CASE("path family members") {
    auto f10 = member_of_F(10, PathParity::all, 0);
    CHECK(f10.partition.sizes() == std::vector<int>{1, 2, 3, 3, 1});
    auto fo10 = member_of_F(10, PathParity::odd, 0);
    auto central = fo10.partition.sizes();
    CHECK(sorted(std::vector<int>(central.begin() + 1, central.end() - 1)) == std::vector<int>{2, 3, 3});
    auto c = count_induced_st_paths(fo10.graph, 0, 9);
    CHECK(c.p2_odd() == 18);
    CHECK(c.p2_even() == 0);

    auto f4 = member_of_F(4, PathParity::all, 0);
    CHECK(f4.partition.sizes() == std::vector<int>{1, 2, 1});
    CHECK(count_induced_st_paths(f4.graph, 0, 3).p2() == 2);

    CHECK(F_central_multisets(6, PathParity::all) == std::vector<std::vector<int>>{{4}, {2, 2}});
    CHECK_THROWS_AS(member_of_F(10, PathParity::all, 99), InputError);
    CHECK_THROWS_AS(F_central_multisets(9, PathParity::odd), InputError);

    for (int n = 4; n <= 16; ++n) {
        auto seqs = F_central_sequences(n, PathParity::all);
        std::set<std::vector<int>> distinct(seqs.begin(), seqs.end());
        CHECK(distinct.size() == seqs.size());
        for (const auto& s : seqs) {
            auto key = sorted(s);
            auto ms = F_central_multisets(n, PathParity::all);
            CHECK(std::find(ms.begin(), ms.end(), key) != ms.end());
        }
    }
}

TEST_CASE("odd-hole family representatives") {
    auto m14 = members_of_script_G(14);
    CHECK(m14.size() >= 2);
    std::set<std::vector<int>> multisets;
    for (const auto& b : members_of_script_G(17)) multisets.insert(sorted(b.partition.sizes()));
    CHECK(multisets.count({2, 2, 2, 2, 3, 3, 3}) == 1);
    CHECK(multisets.count({3, 3, 3, 4, 4}) == 1);
    for (const auto& b : members_of_script_G(17)) CHECK(verify_braid(b.graph, b.partition).verified);
}

TEST_CASE("family tags") {
    CHECK(parse_family_tag("Fo") == FamilyTag::F_odd);
    CHECK(parse_family_tag("G_script") == FamilyTag::G_script);
    CHECK(to_string(FamilyTag::F_even) == "F_even");
    CHECK_THROWS_AS(parse_family_tag("Q"), InputError);
    CHECK(build_family({FamilyTag::E, 18, 0}).graph == build_E(18).graph);
}

TEST_CASE("every constructed graph verifies with its own partition") {
    for (int n = 8; n <= 30; ++n) {
        auto h = build_H(n);
        CHECK(verify_braid(h.graph, h.partition).verified);
        if (n >= 14) {
            auto g = build_G(n);
            auto e = build_E(n);
            CHECK(verify_braid(g.graph, g.partition).verified);
            CHECK(verify_braid(e.graph, e.partition).verified);
        }
    }
    for (int n = 4; n <= 20; ++n) {
        auto seqs = F_central_sequences(n, PathParity::all);
        for (int v = 0; v < static_cast<int>(seqs.size()); ++v) {
            auto f = member_of_F(n, PathParity::all, v, IntraPattern::full());
            CHECK(verify_braid(f.graph, f.partition).verified);
        }
    }
}
