#pragma once

// Slow, independent reference implementations used only by the tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "ic/graph.hpp"

namespace ic::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

/// Induced x-y paths by subset test: S holds x and y, induces a tree with
/// |S|-1 edges, x and y have degree 1 inside S and every other member has
/// degree 2. Result is indexed by vertex count. n <= 20.
inline std::vector<std::uint64_t> subset_paths(const Graph& g, int x, int y) {
    const int n = g.order();
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).word(0));
    std::vector<std::uint64_t> by_size(static_cast<std::size_t>(n + 1));
    const std::uint32_t ends = (1U << x) | (1U << y);
    for (std::uint32_t s = 0; s < (1U << n); ++s) {
        if ((s & ends) != ends) continue;
        int edges2 = 0;
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            if (!(s >> v & 1U)) continue;
            int d = __builtin_popcount(adj[static_cast<std::size_t>(v)] & s);
            edges2 += d;
            ok = (v == x || v == y) ? d == 1 : d == 2;
        }
        const int size = __builtin_popcount(s);
        if (!ok || edges2 != 2 * (size - 1)) continue;
        // connectivity from x
        std::uint32_t seen = 1U << x;
        for (std::uint32_t frontier = seen; frontier;) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(__builtin_ctz(f))];
            next &= s & ~seen;
            seen |= next;
            frontier = next;
        }
        if (seen == s) ++by_size[static_cast<std::size_t>(size)];
    }
    return by_size;
}

enum class CountParity { any, odd, even };

/// Largest product of positive parts summing to at most `budget`, where the
/// number of parts plus two has the requested parity.
inline std::uint64_t max_part_product(int budget, CountParity parity) {
    // best[s][k & 1]: best product over compositions of exactly s with k parts
    std::vector<std::array<std::uint64_t, 2>> best(static_cast<std::size_t>(budget + 1), {0, 0});
    for (int s = 1; s <= budget; ++s) {
        best[static_cast<std::size_t>(s)][1] = static_cast<std::uint64_t>(s);
        for (int last = 1; last < s; ++last)
            for (int par = 0; par < 2; ++par) {
                std::uint64_t prev = best[static_cast<std::size_t>(s - last)][static_cast<std::size_t>(par)];
                auto& slot = best[static_cast<std::size_t>(s)][static_cast<std::size_t>(par ^ 1)];
                slot = std::max(slot, prev * static_cast<std::uint64_t>(last));
            }
    }
    std::uint64_t out = 0;
    for (int s = 1; s <= budget; ++s)
        for (int par = 0; par < 2; ++par) {
            const bool vertices_odd = ((par + 2) & 1) == 1;
            if (parity == CountParity::odd && !vertices_odd) continue;
            if (parity == CountParity::even && vertices_odd) continue;
            out = std::max(out, best[static_cast<std::size_t>(s)][static_cast<std::size_t>(par)]);
        }
    return out;
}

/// Vertex subsets of size 4 that induce a 4-cycle.
template <class F>
void for_each_induced_c4(const Graph& g, F&& f) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    const int q[4] = {a, b, c, d};
                    int edges = 0;
                    bool two_each = true;
                    for (int i = 0; i < 4; ++i) {
                        int deg = 0;
                        for (int j = 0; j < 4; ++j)
                            if (i != j && g.adjacent(q[i], q[j])) ++deg;
                        edges += deg;
                        two_each = two_each && deg == 2;
                    }
                    if (two_each && edges == 8) f(q);
                }
}

}  // namespace ic::testing

namespace ic::testing {

/// Direct cyclic sandwich check: the clusters cover V and every vertex's
/// neighbours outside its own cluster are exactly the two adjacent clusters.
inline bool is_cyclic_braid(const Graph& g, const std::vector<std::vector<int>>& clusters) {
    const int k = static_cast<int>(clusters.size());
    if (k < 3) return false;
    std::vector<int> owner(static_cast<std::size_t>(g.order()), -1);
    for (int i = 0; i < k; ++i)
        for (int v : clusters[static_cast<std::size_t>(i)]) {
            if (owner[static_cast<std::size_t>(v)] != -1) return false;
            owner[static_cast<std::size_t>(v)] = i;
        }
    for (int o : owner)
        if (o == -1) return false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v) {
            const int a = owner[static_cast<std::size_t>(u)];
            const int b = owner[static_cast<std::size_t>(v)];
            if (a == b) continue;
            const bool joined = (a + 1) % k == b || (b + 1) % k == a;
            if (g.adjacent(u, v) != joined) return false;
        }
    return true;
}

inline bool has_intra_edge(const Graph& g, const std::vector<std::vector<int>>& clusters) {
    for (const auto& c : clusters)
        for (int u : c)
            for (int v : c)
                if (u < v && g.adjacent(u, v)) return true;
    return false;
}

}  // namespace ic::testing
