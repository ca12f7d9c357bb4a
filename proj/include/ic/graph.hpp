#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ic/vertex_set.hpp"

namespace ic {

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 128 vertices.
///
/// Vertices are the dense ids 0..n-1. Each vertex owns one VertexSet row;
/// rows are kept symmetric and loop-free by every constructor.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Throws InputError on an endpoint >= n, a loop, or n outside 0..128.
    /// Duplicate pairs are accepted and collapse to one edge.
    static Graph from_edge_list(int n, std::span<const Edge> edges);

    int order() const { return static_cast<int>(rows_.size()); }
    VertexSet vertices() const { return VertexSet::prefix(order()); }

    const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
    VertexSet closed_neighbors(int v) const { return rows_[static_cast<std::size_t>(v)] | VertexSet::single(v); }
    /// N(X): union of open neighbourhoods.
    VertexSet neighbors(const VertexSet& xs) const;
    /// N[X] = N(X) together with X.
    VertexSet closed_neighbors(const VertexSet& xs) const;

    bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return rows_[static_cast<std::size_t>(v)].size(); }
    std::size_t edge_count() const;
    /// Edges as (u, v) with u < v, lexicographically sorted.
    std::vector<Edge> edges() const;

    Graph with_edge(int u, int v) const;
    Graph without_edge(int u, int v) const;
    /// Graph where vertex v becomes perm[v]; perm must be a permutation of 0..n-1.
    Graph relabeled(std::span<const int> perm) const;
    /// Subgraph induced on `keep`, vertices renumbered in ascending order.
    Graph induced(const VertexSet& keep) const;
    /// Disjoint union; the second graph's vertices are shifted by order().
    Graph disjoint_union(const Graph& other) const;

    bool is_connected() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;
    void set_edge(int u, int v, bool present);

    std::vector<VertexSet> rows_;
};

/// N^r[v]: every vertex at distance at most r from v.
VertexSet ball(const Graph& g, int v, int r);

/// Shortest-path distance, or -1 when v is unreachable from u.
int distance(const Graph& g, int u, int v);

/// Isomorphism-invariant byte string for graphs with at most 10 vertices.
struct CanonicalCode {
    std::string code;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

/// Minimum relabeled adjacency string over vertex orders that respect an
/// equitable colour refinement; equal iff the graphs are isomorphic.
/// Throws UnsupportedError when n > 10.
CanonicalCode canonical_code(const Graph& g);

/// The relabeling that realises canonical_code: perm[v] is v's canonical id.
std::vector<int> canonical_labeling(const Graph& g);

}  // namespace ic
