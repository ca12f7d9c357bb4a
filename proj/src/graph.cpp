#include "ic/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>

#include "ic/errors.hpp"
#include "ic/graph6.hpp"

namespace ic {

Graph::Graph(int n) {
    if (n < 0 || n > kMaxVertices) throw InputError("vertex count " + std::to_string(n) + " outside 0..128");
    rows_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                             std::to_string(n - 1));
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        g.set_edge(u, v, true);
    }
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order()) throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(order() - 1));
}

void Graph::set_edge(int u, int v, bool present) {
    auto& ru = rows_[static_cast<std::size_t>(u)];
    auto& rv = rows_[static_cast<std::size_t>(v)];
    if (present) {
        ru.insert(v);
        rv.insert(u);
    } else {
        ru.erase(v);
        rv.erase(u);
    }
}

VertexSet Graph::neighbors(const VertexSet& xs) const {
    VertexSet out;
    xs.for_each([&](int x) { out |= rows_[static_cast<std::size_t>(x)]; });
    return out;
}

VertexSet Graph::closed_neighbors(const VertexSet& xs) const { return neighbors(xs) | xs; }

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += static_cast<std::size_t>(r.size());
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        (neighbors(u) & VertexSet::above(u)).for_each([&](int v) { out.emplace_back(u, v); });
    return out;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loop at vertex " + std::to_string(u));
    Graph g = *this;
    g.set_edge(u, v, true);
    return g;
}

Graph Graph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    Graph g = *this;
    g.set_edge(u, v, false);
    return g;
}

Graph Graph::relabeled(std::span<const int> perm) const {
    const int n = order();
    if (static_cast<int>(perm.size()) != n) throw InputError("relabeling has wrong length");
    VertexSet hit;
    for (int p : perm) {
        if (p < 0 || p >= n || hit.contains(p)) throw InputError("relabeling is not a permutation");
        hit.insert(p);
    }
    Graph g(n);
    for (auto [u, v] : edges()) g.set_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)], true);
    return g;
}

Graph Graph::induced(const VertexSet& keep) const {
    std::vector<int> ids = (keep & vertices()).to_vector();
    std::vector<int> index(static_cast<std::size_t>(order()), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) index[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);
    Graph g(static_cast<int>(ids.size()));
    for (auto [u, v] : edges()) {
        int a = index[static_cast<std::size_t>(u)];
        int b = index[static_cast<std::size_t>(v)];
        if (a >= 0 && b >= 0) g.set_edge(a, b, true);
    }
    return g;
}

Graph Graph::disjoint_union(const Graph& other) const {
    const int shift = order();
    Graph g(shift + other.order());
    for (auto [u, v] : edges()) g.set_edge(u, v, true);
    for (auto [u, v] : other.edges()) g.set_edge(u + shift, v + shift, true);
    return g;
}

bool Graph::is_connected() const {
    if (order() == 0) return true;
    return ball(*this, 0, order()) == vertices();
}

VertexSet ball(const Graph& g, int v, int r) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " outside the graph");
    if (r < 0) throw InputError("negative radius");
    VertexSet reached = VertexSet::single(v);
    VertexSet frontier = reached;
    for (int step = 0; step < r && !frontier.empty(); ++step) {
        frontier = g.neighbors(frontier) - reached;
        reached |= frontier;
    }
    return reached;
}

int distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.order() || v < 0 || v >= g.order()) throw InputError("vertex outside the graph");
    VertexSet reached = VertexSet::single(u);
    VertexSet frontier = reached;
    for (int d = 0; !frontier.empty(); ++d) {
        if (frontier.contains(v)) return d;
        frontier = g.neighbors(frontier) - reached;
        reached |= frontier;
    }
    return -1;
}

namespace {

// Equitable colour refinement; colours are numbered by sorted signature so
// the resulting ordered partition is independent of the input labelling.
std::vector<int> refine_colours(const Graph& g) {
    const int n = g.order();
    std::vector<int> colour(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = g.degree(v);
    int classes = -1;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(colour[static_cast<std::size_t>(v)]);
            std::vector<int> around;
            g.neighbors(v).for_each([&](int u) { around.push_back(colour[static_cast<std::size_t>(u)]); });
            std::sort(around.begin(), around.end());
            s.insert(s.end(), around.begin(), around.end());
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        if (next == classes) break;
        classes = next;
    }
    return colour;
}

// Upper triangle in graph6 order; first bit most significant so numeric
// comparison is lexicographic comparison of the bit string.
std::uint64_t triangle_bits(const Graph& g, const std::vector<int>& order_of) {
    const int n = g.order();
    std::uint64_t bits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits = (bits << 1) | (g.adjacent(order_of[static_cast<std::size_t>(i)], order_of[static_cast<std::size_t>(j)]) ? 1U : 0U);
    return bits;
}

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    if (n > 10) throw UnsupportedError("canonical form supports at most 10 vertices, got " + std::to_string(n));
    std::vector<int> colour = refine_colours(g);

    // order_of[pos] = vertex placed at canonical position pos; cells are
    // contiguous blocks sorted by colour and permuted independently.
    std::vector<int> order_of(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order_of[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order_of.begin(), order_of.end(),
                     [&](int a, int b) { return colour[static_cast<std::size_t>(a)] < colour[static_cast<std::size_t>(b)]; });
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t s = 0; s < order_of.size();) {
        std::size_t e = s;
        while (e < order_of.size() && colour[static_cast<std::size_t>(order_of[e])] == colour[static_cast<std::size_t>(order_of[s])]) ++e;
        cells.emplace_back(s, e);
        s = e;
    }

    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_order = order_of;
    bool first = true;
    // Odometer over the per-cell permutations.
    for (;;) {
        std::uint64_t bits = triangle_bits(g, order_of);
        if (first || bits < best) {
            best = bits;
            best_order = order_of;
            first = false;
        }
        std::size_t c = 0;
        for (; c < cells.size(); ++c) {
            auto b = order_of.begin() + static_cast<std::ptrdiff_t>(cells[c].first);
            auto e = order_of.begin() + static_cast<std::ptrdiff_t>(cells[c].second);
            if (std::next_permutation(b, e)) break;
        }
        if (c == cells.size()) break;
    }

    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) perm[static_cast<std::size_t>(best_order[static_cast<std::size_t>(pos)])] = pos;
    return perm;
}

CanonicalCode canonical_code(const Graph& g) {
    std::vector<int> perm = canonical_labeling(g);
    return CanonicalCode{to_graph6(g.relabeled(perm))};
}

}  // namespace ic
