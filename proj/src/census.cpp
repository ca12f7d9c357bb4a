#include "ic/census.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "ic/errors.hpp"
#include "ic/parallel.hpp"

namespace ic {

Count CycleCensus::total() const {
    Count t = 0;
    for (Count c : by_length) t += c;
    return t;
}

Count CycleCensus::odd() const {
    Count t = 0;
    for (std::size_t len = 1; len < by_length.size(); len += 2) t += by_length[len];
    return t;
}

Count CycleCensus::even() const { return total() - odd(); }

CycleCensus& CycleCensus::operator+=(const CycleCensus& other) {
    if (other.by_length.size() > by_length.size()) by_length.resize(other.by_length.size());
    n = std::max(n, other.n);
    for (std::size_t i = 0; i < other.by_length.size(); ++i) by_length[i] += other.by_length[i];
    return *this;
}

Count PathCensus::p2() const {
    Count t = 0;
    for (Count c : by_length) t += c;
    return t;
}

Count PathCensus::p2_odd() const {
    Count t = 0;
    for (std::size_t len = 0; len < by_length.size(); len += 2) t += by_length[len];
    return t;
}

Count PathCensus::with_parity(PathParity parity) const {
    switch (parity) {
        case PathParity::odd: return p2_odd();
        case PathParity::even: return p2_even();
        case PathParity::all: break;
    }
    return p2();
}

namespace {

void check_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.order()) throw InputError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(g.order() - 1));
}

// Grows induced paths anchor, first, ... and closes each cycle once: the
// closing vertex must be an anchor neighbour above `first`. Anchor
// neighbours below `first` would close the reversed orientation, so they
// are never entered.
template <class Sink>
struct CycleWalker {
    const Graph& g;
    int anchor;
    int first;
    VertexSet allowed;
    VertexSet anchor_nbrs;
    VertexSet closers;
    Sink& sink;

    CycleWalker(const Graph& graph, int a, int p1, VertexSet eligible, Sink& s)
        : g(graph), anchor(a), first(p1), allowed(eligible), anchor_nbrs(graph.neighbors(a)),
          closers(graph.neighbors(a) & eligible & VertexSet::above(p1)), sink(s) {}

    void run() {
        sink.push(anchor);
        sink.push(first);
        extend(first, VertexSet::single(anchor), 2);
        sink.pop();
        sink.pop();
    }

    // blocked = {anchor} ∪ N[interior vertices other than `last`]
    void extend(int last, const VertexSet& blocked, int len) {
        VertexSet cand = (g.neighbors(last) & allowed) - blocked;
        VertexSet hits = cand & closers;
        if (!hits.empty()) sink.close(hits, len + 1);
        VertexSet open = cand - anchor_nbrs;
        if (open.empty()) return;
        VertexSet next_blocked = blocked | g.closed_neighbors(last);
        if ((closers - next_blocked).empty()) return;
        open.for_each([&](int z) {
            sink.push(z);
            extend(z, next_blocked, len + 1);
            sink.pop();
        });
    }
};

struct CountingSink {
    std::vector<Count>& by_length;
    void push(int) {}
    void pop() {}
    void close(const VertexSet& hits, int length) { by_length[static_cast<std::size_t>(length)] += static_cast<Count>(hits.size()); }
};

struct VisitingSink {
    const std::function<void(std::span<const int>)>& visit;
    std::vector<int> path;
    void push(int v) { path.push_back(v); }
    void pop() { path.pop_back(); }
    void close(const VertexSet& hits, int) {
        hits.for_each([&](int z) {
            path.push_back(z);
            visit(path);
            path.pop_back();
        });
    }
};

struct Root {
    int anchor;
    int first;
    VertexSet allowed;
};

CycleCensus run_roots(const Graph& g, const std::vector<Root>& roots, const CensusOptions& options) {
    const int n = g.order();
    std::vector<std::vector<Count>> partial(roots.size());
    parallel_for(roots.size(), options.threads, [&](std::size_t i) {
        auto& out = partial[i];
        out.assign(static_cast<std::size_t>(n + 1), 0);
        CountingSink sink{out};
        CycleWalker<CountingSink>(g, roots[i].anchor, roots[i].first, roots[i].allowed, sink).run();
    });
    CycleCensus census(n);
    for (const auto& p : partial)
        for (std::size_t len = 0; len < p.size(); ++len) census.by_length[len] += p[len];
    return census;
}

}  // namespace

CycleCensus count_induced_cycles(const Graph& g, const CensusOptions& options) {
    std::vector<Root> roots;
    for (int a = 0; a < g.order(); ++a) {
        VertexSet allowed = VertexSet::above(a) & g.vertices();
        (g.neighbors(a) & allowed).for_each([&](int p1) { roots.push_back({a, p1, allowed}); });
    }
    return run_roots(g, roots, options);
}

CycleCensus count_cycles_through(const Graph& g, int v, const CensusOptions& options) {
    check_vertex(g, v);
    std::vector<Root> roots;
    VertexSet allowed = g.vertices() - VertexSet::single(v);
    g.neighbors(v).for_each([&](int p1) { roots.push_back({v, p1, allowed}); });
    return run_roots(g, roots, options);
}

void for_each_induced_cycle(const Graph& g, const std::function<void(std::span<const int>)>& visit) {
    VisitingSink sink{visit, {}};
    for (int a = 0; a < g.order(); ++a) {
        VertexSet allowed = VertexSet::above(a) & g.vertices();
        (g.neighbors(a) & allowed).for_each([&](int p1) { CycleWalker<VisitingSink>(g, a, p1, allowed, sink).run(); });
    }
}

CycleCensus slow_census(const Graph& g) {
    const int n = g.order();
    if (n > 24) throw UnsupportedError("subset oracle supports at most 24 vertices, got " + std::to_string(n));
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(g.neighbors(v).word(0));

    CycleCensus census(n);
    const std::uint32_t limit = n == 0 ? 0 : static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    for (std::uint64_t s = 1; s <= limit; ++s) {
        const auto set = static_cast<std::uint32_t>(s);
        const int size = std::popcount(set);
        if (size < 3) continue;
        bool two_regular = true;
        for (std::uint32_t rest = set; rest && two_regular; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            two_regular = std::popcount(adj[static_cast<std::size_t>(v)] & set) == 2;
        }
        if (!two_regular) continue;
        std::uint32_t reached = set & (~set + 1);
        std::uint32_t frontier = reached;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
            next &= set & ~reached;
            reached |= next;
            frontier = next;
        }
        if (reached == set) ++census.by_length[static_cast<std::size_t>(size)];
    }
    return census;
}

namespace {

template <class OnPath>
void walk_paths(const Graph& g, int last, const VertexSet& blocked, int edges, OnPath& on_path) {
    VertexSet cand = g.neighbors(last) - blocked;
    if (cand.empty()) return;
    VertexSet next_blocked = blocked | g.closed_neighbors(last);
    cand.for_each([&](int z) {
        if (on_path(z, edges + 1, next_blocked)) walk_paths(g, z, next_blocked, edges + 1, on_path);
    });
}

}  // namespace

PathCensus count_induced_st_paths(const Graph& g, int x, int y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw InputError("path endpoints must differ");
    PathCensus census(g.order());
    // A prefix whose closed interior neighbourhood contains y can never end at y.
    auto on_path = [&](int z, int edges, const VertexSet& blocked) {
        if (z == y) {
            ++census.by_length[static_cast<std::size_t>(edges)];
            return false;
        }
        return !(blocked | g.closed_neighbors(z)).contains(y) || g.adjacent(z, y);
    };
    walk_paths(g, x, VertexSet{}, 0, on_path);
    return census;
}

std::vector<PathCensus> count_induced_paths_from(const Graph& g, int x) {
    check_vertex(g, x);
    std::vector<PathCensus> out(static_cast<std::size_t>(g.order()), PathCensus(g.order()));
    auto on_path = [&](int z, int edges, const VertexSet&) {
        ++out[static_cast<std::size_t>(z)].by_length[static_cast<std::size_t>(edges)];
        return true;
    };
    walk_paths(g, x, VertexSet{}, 0, on_path);
    return out;
}

PathMax p2_max(const Graph& g, PathParity parity, const CensusOptions& options) {
    const int n = g.order();
    if (n < 2) throw InputError("p2_max needs at least two vertices");
    std::vector<PathMax> best(static_cast<std::size_t>(n));
    parallel_for(static_cast<std::size_t>(n - 1), options.threads, [&](std::size_t xi) {
        const int x = static_cast<int>(xi);
        auto from = count_induced_paths_from(g, x);
        PathMax b{0, x, x + 1};
        for (int y = x + 1; y < n; ++y) {
            Count v = from[static_cast<std::size_t>(y)].with_parity(parity);
            if (v > b.value) b = {v, x, y};
        }
        best[xi] = b;
    });
    PathMax result = best[0];
    for (int x = 1; x + 1 < n; ++x)
        if (best[static_cast<std::size_t>(x)].value > result.value) result = best[static_cast<std::size_t>(x)];
    return result;
}

namespace {

struct TreeWalker {
    const Graph& g;
    int y;
    TreeStats& stats;
    std::vector<int> child_counts;  // D of each ancestor on the current branch

    struct Leaves {
        Count all = 0;
        Count to_y = 0;
    };

    // Node = induced path ending at `last`; blocked = N[earlier vertices].
    Leaves visit(int last, const VertexSet& blocked) {
        if (last == y) {
            std::vector<int> profile(child_counts.begin(), child_counts.end() - 1);
            std::sort(profile.begin(), profile.end());
            stats.child_count_profiles.insert(std::move(profile));
            return {1, 1};
        }
        VertexSet children = g.neighbors(last) - blocked;
        if (g.adjacent(last, y)) children = VertexSet::single(y);
        if (children.empty()) return {1, 0};

        child_counts.push_back(children.size());
        VertexSet next_blocked = blocked | g.closed_neighbors(last);
        Leaves total;
        Count first_y = 0;
        bool same = true;
        bool first = true;
        children.for_each([&](int z) {
            Leaves sub = visit(z, next_blocked);
            total.all += sub.all;
            total.to_y += sub.to_y;
            if (first) {
                first_y = sub.to_y;
                first = false;
            } else if (sub.to_y != first_y) {
                same = false;
            }
        });
        child_counts.pop_back();
        if (total.to_y > 0 && !same) stats.balanced = false;
        return total;
    }
};

}  // namespace

TreeStats path_tree_stats(const Graph& g, int x, int y) {
    check_vertex(g, x);
    check_vertex(g, y);
    if (x == y) throw InputError("path endpoints must differ");
    TreeStats stats;
    TreeWalker walker{g, y, stats, {}};
    auto leaves = walker.visit(x, VertexSet{});
    stats.leaf_count = leaves.all;
    stats.y_leaf_count = leaves.to_y;
    return stats;
}

}  // namespace ic
