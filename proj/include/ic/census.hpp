#pragma once

#include <functional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "ic/count.hpp"
#include "ic/families.hpp"
#include "ic/graph.hpp"

namespace ic {

/// Induced cycles keyed by length (number of vertices, >= 3).
struct CycleCensus {
    int n = 0;
    std::vector<Count> by_length;  // index = cycle length, size n + 1

    explicit CycleCensus(int order = 0) : n(order), by_length(static_cast<std::size_t>(order + 1)) {}

    Count at(int length) const {
        return length >= 0 && length < static_cast<int>(by_length.size()) ? by_length[static_cast<std::size_t>(length)] : 0;
    }
    Count total() const;
    Count odd() const;
    Count even() const;
    Count holes() const { return total() - at(3); }
    Count odd_holes() const { return odd() - at(3); }

    CycleCensus& operator+=(const CycleCensus& other);
    friend bool operator==(const CycleCensus&, const CycleCensus&) = default;
};

/// Induced x-y paths keyed by edge length; parity is by vertex count.
struct PathCensus {
    int n = 0;
    std::vector<Count> by_length;  // index = number of edges, size n

    explicit PathCensus(int order = 0) : n(order), by_length(static_cast<std::size_t>(order > 0 ? order : 1)) {}

    Count at(int length) const {
        return length >= 0 && length < static_cast<int>(by_length.size()) ? by_length[static_cast<std::size_t>(length)] : 0;
    }
    Count p2() const;
    /// Paths with an odd number of vertices (even edge length).
    Count p2_odd() const;
    Count p2_even() const { return p2() - p2_odd(); }
    Count with_parity(PathParity parity) const;

    friend bool operator==(const PathCensus&, const PathCensus&) = default;
};

struct CensusOptions {
    /// 0 selects std::thread::hardware_concurrency().
    unsigned threads = 1;
};

/// Exact count of vertex subsets inducing a cycle. Each cycle is reached
/// once: its lowest vertex is the anchor and the anchor's lower cycle
/// neighbour is walked first.
CycleCensus count_induced_cycles(const Graph& g, const CensusOptions& options = {});

/// Induced cycles through v, each reached once.
CycleCensus count_cycles_through(const Graph& g, int v, const CensusOptions& options = {});

/// Calls visit(vertices) once per induced cycle, vertices in cycle order
/// starting at the anchor. Single-threaded.
void for_each_induced_cycle(const Graph& g, const std::function<void(std::span<const int>)>& visit);

/// Every subset tested for "connected and 2-regular". Throws UnsupportedError for n > 24.
CycleCensus slow_census(const Graph& g);

/// Induced paths with endpoints exactly x and y; a single edge xy counts
/// as a path of length 1. Throws InputError when x == y.
PathCensus count_induced_st_paths(const Graph& g, int x, int y);

/// Induced paths starting at x, tallied by far endpoint: result[y].
std::vector<PathCensus> count_induced_paths_from(const Graph& g, int x);

struct PathMax {
    Count value = 0;
    int x = -1;
    int y = -1;
};

/// Maximum over unordered pairs x < y of the parity-filtered path count;
/// ties go to the lexicographically smallest pair. Requires n >= 2.
PathMax p2_max(const Graph& g, PathParity parity = PathParity::all, const CensusOptions& options = {});

/// Statistics of the x-y path tree: nodes are induced paths from x that
/// have not yet passed a neighbour of y (except to step onto y).
struct TreeStats {
    Count leaf_count = 0;    // L(root)
    Count y_leaf_count = 0;  // L_y(root)
    /// Distinct sorted child-count sequences D(v_0..v_{k-2}) along
    /// root-to-y-leaf paths.
    std::set<std::vector<int>> child_count_profiles;
    /// Siblings have equal y-leaf counts below every node with L_y > 0.
    bool balanced = true;
};

/// Throws InputError when x == y.
TreeStats path_tree_stats(const Graph& g, int x, int y);

}  // namespace ic
