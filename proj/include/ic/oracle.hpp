#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ic/count.hpp"
#include "ic/graph.hpp"

namespace ic {

enum class Quantity { m, m_odd, m_even, m_odd_holes, p2, p2_odd, p2_even };
std::string to_string(Quantity q);
/// Throws InputError for an unknown name.
Quantity parse_quantity(const std::string& text);
bool is_path_quantity(Quantity q);

struct SweepOptions {
    unsigned threads = 1;  // 0 = hardware concurrency
    bool allow_long = false;  // permits n = 8
    int shards = 1;
    std::optional<int> shard;  // run only this shard; all shards when unset
    /// Directory for per-shard checkpoint lines; empty disables.
    std::string checkpoint_dir;
};

struct SweepResult {
    int n = 0;
    Quantity quantity = Quantity::m;
    Count max = 0;
    /// graph6 strings of the canonical forms of extremal graphs, sorted.
    std::vector<std::string> extremal_codes;
    std::uint64_t graphs_scanned = 0;
    /// Sampled graphs on which census, subset oracle and the sweep kernel agreed.
    int audits = 0;
};

/// Labelled graph on n vertices whose graph6 edge bits are `code`.
Graph graph_from_code(int n, std::uint64_t code);

/// The quantity evaluated with the public census engine.
Count evaluate_quantity(const Graph& g, Quantity q);

/// Scans every labelled graph on n vertices (n <= 7; n = 8 needs
/// allow_long). Throws InputError when n is out of range or the shard
/// settings are inconsistent.
SweepResult exhaustive_max(int n, Quantity q, const SweepOptions& options = {});

struct UniquenessReport {
    int n = 0;
    Count max = 0;
    int graphs = 0;
    int pairs = 0;
    /// Sorted central cluster sizes seen across extremal (graph, pair) combos.
    std::vector<std::vector<int>> central_multisets;
    /// graph6 codes (with the pair) that failed to classify.
    std::vector<std::string> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

/// Every p2-extremal (graph, pair) on n vertices must be a braid in the
/// path family with end clusters {x} and {y}. Requires 4 <= n <= 7.
UniquenessReport verify_extremal_uniqueness(int n, const SweepOptions& options = {});

}  // namespace ic
