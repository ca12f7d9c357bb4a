#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ic/graph.hpp"
#include "ic/partition.hpp"

namespace ic {

/// Edges inside one cluster, over the cluster's local indices 0..size-1.
struct IntraPattern {
    enum class Kind { empty, full, explicit_edges };

    Kind kind = Kind::empty;
    std::vector<Edge> edges;

    static IntraPattern empty() { return {}; }
    static IntraPattern full() { return {Kind::full, {}}; }
    static IntraPattern explicit_list(std::vector<Edge> e) { return {Kind::explicit_edges, std::move(e)}; }
};

struct BraidSpec {
    std::vector<int> cluster_sizes;
    bool cyclic = false;
    /// Either empty (all clusters edgeless), one entry applied to every
    /// cluster, or one entry per cluster.
    std::vector<IntraPattern> intra;
};

struct BuiltBraid {
    Graph graph;
    ClusterPartition partition;
};

enum class FamilyTag { H, G, E, F, F_odd, F_even, G_script };

struct FamilyId {
    FamilyTag tag = FamilyTag::H;
    int n = 0;
    int variant = 0;

    friend bool operator==(const FamilyId&, const FamilyId&) = default;
};

std::string to_string(FamilyTag tag);
/// Accepts H, G, E, F, Fo, Fe, Gs (and the long spellings F_odd, F_even, G_script).
FamilyTag parse_family_tag(const std::string& text);

enum class PathParity { all, odd, even };

/// Clusters are numbered in order, vertices cluster-major ascending.
/// Throws InputError on an invalid spec or more than 128 vertices.
BuiltBraid build_braid(const BraidSpec& spec);

/// Empty cyclic braid with clusters of size 3 except one of size 4 (n = 1 mod 3)
/// or one of size 2 (n = 2 mod 3). Requires n >= 8.
BuiltBraid build_H(int n);

/// Full cyclic braid; special clusters occupy the lowest indices. Requires n >= 14.
BuiltBraid build_G(int n);

/// Empty cyclic braid; special clusters occupy the lowest indices. Requires n >= 14.
BuiltBraid build_E(int n);

/// Cluster sizes of H_n, G_n, E_n in construction order.
std::vector<int> H_cluster_sizes(int n);
std::vector<int> G_cluster_sizes(int n);
std::vector<int> E_cluster_sizes(int n);

/// Admissible central-cluster multisets (each sorted ascending) for the
/// path families with singleton end clusters.
std::vector<std::vector<int>> F_central_multisets(int n, PathParity parity);

/// Every arrangement of every admissible central multiset, in the order used
/// by member_of_F's variant index.
std::vector<std::vector<int>> F_central_sequences(int n, PathParity parity);

/// Braid {x}, central clusters..., {y}; x is vertex 0 and y is vertex n-1.
BuiltBraid member_of_F(int n, PathParity parity, int variant, const IntraPattern& intra = IntraPattern::empty());

/// Representatives of the odd-hole extremal family: one per cluster-size
/// multiset, placement up to rotation and reflection, and uniform intra
/// pattern in {empty, full}. Requires n >= 14.
void members_of_script_G(int n, const std::function<void(const BuiltBraid&)>& visit);
std::vector<BuiltBraid> members_of_script_G(int n);

/// Constructs a named family member; F-type tags use `variant`.
BuiltBraid build_family(const FamilyId& id, const IntraPattern& intra = IntraPattern::empty());

}  // namespace ic
