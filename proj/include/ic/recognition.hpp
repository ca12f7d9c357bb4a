#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ic/families.hpp"
#include "ic/graph.hpp"
#include "ic/partition.hpp"

namespace ic {

enum class IntraKind { empty, full, mixed };
std::string to_string(IntraKind kind);

/// First vertex found breaking the sandwich condition.
struct BraidWitness {
    enum class Condition {
        missing_neighbor,  // not joined to a vertex of a neighbouring cluster
        outside_neighbor,  // adjacent to a vertex beyond its window of clusters
    };
    int vertex = -1;
    int cluster = -1;
    Condition condition = Condition::missing_neighbor;
    int other = -1;  // the offending (non-)neighbour

    std::string describe() const;
};

struct RecognitionReport {
    bool verified = false;
    /// Primary family match (H, G, E, script-G, or a path family), if any.
    std::optional<FamilyId> family;
    /// Every family tag whose rules the partition satisfies.
    std::vector<FamilyTag> matching;
    std::vector<int> cluster_sizes;
    std::vector<IntraKind> intra;
    std::optional<BraidWitness> witness;
    ClusterPartition partition;
};

/// Checks the sandwich condition for every vertex of every central cluster
/// (all clusters when cyclic). The partition may cover a subset of V.
/// Throws InputError for an empty cluster, a repeated or out-of-range
/// vertex, or too few clusters.
RecognitionReport verify_braid(const Graph& g, const ClusterPartition& p);

/// Every verifying cyclic partition of V reachable from the seed search,
/// in canonical orientation (vertex 0 in cluster 0, min of cluster 1 below
/// min of the last cluster), deduplicated, sorted.
std::vector<ClusterPartition> all_cyclic_braid_partitions(const Graph& g);

/// The preferred verifying cyclic partition: most clusters, then most
/// balanced sizes, then lexicographically smallest. Absent when g is not
/// a cyclic braid (or is disconnected).
std::optional<ClusterPartition> discover_cyclic_braid(const Graph& g);

/// Tags from {H, G, E, G_script} that some cyclic partition of g satisfies,
/// in that order.
std::vector<FamilyTag> matching_families(const Graph& g);

/// The first entry of matching_families, as a FamilyId with n = order.
std::optional<FamilyId> classify_family(const Graph& g);

/// Whether g is a braid with end clusters {x} and {y} whose central size
/// multiset is admissible for the path family of the given parity. The
/// clusters are the distance layers from x. Returns the variant index
/// within F_central_sequences on success.
std::optional<FamilyId> classify_path_family(const Graph& g, int x, int y, PathParity parity);

/// Central cluster sizes of the layered braid from x to y, if it verifies.
std::optional<ClusterPartition> layered_braid(const Graph& g, int x, int y);

/// Maximal non-cyclic braids whose clusters all have size 3, length >= 3.
/// Braids covering a subset of a longer braid's vertex set are dropped and
/// rotations/reflections with the same vertex set are reported once.
std::vector<ClusterPartition> maximal_3braids(const Graph& g);

}  // namespace ic
