#pragma once

#include <vector>

#include "ic/vertex_set.hpp"

namespace ic {

/// Ordered clusters of a braid or cyclic braid.
struct ClusterPartition {
    std::vector<std::vector<int>> clusters;
    bool cyclic = false;

    int length() const { return static_cast<int>(clusters.size()); }
    VertexSet cluster_set(int i) const { return VertexSet::of(clusters[static_cast<std::size_t>(i)]); }
    VertexSet covered() const;
    std::vector<int> sizes() const;

    friend bool operator==(const ClusterPartition&, const ClusterPartition&) = default;
};

}  // namespace ic
