#include "ic/partition.hpp"

namespace ic {

VertexSet ClusterPartition::covered() const {
    VertexSet out;
    for (const auto& c : clusters)
        for (int v : c) out.insert(v);
    return out;
}

std::vector<int> ClusterPartition::sizes() const {
    std::vector<int> out;
    out.reserve(clusters.size());
    for (const auto& c : clusters) out.push_back(static_cast<int>(c.size()));
    return out;
}

}  // namespace ic
