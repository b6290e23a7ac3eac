#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "opinet/graph.hpp"

namespace opinet {

/// Sorted member list of one cluster; always more than two nodes.
using Cluster = std::vector<NodeId>;

inline constexpr std::size_t kMinClusterSize = 3;

/// Disjoint clusters plus the nodes left outside every cluster.
struct Partition {
    std::vector<Cluster> clusters;
    std::vector<NodeId> unclustered;
    /// Mean cluster quality; empty when there are no clusters.
    std::optional<double> quality;

    /// Builds a partition of n nodes from per-node component labels. Groups
    /// smaller than kMinClusterSize are sent to `unclustered`. Clusters are
    /// ordered by their smallest member.
    static Partition from_labels(std::span<const int> labels);

    /// Every node unclustered.
    static Partition empty(std::size_t n);

    std::size_t node_count() const;

    /// Per-node cluster index, -1 for unclustered nodes.
    std::vector<int> labels() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

}  // namespace opinet
