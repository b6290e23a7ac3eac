#pragma once

#include <optional>
#include <span>

#include "opinet/graph.hpp"
#include "opinet/partition.hpp"

namespace opinet {

/// Per-time-step cluster averages. The averaged fields are empty when the
/// partition has no clusters.
struct MetricsRow {
    std::size_t t = 0;
    std::optional<double> avg_cluster_opinion;
    std::optional<double> avg_opinion_spread;
    std::optional<double> avg_inner_connectivity;
    std::optional<double> avg_cluster_size;
    std::size_t cluster_count = 0;

    bool defined() const { return cluster_count > 0; }

    friend bool operator==(const MetricsRow&, const MetricsRow&) = default;
};

/// Mean member opinion.
double cluster_opinion(const DynamicNetwork& net, std::span<const NodeId> members);

/// Mean absolute deviation of member opinions from the cluster opinion.
double opinion_spread(const DynamicNetwork& net, std::span<const NodeId> members);

/// Directed edges among the members divided by k(k-1). Requires k > 1.
double inner_connectivity(const DynamicNetwork& net, std::span<const NodeId> members);

/// Unweighted means of the three cluster metrics over all clusters of `p`.
MetricsRow metrics_row(const DynamicNetwork& net, const Partition& p, std::size_t t);

}  // namespace opinet
