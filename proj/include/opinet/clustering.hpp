#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "opinet/graph.hpp"
#include "opinet/partition.hpp"

namespace opinet {

struct ClusteringOptions {
    /// A candidate made of a single cluster holding more than this fraction
    /// of all nodes is only selected when no other candidate has a cluster.
    /// Values >= 1 disable the rule.
    double max_single_cluster_fraction = 0.9;
};

/// deg_int / (deg_int + deg_ext) for the node set `members`, counted on the
/// undirected graph; 0 when the set touches no edge.
double cluster_quality(const UndirectedGraph& graph, std::span<const NodeId> members);

/// Shortest-path edge betweenness, summed over unordered node pairs with
/// fractional credit when several shortest paths exist. Aligned with
/// graph.edges().
std::vector<double> edge_betweenness(const UndirectedGraph& graph);

struct GirvanNewmanCandidate {
    std::size_t removals = 0;
    /// Edge removed to reach this candidate; empty for the initial graph.
    std::optional<std::pair<NodeId, NodeId>> removed_edge;
    Partition partition;
};

/// Component partitions seen while repeatedly deleting the edge of highest
/// betweenness (ties go to the lexicographically smallest edge), from zero
/// removals until the graph is empty. Betweenness is refreshed after every
/// deletion. Each candidate's quality is the mean cluster_quality of its
/// clusters measured on the original graph.
std::vector<GirvanNewmanCandidate> girvan_newman_partitions(const UndirectedGraph& graph);

/// The Girvan-Newman candidate with the highest mean cluster quality. Earlier
/// candidates win ties. Returns an all-unclustered partition with no quality
/// when no candidate has a cluster.
Partition best_partition(const UndirectedGraph& graph, const ClusteringOptions& options = {});

}  // namespace opinet
