#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace opinet {

using NodeId = std::uint32_t;

struct Partition;

/// Closed interval [lo, hi] that opinions are confined to.
struct Interval {
    double lo = -2.0;
    double hi = 2.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
    double clamp(double x) const { return x < lo ? lo : (x > hi ? hi : x); }
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Unweighted undirected simple graph with sorted adjacency lists.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n) : adj_(n) {}

    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    /// Adds {u, v}; self-loops and duplicates are rejected.
    void add_edge(NodeId u, NodeId v);
    bool has_edge(NodeId u, NodeId v) const;

    std::span<const NodeId> neighbors(NodeId u) const { return adj_.at(u); }

    /// Edges as (min, max) pairs in lexicographic order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

private:
    std::vector<std::vector<NodeId>> adj_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Directed friendship network at one time step: per-node opinions plus a
/// dense weighted adjacency matrix whose entries are 0, 1 or the current
/// intra-cluster weight.
class DynamicNetwork {
public:
    DynamicNetwork() = default;

    /// Opinions outside `bounds` are clamped into it.
    DynamicNetwork(std::vector<double> opinions, Interval bounds = {});

    std::size_t size() const { return opinions_.size(); }
    const Interval& bounds() const { return bounds_; }

    double opinion(NodeId i) const { return opinions_[i]; }
    std::span<const double> opinions() const { return opinions_; }
    /// Replaces all opinions; values are clamped into bounds.
    void set_opinions(std::vector<double> opinions);

    double weight(NodeId i, NodeId j) const { return adj_[index(i, j)]; }
    bool has_edge(NodeId i, NodeId j) const { return adj_[index(i, j)] > 0.0; }
    std::span<const double> row(NodeId i) const {
        return {adj_.data() + static_cast<std::size_t>(i) * n_, n_};
    }

    /// Sets a_ij; self-loops and negative weights are rejected.
    void set_edge(NodeId i, NodeId j, double weight = 1.0);
    void remove_edge(NodeId i, NodeId j) { adj_[index(i, j)] = 0.0; }

    std::vector<NodeId> out_neighbors(NodeId i) const;
    std::size_t out_degree(NodeId i) const;
    std::size_t edge_count() const;

    friend bool operator==(const DynamicNetwork&, const DynamicNetwork&) = default;

private:
    std::size_t index(NodeId i, NodeId j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    std::size_t n_ = 0;
    std::vector<double> opinions_;
    std::vector<double> adj_;
    Interval bounds_;
};

/// Undirected graph holding {i, j} iff both i->j and j->i exist.
UndirectedGraph undirected_projection(const DynamicNetwork& net);

/// Sum of the outgoing weights of node i.
double out_weight_sum(const DynamicNetwork& net, NodeId i);

/// Re-weights every existing edge: w inside a shared cluster, 1 otherwise.
/// Throws std::invalid_argument when w < 1.
DynamicNetwork apply_cluster_weights(DynamicNetwork net, const Partition& partition, double w);

}  // namespace opinet
