#pragma once

#include <vector>

#include "opinet/clustering.hpp"
#include "opinet/graph.hpp"
#include "opinet/partition.hpp"
#include "opinet/random.hpp"

namespace opinet {

/// Open interval (lo, hi).
struct OpenInterval {
    double lo;
    double hi;

    bool contains(double x) const { return x > lo && x < hi; }
    friend bool operator==(const OpenInterval&, const OpenInterval&) = default;
};

/// How each node picks the edges it tries to form and break in one step.
enum class ConnectionMode {
    /// One uniformly drawn candidate to form and one out-edge to break.
    SingleDraw,
    /// Every candidate and every out-edge gets its own Bernoulli trial.
    EveryCandidate,
};

struct ModelParams {
    double w = 5.0;       ///< influence weight of friends in the same cluster
    double k_amp = 1.05;  ///< amplification factor inside amp_domain
    double c = 0.245;     ///< cluster preference for forming/keeping edges
    double alpha = 0.10;  ///< opinion learning rate
    double beta = 0.15;   ///< connection change rate
    std::vector<OpenInterval> amp_domain{{-1.0, 0.0}, {1.5, 2.0}};
    Interval bounds{-2.0, 2.0};
    ConnectionMode connection_mode = ConnectionMode::SingleDraw;

    /// Throws std::invalid_argument naming the first violated constraint.
    void validate() const;

    friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Network state paired with the partition its weights were derived from.
struct SimulationState {
    DynamicNetwork net;
    Partition partition;
};

/// alpha * sum_j (a_ij / sum_k a_ik) (o_j - o_i); zero without out-edges.
double influence(const DynamicNetwork& net, NodeId i, double alpha);

/// k_amp * y inside the amplification domain, y elsewhere; then clamped.
double amplify(double y, const ModelParams& params);

/// Synchronous opinion update o_i <- amplify(o_i + influence_i).
DynamicNetwork update_opinions(const DynamicNetwork& net, const ModelParams& params);

/// Nodes j != i with no edge i->j that are either reachable over two hops
/// or already point at i. Sorted ascending.
std::vector<NodeId> candidate_formations(const DynamicNetwork& net, NodeId i);

/// 0.5 + c inside a shared cluster, 0.5 - c across clusters, 0.5 when
/// either node is unclustered.
double cluster_affinity(const Partition& p, NodeId i, NodeId j, double c);

/// One round of stochastic edge formation and breaking. Nodes act in
/// ascending order on a shared working copy; a node never breaks the edge it
/// just formed. New edges get the weight implied by `p`.
DynamicNetwork update_connections(const DynamicNetwork& net, const Partition& p,
                                  const ModelParams& params, RandomStream& rng);

/// Opinions, then connections, then (when `recluster`) a fresh best
/// partition with re-applied cluster weights.
SimulationState step(const SimulationState& state, const ModelParams& params, RandomStream& rng,
                     const ClusteringOptions& clustering = {}, bool recluster = true);

/// Clusters `net` and applies the cluster weights of `params`.
SimulationState initial_state(DynamicNetwork net, const ModelParams& params,
                              const ClusteringOptions& clustering = {});

}  // namespace opinet
