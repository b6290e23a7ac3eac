#include "opinet/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace opinet {

double cluster_opinion(const DynamicNetwork& net, std::span<const NodeId> members) {
    if (members.empty())
        throw std::invalid_argument("cluster_opinion of an empty cluster");
    double sum = 0.0;
    for (NodeId v : members)
        sum += net.opinion(v);
    return sum / static_cast<double>(members.size());
}

double opinion_spread(const DynamicNetwork& net, std::span<const NodeId> members) {
    const double mean = cluster_opinion(net, members);
    double sum = 0.0;
    for (NodeId v : members)
        sum += std::abs(net.opinion(v) - mean);
    return sum / static_cast<double>(members.size());
}

double inner_connectivity(const DynamicNetwork& net, std::span<const NodeId> members) {
    const std::size_t k = members.size();
    if (k < 2)
        throw std::invalid_argument("inner_connectivity needs at least two members");
    std::size_t edges = 0;
    for (NodeId i : members)
        for (NodeId j : members)
            if (i != j && net.has_edge(i, j))
                ++edges;
    return static_cast<double>(edges) / static_cast<double>(k * (k - 1));
}

MetricsRow metrics_row(const DynamicNetwork& net, const Partition& p, std::size_t t) {
    MetricsRow row;
    row.t = t;
    row.cluster_count = p.clusters.size();
    if (p.clusters.empty())
        return row;

    double opinion = 0.0, spread = 0.0, connectivity = 0.0, size = 0.0;
    for (const auto& c : p.clusters) {
        opinion += cluster_opinion(net, c);
        spread += opinion_spread(net, c);
        connectivity += inner_connectivity(net, c);
        size += static_cast<double>(c.size());
    }
    const double count = static_cast<double>(p.clusters.size());
    row.avg_cluster_opinion = opinion / count;
    row.avg_opinion_spread = spread / count;
    row.avg_inner_connectivity = connectivity / count;
    row.avg_cluster_size = size / count;
    return row;
}

}  // namespace opinet
