#include "opinet/graph.hpp"

#include <algorithm>
#include <string>

#include "opinet/partition.hpp"

namespace opinet {

void UndirectedGraph::add_edge(NodeId u, NodeId v) {
    if (u == v)
        throw std::invalid_argument("self-loop " + std::to_string(u));
    if (u >= adj_.size() || v >= adj_.size())
        throw std::out_of_range("edge endpoint outside graph");
    if (has_edge(u, v))
        throw std::invalid_argument("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));

    auto insert_sorted = [](std::vector<NodeId>& list, NodeId x) {
        list.insert(std::upper_bound(list.begin(), list.end(), x), x);
    };
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);

    const std::pair<NodeId, NodeId> e{std::min(u, v), std::max(u, v)};
    edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
}

DynamicNetwork::DynamicNetwork(std::vector<double> opinions, Interval bounds)
    : n_(opinions.size()), opinions_(std::move(opinions)), adj_(n_ * n_, 0.0), bounds_(bounds) {
    if (!(bounds_.lo <= bounds_.hi))
        throw std::invalid_argument("opinion bounds must satisfy lo <= hi");
    for (auto& o : opinions_)
        o = bounds_.clamp(o);
}

void DynamicNetwork::set_opinions(std::vector<double> opinions) {
    if (opinions.size() != n_)
        throw std::invalid_argument("opinion vector size mismatch");
    for (auto& o : opinions)
        o = bounds_.clamp(o);
    opinions_ = std::move(opinions);
}

void DynamicNetwork::set_edge(NodeId i, NodeId j, double weight) {
    if (i >= n_ || j >= n_)
        throw std::out_of_range("edge endpoint outside network");
    if (i == j)
        throw std::invalid_argument("self-friendship is not allowed (node " + std::to_string(i) + ")");
    if (weight < 0.0)
        throw std::invalid_argument("edge weight must be non-negative");
    adj_[index(i, j)] = weight;
}

std::vector<NodeId> DynamicNetwork::out_neighbors(NodeId i) const {
    std::vector<NodeId> out;
    const auto r = row(i);
    for (NodeId j = 0; j < n_; ++j)
        if (r[j] > 0.0)
            out.push_back(j);
    return out;
}

std::size_t DynamicNetwork::out_degree(NodeId i) const {
    const auto r = row(i);
    return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](double a) { return a > 0.0; }));
}

std::size_t DynamicNetwork::edge_count() const {
    return static_cast<std::size_t>(std::count_if(adj_.begin(), adj_.end(), [](double a) { return a > 0.0; }));
}

UndirectedGraph undirected_projection(const DynamicNetwork& net) {
    const auto n = static_cast<NodeId>(net.size());
    UndirectedGraph g(n);
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            if (net.has_edge(i, j) && net.has_edge(j, i))
                g.add_edge(i, j);
    return g;
}

double out_weight_sum(const DynamicNetwork& net, NodeId i) {
    double sum = 0.0;
    for (double a : net.row(i))
        sum += a;
    return sum;
}

DynamicNetwork apply_cluster_weights(DynamicNetwork net, const Partition& partition, double w) {
    if (!(w >= 1.0))
        throw std::invalid_argument("intra-cluster weight w must be >= 1, got " + std::to_string(w));
    const auto n = static_cast<NodeId>(net.size());
    std::vector<int> label(n, -1);
    for (std::size_t c = 0; c < partition.clusters.size(); ++c)
        for (NodeId v : partition.clusters[c])
            if (v < n)
                label[v] = static_cast<int>(c);

    for (NodeId i = 0; i < n; ++i) {
        for (NodeId j = 0; j < n; ++j) {
            if (!net.has_edge(i, j))
                continue;
            const bool same = label[i] >= 0 && label[i] == label[j];
            net.set_edge(i, j, same ? w : 1.0);
        }
    }
    return net;
}

}  // namespace opinet
