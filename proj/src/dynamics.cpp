#include "opinet/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace opinet {

namespace {

[[noreturn]] void reject(const std::string& what) { throw std::invalid_argument(what); }

double affinity(std::span<const int> labels, NodeId i, NodeId j, double c) {
    const int a = labels[i], b = labels[j];
    if (a < 0 || b < 0)
        return 0.5;
    return a == b ? 0.5 + c : 0.5 - c;
}

std::vector<int> node_labels(const Partition& p, std::size_t n) {
    std::vector<int> labels(n, -1);
    for (std::size_t c = 0; c < p.clusters.size(); ++c)
        for (NodeId v : p.clusters[c])
            if (v < n)
                labels[v] = static_cast<int>(c);
    return labels;
}

}  // namespace

void ModelParams::validate() const {
    if (!(w >= 1.0) || !std::isfinite(w))
        reject("w must be a finite value >= 1, got " + std::to_string(w));
    if (!(k_amp >= 1.0) || !std::isfinite(k_amp))
        reject("k_amp must be a finite value >= 1, got " + std::to_string(k_amp));
    if (!(c >= 0.0 && c < 0.5))
        reject("c must lie in [0, 0.5), got " + std::to_string(c));
    // Zero rates are accepted so that frozen dynamics can be expressed.
    if (!(alpha >= 0.0 && alpha <= 1.0))
        reject("alpha must lie in [0, 1], got " + std::to_string(alpha));
    if (!(beta >= 0.0 && beta <= 1.0))
        reject("beta must lie in [0, 1], got " + std::to_string(beta));
    if (!(bounds.lo <= bounds.hi) || !std::isfinite(bounds.lo) || !std::isfinite(bounds.hi))
        reject("bounds must be finite with lo <= hi");
    for (const auto& d : amp_domain) {
        if (!(d.lo < d.hi))
            reject("amp_domain interval must satisfy lo < hi");
        if (d.lo < bounds.lo || d.hi > bounds.hi)
            reject("amp_domain interval (" + std::to_string(d.lo) + ", " + std::to_string(d.hi) +
                   ") lies outside the opinion bounds");
    }
}

double influence(const DynamicNetwork& net, NodeId i, double alpha) {
    const double total = out_weight_sum(net, i);
    if (total == 0.0)
        return 0.0;
    const auto row = net.row(i);
    const double oi = net.opinion(i);
    double sum = 0.0;
    for (NodeId j = 0; j < row.size(); ++j)
        if (row[j] > 0.0)
            sum += row[j] / total * (net.opinion(j) - oi);
    return alpha * sum;
}

double amplify(double y, const ModelParams& params) {
    const bool inside = std::any_of(params.amp_domain.begin(), params.amp_domain.end(),
                                    [y](const OpenInterval& d) { return d.contains(y); });
    return params.bounds.clamp(inside ? params.k_amp * y : y);
}

DynamicNetwork update_opinions(const DynamicNetwork& net, const ModelParams& params) {
    std::vector<double> next(net.size());
    for (NodeId i = 0; i < net.size(); ++i)
        next[i] = amplify(net.opinion(i) + influence(net, i, params.alpha), params);
    DynamicNetwork out = net;
    out.set_opinions(std::move(next));
    return out;
}

std::vector<NodeId> candidate_formations(const DynamicNetwork& net, NodeId i) {
    const auto n = static_cast<NodeId>(net.size());
    std::vector<bool> mark(n, false);
    const auto row = net.row(i);
    for (NodeId l = 0; l < n; ++l) {
        if (row[l] <= 0.0)
            continue;
        const auto second = net.row(l);
        for (NodeId j = 0; j < n; ++j)
            if (second[j] > 0.0)
                mark[j] = true;
    }
    std::vector<NodeId> out;
    for (NodeId j = 0; j < n; ++j) {
        if (j == i || row[j] > 0.0)
            continue;
        if (mark[j] || net.has_edge(j, i))
            out.push_back(j);
    }
    return out;
}

double cluster_affinity(const Partition& p, NodeId i, NodeId j, double c) {
    int a = -1, b = -1;
    for (std::size_t k = 0; k < p.clusters.size(); ++k) {
        const auto& members = p.clusters[k];
        if (std::binary_search(members.begin(), members.end(), i))
            a = static_cast<int>(k);
        if (std::binary_search(members.begin(), members.end(), j))
            b = static_cast<int>(k);
    }
    const int labels[2] = {a, b};
    return affinity(labels, 0, 1, c);
}

DynamicNetwork update_connections(const DynamicNetwork& net, const Partition& p,
                                  const ModelParams& params, RandomStream& rng) {
    DynamicNetwork work = net;
    const auto n = static_cast<NodeId>(net.size());
    const auto labels = node_labels(p, n);
    const double c = params.c;
    const double beta = params.beta;

    auto new_weight = [&](NodeId i, NodeId j) {
        return labels[i] >= 0 && labels[i] == labels[j] ? params.w : 1.0;
    };

    for (NodeId i = 0; i < n; ++i) {
        const auto candidates = candidate_formations(work, i);
        auto existing = work.out_neighbors(i);

        if (params.connection_mode == ConnectionMode::SingleDraw) {
            if (!candidates.empty()) {
                const NodeId j = candidates[rng.index(candidates.size())];
                if (rng.uniform() < beta * affinity(labels, i, j, c))
                    work.set_edge(i, j, new_weight(i, j));
            }
            // `existing` predates this node's formation, so a fresh edge is
            // never drawn for breaking.
            if (!existing.empty()) {
                const NodeId j = existing[rng.index(existing.size())];
                if (rng.uniform() < beta * (1.0 - affinity(labels, i, j, c)))
                    work.remove_edge(i, j);
            }
        } else {
            for (NodeId j : candidates)
                if (rng.uniform() < beta * affinity(labels, i, j, c))
                    work.set_edge(i, j, new_weight(i, j));
            for (NodeId j : existing)
                if (rng.uniform() < beta * (1.0 - affinity(labels, i, j, c)))
                    work.remove_edge(i, j);
        }
    }
    return work;
}

SimulationState initial_state(DynamicNetwork net, const ModelParams& params,
                              const ClusteringOptions& clustering) {
    Partition p = best_partition(undirected_projection(net), clustering);
    net = apply_cluster_weights(std::move(net), p, params.w);
    return {std::move(net), std::move(p)};
}

SimulationState step(const SimulationState& state, const ModelParams& params, RandomStream& rng,
                     const ClusteringOptions& clustering, bool recluster) {
    DynamicNetwork net = update_opinions(state.net, params);
    net = update_connections(net, state.partition, params, rng);
    if (!recluster)
        return {std::move(net), state.partition};
    return initial_state(std::move(net), params, clustering);
}

}  // namespace opinet
