#include "opinet/partition.hpp"

#include <algorithm>
#include <map>

namespace opinet {

Partition Partition::from_labels(std::span<const int> labels) {
    std::map<int, std::vector<NodeId>> groups;
    Partition p;
    for (std::size_t v = 0; v < labels.size(); ++v) {
        if (labels[v] < 0)
            p.unclustered.push_back(static_cast<NodeId>(v));
        else
            groups[labels[v]].push_back(static_cast<NodeId>(v));
    }
    for (auto& [label, members] : groups) {
        if (members.size() >= kMinClusterSize)
            p.clusters.push_back(std::move(members));
        else
            p.unclustered.insert(p.unclustered.end(), members.begin(), members.end());
    }
    std::sort(p.clusters.begin(), p.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.front() < b.front(); });
    std::sort(p.unclustered.begin(), p.unclustered.end());
    return p;
}

Partition Partition::empty(std::size_t n) {
    Partition p;
    p.unclustered.resize(n);
    for (std::size_t v = 0; v < n; ++v)
        p.unclustered[v] = static_cast<NodeId>(v);
    return p;
}

std::size_t Partition::node_count() const {
    std::size_t n = unclustered.size();
    for (const auto& c : clusters)
        n += c.size();
    return n;
}

std::vector<int> Partition::labels() const {
    std::vector<int> out(node_count(), -1);
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (NodeId v : clusters[c])
            out.at(v) = static_cast<int>(c);
    return out;
}

}  // namespace opinet
