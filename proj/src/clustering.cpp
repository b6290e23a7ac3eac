#include "opinet/clustering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>

namespace opinet {

namespace {

// Relative slack used when comparing betweenness values, so that edges whose
// scores differ only through summation order count as tied.
constexpr double kTieTolerance = 1e-9;

// Fixed-width bit rows over the node set.
class BitRows {
public:
    void reset(std::size_t rows, std::size_t bits) {
        words_ = (bits + 63) / 64;
        data_.assign(rows * words_, 0);
    }

    std::size_t words() const { return words_; }
    std::uint64_t* data() { return data_.data(); }
    const std::uint64_t* data() const { return data_.data(); }
    std::uint64_t* row(std::size_t r) { return data_.data() + r * words_; }
    const std::uint64_t* row(std::size_t r) const { return data_.data() + r * words_; }

private:
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

void set_bit(std::uint64_t* row, std::size_t i) { row[i / 64] |= std::uint64_t{1} << (i % 64); }
bool test_bit(const std::uint64_t* row, std::size_t i) { return (row[i / 64] >> (i % 64)) & 1; }
void clear_bit(std::uint64_t* row, std::size_t i) { row[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

// Calls f(i) for every set bit of a & b, in increasing order.
template <typename F>
[[gnu::always_inline]] inline void for_each_common(const std::uint64_t* a, const std::uint64_t* b,
                                                   std::size_t words, F&& f) {
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = a[w] & b[w];
        while (bits) {
            f(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
}

template <typename F>
[[gnu::always_inline]] inline void for_each_bit(const std::uint64_t* a, std::size_t words, F&& f) {
    for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = a[w];
        while (bits) {
            f(static_cast<NodeId>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
            bits &= bits - 1;
        }
    }
}

// Incrementally deletes edges from an undirected graph while keeping edge
// betweenness and component labels current. Betweenness is kept as a sum of
// per-source contributions, each stored with its BFS levels, path counts
// and dependencies. Deleting {u, v} leaves a source untouched when u and v
// sit on the same level; otherwise only the region below the lower endpoint
// and the ancestors of that region are revisited.
template <std::size_t FixedWords>
class GirvanNewmanWalker {
public:
    GirvanNewmanWalker() = default;

    /// Starts over on `graph`, reusing the buffers of earlier runs.
    void reset(const UndirectedGraph& graph) {
        n_ = graph.node_count();
        m_ = graph.edge_count();
        edges_ = graph.edges();
        alive_list_.resize(m_);
        alive_pos_.resize(m_);
        adj_.reset(n_, n_);
        edge_id_.assign(n_ * n_, 0);
        betweenness_.assign(m_, 0.0);
        component_.assign(n_, -1);
        level_.assign(n_ * n_, -1);
        depth_.assign(n_, 0);
        level_sets_.reset(n_ * (n_ + 1), n_);
        sigma_.assign(n_ * n_, 0.0);
        delta_.assign(n_ * n_, 0.0);
        credit_.assign(n_ * m_, 0.0);
        marked_.assign(word_count(), 0);
        ancestors_.assign(word_count(), 0);
        scratch_.assign(word_count(), 0);
        moved_.assign(word_count(), 0);
        tentative_.assign(n_, 0);
        for (std::size_t e = 0; e < m_; ++e) {
            const auto id = static_cast<std::uint32_t>(e);
            alive_list_[e] = id;
            alive_pos_[e] = id;
            const auto [u, v] = edges_[e];
            set_bit(row(adj_, u), v);
            set_bit(row(adj_, v), u);
            edge_id_[u * n_ + v] = edge_id_[v * n_ + u] = id;
        }
        label_components();
        for (std::size_t s = 0; s < n_; ++s)
            initialize_source(static_cast<NodeId>(s));
    }

    bool done() const { return alive_list_.empty(); }
    std::span<const int> components() const { return component_; }
    std::span<const double> betweenness() const { return betweenness_; }

    /// True when every component has at most two nodes; no later deletion
    /// can create a cluster.
    bool fragmented() const { return largest_component_ < kMinClusterSize; }

    /// Deletes the current top edge. Returns it together with whether the
    /// component structure changed.
    std::pair<std::pair<NodeId, NodeId>, bool> remove_top_edge() {
        const std::size_t e = top_edge();
        const auto [u, v] = edges_[e];
        const std::uint32_t last = alive_list_.back();
        alive_list_[alive_pos_[e]] = last;
        alive_pos_[last] = alive_pos_[e];
        alive_list_.pop_back();
        clear_bit(row(adj_, u), v);
        clear_bit(row(adj_, v), u);

        for (std::size_t s = 0; s < n_; ++s) {
            const int du = level_[s * n_ + u], dv = level_[s * n_ + v];
            if (du < 0 || du == dv)
                continue;
            const auto source = static_cast<NodeId>(s);
            const NodeId parent = du < dv ? u : v;
            const NodeId child = du < dv ? v : u;
            update_after_delete(source, parent, child);
        }
        betweenness_[e] = 0.0;

        // u was recomputed as a source, so its levels tell whether v is
        // still reachable.
        const bool split = level_[static_cast<std::size_t>(u) * n_ + v] < 0;
        if (split)
            label_components();
        return {{u, v}, split};
    }

private:
    // Bit-row width; a compile-time constant for the common small sizes.
    std::size_t word_count() const {
        if constexpr (FixedWords > 0)
            return FixedWords;
        else
            return adj_.words();
    }

    std::size_t top_edge() const {
        double best = -1.0;
        for (std::uint32_t e : alive_list_)
            best = std::max(best, betweenness_[e]);
        const double cutoff = best - kTieTolerance * std::max(1.0, best);
        std::size_t first = m_;
        for (std::uint32_t e : alive_list_)
            if (betweenness_[e] >= cutoff)
                first = std::min<std::size_t>(first, e);
        return first;
    }

    void label_components() {
        std::fill(component_.begin(), component_.end(), -1);
        component_count_ = 0;
        largest_component_ = 0;
        for (std::size_t s = 0; s < n_; ++s) {
            if (component_[s] >= 0)
                continue;
            const int id = static_cast<int>(component_count_++);
            std::size_t size = 1;
            component_[s] = id;
            stack_.assign(1, static_cast<NodeId>(s));
            while (!stack_.empty()) {
                const NodeId x = stack_.back();
                stack_.pop_back();
                for_each_bit(row(adj_, x), word_count(), [&](NodeId y) {
                    if (component_[y] < 0) {
                        component_[y] = id;
                        ++size;
                        stack_.push_back(y);
                    }
                });
            }
            largest_component_ = std::max(largest_component_, size);
        }
    }

    std::uint64_t* level_set(NodeId s, std::size_t d) { return row(level_sets_, s * (n_ + 1) + d); }

    std::uint64_t* row(BitRows& rows, std::size_t r) { return rows.data() + r * word_count(); }
    const std::uint64_t* row(const BitRows& rows, std::size_t r) const {
        return rows.data() + r * word_count();
    }

    void clear_row(std::uint64_t* r) const {
        for (std::size_t w = 0; w < word_count(); ++w)
            r[w] = 0;
    }

    bool has_parent(NodeId s, NodeId y) {
        const auto d = static_cast<std::size_t>(level_[s * n_ + y]);
        const std::uint64_t* a = row(adj_, y);
        const std::uint64_t* b = level_set(s, d - 1);
        for (std::size_t w = 0; w < word_count(); ++w)
            if (a[w] & b[w])
                return true;
        return false;
    }

    double path_count(NodeId s, NodeId y, std::size_t d) {
        const double* sigma = sigma_.data() + s * n_;
        double paths = 0.0;
        for_each_common(row(adj_, y), level_set(s, d - 1), word_count(),
                        [&](NodeId x) { paths += sigma[x]; });
        return paths;
    }

    // Refreshes the dependency of x on the source. With `all` set it is
    // rebuilt from every child; otherwise only children flagged in
    // ancestors_ are revisited and their change is applied to the stored
    // value, whose lost children have already been subtracted.
    void accumulate(NodeId s, NodeId x, std::size_t d, bool all) {
        const double* sigma = sigma_.data() + s * n_;
        double* delta = delta_.data() + s * n_;
        double* credit = credit_.data() + s * m_;
        if (d >= depth_[s]) {
            delta[x] = 0.0;
            return;
        }
        const std::size_t words = word_count();
        const double base = sigma[x];
        const std::uint32_t* ids = edge_id_.data() + static_cast<std::size_t>(x) * n_;
        const std::uint64_t* nb = row(adj_, x);
        const std::uint64_t* below = level_set(s, d + 1);
        double dependency = all ? 0.0 : delta[x];
        for (std::size_t w = 0; w < words; ++w) {
            const std::uint64_t children = nb[w] & below[w];
            const std::uint64_t fresh = all ? children : children & ancestors_[w];
            for_each_bit(&fresh, 1, [&](NodeId b) {
                const NodeId y = static_cast<NodeId>(w * 64) + b;
                const std::uint32_t e = ids[y];
                const double c = base / sigma[y] * (1.0 + delta[y]);
                // Each unordered pair is reached from both of its endpoints.
                betweenness_[e] += 0.5 * c - credit[e];
                dependency += all ? c : c - 2.0 * credit[e];
                credit[e] = 0.5 * c;
            });
        }
        delta[x] = dependency;
    }

    // Brandes pass from s on the untouched graph.
    void initialize_source(NodeId s) {
        const std::size_t words = word_count();
        int* level = level_.data() + s * n_;
        double* sigma = sigma_.data() + s * n_;
        clear_row(marked_.data());
        set_bit(marked_.data(), s);
        set_bit(level_set(s, 0), s);
        level[s] = 0;
        sigma[s] = 1.0;

        std::size_t depth = 0;
        for (;; ++depth) {
            const std::uint64_t* frontier = level_set(s, depth);
            std::uint64_t* next = level_set(s, depth + 1);
            clear_row(next);
            for_each_bit(frontier, words, [&](NodeId x) {
                const std::uint64_t* nb = row(adj_, x);
                for (std::size_t w = 0; w < words; ++w)
                    next[w] |= nb[w];
            });
            bool any = false;
            for (std::size_t w = 0; w < words; ++w) {
                next[w] &= ~marked_[w];
                marked_[w] |= next[w];
                any = any || next[w] != 0;
            }
            if (!any)
                break;
            for_each_bit(next, words, [&](NodeId y) {
                level[y] = static_cast<int>(depth) + 1;
                sigma[y] = path_count(s, y, depth + 1);
            });
        }
        depth_[s] = depth;

        for (std::size_t d = depth + 1; d-- > 0;)
            for_each_bit(level_set(s, d), words, [&](NodeId x) { accumulate(s, x, d, true); });
    }

    // Repairs the state of source s after deleting the DAG edge parent-child.
    // Only nodes whose level, path count or dependency can change are
    // visited: the nodes that lost every shortest path (`moved`), whatever
    // hangs below them or below child, and all ancestors of those.
    void update_after_delete(NodeId s, NodeId parent, NodeId child) {
        const std::size_t words = word_count();
        int* level = level_.data() + s * n_;
        double* sigma = sigma_.data() + s * n_;
        double* credit = credit_.data() + s * m_;
        double* delta = delta_.data() + s * n_;

        const std::uint32_t cut = edge_id_[static_cast<std::size_t>(parent) * n_ + child];
        delta[parent] -= 2.0 * credit[cut];
        credit[cut] = 0.0;

        clear_row(marked_.data());  // sigma must be redone
        clear_row(ancestors_.data());  // delta must be redone
        clear_row(moved_.data());
        set_bit(marked_.data(), child);
        set_bit(ancestors_.data(), parent);

        moved_list_.clear();
        if (!has_parent(s, child)) {
            set_bit(moved_.data(), child);
            moved_list_.push_back(child);
            const auto top = static_cast<std::size_t>(level[child]);
            for (std::size_t d = top + 1; d <= depth_[s]; ++d) {
                clear_row(scratch_.data());
                for_each_common(moved_.data(), level_set(s, d - 1), words, [&](NodeId x) {
                    const std::uint64_t* nb = row(adj_, x);
                    for (std::size_t w = 0; w < words; ++w)
                        scratch_[w] |= nb[w];
                });
                const std::uint64_t* above = level_set(s, d - 1);
                for_each_common(scratch_.data(), level_set(s, d), words, [&](NodeId y) {
                    const std::uint64_t* nb = row(adj_, y);
                    for (std::size_t w = 0; w < words; ++w)
                        if (nb[w] & above[w] & ~moved_[w])
                            return;
                    set_bit(moved_.data(), y);
                    moved_list_.push_back(y);
                });
            }
        }

        // Moved nodes drop their old DAG edges; their old neighbours one
        // level up or down need fresh dependencies or path counts.
        for (NodeId x : moved_list_) {
            const auto d = static_cast<std::size_t>(level[x]);
            const std::uint64_t* nb = row(adj_, x);
            const std::uint64_t* above = level_set(s, d - 1);
            const std::uint64_t* below = d < depth_[s] ? level_set(s, d + 1) : nullptr;
            for (std::size_t w = 0; w < words; ++w) {
                ancestors_[w] |= nb[w] & above[w];
                if (below)
                    marked_[w] |= nb[w] & below[w];
            }
            auto drop = [&](NodeId z) {
                const std::uint32_t e = edge_id_[static_cast<std::size_t>(x) * n_ + z];
                betweenness_[e] -= credit[e];
                credit[e] = 0.0;
            };
            for_each_common(nb, above, words, [&](NodeId z) {
                delta[z] -= 2.0 * credit[edge_id_[static_cast<std::size_t>(x) * n_ + z]];
                drop(z);
            });
            if (below)
                for_each_common(nb, below, words, drop);
        }
        for (NodeId x : moved_list_) {
            clear_bit(level_set(s, static_cast<std::size_t>(level[x])), x);
            level[x] = -1;
        }

        // Re-level the moved nodes by a bucketed BFS seeded from the rest.
        if (!moved_list_.empty()) {
            const int unreached = static_cast<int>(n_);
            for (NodeId x : moved_list_) {
                int best = unreached;
                for_each_bit(row(adj_, x), words, [&](NodeId y) {
                    if (level[y] >= 0)
                        best = std::min(best, level[y] + 1);
                });
                tentative_[x] = best;
            }
            buckets_.resize(n_ + 1);
            std::size_t last = 0;
            for (NodeId x : moved_list_) {
                if (tentative_[x] < unreached) {
                    const auto d = static_cast<std::size_t>(tentative_[x]);
                    buckets_[d].push_back(x);
                    last = std::max(last, d);
                }
            }
            for (std::size_t d = 1; d <= last; ++d) {
                for (std::size_t i = 0; i < buckets_[d].size(); ++i) {
                    const NodeId x = buckets_[d][i];
                    if (level[x] >= 0 || tentative_[x] != static_cast<int>(d))
                        continue;
                    level[x] = static_cast<int>(d);
                    set_bit(level_set(s, d), x);
                    set_bit(marked_.data(), x);
                    depth_[s] = std::max(depth_[s], d);
                    for_each_common(row(adj_, x), moved_.data(), words, [&](NodeId y) {
                        if (level[y] < 0 && tentative_[y] > static_cast<int>(d) + 1) {
                            tentative_[y] = static_cast<int>(d) + 1;
                            buckets_[d + 1].push_back(y);
                            last = std::max(last, d + 1);
                        }
                    });
                }
                buckets_[d].clear();
            }
            while (depth_[s] > 0 && std::all_of(level_set(s, depth_[s]),
                                                 level_set(s, depth_[s]) + words,
                                                 [](std::uint64_t w) { return w == 0; }))
                --depth_[s];
        }

        // Path counts, top down, spreading to children.
        const std::size_t depth = depth_[s];
        for (std::size_t d = 1; d <= depth; ++d) {
            clear_row(scratch_.data());
            for_each_common(marked_.data(), level_set(s, d), words, [&](NodeId y) {
                sigma[y] = path_count(s, y, d);
                const std::uint64_t* nb = row(adj_, y);
                for (std::size_t w = 0; w < words; ++w)
                    scratch_[w] |= nb[w];
            });
            if (d < depth) {
                const std::uint64_t* below = level_set(s, d + 1);
                for (std::size_t w = 0; w < words; ++w)
                    marked_[w] |= scratch_[w] & below[w];
            }
        }

        // Dependencies, bottom up, spreading to parents.
        for (std::size_t w = 0; w < words; ++w)
            ancestors_[w] |= marked_[w];
        for (std::size_t d = depth; d > 0; --d) {
            const std::uint64_t* above = level_set(s, d - 1);
            for_each_common(ancestors_.data(), level_set(s, d), words, [&](NodeId y) {
                const std::uint64_t* nb = row(adj_, y);
                for (std::size_t w = 0; w < words; ++w)
                    ancestors_[w] |= nb[w] & above[w];
            });
        }
        for (std::size_t d = depth + 1; d-- > 0;)
            for_each_common(ancestors_.data(), level_set(s, d), words,
                            [&](NodeId x) { accumulate(s, x, d, test_bit(marked_.data(), x)); });
    }

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<std::uint32_t> alive_list_;  // unordered ids of surviving edges
    std::vector<std::uint32_t> alive_pos_;
    BitRows adj_;
    std::vector<std::uint32_t> edge_id_;  // n x n
    std::vector<double> betweenness_;
    std::vector<int> component_;
    std::size_t component_count_ = 0;
    std::size_t largest_component_ = 0;
    std::vector<NodeId> stack_;

    // Per-source state, one row per source.
    std::vector<int> level_;        // n x n, -1 when unreachable
    std::vector<std::size_t> depth_;
    BitRows level_sets_;            // n x (n + 1) rows
    std::vector<double> sigma_;     // n x n shortest-path counts
    std::vector<double> delta_;     // n x n dependencies
    std::vector<double> credit_;    // n x m edge credits

    std::vector<std::uint64_t> marked_;
    std::vector<std::uint64_t> ancestors_;
    std::vector<std::uint64_t> scratch_;
    std::vector<std::uint64_t> moved_;
    std::vector<NodeId> moved_list_;
    std::vector<int> tentative_;
    std::vector<std::vector<NodeId>> buckets_;
};

// Calls f with a walker sized for n nodes, reusing one per thread.
template <typename F>
decltype(auto) with_walker(std::size_t n, F&& f) {
    if (n <= 64) {
        thread_local GirvanNewmanWalker<1> walker;
        return f(walker);
    }
    if (n <= 128) {
        thread_local GirvanNewmanWalker<2> walker;
        return f(walker);
    }
    thread_local GirvanNewmanWalker<0> walker;
    return f(walker);
}

// Mean quality over the clusters of `p`, counting edges of the original graph.
std::optional<double> mean_quality(const UndirectedGraph& graph, const Partition& p) {
    if (p.clusters.empty())
        return std::nullopt;
    std::vector<int> label(graph.node_count(), -1);
    for (std::size_t c = 0; c < p.clusters.size(); ++c)
        for (NodeId v : p.clusters[c])
            label[v] = static_cast<int>(c);

    std::vector<std::size_t> internal(p.clusters.size(), 0), external(p.clusters.size(), 0);
    for (const auto& [u, v] : graph.edges()) {
        const int a = label[u], b = label[v];
        if (a >= 0 && a == b) {
            ++internal[a];
            continue;
        }
        if (a >= 0)
            ++external[a];
        if (b >= 0)
            ++external[b];
    }
    double sum = 0.0;
    for (std::size_t c = 0; c < p.clusters.size(); ++c) {
        const auto total = internal[c] + external[c];
        sum += total == 0 ? 0.0 : static_cast<double>(internal[c]) / static_cast<double>(total);
    }
    return sum / static_cast<double>(p.clusters.size());
}

Partition scored_partition(const UndirectedGraph& graph, std::span<const int> components) {
    Partition p = Partition::from_labels(components);
    p.quality = mean_quality(graph, p);
    return p;
}

}  // namespace

double cluster_quality(const UndirectedGraph& graph, std::span<const NodeId> members) {
    std::vector<bool> inside(graph.node_count(), false);
    for (NodeId v : members)
        inside.at(v) = true;
    std::size_t internal = 0, external = 0;
    for (const auto& [u, v] : graph.edges()) {
        if (inside[u] && inside[v])
            ++internal;
        else if (inside[u] || inside[v])
            ++external;
    }
    if (internal + external == 0)
        return 0.0;
    return static_cast<double>(internal) / static_cast<double>(internal + external);
}

std::vector<double> edge_betweenness(const UndirectedGraph& graph) {
    return with_walker(graph.node_count(), [&](auto& walker) {
        walker.reset(graph);
        const auto b = walker.betweenness();
        return std::vector<double>(b.begin(), b.end());
    });
}

std::vector<GirvanNewmanCandidate> girvan_newman_partitions(const UndirectedGraph& graph) {
    std::vector<GirvanNewmanCandidate> out;
    with_walker(graph.node_count(), [&](auto& walker) {
        walker.reset(graph);
        out.push_back({0, std::nullopt, scored_partition(graph, walker.components())});
        for (std::size_t removals = 1; !walker.done(); ++removals) {
            const auto [edge, split] = walker.remove_top_edge();
            if (split)
                out.push_back({removals, edge, scored_partition(graph, walker.components())});
            else
                out.push_back({removals, edge, out.back().partition});
        }
    });
    return out;
}

namespace {

Partition search_best_partition(const UndirectedGraph& graph, const ClusteringOptions& options) {
    const std::size_t n = graph.node_count();
    struct Best {
        double quality;
        std::vector<int> labels;
    };
    std::optional<Best> best_allowed, best_excluded;
    std::vector<std::size_t> size, internal, external;

    // Scores the components as a candidate partition without building it.
    // Component ids follow the smallest member, matching cluster order.
    auto consider = [&](std::span<const int> components) {
        const std::size_t count =
            static_cast<std::size_t>(*std::max_element(components.begin(), components.end())) + 1;
        size.assign(count, 0);
        internal.assign(count, 0);
        external.assign(count, 0);
        for (int c : components)
            ++size[static_cast<std::size_t>(c)];
        for (const auto& [u, v] : graph.edges()) {
            const auto a = static_cast<std::size_t>(components[u]);
            const auto b = static_cast<std::size_t>(components[v]);
            if (a == b) {
                ++internal[a];
            } else {
                ++external[a];
                ++external[b];
            }
        }
        std::size_t clusters = 0, largest = 0;
        double sum = 0.0;
        for (std::size_t c = 0; c < count; ++c) {
            if (size[c] < kMinClusterSize)
                continue;
            ++clusters;
            largest = std::max(largest, size[c]);
            const auto total = internal[c] + external[c];
            sum += total == 0 ? 0.0 : static_cast<double>(internal[c]) / static_cast<double>(total);
        }
        if (clusters == 0)
            return;
        const double quality = sum / static_cast<double>(clusters);
        const bool excluded =
            clusters == 1 && static_cast<double>(largest) >
                                 options.max_single_cluster_fraction * static_cast<double>(n);
        auto& slot = excluded ? best_excluded : best_allowed;
        if (!slot || quality > slot->quality)
            slot = Best{quality, {components.begin(), components.end()}};
    };

    if (n == 0)
        return Partition::empty(0);
    with_walker(n, [&](auto& walker) {
        walker.reset(graph);
        consider(walker.components());
        while (!walker.done() && !walker.fragmented()) {
            const auto [edge, split] = walker.remove_top_edge();
            if (split)
                consider(walker.components());
        }
    });

    const auto& best = best_allowed ? best_allowed : best_excluded;
    if (!best)
        return Partition::empty(n);
    Partition p = Partition::from_labels(best->labels);
    p.quality = best->quality;
    return p;
}

}  // namespace

Partition best_partition(const UndirectedGraph& graph, const ClusteringOptions& options) {
    // Consecutive simulation steps often leave the mutual-edge graph unchanged.
    struct Memo {
        std::size_t n = 0;
        std::vector<std::pair<NodeId, NodeId>> edges;
        double fraction = 0.0;
        std::optional<Partition> result;
    };
    thread_local Memo memo;
    if (memo.result && memo.n == graph.node_count() &&
        memo.fraction == options.max_single_cluster_fraction && memo.edges == graph.edges())
        return *memo.result;
    Partition p = search_best_partition(graph, options);
    memo = {graph.node_count(), graph.edges(), options.max_single_cluster_fraction, p};
    return p;
}

}  // namespace opinet
