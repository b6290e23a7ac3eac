#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "opinet/clustering.hpp"
#include "opinet/dynamics.hpp"
#include "opinet/metrics.hpp"

namespace opinet {

struct SimulationConfig {
    ModelParams params;
    std::size_t horizon = 50;
    std::size_t replicates = 50;
    std::uint64_t master_seed = 0;
    std::size_t recluster_interval = 1;
    std::size_t metrics_every = 1;
    ClusteringOptions clustering;
    /// Worker threads for replicates; 0 picks the hardware concurrency.
    /// Results do not depend on it.
    std::size_t threads = 1;

    void validate() const;
};

/// Cross-replicate average at one recorded step. Each average covers only
/// the replicates whose row was defined; `defined_count` records how many.
struct MeanRow {
    std::size_t t = 0;
    std::optional<double> avg_cluster_opinion;
    std::optional<double> avg_opinion_spread;
    std::optional<double> avg_inner_connectivity;
    std::optional<double> avg_cluster_size;
    double cluster_count = 0.0;  ///< over all replicates
    std::size_t defined_count = 0;

    friend bool operator==(const MeanRow&, const MeanRow&) = default;
};

struct RunResult {
    std::vector<std::vector<MetricsRow>> per_replicate;
    std::vector<MeanRow> mean_series;
    std::vector<std::uint64_t> seeds;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Steps recorded for a run: every `metrics_every`-th step plus the last.
std::vector<std::size_t> recorded_steps(std::size_t horizon, std::size_t metrics_every);

/// Metric series of one replicate driven by `seed`.
std::vector<MetricsRow> run_replicate(const DynamicNetwork& initial, const SimulationConfig& cfg,
                                      std::uint64_t seed);

/// Runs every replicate; replicate r uses replicate_seed(master_seed, r).
RunResult run(const DynamicNetwork& initial, const SimulationConfig& cfg);

/// Means of the defined rows at each recorded step.
std::vector<MeanRow> mean_series(const std::vector<std::vector<MetricsRow>>& per_replicate);

enum class SweepParameter { W, KAmp, C };

/// Parses "w", "k"/"k_amp" or "c".
std::optional<SweepParameter> parse_sweep_parameter(std::string_view name);
std::string_view to_string(SweepParameter p);

/// One full run per value with every other setting, the seed included,
/// held at `base`. Throws std::invalid_argument naming an illegal value.
std::vector<std::pair<double, RunResult>> sweep(const DynamicNetwork& initial,
                                                const SimulationConfig& base,
                                                SweepParameter vary,
                                                const std::vector<double>& values);

}  // namespace opinet
