#include "opinet/engine.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace opinet {

void SimulationConfig::validate() const {
    params.validate();
    if (replicates < 1)
        throw std::invalid_argument("replicates must be >= 1");
    if (recluster_interval < 1)
        throw std::invalid_argument("recluster_interval must be >= 1");
    if (metrics_every < 1)
        throw std::invalid_argument("metrics_every must be >= 1");
}

std::vector<std::size_t> recorded_steps(std::size_t horizon, std::size_t metrics_every) {
    std::vector<std::size_t> steps;
    for (std::size_t t = 0; t <= horizon; t += metrics_every)
        steps.push_back(t);
    if (steps.back() != horizon)
        steps.push_back(horizon);
    return steps;
}

std::vector<MetricsRow> run_replicate(const DynamicNetwork& initial, const SimulationConfig& cfg,
                                      std::uint64_t seed) {
    RandomStream rng(seed);
    SimulationState state = initial_state(initial, cfg.params, cfg.clustering);

    std::vector<MetricsRow> rows;
    rows.push_back(metrics_row(state.net, state.partition, 0));
    for (std::size_t t = 1; t <= cfg.horizon; ++t) {
        const bool recluster = t % cfg.recluster_interval == 0;
        state = step(state, cfg.params, rng, cfg.clustering, recluster);
        if (t % cfg.metrics_every == 0 || t == cfg.horizon)
            rows.push_back(metrics_row(state.net, state.partition, t));
    }
    return rows;
}

std::vector<MeanRow> mean_series(const std::vector<std::vector<MetricsRow>>& per_replicate) {
    std::vector<MeanRow> out;
    if (per_replicate.empty())
        return out;
    const std::size_t steps = per_replicate.front().size();
    out.resize(steps);
    for (std::size_t s = 0; s < steps; ++s) {
        MeanRow& m = out[s];
        m.t = per_replicate.front()[s].t;
        double opinion = 0.0, spread = 0.0, connectivity = 0.0, size = 0.0, count = 0.0;
        for (const auto& series : per_replicate) {
            const MetricsRow& row = series.at(s);
            count += static_cast<double>(row.cluster_count);
            if (!row.defined())
                continue;
            ++m.defined_count;
            opinion += *row.avg_cluster_opinion;
            spread += *row.avg_opinion_spread;
            connectivity += *row.avg_inner_connectivity;
            size += *row.avg_cluster_size;
        }
        m.cluster_count = count / static_cast<double>(per_replicate.size());
        if (m.defined_count == 0)
            continue;
        const double d = static_cast<double>(m.defined_count);
        m.avg_cluster_opinion = opinion / d;
        m.avg_opinion_spread = spread / d;
        m.avg_inner_connectivity = connectivity / d;
        m.avg_cluster_size = size / d;
    }
    return out;
}

RunResult run(const DynamicNetwork& initial, const SimulationConfig& cfg) {
    cfg.validate();
    RunResult result;
    result.seeds.resize(cfg.replicates);
    for (std::size_t r = 0; r < cfg.replicates; ++r)
        result.seeds[r] = replicate_seed(cfg.master_seed, r);
    result.per_replicate.resize(cfg.replicates);

    std::size_t threads = cfg.threads == 0 ? std::thread::hardware_concurrency() : cfg.threads;
    threads = std::clamp<std::size_t>(threads, 1, cfg.replicates);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t r = next++; r < cfg.replicates; r = next++) {
            try {
                result.per_replicate[r] = run_replicate(initial, cfg, result.seeds[r]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t k = 0; k < threads; ++k)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    result.mean_series = mean_series(result.per_replicate);
    return result;
}

std::optional<SweepParameter> parse_sweep_parameter(std::string_view name) {
    if (name == "w")
        return SweepParameter::W;
    if (name == "k" || name == "k_amp")
        return SweepParameter::KAmp;
    if (name == "c")
        return SweepParameter::C;
    return std::nullopt;
}

std::string_view to_string(SweepParameter p) {
    switch (p) {
    case SweepParameter::W:
        return "w";
    case SweepParameter::KAmp:
        return "k_amp";
    case SweepParameter::C:
        return "c";
    }
    return "?";
}

std::vector<std::pair<double, RunResult>> sweep(const DynamicNetwork& initial,
                                                const SimulationConfig& base,
                                                SweepParameter vary,
                                                const std::vector<double>& values) {
    std::vector<SimulationConfig> configs;
    for (double v : values) {
        SimulationConfig cfg = base;
        switch (vary) {
        case SweepParameter::W:
            cfg.params.w = v;
            break;
        case SweepParameter::KAmp:
            cfg.params.k_amp = v;
            break;
        case SweepParameter::C:
            cfg.params.c = v;
            break;
        }
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("sweep value " + std::string(to_string(vary)) + "=" +
                                        std::to_string(v) + " rejected: " + e.what());
        }
        configs.push_back(cfg);
    }

    std::vector<std::pair<double, RunResult>> out;
    for (std::size_t k = 0; k < values.size(); ++k)
        out.emplace_back(values[k], run(initial, configs[k]));
    return out;
}

}  // namespace opinet
