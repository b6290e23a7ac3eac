// Acceptance run: one PASS/FAIL line per criterion. Exit status is non-zero
// when any criterion fails.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "opinet/clustering.hpp"
#include "opinet/config.hpp"
#include "opinet/data_io.hpp"
#include "opinet/dynamics.hpp"
#include "opinet/engine.hpp"
#include "opinet/metrics.hpp"
#include "opinet/stats.hpp"
#include "oracles.hpp"
#include "t_oracle.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using namespace opinet;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned tolerances and budgets.
constexpr double kMetricsBudgetSeconds = 1.0;
constexpr double kQualityTolerance = 1e-12;
constexpr double kBetweennessTolerance = 1e-12;
constexpr double kDynamicsBudgetSeconds = 120.0;
constexpr double kBinomialSigmas = 3.0;
constexpr int kCalibrationTrials = 10000;
constexpr double kTrendBudgetSeconds = 600.0;
constexpr double kTrendAlpha = 0.05;
constexpr double kOpinionT50Lo = 0.75, kOpinionT50Hi = 1.25;
constexpr double kConnectivityT50Lo = 0.55, kConnectivityT50Hi = 0.75;
constexpr std::size_t kLongHorizon = 300;
constexpr double kLongSpreadMax = 0.15;
constexpr double kLongOpinionLo = 1.4, kLongOpinionHi = 2.0;
constexpr double kWConvergence = 0.125;
constexpr std::size_t kSweepHorizon = 50;
constexpr std::size_t kKSweepHorizon = 300;
constexpr double kKFlatTolerance = 0.15;
constexpr std::size_t kInstabilityWindow = 20;
constexpr double kInstabilityRatio = 5.0;
constexpr double kTTailTolerance = 1e-10;

// Initial-condition targets the synthetic network is calibrated against.
constexpr double kTargetOpinion = 0.57, kTargetSpread = 0.87, kTargetConnectivity = 0.48,
                 kTargetSize = 8.2;
constexpr double kTargetOpinionTol = 0.06, kTargetSpreadTol = 0.08, kTargetConnectivityTol = 0.05,
                 kTargetSizeTol = 1.0;

struct Verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& why) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << why << "]";
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(double x, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

int failures = 0;

void report(int id, const std::string& name, Verdict& v) {
    std::cout << "criterion " << id << ": " << (v.pass ? "PASS" : "FAIL") << " - " << name << " |"
              << v.detail.str() << std::endl;
    if (!v.pass)
        ++failures;
}

// --- 1 ----------------------------------------------------------------------

void metric_oracles() {
    Verdict v;
    const auto start = Clock::now();
    RandomStream rng(1);
    int graphs = 0, clusters = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng.index(8);
        const auto net = testing::random_network(rng, n, rng.uniform());
        // Alternate between the clustering pipeline and arbitrary groupings.
        Partition p;
        if (trial % 2 == 0) {
            p = best_partition(undirected_projection(net));
        } else {
            std::vector<int> labels(n);
            for (auto& l : labels)
                l = static_cast<int>(rng.index(3)) - 1;
            p = Partition::from_labels(labels);
        }
        ++graphs;
        clusters += static_cast<int>(p.clusters.size());
        if (!(metrics_row(net, p, 0) == testing::brute_metrics_row(net, p, 0)))
            ++mismatches;
    }
    const double elapsed = seconds_since(start);
    v.detail << " graphs=" << graphs << " clusters=" << clusters << " mismatches=" << mismatches
             << " time=" << fmt(elapsed, 3) << "s";
    v.require(mismatches == 0, "metric values differ from the double-loop oracle");
    v.require(elapsed < kMetricsBudgetSeconds, "over the 1 s budget");
    report(1, "metric oracles on 200 random directed graphs", v);
}

// --- 2 ----------------------------------------------------------------------

// Canonical code of a graph on n <= 8 nodes: colour refinement orders the
// vertices into cells, then the smallest upper-triangle bit string over all
// cell-preserving orderings is taken.
using Adj = std::array<std::uint8_t, 8>;

std::uint32_t code_of(const Adj& adj, int n, const std::vector<int>& order) {
    std::uint32_t code = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            code = (code << 1) | ((adj[order[a]] >> order[b]) & 1u);
    return code;
}

std::uint32_t canonical_code(const Adj& adj, int n) {
    std::vector<int> color(n, 0);
    for (;;) {
        std::vector<std::vector<int>> sig(n);
        for (int v = 0; v < n; ++v) {
            sig[v].push_back(color[v]);
            std::vector<int> around;
            for (int u = 0; u < n; ++u)
                if ((adj[v] >> u) & 1u)
                    around.push_back(color[u]);
            std::sort(around.begin(), around.end());
            sig[v].insert(sig[v].end(), around.begin(), around.end());
        }
        std::vector<std::vector<int>> distinct(sig);
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v)
            next[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) -
                                       distinct.begin());
        const int before = *std::max_element(color.begin(), color.end());
        const int after = *std::max_element(next.begin(), next.end());
        color = next;
        if (after == before)
            break;
    }
    std::vector<std::vector<int>> cells(n);
    for (int v = 0; v < n; ++v)
        cells[color[v]].push_back(v);
    std::erase_if(cells, [](const auto& c) { return c.empty(); });

    std::uint32_t best = UINT32_MAX;
    std::vector<int> order;
    std::function<void(std::size_t)> place = [&](std::size_t c) {
        if (c == cells.size()) {
            best = std::min(best, code_of(adj, n, order));
            return;
        }
        auto cell = cells[c];
        std::sort(cell.begin(), cell.end());
        do {
            order.insert(order.end(), cell.begin(), cell.end());
            place(c + 1);
            order.resize(order.size() - cell.size());
        } while (std::next_permutation(cell.begin(), cell.end()));
    };
    place(0);
    return best;
}

Adj decode(std::uint32_t code, int n) {
    Adj adj{};
    int bit = n * (n - 1) / 2 - 1;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b, --bit)
            if ((code >> bit) & 1u) {
                adj[a] |= static_cast<std::uint8_t>(1u << b);
                adj[b] |= static_cast<std::uint8_t>(1u << a);
            }
    return adj;
}

// One representative of every isomorphism class of graphs on n nodes.
std::vector<Adj> all_graphs(int n) {
    std::vector<Adj> out;
    std::unordered_set<std::uint32_t> level{canonical_code(Adj{}, n)};
    while (!level.empty()) {
        std::unordered_set<std::uint32_t> next;
        for (std::uint32_t code : level) {
            const Adj adj = decode(code, n);
            out.push_back(adj);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b) {
                    if ((adj[a] >> b) & 1u)
                        continue;
                    Adj more = adj;
                    more[a] |= static_cast<std::uint8_t>(1u << b);
                    more[b] |= static_cast<std::uint8_t>(1u << a);
                    next.insert(canonical_code(more, n));
                }
        }
        level = std::move(next);
    }
    return out;
}

UndirectedGraph to_graph(const Adj& adj, int n) {
    UndirectedGraph g(static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if ((adj[a] >> b) & 1u)
                g.add_edge(static_cast<NodeId>(a), static_cast<NodeId>(b));
    return g;
}

void clustering_recovery() {
    Verdict v;

    // Two 5-cliques joined by one bridge.
    UndirectedGraph two(10);
    testing::add_clique(two, {0, 1, 2, 3, 4});
    testing::add_clique(two, {5, 6, 7, 8, 9});
    two.add_edge(4, 5);
    const Partition p2 = best_partition(two);
    const std::vector<Cluster> planted2{{0, 1, 2, 3, 4}, {5, 6, 7, 8, 9}};
    v.require(p2.clusters == planted2, "two-clique clusters not recovered");
    double worst_m = 0.0;
    for (const auto& c : p2.clusters)
        worst_m = std::max(worst_m, std::fabs(cluster_quality(two, c) - 10.0 / 11.0));
    v.require(worst_m <= kQualityTolerance, "two-clique m differs from 10/11");

    // Three separate cliques of sizes 4, 5 and 6, plus a dyad and an isolated node.
    UndirectedGraph three(18);
    testing::add_clique(three, {0, 1, 2, 3});
    testing::add_clique(three, {4, 5, 6, 7, 8});
    testing::add_clique(three, {9, 10, 11, 12, 13, 14});
    three.add_edge(15, 16);
    const Partition p3 = best_partition(three);
    const std::vector<Cluster> planted3{{0, 1, 2, 3}, {4, 5, 6, 7, 8}, {9, 10, 11, 12, 13, 14}};
    v.require(p3.clusters == planted3, "three-clique clusters not recovered");
    for (const auto& c : p3.clusters)
        worst_m = std::max(worst_m, std::fabs(cluster_quality(three, c) - 1.0));
    v.require(worst_m <= kQualityTolerance, "three-clique m differs from 1");

    // Betweenness on every graph with at most eight nodes, one per isomorphism class.
    std::size_t classes = 0, edges = 0;
    double worst_b = 0.0;
    std::ostringstream counts;
    for (int n = 1; n <= 8; ++n) {
        const auto graphs = all_graphs(n);
        counts << (n > 1 ? "," : "") << graphs.size();
        for (const auto& adj : graphs) {
            const auto g = to_graph(adj, n);
            const auto fast = edge_betweenness(g);
            const auto oracle = testing::path_counting_betweenness(g);
            for (std::size_t e = 0; e < g.edges().size(); ++e)
                worst_b = std::max(worst_b, std::fabs(fast[e] - oracle.at(g.edges()[e])));
            edges += g.edge_count();
            ++classes;
        }
    }
    // Known numbers of unlabelled graphs on 1..8 nodes.
    v.require(counts.str() == "1,2,4,11,34,156,1044,12346", "graph enumeration incomplete");
    v.require(worst_b <= kBetweennessTolerance, "betweenness differs from path counting");

    v.detail << " two-clique m err=" << worst_m << " graph classes=" << classes << " (" << counts.str()
             << ") edges=" << edges << " max betweenness err=" << worst_b;
    report(2, "clustering recovery and betweenness oracle", v);
}

// --- 3 ----------------------------------------------------------------------

void dynamics_invariants() {
    Verdict v;
    const auto start = Clock::now();
    RandomStream rng(3);
    std::size_t out_of_bounds = 0, widened = 0, steps = 0, diffusion_runs = 0;
    for (int run = 0; run < 100; ++run) {
        ModelParams params;
        params.w = 1.0 + 99.0 * rng.uniform();
        params.c = 0.499 * rng.uniform();
        params.alpha = rng.uniform();
        params.beta = rng.uniform();
        params.connection_mode = rng.uniform() < 0.5 ? ConnectionMode::SingleDraw
                                                     : ConnectionMode::EveryCandidate;
        // Odd runs use pure diffusion, where the range must not widen.
        const bool diffusion = run % 2 == 1;
        if (diffusion) {
            params.k_amp = 1.0;
            params.amp_domain.clear();
            ++diffusion_runs;
        } else {
            params.k_amp = 1.0 + 2.0 * rng.uniform();
            params.amp_domain.clear();
            for (int d = 0; d < 2; ++d) {
                double a = -2.0 + 4.0 * rng.uniform(), b = -2.0 + 4.0 * rng.uniform();
                if (a > b)
                    std::swap(a, b);
                if (a < b)
                    params.amp_domain.push_back({a, b});
            }
        }
        params.validate();

        SimulationState state =
            initial_state(testing::random_network(rng, 30, 0.05 + 0.45 * rng.uniform()), params);
        for (int t = 0; t < 1000; ++t) {
            const auto before = std::minmax_element(state.net.opinions().begin(), state.net.opinions().end());
            const double lo = *before.first, hi = *before.second;
            state = step(state, params, rng);
            ++steps;
            const auto after = std::minmax_element(state.net.opinions().begin(), state.net.opinions().end());
            if (*after.first < -2.0 || *after.second > 2.0)
                ++out_of_bounds;
            if (diffusion && (*after.first < lo || *after.second > hi))
                ++widened;
        }
    }
    const double elapsed = seconds_since(start);
    v.detail << " steps=" << steps << " diffusion runs=" << diffusion_runs
             << " out-of-bounds=" << out_of_bounds << " widened=" << widened
             << " time=" << fmt(elapsed, 1) << "s";
    v.require(out_of_bounds == 0, "opinion left [-2, 2]");
    v.require(widened == 0, "opinion range widened without amplification");
    v.require(elapsed < kDynamicsBudgetSeconds, "over the 2 min budget");
    report(3, "dynamics invariants on 100 random 30-node networks x 1000 steps", v);
}

// --- 4 ----------------------------------------------------------------------

void monte_carlo_calibration() {
    Verdict v;
    const ModelParams params;  // c = 0.245, beta = 0.15
    const Partition p = Partition::from_labels(std::vector<int>{0, 0, 0, 1, 1, 1, -1});
    RandomStream rng(4);
    struct Case {
        const char* name;
        NodeId j;
        double p;
    };
    for (const Case& k : {Case{"same", 1, 0.745}, Case{"other", 3, 0.255}, Case{"none", 6, 0.5}}) {
        v.require(std::fabs(cluster_affinity(p, 0, k.j, params.c) - k.p) < 1e-15, "affinity value");
        // Node 0 has exactly one candidate, or exactly one out-edge.
        DynamicNetwork form(std::vector<double>(7, 0.0));
        form.set_edge(k.j, 0);
        DynamicNetwork brk(std::vector<double>(7, 0.0));
        brk.set_edge(0, k.j);
        int formed = 0, broken = 0;
        for (int t = 0; t < kCalibrationTrials; ++t) {
            formed += update_connections(form, p, params, rng).has_edge(0, k.j);
            broken += !update_connections(brk, p, params, rng).has_edge(0, k.j);
        }
        const double n = kCalibrationTrials;
        for (auto [count, q, what] : {std::tuple{formed, params.beta * k.p, "form"},
                                      std::tuple{broken, params.beta * (1.0 - k.p), "break"}}) {
            const double z = (count - n * q) / std::sqrt(n * q * (1.0 - q));
            v.detail << " " << k.name << "/" << what << " rate=" << fmt(count / n) << " expected="
                     << fmt(q) << " z=" << fmt(z, 2);
            v.require(std::fabs(z) <= kBinomialSigmas, std::string(k.name) + " " + what + " rate");
        }
    }
    report(4, "edge formation/breaking acceptance rates", v);
}

// --- 5, 6, 7 ----------------------------------------------------------------

struct Calibration {
    DynamicNetwork initial;
    SimulationConfig cfg;
};

Calibration load_calibration() {
    const fs::path dir = OPINET_DATA_DIR;
    return {wave_to_network(load_wave(dir / "wave_2008_09.csv")),
            load_config(dir / "config_best_fit.json")};
}

double opinion_at(const RunResult& r, std::size_t t) { return r.mean_series.at(t).avg_cluster_opinion.value(); }
double spread_at(const RunResult& r, std::size_t t) { return r.mean_series.at(t).avg_opinion_spread.value(); }
double connectivity_at(const RunResult& r, std::size_t t) {
    return r.mean_series.at(t).avg_inner_connectivity.value();
}

TrendTest mean_trend(const RunResult& r, std::optional<double> MeanRow::*field, TrendDirection dir) {
    std::vector<double> xs, ys;
    for (const auto& row : r.mean_series)
        if (row.*field) {
            xs.push_back(static_cast<double>(row.t));
            ys.push_back(*(row.*field));
        }
    return trend_test(xs, ys, dir);
}

void trend_reproduction(const Calibration& cal) {
    Verdict v;
    const auto start = Clock::now();
    const RunResult r = run(cal.initial, cal.cfg);
    const double elapsed = seconds_since(start);
    const std::size_t T = cal.cfg.horizon;

    const MeanRow& t0 = r.mean_series.front();
    v.detail << " R=" << cal.cfg.replicates << " T=" << T << " t0: O=" << fmt(*t0.avg_cluster_opinion, 3)
             << " S=" << fmt(*t0.avg_opinion_spread, 3) << " I=" << fmt(*t0.avg_inner_connectivity, 3)
             << " K=" << fmt(*t0.avg_cluster_size, 2);
    v.require(std::fabs(*t0.avg_cluster_opinion - kTargetOpinion) <= kTargetOpinionTol &&
                  std::fabs(*t0.avg_opinion_spread - kTargetSpread) <= kTargetSpreadTol &&
                  std::fabs(*t0.avg_inner_connectivity - kTargetConnectivity) <= kTargetConnectivityTol &&
                  std::fabs(*t0.avg_cluster_size - kTargetSize) <= kTargetSizeTol,
              "initial aggregates off target");
    v.require(T == 50 && cal.cfg.replicates == 50, "configuration is not R=50, T=50");

    const double o = opinion_at(r, T), i = connectivity_at(r, T);
    v.detail << " t" << T << ": O=" << fmt(o, 3) << " I=" << fmt(i, 3);
    v.require(o >= kOpinionT50Lo && o <= kOpinionT50Hi, "cluster opinion outside [0.75, 1.25]");
    v.require(i >= kConnectivityT50Lo && i <= kConnectivityT50Hi, "connectivity outside [0.55, 0.75]");

    const auto to = mean_trend(r, &MeanRow::avg_cluster_opinion, TrendDirection::Increasing);
    const auto ts = mean_trend(r, &MeanRow::avg_opinion_spread, TrendDirection::Decreasing);
    const auto ti = mean_trend(r, &MeanRow::avg_inner_connectivity, TrendDirection::Increasing);
    v.detail << " p(opinion up)=" << to.p_value << " p(spread down)=" << ts.p_value
             << " p(connectivity up)=" << ti.p_value << " time=" << fmt(elapsed, 1) << "s";
    v.require(to.p_value < kTrendAlpha, "opinion trend");
    v.require(ts.p_value < kTrendAlpha, "spread trend");
    v.require(ti.p_value < kTrendAlpha, "connectivity trend");
    v.require(elapsed < kTrendBudgetSeconds, "over the 10 min budget");
    report(5, "trend reproduction from the calibrated initial network", v);
}

void long_horizon(const Calibration& cal) {
    Verdict v;
    SimulationConfig cfg = cal.cfg;
    cfg.horizon = kLongHorizon;
    const RunResult r = run(cal.initial, cfg);
    const double s = spread_at(r, kLongHorizon), o = opinion_at(r, kLongHorizon);
    v.detail << " T=" << kLongHorizon << " final S=" << fmt(s) << " O=" << fmt(o);
    v.require(s < kLongSpreadMax, "spread not below 0.15");
    v.require(o >= kLongOpinionLo && o <= kLongOpinionHi, "opinion outside [1.4, 2.0]");
    report(6, "long-horizon convergence", v);
}

// Standard deviation of the cluster-opinion series over its last `window` rows.
double tail_sd(const std::vector<double>& series, std::size_t window) {
    const auto first = series.end() - static_cast<std::ptrdiff_t>(window);
    double mean = 0.0;
    for (auto it = first; it != series.end(); ++it)
        mean += *it;
    mean /= static_cast<double>(window);
    double ss = 0.0;
    for (auto it = first; it != series.end(); ++it)
        ss += (*it - mean) * (*it - mean);
    return std::sqrt(ss / static_cast<double>(window - 1));
}

// Final-window standard deviation of each replicate's cluster-opinion curve,
// averaged over replicates. Reported alongside the gated mean-curve figure.
double replicate_instability(const RunResult& r) {
    double total = 0.0;
    for (const auto& series : r.per_replicate) {
        std::vector<double> values;
        for (const auto& row : series)
            values.push_back(row.avg_cluster_opinion.value_or(0.0));
        total += tail_sd(values, kInstabilityWindow);
    }
    return total / static_cast<double>(r.per_replicate.size());
}

// Final-window standard deviation of the cross-replicate mean opinion.
double mean_curve_instability(const RunResult& r) {
    std::vector<double> values;
    for (const auto& row : r.mean_series)
        values.push_back(row.avg_cluster_opinion.value_or(0.0));
    return tail_sd(values, kInstabilityWindow);
}

void parameter_signatures(const Calibration& cal) {
    Verdict v;
    SimulationConfig cfg = cal.cfg;
    cfg.horizon = kSweepHorizon;

    // (a) w
    const auto ws = sweep(cal.initial, cfg, SweepParameter::W, {1.0, 5.0, 100.0});
    const double o1 = opinion_at(ws[0].second, kSweepHorizon);
    const double o5 = opinion_at(ws[1].second, kSweepHorizon);
    const double o100 = opinion_at(ws[2].second, kSweepHorizon);
    const double gap = std::fabs(o5 - o100) / std::max(o5, o100);
    v.detail << " (a) t" << kSweepHorizon << " O[w=1,5,100]=" << fmt(o1) << "," << fmt(o5) << ","
             << fmt(o100) << " gap(5,100)=" << fmt(100 * gap, 2) << "%";
    v.require(gap <= kWConvergence, "w=5 and w=100 differ by more than 12.5%");
    v.require(o1 < o5, "w=1 not below w=5");

    // (b) k
    SimulationConfig kcfg = cal.cfg;
    kcfg.horizon = kKSweepHorizon;
    const auto ks = sweep(cal.initial, kcfg, SweepParameter::KAmp, {1.0, 1.05, 2.0});
    const auto& k1 = ks[0].second;
    const double k1_start = opinion_at(k1, 0), k1_end = opinion_at(k1, kKSweepHorizon);
    std::array<double, 3> spread50{};
    for (std::size_t k = 0; k < 3; ++k)
        spread50[k] = spread_at(ks[k].second, kSweepHorizon);
    const double sd105 = mean_curve_instability(ks[1].second), sd2 = mean_curve_instability(ks[2].second);
    v.detail << " (b) T=" << kKSweepHorizon << " k=1 O " << fmt(k1_start) << "->" << fmt(k1_end)
             << " t50 S[k=1,1.05,2]=" << fmt(spread50[0]) << "," << fmt(spread50[1]) << ","
             << fmt(spread50[2]) << " mean-curve sd20[k=1.05,2]=" << fmt(sd105, 5) << "," << fmt(sd2, 5)
             << " per-replicate sd20[k=1.05,2]=" << fmt(replicate_instability(ks[1].second), 5) << ","
             << fmt(replicate_instability(ks[2].second), 5);
    v.require(std::fabs(k1_end - k1_start) <= kKFlatTolerance, "k=1 opinion drifts more than 0.15");
    v.require(spread50[0] < spread50[1] && spread50[0] < spread50[2], "k=1 spread not fastest to decay");
    v.require(sd2 >= kInstabilityRatio * sd105, "k=2 not 5x less stable than k=1.05");

    // (c) c
    const auto cs = sweep(cal.initial, cfg, SweepParameter::C, {0.0, 0.245, 0.49});
    std::array<double, 3> conn{}, spread{};
    for (std::size_t k = 0; k < 3; ++k) {
        conn[k] = connectivity_at(cs[k].second, kSweepHorizon);
        spread[k] = spread_at(cs[k].second, kSweepHorizon);
    }
    v.detail << " (c) t" << kSweepHorizon << " I[c=0,.245,.49]=" << fmt(conn[0]) << "," << fmt(conn[1])
             << "," << fmt(conn[2]) << " S=" << fmt(spread[0]) << "," << fmt(spread[1]) << ","
             << fmt(spread[2]);
    v.require(conn[0] < conn[1] && conn[1] < conn[2], "connectivity not increasing in c");
    v.require(spread[2] < spread[0] && spread[2] < spread[1], "c=.49 spread not fastest to decay");
    report(7, "parameter-study signatures", v);
}

// --- 8 ----------------------------------------------------------------------

void statistics() {
    Verdict v;
    double worst = 0.0;
    int points = 0;
    const double dfs[] = {1, 2, 3, 5, 10};
    for (double df : dfs)
        for (int k = 0; k < 10; ++k) {
            const double t = -4.0 + 9.0 * k / 9.0 + 0.013 * df;
            worst = std::max(worst, std::fabs(t_tail(t, df) - testing::t_tail_by_quadrature(t, df)));
            ++points;
        }
    v.detail << " t_tail grid=" << points << " max err=" << worst;
    v.require(points == 50 && worst <= kTTailTolerance, "t_tail differs from quadrature");

    RandomStream rng(8);
    int exact = 0;
    for (int k = 0; k < 1000; ++k) {
        const double model = 4 * rng.uniform() - 2, data = 0.01 + 2 * rng.uniform();
        exact += *percent_error(model, data) == std::abs(model - data) / data * 100.0;
    }
    v.detail << " percent_error exact=" << exact << "/1000 (1.07 vs 1 -> "
             << fmt(*percent_error(1.07, 1.0), 6) << "%)";
    v.require(exact == 1000 && std::fabs(*percent_error(1.07, 1.0) - 7.0) < 1e-12, "percent_error");

    const std::vector<double> months{0, 1, 3, 6, 7};
    struct Row {
        const char* name;
        std::vector<double> ys;
        TrendDirection dir;
    };
    const Row rows[] = {
        {"opinion", {.57, .67, .68, 1.03, 1.02}, TrendDirection::Increasing},
        {"spread", {.87, .77, .66, .59, .52}, TrendDirection::Decreasing},
        {"connectivity", {.48, .60, .63, .65, .66}, TrendDirection::Increasing},
        {"size", {8.20, 7.12, 5.67, 4.60, 4.67}, TrendDirection::Decreasing},
    };
    for (const auto& row : rows) {
        const auto t = trend_test(months, row.ys, row.dir);
        const bool right_way = row.dir == TrendDirection::Increasing ? t.slope > 0 : t.slope < 0;
        v.detail << " " << row.name << " slope=" << fmt(t.slope) << " p=" << fmt(t.p_value, 5);
        v.require(right_way && t.p_value < kTrendAlpha, std::string(row.name) + " trend direction");
    }
    report(8, "statistics", v);
}

// --- 9 ----------------------------------------------------------------------

int tool(const std::string& args, const fs::path& stdout_file) {
    const std::string cmd = std::string("\"") + OPINET_TOOL + "\" " + args + " --quiet > \"" +
                            stdout_file.string() + "\" 2>/dev/null";
    return std::system(cmd.c_str());
}

std::map<std::string, std::string> tree(const fs::path& dir) {
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::recursive_directory_iterator(dir))
        if (entry.is_regular_file())
            files[fs::relative(entry.path(), dir).string()] = testing::read_file(entry.path());
    return files;
}

void determinism() {
    Verdict v;
    const fs::path data = OPINET_DATA_DIR;
    const fs::path root = testing::scratch_dir("acceptance_determinism");
    testing::write_file(root / "config.json", R"({"w": 5, "k_amp": 1.05, "c": 0.245, "alpha": 0.1,
  "beta": 0.15, "amp_domain": [[-1, 0], [1.5, 2]], "bounds": [-2, 2],
  "horizon": 20, "replicates": 6, "master_seed": 9})");
    const std::string config = (root / "config.json").string();
    const std::string wave = (data / "wave_2008_09.csv").string();
    const std::string spec = (data / "synth_2008_09.json").string();

    int failures_here = 0, compared = 0;
    std::map<std::string, std::string> reference;
    const std::pair<const char*, const char*> variants[] = {{"a", "1"}, {"b", "1"}, {"c", "3"}};
    for (const auto& [tag, threads] : variants) {
        const fs::path out = root / tag;
        fs::create_directories(out);
        const std::string t = std::string(" --threads ") + threads;
        int codes = 0;
        codes |= tool("synth --spec \"" + spec + "\" --seed 18 --out \"" + (out / "synth.csv").string() + "\"" + t,
                      out / "synth.stdout");
        codes |= tool("cluster --wave \"" + wave + "\"" + t, out / "cluster.stdout");
        codes |= tool("simulate --config \"" + config + "\" --wave \"" + wave + "\" --out \"" +
                          (out / "simulate").string() + "\"" + t,
                      out / "simulate.stdout");
        codes |= tool("sweep --config \"" + config + "\" --wave \"" + wave + "\" --vary c=0,0.245,0.49 --out \"" +
                          (out / "sweep").string() + "\"" + t,
                      out / "sweep.stdout");
        codes |= tool("validate --series \"" + (out / "simulate" / "series.csv").string() + "\" --waves \"" +
                          wave + "\" --mapping 2008.09=0" + t,
                      out / "validate.stdout");
        if (codes != 0)
            ++failures_here;
        auto files = tree(out);
        if (reference.empty()) {
            reference = std::move(files);
            continue;
        }
        if (files.size() != reference.size())
            ++failures_here;
        for (const auto& [name, bytes] : reference) {
            ++compared;
            if (!files.contains(name) || files[name] != bytes)
                ++failures_here;
        }
    }
    v.detail << " subcommands=synth,cluster,simulate,sweep,validate runs=3 (threads 1,1,3) files compared="
             << compared << " differences/errors=" << failures_here;
    v.require(failures_here == 0 && compared > 0, "outputs differ between runs");
    report(9, "byte-identical outputs across runs and thread counts", v);
}

}  // namespace

int main() {
    std::cout << "acceptance run" << std::endl;
    metric_oracles();
    clustering_recovery();
    dynamics_invariants();
    monte_carlo_calibration();
    const Calibration cal = load_calibration();
    trend_reproduction(cal);
    long_horizon(cal);
    parameter_signatures(cal);
    statistics();
    determinism();
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
