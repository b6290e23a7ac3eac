#include <gtest/gtest.h>

#include "opinet/engine.hpp"
#include "test_util.hpp"

namespace opinet {
namespace {

DynamicNetwork fixture(std::uint64_t seed = 1) {
    RandomStream rng(seed);
    return testing::random_network(rng, 24, 0.2);
}

SimulationConfig small_config() {
    SimulationConfig cfg;
    cfg.horizon = 8;
    cfg.replicates = 4;
    cfg.master_seed = 77;
    return cfg;
}

TEST(ReplicateSeed, IsTheDocumentedMix) {
    EXPECT_EQ(replicate_seed(5, 3), mix64(mix64(5) ^ 3));
    EXPECT_NE(replicate_seed(5, 3), replicate_seed(5, 4));
    EXPECT_NE(replicate_seed(5, 3), replicate_seed(6, 3));
}

TEST(RecordedSteps, IncludesTheLastStep) {
    EXPECT_EQ(recorded_steps(5, 1), (std::vector<std::size_t>{0, 1, 2, 3, 4, 5}));
    EXPECT_EQ(recorded_steps(7, 3), (std::vector<std::size_t>{0, 3, 6, 7}));
    EXPECT_EQ(recorded_steps(0, 4), (std::vector<std::size_t>{0}));
}

TEST(Run, IsDeterministic) {
    const auto net = fixture();
    const auto cfg = small_config();
    EXPECT_EQ(run(net, cfg), run(net, cfg));
}

TEST(Run, DoesNotDependOnThreadCount) {
    const auto net = fixture();
    auto cfg = small_config();
    const auto serial = run(net, cfg);
    for (std::size_t threads : {2u, 3u, 8u, 0u}) {
        cfg.threads = threads;
        EXPECT_EQ(run(net, cfg), serial) << threads << " threads";
    }
}

TEST(Run, ReplicatesUseDerivedSeeds) {
    const auto net = fixture();
    const auto cfg = small_config();
    const auto result = run(net, cfg);
    ASSERT_EQ(result.seeds.size(), cfg.replicates);
    for (std::size_t r = 0; r < cfg.replicates; ++r) {
        EXPECT_EQ(result.seeds[r], replicate_seed(cfg.master_seed, r));
        EXPECT_EQ(result.per_replicate[r], run_replicate(net, cfg, result.seeds[r]));
    }
}

TEST(Run, ZeroHorizonRecordsTheClusteredInitialState) {
    const auto net = fixture();
    auto cfg = small_config();
    cfg.horizon = 0;
    const auto result = run(net, cfg);
    const auto state = initial_state(net, cfg.params);
    const auto expected = metrics_row(state.net, state.partition, 0);
    ASSERT_EQ(result.mean_series.size(), 1u);
    for (const auto& series : result.per_replicate) {
        ASSERT_EQ(series.size(), 1u);
        EXPECT_EQ(series[0], expected);
    }
}

TEST(Run, InitialRowIsSharedByAllReplicates) {
    const auto result = run(fixture(2), small_config());
    for (const auto& series : result.per_replicate)
        EXPECT_EQ(series.front(), result.per_replicate.front().front());
}

TEST(Run, MetricsEveryThinsTheSeries) {
    auto cfg = small_config();
    cfg.metrics_every = 3;
    const auto result = run(fixture(), cfg);
    std::vector<std::size_t> ts;
    for (const auto& row : result.mean_series)
        ts.push_back(row.t);
    EXPECT_EQ(ts, recorded_steps(cfg.horizon, 3));
}

TEST(MeanSeries, SkipsUndefinedRows) {
    MetricsRow a;
    a.t = 3;
    a.cluster_count = 2;
    a.avg_cluster_opinion = 1.0;
    a.avg_opinion_spread = 0.5;
    a.avg_inner_connectivity = 0.25;
    a.avg_cluster_size = 4.0;
    MetricsRow b = a;
    b.avg_cluster_opinion = 2.0;
    b.cluster_count = 1;
    MetricsRow undefined;
    undefined.t = 3;

    const auto means = mean_series({{a}, {b}, {undefined}});
    ASSERT_EQ(means.size(), 1u);
    EXPECT_EQ(means[0].t, 3u);
    EXPECT_EQ(means[0].defined_count, 2u);
    EXPECT_EQ(*means[0].avg_cluster_opinion, 1.5);
    EXPECT_EQ(*means[0].avg_opinion_spread, 0.5);
    EXPECT_EQ(means[0].cluster_count, 1.0);

    const auto none = mean_series({{undefined}});
    EXPECT_EQ(none[0].defined_count, 0u);
    EXPECT_FALSE(none[0].avg_cluster_opinion);
}

TEST(Sweep, HoldsEverythingButTheVariedParameter) {
    const auto net = fixture();
    const auto base = small_config();
    const auto results = sweep(net, base, SweepParameter::W, {1.0, 5.0});
    ASSERT_EQ(results.size(), 2u);
    auto cfg = base;
    cfg.params.w = 1.0;
    EXPECT_EQ(results[0].first, 1.0);
    EXPECT_EQ(results[0].second, run(net, cfg));
    EXPECT_EQ(results[1].second.seeds, results[0].second.seeds);
}

TEST(Sweep, RejectsIllegalValuesByName) {
    const auto net = fixture();
    try {
        sweep(net, small_config(), SweepParameter::C, {0.1, 0.7});
        FAIL() << "expected rejection";
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("c=0.7"), std::string::npos) << e.what();
    }
    EXPECT_THROW(sweep(net, small_config(), SweepParameter::KAmp, {0.5}), std::invalid_argument);
    EXPECT_THROW(sweep(net, small_config(), SweepParameter::W, {0.0}), std::invalid_argument);
}

TEST(SweepParameter, Parsing) {
    EXPECT_EQ(parse_sweep_parameter("w"), SweepParameter::W);
    EXPECT_EQ(parse_sweep_parameter("k"), SweepParameter::KAmp);
    EXPECT_EQ(parse_sweep_parameter("k_amp"), SweepParameter::KAmp);
    EXPECT_EQ(parse_sweep_parameter("c"), SweepParameter::C);
    EXPECT_FALSE(parse_sweep_parameter("alpha"));
    EXPECT_EQ(to_string(SweepParameter::KAmp), "k_amp");
}

TEST(SimulationConfig, Validation) {
    auto cfg = small_config();
    EXPECT_NO_THROW(cfg.validate());
    cfg.replicates = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.metrics_every = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = small_config();
    cfg.recluster_interval = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace opinet
