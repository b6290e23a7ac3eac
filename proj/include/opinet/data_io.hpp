#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "opinet/engine.hpp"
#include "opinet/graph.hpp"

namespace opinet {

/// Malformed or invalid input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A file could not be opened, read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMinSurveyOpinion = -2;
inline constexpr int kMaxSurveyOpinion = 2;

/// One observed survey snapshot keyed by the survey's own node ids.
struct SurveyWave {
    std::string label;
    std::map<std::int64_t, int> opinions;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;

    /// Ascending survey ids; position k is node k of wave_to_network().
    std::vector<std::int64_t> node_ids() const;

    friend bool operator==(const SurveyWave&, const SurveyWave&) = default;
};

/// Parses the sectioned wave format:
///
///     # comment
///     [wave]
///     label,2008.09
///     [opinions]
///     node_id,opinion
///     [edges]
///     from_id,to_id
///
/// Throws DataError with "<source>:<line>: ..." on any violation.
SurveyWave parse_wave(std::istream& in, const std::string& source = "<stream>");
SurveyWave load_wave(const std::filesystem::path& path);

void write_wave(const SurveyWave& wave, std::ostream& out);
void save_wave(const SurveyWave& wave, const std::filesystem::path& path);

/// Densely re-indexed network in ascending id order, all edge weights 1.
DynamicNetwork wave_to_network(const SurveyWave& wave, Interval bounds = {});

/// Planted-partition generator settings.
struct SynthSpec {
    std::string label = "synthetic";
    std::size_t n = 0;
    /// Opinion value -> number of nodes holding it; must sum to n.
    std::map<int, std::size_t> histogram;
    /// Sizes of the planted groups, laid out over nodes 0, 1, ...
    std::vector<std::size_t> cluster_sizes;
    double p_in = 0.5;   ///< per-direction edge probability inside a group
    double p_out = 0.0;  ///< per-direction edge probability elsewhere
    /// Chance that a one-way pair is made mutual.
    double reciprocity = 0.0;
    /// 0 scatters opinions at random, 1 sorts them group by group.
    double homophily = 0.5;

    /// Throws DataError naming the inconsistent field.
    void validate() const;
};

/// Reads a SynthSpec from JSON; throws DataError on bad or missing fields.
SynthSpec parse_synth_spec(const std::string& json_text);
SynthSpec load_synth_spec(const std::filesystem::path& path);

/// Deterministic planted-partition wave. The realised opinion histogram
/// equals the requested one exactly.
SurveyWave synth_wave(const SynthSpec& spec, std::uint64_t seed);
DynamicNetwork synth_initial(const SynthSpec& spec, std::uint64_t seed, Interval bounds = {});

/// One parsed line of a series file; `replicate` is empty for mean rows.
struct SeriesRecord {
    std::optional<std::size_t> replicate;
    std::size_t t = 0;
    std::optional<double> avg_cluster_opinion;
    std::optional<double> avg_opinion_spread;
    std::optional<double> avg_inner_connectivity;
    std::optional<double> avg_cluster_size;
    double cluster_count = 0.0;
};

inline constexpr const char* kSeriesHeader =
    "replicate,t,avg_cluster_opinion,avg_opinion_spread,avg_inner_connectivity,"
    "avg_cluster_size,cluster_count";

/// Replicate rows in (replicate, t) order followed by the mean rows, whose
/// replicate field is "mean". Undefined values are empty fields. Numbers use
/// the shortest round-trip decimal form.
void write_series(const RunResult& result, std::ostream& out);
void write_series(const RunResult& result, const std::filesystem::path& path);

std::vector<SeriesRecord> parse_series(std::istream& in, const std::string& source = "<stream>");
std::vector<SeriesRecord> load_series(const std::filesystem::path& path);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);

}  // namespace opinet
