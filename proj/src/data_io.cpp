#include "opinet/data_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

#include "opinet/random.hpp"

namespace opinet {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return fields;
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
    T value{};
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (ec != std::errc{} || ptr != end || s.empty())
        return std::nullopt;
    return value;
}

std::optional<double> parse_optional_double(std::string_view s) {
    if (s.empty())
        return std::nullopt;
    return parse_number<double>(s);
}

class LineError {
public:
    LineError(const std::string& source, std::size_t line) : source_(source), line_(line) {}
    [[noreturn]] void operator()(const std::string& what) const {
        throw DataError(source_ + ":" + std::to_string(line_) + ": " + what);
    }

private:
    const std::string& source_;
    std::size_t line_;
};

std::ifstream open_for_reading(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw IoError("cannot open " + path.string() + " for reading");
    return in;
}

std::ofstream open_for_writing(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    return out;
}

void finish_writing(std::ofstream& out, const std::filesystem::path& path) {
    out.flush();
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

std::string format_optional(const std::optional<double>& x) {
    return x ? format_double(*x) : std::string{};
}

}  // namespace

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return {buf, ptr};
}

std::vector<std::int64_t> SurveyWave::node_ids() const {
    std::vector<std::int64_t> ids;
    ids.reserve(opinions.size());
    for (const auto& [id, opinion] : opinions)
        ids.push_back(id);
    return ids;
}

SurveyWave parse_wave(std::istream& in, const std::string& source) {
    enum class Section { None, Wave, Opinions, Edges };
    Section section = Section::None;
    SurveyWave wave;
    std::set<std::pair<std::int64_t, std::int64_t>> seen_edges;
    std::vector<std::size_t> edge_lines;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const LineError fail(source, line_no);
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        if (line.front() == '[') {
            if (line == "[wave]")
                section = Section::Wave;
            else if (line == "[opinions]")
                section = Section::Opinions;
            else if (line == "[edges]")
                section = Section::Edges;
            else
                fail("unknown section " + std::string(line));
            continue;
        }

        const auto fields = split_fields(line);
        switch (section) {
        case Section::None:
            fail("data before the first section header");
        case Section::Wave:
            if (fields.size() != 2 || fields[0] != "label")
                fail("expected 'label,<text>' in [wave]");
            wave.label = std::string(fields[1]);
            break;
        case Section::Opinions: {
            if (fields.size() != 2)
                fail("expected 'node_id,opinion'");
            const auto id = parse_number<std::int64_t>(fields[0]);
            if (!id || *id < 0)
                fail("invalid node id '" + std::string(fields[0]) + "'");
            const auto opinion = parse_number<int>(fields[1]);
            if (!opinion)
                fail("invalid opinion '" + std::string(fields[1]) + "' for node " + std::to_string(*id));
            if (*opinion < kMinSurveyOpinion || *opinion > kMaxSurveyOpinion)
                fail("opinion " + std::to_string(*opinion) + " of node " + std::to_string(*id) +
                     " is outside [-2, 2]");
            if (!wave.opinions.emplace(*id, *opinion).second)
                fail("duplicate opinion entry for node " + std::to_string(*id));
            break;
        }
        case Section::Edges: {
            if (fields.size() != 2)
                fail("expected 'from_id,to_id'");
            const auto from = parse_number<std::int64_t>(fields[0]);
            const auto to = parse_number<std::int64_t>(fields[1]);
            if (!from || !to || *from < 0 || *to < 0)
                fail("invalid edge endpoints");
            if (*from == *to)
                fail("self-loop on node " + std::to_string(*from));
            if (!seen_edges.emplace(*from, *to).second)
                fail("duplicate edge " + std::to_string(*from) + "->" + std::to_string(*to));
            wave.edges.emplace_back(*from, *to);
            edge_lines.push_back(line_no);
            break;
        }
        }
    }
    if (in.bad())
        throw IoError("read error in " + source);

    for (std::size_t e = 0; e < wave.edges.size(); ++e) {
        const auto [from, to] = wave.edges[e];
        for (auto id : {from, to})
            if (!wave.opinions.contains(id))
                LineError(source, edge_lines[e])("edge endpoint " + std::to_string(id) +
                                                 " has no opinion entry");
    }
    return wave;
}

SurveyWave load_wave(const std::filesystem::path& path) {
    auto in = open_for_reading(path);
    SurveyWave wave = parse_wave(in, path.string());
    if (wave.label.empty())
        wave.label = path.stem().string();
    return wave;
}

void write_wave(const SurveyWave& wave, std::ostream& out) {
    out << "[wave]\nlabel," << wave.label << "\n[opinions]\n";
    for (const auto& [id, opinion] : wave.opinions)
        out << id << ',' << opinion << '\n';
    out << "[edges]\n";
    for (const auto& [from, to] : wave.edges)
        out << from << ',' << to << '\n';
}

void save_wave(const SurveyWave& wave, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    write_wave(wave, out);
    finish_writing(out, path);
}

DynamicNetwork wave_to_network(const SurveyWave& wave, Interval bounds) {
    std::map<std::int64_t, NodeId> index;
    std::vector<double> opinions;
    opinions.reserve(wave.opinions.size());
    for (const auto& [id, opinion] : wave.opinions) {
        index.emplace(id, static_cast<NodeId>(opinions.size()));
        opinions.push_back(static_cast<double>(opinion));
    }
    DynamicNetwork net(std::move(opinions), bounds);
    for (const auto& [from, to] : wave.edges)
        net.set_edge(index.at(from), index.at(to), 1.0);
    return net;
}

void SynthSpec::validate() const {
    std::size_t total = 0;
    for (const auto& [opinion, count] : histogram) {
        if (opinion < kMinSurveyOpinion || opinion > kMaxSurveyOpinion)
            throw DataError("histogram opinion " + std::to_string(opinion) + " is outside [-2, 2]");
        total += count;
    }
    if (total != n)
        throw DataError("histogram sums to " + std::to_string(total) + " but n is " +
                        std::to_string(n));
    const std::size_t planned = std::accumulate(cluster_sizes.begin(), cluster_sizes.end(), std::size_t{0});
    if (planned > n)
        throw DataError("cluster sizes sum to " + std::to_string(planned) + ", more than n = " +
                        std::to_string(n));
    auto probability = [](const char* name, double p) {
        if (!(p >= 0.0 && p <= 1.0))
            throw DataError(std::string(name) + " must lie in [0, 1]");
    };
    probability("p_in", p_in);
    probability("p_out", p_out);
    probability("reciprocity", reciprocity);
    probability("homophily", homophily);
}

SynthSpec parse_synth_spec(const std::string& json_text) {
    using nlohmann::json;
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw DataError(std::string("synth spec is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw DataError("synth spec must be a JSON object");

    auto require = [&](const char* key) -> const json& {
        if (!doc.contains(key))
            throw DataError(std::string("synth spec is missing '") + key + "'");
        return doc.at(key);
    };

    SynthSpec spec;
    try {
        spec.n = require("n").get<std::size_t>();
        for (const auto& [key, count] : require("histogram").items()) {
            const auto opinion = parse_number<int>(key);
            if (!opinion)
                throw DataError("histogram key '" + key + "' is not an integer opinion");
            spec.histogram[*opinion] = count.get<std::size_t>();
        }
        spec.cluster_sizes = require("clusters").get<std::vector<std::size_t>>();
        spec.p_in = require("p_in").get<double>();
        spec.p_out = require("p_out").get<double>();
        spec.label = doc.value("label", spec.label);
        spec.reciprocity = doc.value("reciprocity", spec.reciprocity);
        spec.homophily = doc.value("homophily", spec.homophily);
    } catch (const json::exception& e) {
        throw DataError(std::string("synth spec field has the wrong type: ") + e.what());
    }
    spec.validate();
    return spec;
}

SynthSpec load_synth_spec(const std::filesystem::path& path) {
    auto in = open_for_reading(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_synth_spec(buffer.str());
}

SurveyWave synth_wave(const SynthSpec& spec, std::uint64_t seed) {
    spec.validate();
    RandomStream rng(seed);
    const std::size_t n = spec.n;

    // Opinion multiset in ascending order; each element gets a sort key that
    // blends its rank with noise, and nodes take the elements in key order.
    std::vector<int> pool;
    for (const auto& [opinion, count] : spec.histogram)
        pool.insert(pool.end(), count, opinion);
    std::vector<std::pair<double, std::size_t>> keyed(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double rank = n > 1 ? static_cast<double>(k) / static_cast<double>(n - 1) : 0.0;
        keyed[k] = {spec.homophily * rank + (1.0 - spec.homophily) * rng.uniform(), k};
    }
    std::sort(keyed.begin(), keyed.end());

    SurveyWave wave;
    wave.label = spec.label;
    for (std::size_t v = 0; v < n; ++v)
        wave.opinions.emplace(static_cast<std::int64_t>(v), pool[keyed[v].second]);

    std::vector<int> group(n, -1);
    std::size_t next = 0;
    for (std::size_t g = 0; g < spec.cluster_sizes.size(); ++g)
        for (std::size_t k = 0; k < spec.cluster_sizes[g]; ++k)
            group[next++] = static_cast<int>(g);

    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double p = group[i] >= 0 && group[i] == group[j] ? spec.p_in : spec.p_out;
            bool forward = rng.uniform() < p;
            bool backward = rng.uniform() < p;
            if (forward != backward && rng.uniform() < spec.reciprocity)
                forward = backward = true;
            const auto a = static_cast<std::int64_t>(i), b = static_cast<std::int64_t>(j);
            if (forward)
                edges.emplace_back(a, b);
            if (backward)
                edges.emplace_back(b, a);
        }
    }
    std::sort(edges.begin(), edges.end());
    wave.edges = std::move(edges);
    return wave;
}

DynamicNetwork synth_initial(const SynthSpec& spec, std::uint64_t seed, Interval bounds) {
    return wave_to_network(synth_wave(spec, seed), bounds);
}

void write_series(const RunResult& result, std::ostream& out) {
    out << kSeriesHeader << '\n';
    for (std::size_t r = 0; r < result.per_replicate.size(); ++r) {
        for (const auto& row : result.per_replicate[r]) {
            out << r << ',' << row.t << ',' << format_optional(row.avg_cluster_opinion) << ','
                << format_optional(row.avg_opinion_spread) << ','
                << format_optional(row.avg_inner_connectivity) << ','
                << format_optional(row.avg_cluster_size) << ',' << row.cluster_count << '\n';
        }
    }
    for (const auto& row : result.mean_series) {
        out << "mean," << row.t << ',' << format_optional(row.avg_cluster_opinion) << ','
            << format_optional(row.avg_opinion_spread) << ','
            << format_optional(row.avg_inner_connectivity) << ','
            << format_optional(row.avg_cluster_size) << ',' << format_double(row.cluster_count)
            << '\n';
    }
}

void write_series(const RunResult& result, const std::filesystem::path& path) {
    auto out = open_for_writing(path);
    write_series(result, out);
    finish_writing(out, path);
}

std::vector<SeriesRecord> parse_series(std::istream& in, const std::string& source) {
    std::vector<SeriesRecord> records;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const LineError fail(source, line_no);
        const std::string_view line = trim(raw);
        if (line_no == 1) {
            if (line != kSeriesHeader)
                fail("unexpected series header");
            continue;
        }
        if (line.empty())
            continue;
        const auto fields = split_fields(line);
        if (fields.size() != 7)
            fail("expected 7 fields, found " + std::to_string(fields.size()));

        SeriesRecord rec;
        if (fields[0] != "mean") {
            const auto r = parse_number<std::size_t>(fields[0]);
            if (!r)
                fail("invalid replicate '" + std::string(fields[0]) + "'");
            rec.replicate = *r;
        }
        const auto t = parse_number<std::size_t>(fields[1]);
        if (!t)
            fail("invalid step '" + std::string(fields[1]) + "'");
        rec.t = *t;

        std::optional<double>* targets[] = {&rec.avg_cluster_opinion, &rec.avg_opinion_spread,
                                             &rec.avg_inner_connectivity, &rec.avg_cluster_size};
        for (std::size_t k = 0; k < 4; ++k) {
            *targets[k] = parse_optional_double(fields[2 + k]);
            if (!fields[2 + k].empty() && !*targets[k])
                fail("invalid number '" + std::string(fields[2 + k]) + "'");
        }
        const auto count = parse_number<double>(fields[6]);
        if (!count)
            fail("invalid cluster_count '" + std::string(fields[6]) + "'");
        rec.cluster_count = *count;
        records.push_back(rec);
    }
    if (line_no == 0)
        throw DataError(source + ": empty series file");
    return records;
}

std::vector<SeriesRecord> load_series(const std::filesystem::path& path) {
    auto in = open_for_reading(path);
    return parse_series(in, path.string());
}

}  // namespace opinet
