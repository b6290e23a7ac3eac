#include "opinet/cli.hpp"

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "opinet/clustering.hpp"
#include "opinet/config.hpp"
#include "opinet/data_io.hpp"
#include "opinet/engine.hpp"
#include "opinet/metrics.hpp"
#include "opinet/stats.hpp"

namespace opinet::cli {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

namespace {

struct GlobalOptions {
    std::optional<std::uint64_t> seed;
    std::string out;
    std::size_t threads = 0;
    bool quiet = false;
};

class Logger {
public:
    Logger(std::ostream& err, bool quiet) : err_(err), quiet_(quiet) {}
    template <typename... Args>
    void operator()(const Args&... args) const {
        if (quiet_)
            return;
        err_ << kToolName << ": ";
        (err_ << ... << args);
        err_ << '\n';
    }

private:
    std::ostream& err_;
    bool quiet_;
};

std::string fnv1a64_hex(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read " + path.string());
    std::uint64_t h = 0xcbf29ce484222325ull;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize k = 0; k < in.gcount(); ++k) {
            h ^= static_cast<unsigned char>(buf[k]);
            h *= 0x100000001b3ull;
        }
    }
    std::ostringstream s;
    s << std::hex;
    s.width(16);
    s.fill('0');
    s << h;
    return s.str();
}

ordered_json input_entry(const std::string& role, const fs::path& path) {
    return {{"role", role}, {"path", path.string()}, {"fnv1a64", fnv1a64_hex(path)}};
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    out << text;
    out.flush();
    if (!out)
        throw IoError("write to " + path.string() + " failed");
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir))
        throw IoError("cannot create output directory " + dir.string());
}

SurveyWave read_input_wave(const fs::path& path) {
    if (!fs::is_regular_file(path))
        throw DataError("wave file " + path.string() + " does not exist");
    return load_wave(path);
}

SimulationConfig read_config(const std::string& path, const GlobalOptions& g) {
    if (path.empty())
        throw ConfigError("--config is required");
    SimulationConfig cfg = load_config(path);
    if (g.seed)
        cfg.master_seed = *g.seed;
    cfg.threads = g.threads;
    return cfg;
}

ordered_json seeds_json(const RunResult& r) {
    ordered_json seeds = ordered_json::array();
    for (auto s : r.seeds)
        seeds.push_back(s);
    return seeds;
}

// --- simulate ---------------------------------------------------------------

int cmd_simulate(const std::string& config_path, const std::string& wave_path,
                 const GlobalOptions& g, const Logger& log) {
    const auto started = std::chrono::steady_clock::now();
    const SimulationConfig cfg = read_config(config_path, g);
    const SurveyWave wave = read_input_wave(wave_path);
    const DynamicNetwork initial = wave_to_network(wave, cfg.params.bounds);

    if (g.out.empty())
        throw ConfigError("--out is required");
    const fs::path out_dir = g.out;
    ensure_directory(out_dir);

    log("simulate: ", initial.size(), " nodes, ", cfg.replicates, " replicates x ", cfg.horizon,
        " steps");
    const RunResult result = run(initial, cfg);
    write_series(result, out_dir / "series.csv");

    ordered_json manifest;
    manifest["tool"] = kToolName;
    manifest["version"] = kToolVersion;
    manifest["command"] = "simulate";
    manifest["config"] = config_to_json(cfg);
    manifest["master_seed"] = cfg.master_seed;
    manifest["replicate_seeds"] = seeds_json(result);
    manifest["inputs"] = {input_entry("config", config_path), input_entry("wave", wave_path)};
    manifest["outputs"] = {"series.csv"};
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    log("simulate: wrote ", (out_dir / "series.csv").string(), " in ", elapsed.count(), " s");
    return kOk;
}

// --- sweep ------------------------------------------------------------------

std::pair<SweepParameter, std::vector<double>> parse_vary(const std::string& spec) {
    const auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw ConfigError("--vary must look like name=v1,v2,...");
    const auto param = parse_sweep_parameter(spec.substr(0, eq));
    if (!param)
        throw ConfigError("--vary parameter '" + spec.substr(0, eq) + "' is not one of w, k, c");
    std::vector<double> values;
    std::stringstream list(spec.substr(eq + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size())
                throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("--vary value '" + item + "' is not a number");
        }
    }
    if (values.empty())
        throw ConfigError("--vary lists no values");
    return {*param, values};
}

int cmd_sweep(const std::string& config_path, const std::string& wave_path,
              const std::string& vary_spec, const GlobalOptions& g, const Logger& log) {
    const auto started = std::chrono::steady_clock::now();
    const SimulationConfig cfg = read_config(config_path, g);
    const auto [param, values] = parse_vary(vary_spec);
    const SurveyWave wave = read_input_wave(wave_path);
    const DynamicNetwork initial = wave_to_network(wave, cfg.params.bounds);

    if (g.out.empty())
        throw ConfigError("--out is required");
    const fs::path out_dir = g.out;
    ensure_directory(out_dir);

    log("sweep: ", to_string(param), " over ", values.size(), " values");
    std::vector<std::pair<double, RunResult>> results;
    try {
        results = sweep(initial, cfg, param, values);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }

    ordered_json points = ordered_json::array();
    for (const auto& [value, result] : results) {
        const std::string name =
            "series_" + std::string(to_string(param)) + "_" + format_double(value) + ".csv";
        write_series(result, out_dir / name);
        points.push_back({{"value", value}, {"series", name}});
        log("sweep: wrote ", (out_dir / name).string());
    }

    ordered_json manifest;
    manifest["tool"] = kToolName;
    manifest["version"] = kToolVersion;
    manifest["command"] = "sweep";
    manifest["config"] = config_to_json(cfg);
    manifest["master_seed"] = cfg.master_seed;
    manifest["replicate_seeds"] = seeds_json(results.front().second);
    manifest["vary"] = to_string(param);
    manifest["points"] = points;
    manifest["inputs"] = {input_entry("config", config_path), input_entry("wave", wave_path)};
    write_text(out_dir / "manifest.json", manifest.dump(2) + "\n");

    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    log("sweep: finished in ", elapsed.count(), " s");
    return kOk;
}

// --- cluster ----------------------------------------------------------------

std::string joined_ids(const std::vector<std::int64_t>& ids, std::span<const NodeId> nodes) {
    std::string s;
    for (NodeId v : nodes) {
        if (!s.empty())
            s += ' ';
        s += std::to_string(ids[v]);
    }
    return s;
}

int cmd_cluster(const std::string& wave_path, std::ostream& out) {
    const SurveyWave wave = read_input_wave(wave_path);
    const DynamicNetwork net = wave_to_network(wave);
    const UndirectedGraph graph = undirected_projection(net);
    const Partition p = best_partition(graph);
    const auto ids = wave.node_ids();
    const MetricsRow row = metrics_row(net, p, 0);

    auto opt = [](const std::optional<double>& x) { return x ? format_double(*x) : std::string{}; };

    out << "# wave," << wave.label << '\n';
    out << "cluster,size,quality,cluster_opinion,opinion_spread,inner_connectivity,members\n";
    for (std::size_t c = 0; c < p.clusters.size(); ++c) {
        const auto& members = p.clusters[c];
        out << c << ',' << members.size() << ',' << format_double(cluster_quality(graph, members))
            << ',' << format_double(cluster_opinion(net, members)) << ','
            << format_double(opinion_spread(net, members)) << ','
            << format_double(inner_connectivity(net, members)) << ',' << joined_ids(ids, members)
            << '\n';
    }
    out << "average," << opt(row.avg_cluster_size) << ',' << opt(p.quality) << ','
        << opt(row.avg_cluster_opinion) << ',' << opt(row.avg_opinion_spread) << ','
        << opt(row.avg_inner_connectivity) << ",\n";
    out << "unclustered," << p.unclustered.size() << ",,,,," << joined_ids(ids, p.unclustered)
        << '\n';
    return kOk;
}

// --- validate ---------------------------------------------------------------

std::map<std::string, std::size_t> parse_mapping(const std::string& spec) {
    std::map<std::string, std::size_t> mapping;
    std::stringstream list(spec);
    std::string item;
    while (std::getline(list, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("--mapping entries must look like label=step, got '" + item + "'");
        try {
            std::size_t used = 0;
            const std::string step = item.substr(eq + 1);
            const unsigned long value = std::stoul(step, &used);
            if (used != step.size())
                throw std::invalid_argument(step);
            mapping[item.substr(0, eq)] = value;
        } catch (const std::exception&) {
            throw ConfigError("--mapping step in '" + item + "' is not a non-negative integer");
        }
    }
    return mapping;
}

// "YYYY.MM" -> absolute month count.
std::optional<double> label_months(const std::string& label) {
    const auto dot = label.find('.');
    if (dot == std::string::npos)
        return std::nullopt;
    try {
        std::size_t a = 0, b = 0;
        const int year = std::stoi(label.substr(0, dot), &a);
        const int month = std::stoi(label.substr(dot + 1), &b);
        if (a != dot || b != label.size() - dot - 1 || month < 1 || month > 12)
            return std::nullopt;
        return year * 12.0 + (month - 1);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

struct ObservedWave {
    std::string label;
    std::size_t step = 0;
    double time = 0.0;
    DynamicNetwork net;
    Partition partition;
    MetricsRow row;
};

int cmd_validate(const std::string& series_path, const std::vector<std::string>& wave_paths,
                 const std::string& mapping_spec, const std::string& time_coding,
                 const std::string& regression, std::ostream& out) {
    if (!fs::is_regular_file(series_path))
        throw DataError("series file " + series_path + " does not exist");
    if (wave_paths.empty())
        throw ConfigError("--waves lists no files");
    if (time_coding != "months" && time_coding != "steps")
        throw ConfigError("--time-coding must be months or steps");
    if (regression != "pooled" && regression != "averaged")
        throw ConfigError("--regression must be pooled or averaged");

    const auto mapping = parse_mapping(mapping_spec);
    std::map<std::size_t, SeriesRecord> model;
    for (const auto& rec : load_series(series_path))
        if (!rec.replicate)
            model[rec.t] = rec;

    std::vector<ObservedWave> observed;
    bool months_ok = time_coding == "months";
    for (const auto& path : wave_paths) {
        const SurveyWave wave = read_input_wave(path);
        const auto it = mapping.find(wave.label);
        if (it == mapping.end())
            throw DataError("wave label '" + wave.label + "' (" + path + ") has no step mapping");
        if (!model.contains(it->second))
            throw DataError("series has no mean row at step " + std::to_string(it->second) +
                            " mapped from '" + wave.label + "'");
        ObservedWave ow;
        ow.label = wave.label;
        ow.step = it->second;
        ow.net = wave_to_network(wave);
        ow.partition = best_partition(undirected_projection(ow.net));
        ow.row = metrics_row(ow.net, ow.partition, ow.step);
        const auto months = label_months(wave.label);
        months_ok = months_ok && months.has_value();
        ow.time = months.value_or(0.0);
        observed.push_back(std::move(ow));
    }
    double origin = observed.front().time;
    for (const auto& ow : observed)
        origin = std::min(origin, ow.time);
    for (auto& ow : observed)
        ow.time = months_ok ? ow.time - origin : static_cast<double>(ow.step);

    struct Metric {
        const char* name;
        std::optional<double> MetricsRow::*observed;
        std::optional<double> SeriesRecord::*model;
    };
    const Metric metrics[] = {
        {"avg_cluster_opinion", &MetricsRow::avg_cluster_opinion, &SeriesRecord::avg_cluster_opinion},
        {"avg_opinion_spread", &MetricsRow::avg_opinion_spread, &SeriesRecord::avg_opinion_spread},
        {"avg_inner_connectivity", &MetricsRow::avg_inner_connectivity,
         &SeriesRecord::avg_inner_connectivity},
        {"avg_cluster_size", &MetricsRow::avg_cluster_size, &SeriesRecord::avg_cluster_size},
    };

    out << "# percent_error\n";
    out << "label,step,metric,model,data,percent_error\n";
    std::map<std::string, std::pair<double, std::size_t>> totals;
    for (const auto& ow : observed) {
        const SeriesRecord& rec = model.at(ow.step);
        for (const auto& m : metrics) {
            const auto data = ow.row.*m.observed;
            const auto value = rec.*m.model;
            std::optional<double> err;
            if (data && value)
                err = percent_error(*value, *data);
            out << ow.label << ',' << ow.step << ',' << m.name << ','
                << (value ? format_double(*value) : "") << ','
                << (data ? format_double(*data) : "") << ','
                << (err ? format_double(*err) : "") << '\n';
            if (err) {
                totals[m.name].first += *err;
                ++totals[m.name].second;
            }
        }
    }

    out << "# mean_percent_error\n";
    out << "metric,mean_percent_error,points\n";
    for (const auto& m : metrics) {
        const auto [sum, count] = totals[m.name];
        out << m.name << ',' << (count ? format_double(sum / static_cast<double>(count)) : "") << ','
            << count << '\n';
    }

    out << "# trend_test (" << regression << ", time in " << (months_ok ? "months" : "steps")
        << ")\n";
    out << "metric,direction,slope,t_statistic,p_value,n\n";
    for (std::size_t k = 0; k < 4; ++k) {
        std::vector<double> xs, ys;
        for (const auto& ow : observed) {
            if (regression == "averaged") {
                if (const auto v = ow.row.*metrics[k].observed) {
                    xs.push_back(ow.time);
                    ys.push_back(*v);
                }
                continue;
            }
            for (const auto& c : ow.partition.clusters) {
                double v = 0.0;
                switch (k) {
                case 0:
                    v = cluster_opinion(ow.net, c);
                    break;
                case 1:
                    v = opinion_spread(ow.net, c);
                    break;
                case 2:
                    v = inner_connectivity(ow.net, c);
                    break;
                default:
                    v = static_cast<double>(c.size());
                }
                xs.push_back(ow.time);
                ys.push_back(v);
            }
        }
        out << metrics[k].name << ',';
        try {
            const TrendTest probe = trend_test(xs, ys, TrendDirection::Increasing);
            const auto direction =
                probe.slope < 0.0 ? TrendDirection::Decreasing : TrendDirection::Increasing;
            const TrendTest t = trend_test(xs, ys, direction);
            out << (direction == TrendDirection::Increasing ? "increasing" : "decreasing") << ','
                << format_double(t.slope) << ',' << format_double(t.t_statistic) << ','
                << format_double(t.p_value) << ',' << t.n << '\n';
        } catch (const std::invalid_argument&) {
            out << "insufficient,,,," << xs.size() << '\n';
        }
    }
    return kOk;
}

// --- synth ------------------------------------------------------------------

int cmd_synth(const std::string& spec_path, const GlobalOptions& g, const Logger& log) {
    if (!fs::is_regular_file(spec_path))
        throw ConfigError("synth spec " + spec_path + " does not exist");
    SynthSpec spec;
    try {
        spec = load_synth_spec(spec_path);
    } catch (const DataError& e) {
        throw ConfigError(e.what());
    }
    if (g.out.empty())
        throw ConfigError("--out is required");
    const std::uint64_t seed = g.seed.value_or(0);
    const SurveyWave wave = synth_wave(spec, seed);
    const fs::path out_path = g.out;
    if (out_path.has_parent_path())
        ensure_directory(out_path.parent_path());
    save_wave(wave, out_path);
    log("synth: wrote ", wave.opinions.size(), " nodes and ", wave.edges.size(), " edges to ",
        out_path.string());
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Coevolving opinion/friendship network simulator", kToolName};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions g;
    app.add_option("--seed", g.seed, "Master seed (overrides the config)");
    app.add_option("--out", g.out, "Output directory (output file for synth)");
    app.add_option("--threads", g.threads, "Worker threads, 0 = auto")->default_val(0);
    app.add_flag("--quiet", g.quiet, "Suppress progress output");

    std::string config_path, wave_path, vary, series_path, mapping, spec_path;
    std::string time_coding = "months", regression = "pooled";
    std::vector<std::string> wave_paths;

    auto* simulate = app.add_subcommand("simulate", "Run replicated simulations from a wave");
    simulate->add_option("--config", config_path, "JSON config")->required();
    simulate->add_option("--wave", wave_path, "Initial wave file")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Vary one parameter over a list of values");
    sweep_cmd->add_option("--config", config_path, "JSON config")->required();
    sweep_cmd->add_option("--wave", wave_path, "Initial wave file")->required();
    sweep_cmd->add_option("--vary", vary, "name=v1,v2,... with name in {w, k, c}")->required();

    auto* cluster = app.add_subcommand("cluster", "Cluster a wave and print its metrics");
    cluster->add_option("--wave", wave_path, "Wave file")->required();

    auto* validate = app.add_subcommand("validate", "Compare a series with observed waves");
    validate->add_option("--series", series_path, "Series CSV")->required();
    validate->add_option("--waves", wave_paths, "Observed wave files")->required();
    validate->add_option("--mapping", mapping, "label=step,... pairs")->required();
    validate->add_option("--time-coding", time_coding, "months or steps")->default_val("months");
    validate->add_option("--regression", regression, "pooled or averaged")->default_val("pooled");

    auto* synth = app.add_subcommand("synth", "Generate a planted-partition wave file");
    synth->add_option("--spec", spec_path, "JSON generator spec")->required();

    std::vector<std::string> argv_storage{kToolName};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_storage)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kConfigError;
    }

    const Logger log(err, g.quiet);
    try {
        if (*simulate)
            return cmd_simulate(config_path, wave_path, g, log);
        if (*sweep_cmd)
            return cmd_sweep(config_path, wave_path, vary, g, log);
        if (*cluster)
            return cmd_cluster(wave_path, out);
        if (*validate)
            return cmd_validate(series_path, wave_paths, mapping, time_coding, regression, out);
        if (*synth)
            return cmd_synth(spec_path, g, log);
    } catch (const ConfigError& e) {
        err << kToolName << ": config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const DataError& e) {
        err << kToolName << ": data error: " << e.what() << '\n';
        return kDataError;
    } catch (const IoError& e) {
        err << kToolName << ": I/O error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << kToolName << ": error: " << e.what() << '\n';
        return kDataError;
    }
    return kConfigError;
}

}  // namespace opinet::cli
