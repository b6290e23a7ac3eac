#include "opinet/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace opinet {

namespace {

using nlohmann::json;

const std::set<std::string> kRequired = {"w",       "k_amp",   "c",        "alpha",
                                         "beta",    "amp_domain", "bounds", "horizon",
                                         "replicates", "master_seed"};
const std::set<std::string> kOptional = {"recluster_interval", "metrics_every", "connection_mode",
                                         "max_single_cluster_fraction"};

template <typename T>
T field(const json& doc, const std::string& key) {
    try {
        return doc.at(key).get<T>();
    } catch (const json::exception&) {
        throw ConfigError("config field '" + key + "' has the wrong type");
    }
}

double pair_bound(const json& pair, std::size_t k, const std::string& key) {
    if (!pair.is_array() || pair.size() != 2 || !pair[k].is_number())
        throw ConfigError("config field '" + key + "' must hold [lo, hi] number pairs");
    return pair[k].get<double>();
}

}  // namespace

SimulationConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw ConfigError("config must be a JSON object");

    for (const auto& [key, value] : doc.items())
        if (!kRequired.contains(key) && !kOptional.contains(key))
            throw ConfigError("unknown config field '" + key + "'");
    for (const auto& key : kRequired)
        if (!doc.contains(key))
            throw ConfigError("config is missing required field '" + key + "'");

    SimulationConfig cfg;
    ModelParams& p = cfg.params;
    p.w = field<double>(doc, "w");
    p.k_amp = field<double>(doc, "k_amp");
    p.c = field<double>(doc, "c");
    p.alpha = field<double>(doc, "alpha");
    p.beta = field<double>(doc, "beta");

    const json& bounds = doc.at("bounds");
    p.bounds = {pair_bound(bounds, 0, "bounds"), pair_bound(bounds, 1, "bounds")};
    const json& domain = doc.at("amp_domain");
    if (!domain.is_array())
        throw ConfigError("config field 'amp_domain' must be a list of [lo, hi] pairs");
    p.amp_domain.clear();
    for (const auto& interval : domain)
        p.amp_domain.push_back(
            {pair_bound(interval, 0, "amp_domain"), pair_bound(interval, 1, "amp_domain")});

    auto count = [&](const std::string& key) {
        const auto& v = doc.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("config field '" + key + "' must be a non-negative integer");
        return v.get<std::size_t>();
    };
    cfg.horizon = count("horizon");
    cfg.replicates = count("replicates");
    cfg.master_seed = field<std::uint64_t>(doc, "master_seed");
    if (doc.contains("recluster_interval"))
        cfg.recluster_interval = count("recluster_interval");
    if (doc.contains("metrics_every"))
        cfg.metrics_every = count("metrics_every");
    if (doc.contains("connection_mode")) {
        const auto mode = field<std::string>(doc, "connection_mode");
        if (mode == "single_draw")
            p.connection_mode = ConnectionMode::SingleDraw;
        else if (mode == "every_candidate")
            p.connection_mode = ConnectionMode::EveryCandidate;
        else
            throw ConfigError("config field 'connection_mode' must be single_draw or every_candidate");
    }
    if (doc.contains("max_single_cluster_fraction"))
        cfg.clustering.max_single_cluster_fraction =
            field<double>(doc, "max_single_cluster_fraction");

    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return cfg;
}

SimulationConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

nlohmann::ordered_json config_to_json(const SimulationConfig& cfg) {
    nlohmann::ordered_json doc;
    const ModelParams& p = cfg.params;
    doc["w"] = p.w;
    doc["k_amp"] = p.k_amp;
    doc["c"] = p.c;
    doc["alpha"] = p.alpha;
    doc["beta"] = p.beta;
    doc["amp_domain"] = nlohmann::ordered_json::array();
    for (const auto& d : p.amp_domain)
        doc["amp_domain"].push_back({d.lo, d.hi});
    doc["bounds"] = {p.bounds.lo, p.bounds.hi};
    doc["horizon"] = cfg.horizon;
    doc["replicates"] = cfg.replicates;
    doc["master_seed"] = cfg.master_seed;
    doc["recluster_interval"] = cfg.recluster_interval;
    doc["metrics_every"] = cfg.metrics_every;
    doc["connection_mode"] =
        p.connection_mode == ConnectionMode::SingleDraw ? "single_draw" : "every_candidate";
    doc["max_single_cluster_fraction"] = cfg.clustering.max_single_cluster_fraction;
    return doc;
}

}  // namespace opinet
