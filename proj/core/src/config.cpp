#include "nwp/config.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace nwp {

using nlohmann::json;

namespace {

void require_keys_in(const json& obj, const std::string& scope,
                     const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.contains(it.key()))
            throw ConfigError("unknown key \"" + scope + it.key() + "\"");
    }
}

double get_number(const json& obj, const std::string& scope, const std::string& key,
                  std::optional<double> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("missing required key \"" + scope + key + "\"");
    }
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError("key \"" + scope + key + "\" must be a number");
    return v.get<double>();
}

long get_integer(const json& obj, const std::string& scope, const std::string& key,
                 std::optional<long> fallback = std::nullopt) {
    if (!obj.contains(key)) {
        if (fallback) return *fallback;
        throw ConfigError("missing required key \"" + scope + key + "\"");
    }
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw ConfigError("key \"" + scope + key + "\" must be an integer");
    return v.get<long>();
}

bool get_bool(const json& obj, const std::string& scope, const std::string& key,
              bool fallback) {
    if (!obj.contains(key)) return fallback;
    const auto& v = obj.at(key);
    if (!v.is_boolean()) throw ConfigError("key \"" + scope + key + "\" must be a boolean");
    return v.get<bool>();
}

ForceProfile parse_force(const json& obj) {
    if (!obj.is_object()) throw ConfigError("key \"scenario.force\" must be an object");
    if (!obj.contains("kind")) throw ConfigError("missing required key \"scenario.force.kind\"");
    const std::string kind = obj.at("kind").get<std::string>();
    const std::string scope = "scenario.force.";
    if (kind == "Constant") {
        require_keys_in(obj, scope, {"kind", "F0"});
        return constant_force(get_number(obj, scope, "F0"));
    }
    if (kind == "Sinusoid") {
        require_keys_in(obj, scope, {"kind", "F0", "Omega", "phi"});
        return sinusoid_force(get_number(obj, scope, "F0"), get_number(obj, scope, "Omega"),
                              get_number(obj, scope, "phi", 0.0));
    }
    if (kind == "PiecewiseLinear") {
        require_keys_in(obj, scope, {"kind", "table"});
        if (!obj.contains("table") || !obj.at("table").is_array())
            throw ConfigError("key \"scenario.force.table\" must be an array of [t, F] pairs");
        std::vector<std::pair<double, double>> table;
        for (const auto& row : obj.at("table")) {
            if (!row.is_array() || row.size() != 2 || !row[0].is_number() || !row[1].is_number())
                throw ConfigError("key \"scenario.force.table\" must hold [t, F] number pairs");
            table.emplace_back(row[0].get<double>(), row[1].get<double>());
        }
        return piecewise_linear_force(std::move(table));
    }
    throw ConfigError("key \"scenario.force.kind\" must be Constant, Sinusoid or PiecewiseLinear");
}

ScenarioParams parse_scenario(const json& root) {
    if (!root.contains("case")) throw ConfigError("missing required key \"case\"");
    const std::string tag = root.at("case").get<std::string>();

    ScenarioParams p;
    if (tag == "FreeAiry")
        p.case_tag = CaseTag::FreeAiry;
    else if (tag == "ForcedAiry")
        p.case_tag = CaseTag::ForcedAiry;
    else if (tag == "SHO")
        p.case_tag = CaseTag::SHO;
    else
        throw ConfigError("key \"case\" must be FreeAiry, ForcedAiry or SHO");

    if (!root.contains("scenario")) throw ConfigError("missing required key \"scenario\"");
    const json& sc = root.at("scenario");
    if (!sc.is_object()) throw ConfigError("key \"scenario\" must be an object");
    const std::string scope = "scenario.";

    switch (p.case_tag) {
    case CaseTag::FreeAiry:
        require_keys_in(sc, scope, {"m", "hbar", "b"});
        p.b = get_number(sc, scope, "b");
        break;
    case CaseTag::ForcedAiry:
        require_keys_in(sc, scope, {"m", "hbar", "b", "force"});
        p.b = get_number(sc, scope, "b");
        if (!sc.contains("force")) throw ConfigError("missing required key \"scenario.force\"");
        p.force = parse_force(sc.at("force"));
        break;
    case CaseTag::SHO:
        require_keys_in(sc, scope, {"m", "hbar", "omega", "A", "theta", "n"});
        p.omega = get_number(sc, scope, "omega");
        p.A = get_number(sc, scope, "A");
        p.theta = get_number(sc, scope, "theta", 0.0);
        p.n = static_cast<int>(get_integer(sc, scope, "n", 0L));
        break;
    }
    p.m = get_number(sc, scope, "m", 1.0);
    p.hbar = get_number(sc, scope, "hbar", 1.0);
    return p;
}

} // namespace

Grid1D RunConfig::make_grid_checked() const { return nwp::make_grid(grid.x_min, grid.x_max, grid.n); }

Window RunConfig::effective_window(const Grid1D& g) const {
    if (window) {
        validate_window(*window, g);
        return *window;
    }
    return inner_window(g, 0.15);
}

std::size_t RunConfig::total_steps() const {
    if (evolution.steps > 1) return evolution.steps;
    const double n = std::round(t_end / evolution.dt);
    if (!(n >= 1.0)) throw std::invalid_argument("run config: t_end must cover at least one step");
    return static_cast<std::size_t>(n);
}

RunConfig parse_run_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("config root must be a JSON object");
    require_keys_in(root, "",
                    {"case", "scenario", "grid", "evolution", "window", "t_end",
                     "sample_every", "output_path", "seed"});

    RunConfig cfg;
    cfg.scenario = parse_scenario(root);

    if (root.contains("grid")) {
        const json& g = root.at("grid");
        require_keys_in(g, "grid.", {"x_min", "x_max", "n"});
        cfg.grid.x_min = get_number(g, "grid.", "x_min", cfg.grid.x_min);
        cfg.grid.x_max = get_number(g, "grid.", "x_max", cfg.grid.x_max);
        cfg.grid.n = static_cast<std::size_t>(
            get_integer(g, "grid.", "n", static_cast<long>(cfg.grid.n)));
    }
    if (root.contains("evolution")) {
        const json& e = root.at("evolution");
        require_keys_in(e, "evolution.", {"dt", "steps", "apodize", "boundary_margin"});
        cfg.evolution.dt = get_number(e, "evolution.", "dt", cfg.evolution.dt);
        cfg.evolution.steps = static_cast<std::size_t>(get_integer(e, "evolution.", "steps", 1L));
        cfg.evolution.apodize = get_bool(e, "evolution.", "apodize", cfg.evolution.apodize);
        cfg.evolution.boundary_margin =
            get_number(e, "evolution.", "boundary_margin", cfg.evolution.boundary_margin);
    }
    if (root.contains("window")) {
        const json& w = root.at("window");
        require_keys_in(w, "window.", {"lo", "hi"});
        cfg.window = Window{get_number(w, "window.", "lo"), get_number(w, "window.", "hi")};
    }
    cfg.t_end = get_number(root, "", "t_end", cfg.t_end);
    cfg.sample_every = static_cast<std::size_t>(
        get_integer(root, "", "sample_every", static_cast<long>(cfg.sample_every)));
    if (root.contains("output_path")) {
        if (!root.at("output_path").is_string())
            throw ConfigError("key \"output_path\" must be a string");
        cfg.output_path = root.at("output_path").get<std::string>();
    }
    cfg.seed = get_integer(root, "", "seed", 0L);

    if (cfg.sample_every < 1) throw std::invalid_argument("run config: sample_every must be >= 1");
    if (!(cfg.t_end > 0.0)) throw std::invalid_argument("run config: t_end must be positive");
    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file \"" + path + "\"");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str());
}

} // namespace nwp
