#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gmac/channel.hpp"
#include "gmac/pmf.hpp"
#include "gmac/scalar.hpp"
#include "gmac/sweep.hpp"

namespace gmac {

/// Configuration problems carry the exit-code-2 classification.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace config_detail {

inline int line_of_key(const std::string& text, const std::string& key) {
    const std::string needle = "\"" + key + "\"";
    const std::size_t pos = text.find(needle);
    if (pos == std::string::npos) return -1;
    return 1 + int(std::count(text.begin(), text.begin() + long(pos), '\n'));
}

inline void reject_unknown_keys(const nlohmann::json& obj, const std::vector<std::string>& known,
                                const std::string& where, const std::string& raw) {
    for (const auto& [key, value] : obj.items()) {
        (void)value;
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            const int line = line_of_key(raw, key);
            std::ostringstream msg;
            msg << "config error";
            if (line > 0) msg << " at line " << line;
            msg << ": unknown key '" << key << "' in " << where;
            throw ConfigError(msg.str());
        }
    }
}

/// q-type fields accept a number, "inf" (the Q1 -> infinity flag) or
/// "-inf" (exactly zero interference when units are dB).
inline double parse_variance(const nlohmann::json& v, bool db_units, const std::string& name) {
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        if (s == "inf" || s == "+inf") return kInf;
        if (s == "-inf") return 0.0;
        throw ConfigError("config error: channel field '" + name + "' must be a number, \"inf\" or \"-inf\"");
    }
    if (!v.is_number()) throw ConfigError("config error: channel field '" + name + "' must be numeric");
    const double x = v.get<double>();
    return db_units ? db_to_linear(x) : x;
}

} // namespace config_detail

/// Channel block: values are interpreted per the config's units tag;
/// omitted interference fields default to zero (linear).
inline GaussianChannel parse_channel(const nlohmann::json& j, bool db_units,
                                     const std::string& raw, const GaussianChannel* base = nullptr) {
    using config_detail::parse_variance;
    config_detail::reject_unknown_keys(j, {"p1", "p2", "n1", "n2", "n3", "q0", "q1", "q2"},
                                       "channel", raw);
    GaussianChannel ch;
    if (base) ch = *base;
    else ch.q0 = ch.q1 = ch.q2 = 0.0;
    const bool partial = base != nullptr;
    auto need = [&](const char* name) -> std::optional<double> {
        if (!j.contains(name)) {
            if (partial) return std::nullopt;
            throw ConfigError(std::string("config error: channel field '") + name + "' is required");
        }
        return parse_variance(j.at(name), db_units, name);
    };
    if (auto v = need("p1")) ch.p1 = *v;
    if (auto v = need("p2")) ch.p2 = *v;
    if (auto v = need("n1")) ch.n1 = *v;
    if (auto v = need("n2")) ch.n2 = *v;
    if (auto v = need("n3")) ch.n3 = *v;
    for (const char* name : {"q0", "q1", "q2"}) {
        if (j.contains(name)) {
            const double v = parse_variance(j.at(name), db_units, name);
            if (name[1] == '0') ch.q0 = v;
            else if (name[1] == '1') ch.q1 = v;
            else ch.q2 = v;
        }
    }
    try {
        ch.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    return ch;
}

inline SweepSpec parse_sweep(const nlohmann::json& j, const std::string& raw) {
    config_detail::reject_unknown_keys(
        j,
        {"rho_points", "eta_points", "split_points", "alpha_points", "refine_depth",
         "refine_points", "refine_shrink", "weights", "seed", "workers"},
        "sweep", raw);
    SweepSpec s;
    auto get = [&](const char* k, auto& field) {
        if (j.contains(k)) field = j.at(k).get<std::decay_t<decltype(field)>>();
    };
    get("rho_points", s.rho_points);
    get("eta_points", s.eta_points);
    get("split_points", s.split_points);
    get("alpha_points", s.alpha_points);
    get("refine_depth", s.refine_depth);
    get("refine_points", s.refine_points);
    get("refine_shrink", s.refine_shrink);
    get("weights", s.weights);
    get("seed", s.seed);
    get("workers", s.workers);
    try {
        s.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
    return s;
}

namespace config_detail {

inline void flatten_json_array(const nlohmann::json& j, std::vector<double>& out) {
    if (j.is_array()) {
        for (const auto& e : j) flatten_json_array(e, out);
    } else if (j.is_number()) {
        out.push_back(j.get<double>());
    } else {
        throw ConfigError("config error: pmf tables must contain only numbers");
    }
}

} // namespace config_detail

/// Discrete joint-distribution input: alphabet sizes keyed by variable name
/// plus either a dense row-major tensor (canonical variable order) or the
/// nine factor tables (given-then-target order, arbitrarily nested arrays).
inline JointPmf parse_pmf(const nlohmann::json& j, const std::string& raw) {
    config_detail::reject_unknown_keys(j, {"sizes", "dense", "factors"}, "pmf", raw);
    std::array<int, kPmfVars> sizes;
    sizes.fill(1);
    if (j.contains("sizes")) {
        for (const auto& [key, value] : j.at("sizes").items()) {
            int var = -1;
            for (int v = 0; v < kPmfVars; ++v)
                if (key == kPmfVarNames[v]) var = v;
            if (var < 0) throw ConfigError("config error: unknown pmf variable '" + key + "'");
            sizes[std::size_t(var)] = value.get<int>();
        }
    }
    try {
        if (j.contains("dense") == j.contains("factors"))
            throw ConfigError("config error: pmf needs exactly one of 'dense' or 'factors'");
        if (j.contains("dense")) {
            JointPmf p;
            p.sizes = sizes;
            config_detail::flatten_json_array(j.at("dense"), p.prob);
            p.validate();
            return p;
        }
        const auto& factors = j.at("factors");
        if (!factors.is_array() || factors.size() != 9)
            throw ConfigError("config error: pmf.factors must hold nine tables");
        PmfBuilder b;
        for (int v = 0; v < kPmfVars; ++v) b.size(PmfVar(v), sizes[std::size_t(v)]);
        for (int f = 0; f < 9; ++f) {
            std::vector<double> table;
            config_detail::flatten_json_array(factors.at(std::size_t(f)), table);
            b.factor(f, std::move(table));
        }
        return b.build();
    } catch (const std::domain_error& e) {
        throw ConfigError(std::string("config error: ") + e.what());
    }
}

struct OverlaySpec {
    std::string label;
    std::string model;       // empty = inherit the base model
    GaussianChannel channel; // base channel with overlay overrides applied
};

/// Parsed configuration for the region and sumrate-sir commands, and the
/// optional knobs of verify.
struct RunConfig {
    std::string model = "prop1";
    bool db_units = true;
    GaussianChannel channel;
    bool has_channel = false;
    SweepSpec sweep;
    std::string out_dir = "out";
    std::vector<std::string> formats = {"csv", "json", "svg"};
    std::vector<OverlaySpec> overlays;
    std::vector<double> sir_db;
    std::optional<JointPmf> pmf;

    // verify knobs
    double perturb_a0 = 0.0;
    bool break_markov = false;
};

namespace config_detail {
RunConfig parse_config_object(const nlohmann::json& j, const std::string& raw);
}

inline RunConfig parse_config_text(const std::string& raw) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(raw);
    } catch (const nlohmann::json::parse_error& e) {
        // nlohmann reports "at line L, column C" in the message
        throw ConfigError(std::string("config error: ") + e.what());
    }
    try {
        return config_detail::parse_config_object(j, raw);
    } catch (const nlohmann::json::exception& e) {
        // wrong value types, missing required members and the like
        throw ConfigError(std::string("config error: ") + e.what());
    }
}

inline RunConfig config_detail::parse_config_object(const nlohmann::json& j,
                                                    const std::string& raw) {
    if (!j.is_object()) throw ConfigError("config error: top level must be an object");
    config_detail::reject_unknown_keys(j,
                                       {"model", "units", "channel", "sweep", "out_dir", "formats",
                                        "overlays", "sir_db", "pmf", "perturb_a0", "break_markov"},
                                       "the top-level object", raw);
    RunConfig cfg;
    if (j.contains("units")) {
        const std::string u = j.at("units").get<std::string>();
        if (u == "dB" || u == "db") cfg.db_units = true;
        else if (u == "linear") cfg.db_units = false;
        else throw ConfigError("config error: units must be \"dB\" or \"linear\"");
    }
    if (j.contains("model")) cfg.model = j.at("model").get<std::string>();
    if (j.contains("channel")) {
        cfg.channel = parse_channel(j.at("channel"), cfg.db_units, raw);
        cfg.has_channel = true;
    }
    if (j.contains("sweep")) cfg.sweep = parse_sweep(j.at("sweep"), raw);
    if (j.contains("out_dir")) cfg.out_dir = j.at("out_dir").get<std::string>();
    if (j.contains("formats")) {
        cfg.formats.clear();
        for (const auto& f : j.at("formats")) {
            const std::string s = f.get<std::string>();
            if (s != "csv" && s != "json" && s != "svg")
                throw ConfigError("config error: unknown format '" + s + "'");
            cfg.formats.push_back(s);
        }
    }
    if (j.contains("overlays")) {
        if (!cfg.has_channel)
            throw ConfigError("config error: overlays require a base channel");
        for (const auto& o : j.at("overlays")) {
            config_detail::reject_unknown_keys(o, {"label", "model", "channel"}, "overlay", raw);
            OverlaySpec spec;
            spec.label = o.at("label").get<std::string>();
            if (o.contains("model")) spec.model = o.at("model").get<std::string>();
            spec.channel = o.contains("channel")
                               ? parse_channel(o.at("channel"), cfg.db_units, raw, &cfg.channel)
                               : cfg.channel;
            cfg.overlays.push_back(std::move(spec));
        }
    }
    if (j.contains("sir_db")) {
        const auto& s = j.at("sir_db");
        if (s.is_array()) {
            for (const auto& v : s) cfg.sir_db.push_back(v.get<double>());
        } else {
            config_detail::reject_unknown_keys(s, {"from", "to", "step"}, "sir_db", raw);
            const double from = s.at("from").get<double>();
            const double to = s.at("to").get<double>();
            const double step = s.at("step").get<double>();
            if (step <= 0.0) throw ConfigError("config error: sir_db.step must be > 0");
            for (double v = from; v <= to + 1e-9; v += step) cfg.sir_db.push_back(v);
        }
    }
    if (j.contains("pmf")) cfg.pmf = parse_pmf(j.at("pmf"), raw);
    if (j.contains("perturb_a0")) cfg.perturb_a0 = j.at("perturb_a0").get<double>();
    if (j.contains("break_markov")) cfg.break_markov = j.at("break_markov").get<bool>();
    return cfg;
}

inline RunConfig load_config(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ConfigError("config error: cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_config_text(ss.str());
}

} // namespace gmac
