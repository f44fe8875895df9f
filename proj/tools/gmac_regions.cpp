// Command-line surface: region computations, the sum-rate/SIR sweep, and
// the cross-module verification suite. Emits CSV/JSON data and
// self-contained SVG plots. Exit codes: 0 success, 2 config error,
// 3 model-precondition error, 4 verification failure.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmac/config.hpp"
#include "gmac/io.hpp"
#include "gmac/svg.hpp"
#include "gmac/theorem1.hpp"
#include "gmac/verify.hpp"

namespace fs = std::filesystem;
using namespace gmac;

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitModel = 3;
constexpr int kExitVerify = 4;

std::string slugify(const std::string& label) {
    std::string out;
    bool dash = false;
    for (char c : label) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out += char(std::tolower(static_cast<unsigned char>(c)));
            dash = false;
        } else if (!dash && !out.empty()) {
            out += '-';
            dash = true;
        }
    }
    while (!out.empty() && out.back() == '-') out.pop_back();
    return out.empty() ? "series" : out;
}

int resolve_workers(std::optional<int> flag, const RunConfig& cfg) {
    if (flag) return *flag;
    if (cfg.sweep.workers > 0) return cfg.sweep.workers;
    if (const char* env = std::getenv("GMAC_REGIONS_WORKERS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 0; // library default: hardware concurrency
}

struct OutputSet {
    fs::path dir;
    bool csv = false, json = false, svg = false;
};

OutputSet resolve_outputs(const RunConfig& cfg, const std::string& out_override,
                          const std::string& format_override) {
    OutputSet o;
    o.dir = out_override.empty() ? fs::path(cfg.out_dir) : fs::path(out_override);
    std::vector<std::string> formats = cfg.formats;
    if (!format_override.empty()) {
        formats.clear();
        std::string cur;
        for (char c : format_override + ",") {
            if (c == ',') {
                if (!cur.empty()) formats.push_back(cur);
                cur.clear();
            } else
                cur += c;
        }
    }
    for (const std::string& f : formats) {
        if (f == "csv") o.csv = true;
        else if (f == "json") o.json = true;
        else if (f == "svg") o.svg = true;
        else throw ConfigError("config error: unknown format '" + f + "'");
    }
    fs::create_directories(o.dir);
    return o;
}

int run_region(const std::string& config_path, const std::string& model_flag,
               const std::string& out_override, const std::string& format_override,
               std::optional<int> workers) {
    RunConfig cfg = load_config(config_path);
    if (!model_flag.empty()) cfg.model = model_flag;
    const OutputSet out = resolve_outputs(cfg, out_override, format_override);
    SweepSpec spec = cfg.sweep;
    spec.workers = resolve_workers(workers, cfg);

    // the discrete model takes a pmf instead of a channel
    if (cfg.model == "theorem1") {
        if (!cfg.pmf) throw ConfigError("config error: model theorem1 requires a 'pmf' block");
        const Theorem1Bounds b = theorem1_bounds(*cfg.pmf);
        const RateRegion2D region = project_to_r1_r2(b.to_polytope());
        if (out.csv) write_file((out.dir / "theorem1.csv").string(), region_to_csv(region));
        if (out.json) {
            nlohmann::json j = region_to_json(region);
            j["bounds"] = {{"b12", b.b12},     {"b21", b.b21},
                           {"b13", b.b13},     {"b23", b.b23},
                           {"b13_23", b.b13_23}, {"b_sum", b.b_sum},
                           {"delta1_minus", b.delta1_minus},
                           {"delta2_minus", b.delta2_minus},
                           {"cap_delta_minus", b.cap_delta_minus}};
            write_file((out.dir / "theorem1.json").string(), j.dump(2) + "\n");
        }
        if (out.svg)
            write_file((out.dir / "regions.svg").string(),
                       render_svg({region_series("theorem1", region)}, "R1 [bits]", "R2 [bits]"));
        std::cout << "wrote theorem1 region to " << out.dir.string() << "\n";
        return 0;
    }

    if (!cfg.has_channel) throw ConfigError("config error: region requires a 'channel' block");

    std::vector<OverlaySpec> overlays = cfg.overlays;
    if (overlays.empty()) overlays.push_back({cfg.model, cfg.model, cfg.channel});

    std::vector<PlotSeries> series;
    for (const OverlaySpec& o : overlays) {
        const std::string model = o.model.empty() ? cfg.model : o.model;
        const std::string slug = slugify(o.label);
        if (model == "fourcase") {
            const FourCaseResult fc = four_case_hull(o.channel, spec);
            const std::array<std::pair<std::string, const RateRegion2D*>, 6> parts = {{
                {slug + "-hull", &fc.hull},
                {slug + "-unrestricted", &fc.unrestricted},
                {slug + "-case1", &fc.cases[0]},
                {slug + "-case2", &fc.cases[1]},
                {slug + "-case3", &fc.cases[2]},
                {slug + "-case4", &fc.cases[3]},
            }};
            for (const auto& [name, region] : parts) {
                if (out.csv) write_file((out.dir / (name + ".csv")).string(), region_to_csv(*region));
                if (out.json)
                    write_file((out.dir / (name + ".json")).string(),
                               region_to_json(*region).dump(2) + "\n");
                series.push_back(region_series(name, *region));
            }
            std::cout << "four-case hull excess: " << fmt_double(fc.excess) << " bits\n";
            continue;
        }
        const TraceResult t = trace_boundary(o.channel, spec, sweep_model_from_string(model));
        if (out.csv) {
            write_file((out.dir / (slug + ".csv")).string(), region_to_csv(t.region));
            write_file((out.dir / (slug + "-trace.csv")).string(), trace_to_csv(t));
        }
        if (out.json)
            write_file((out.dir / (slug + ".json")).string(),
                       region_to_json(t.region).dump(2) + "\n");
        series.push_back(region_series(o.label, t.region));
    }
    if (out.svg)
        write_file((out.dir / "regions.svg").string(),
                   render_svg(series, "R1 [bits]", "R2 [bits]"));
    std::cout << "wrote " << overlays.size() << " region(s) to " << out.dir.string() << "\n";
    return 0;
}

int run_sumrate_sir(const std::string& config_path, const std::string& out_override,
                    const std::string& format_override, std::optional<int> workers) {
    RunConfig cfg = load_config(config_path);
    const OutputSet out = resolve_outputs(cfg, out_override, format_override);
    if (!cfg.has_channel) throw ConfigError("config error: sumrate-sir requires a 'channel' block");
    if (cfg.sir_db.empty()) throw ConfigError("config error: sumrate-sir requires 'sir_db'");
    SweepSpec spec = cfg.sweep;
    spec.workers = resolve_workers(workers, cfg);

    const std::vector<SirRow> rows = sum_rate_vs_sir(cfg.channel, cfg.sir_db, spec);
    if (out.csv) write_file((out.dir / "sumrate-sir.csv").string(), sir_rows_to_csv(rows));
    if (out.json) {
        nlohmann::json j = nlohmann::json::array();
        for (const SirRow& r : rows)
            j.push_back({{"sir_db", r.sir_db},
                         {"q_db", r.q_db},
                         {"sum_rate", r.best},
                         {"full_cooperation", r.full_coop},
                         {"no_cooperation", r.no_coop}});
        write_file((out.dir / "sumrate-sir.json").string(), j.dump(2) + "\n");
    }
    if (out.svg) {
        PlotSeries best{"max sum-rate", {}}, coop{"full cooperation", {}}, direct{"no cooperation", {}};
        for (const SirRow& r : rows) {
            best.points.push_back({r.sir_db, r.best});
            coop.points.push_back({r.sir_db, r.full_coop});
            direct.points.push_back({r.sir_db, r.no_coop});
        }
        write_file((out.dir / "sumrate-sir.svg").string(),
                   render_svg({best, coop, direct}, "SIR [dB]", "sum rate [bits]"));
    }
    std::cout << "wrote " << rows.size() << " SIR row(s) to " << out.dir.string() << "\n";
    return 0;
}

int run_verify(const std::string& config_path, const std::string& out_override,
               const std::string& format_override, std::optional<int> workers) {
    RunConfig cfg;
    if (!config_path.empty()) cfg = load_config(config_path);
    const OutputSet out = resolve_outputs(cfg, out_override, format_override);
    cfg.sweep.workers = resolve_workers(workers, cfg);

    const VerifyReport report = run_verify(cfg);
    std::cout << report.to_text();
    write_file((out.dir / "verify.json").string(), report.to_json().dump(2) + "\n");
    return report.all_passed() ? 0 : kExitVerify;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"achievable rate regions of the state-dependent generalized MAC"};
    app.require_subcommand(1);

    std::string config_path, model_flag, out_override, format_override;
    std::optional<int> workers;

    CLI::App* region = app.add_subcommand("region", "compute rate regions from a JSON config");
    region->add_option("--config", config_path, "JSON config path")->required();
    region->add_option("--model", model_flag, "override the configured model");
    region->add_option("--out", out_override, "output directory override");
    region->add_option("--format", format_override, "comma-separated subset of csv,json,svg");
    region->add_option("--workers", workers, "worker thread count");

    CLI::App* sir = app.add_subcommand("sumrate-sir", "sum-rate versus SIR table and plot");
    sir->add_option("--config", config_path, "JSON config path")->required();
    sir->add_option("--out", out_override, "output directory override");
    sir->add_option("--format", format_override, "comma-separated subset of csv,json,svg");
    sir->add_option("--workers", workers, "worker thread count");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
    verify->add_option("--config", config_path, "optional JSON config path");
    verify->add_option("--out", out_override, "output directory override");
    verify->add_option("--format", format_override, "comma-separated subset of csv,json,svg");
    verify->add_option("--workers", workers, "worker thread count");

    try {
        app.parse(argc, argv);
        if (region->parsed())
            return run_region(config_path, model_flag, out_override, format_override, workers);
        if (sir->parsed())
            return run_sumrate_sir(config_path, out_override, format_override, workers);
        return run_verify(config_path, out_override, format_override, workers);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    } catch (const ConfigError& e) {
        std::cerr << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return kExitModel;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
