#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmac/config.hpp"

using namespace gmac;
namespace fs = std::filesystem;

namespace {

const std::string kCli = GMAC_CLI_PATH;
const std::string kConfigs = GMAC_CONFIG_DIR;

struct RunOutput {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

RunOutput run_cli(const std::string& args, const fs::path& scratch) {
    const fs::path log = scratch / "cli.log";
    const std::string cmd = kCli + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunOutput out;
    out.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream f(log);
    std::ostringstream ss;
    ss << f.rdbuf();
    out.output = ss.str();
    return out;
}

fs::path make_scratch() {
    static int counter = 0;
    const fs::path dir =
        fs::temp_directory_path() / ("gmac-cli-test-" + std::to_string(::getpid()) + "-" +
                                     std::to_string(counter++));
    fs::create_directories(dir);
    return dir;
}

void write(const fs::path& p, const std::string& text) {
    std::ofstream f(p);
    f << text;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("config errors exit with code 2 and a line-numbered message") {
    const fs::path dir = make_scratch();
    SECTION("syntax error") {
        write(dir / "bad.json", "{\n  \"model\": \"prop1\",\n  oops\n}\n");
        const RunOutput r = run_cli("region --config " + (dir / "bad.json").string(), dir);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("line") != std::string::npos);
    }
    SECTION("unknown key is located") {
        write(dir / "unk.json",
              "{\n  \"units\": \"dB\",\n  \"channel\": {\"p1\": 10, \"p2\": 10, \"n1\": 0, "
              "\"n2\": 0, \"n3\": 7,\n    \"bogus\": 1}\n}\n");
        const RunOutput r = run_cli("region --config " + (dir / "unk.json").string(), dir);
        CHECK(r.exit_code == 2);
        CHECK(r.output.find("bogus") != std::string::npos);
        CHECK(r.output.find("line 4") != std::string::npos);
    }
    SECTION("missing config file") {
        const RunOutput r = run_cli("region --config " + (dir / "nope.json").string(), dir);
        CHECK(r.exit_code == 2);
    }
    SECTION("wrong value type") {
        write(dir / "type.json", "{\"model\": 42}");
        const RunOutput r = run_cli("region --config " + (dir / "type.json").string(), dir);
        CHECK(r.exit_code == 2);
    }
}

TEST_CASE("model preconditions exit with code 3") {
    const fs::path dir = make_scratch();
    write(dir / "p3.json",
          "{\n  \"model\": \"prop3\",\n  \"units\": \"dB\",\n"
          "  \"channel\": {\"p1\": 10, \"p2\": 10, \"n1\": 0, \"n2\": 0, \"n3\": 10, \"q1\": 5}\n}\n");
    const RunOutput r = run_cli("region --config " + (dir / "p3.json").string() + " --out " +
                                    (dir / "out").string(),
                                dir);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("q1") != std::string::npos);
}

TEST_CASE("verify exits 0 by default and 4 when a check fails") {
    const fs::path dir = make_scratch();
    const RunOutput ok = run_cli("verify --out " + (dir / "ok").string(), dir);
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("all checks passed") != std::string::npos);
    const auto report = nlohmann::json::parse(slurp(dir / "ok" / "verify.json"));
    CHECK(report.at("passed").get<bool>());

    write(dir / "bad.json", "{\"perturb_a0\": 0.1}");
    const RunOutput bad = run_cli("verify --config " + (dir / "bad.json").string() + " --out " +
                                      (dir / "bad").string(),
                                  dir);
    CHECK(bad.exit_code == 4);
    CHECK(bad.output.find("FAIL") != std::string::npos);
    CHECK(bad.output.find("residual") != std::string::npos);

    write(dir / "markov.json", "{\"break_markov\": true}");
    const RunOutput mk = run_cli("verify --config " + (dir / "markov.json").string() + " --out " +
                                     (dir / "mk").string(),
                                 dir);
    CHECK(mk.exit_code == 4);
    CHECK(mk.output.find("S1S2--S0--U") != std::string::npos);
}

TEST_CASE("region command writes the requested artifacts") {
    const fs::path dir = make_scratch();
    write(dir / "r.json",
          "{\n  \"model\": \"prop1\",\n  \"units\": \"dB\",\n"
          "  \"channel\": {\"p1\": 10, \"p2\": 10, \"n1\": 0, \"n2\": 0, \"n3\": 7, \"q0\": 5},\n"
          "  \"sweep\": {\"rho_points\": 3, \"split_points\": 3, \"weights\": 5, "
          "\"refine_depth\": 1}\n}\n");
    const RunOutput r = run_cli("region --config " + (dir / "r.json").string() + " --out " +
                                    (dir / "out").string(),
                                dir);
    REQUIRE(r.exit_code == 0);
    const std::string csv = slurp(dir / "out" / "prop1.csv");
    CHECK(csv.rfind("# R1,R2\n", 0) == 0);
    CHECK(csv.find(';') == std::string::npos); // dot-decimal, comma-separated
    const auto j = nlohmann::json::parse(slurp(dir / "out" / "prop1.json"));
    CHECK(j.at("vertices").size() >= 2);
    const std::string svg = slurp(dir / "out" / "regions.svg");
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("http-equiv") == std::string::npos);
    const std::string trace = slurp(dir / "out" / "prop1-trace.csv");
    CHECK(trace.find("# mu,rho1,rho2,split1,split2,R1,R2") == 0);

    SECTION("format filter") {
        const RunOutput r2 = run_cli("region --config " + (dir / "r.json").string() + " --out " +
                                         (dir / "csvonly").string() + " --format csv",
                                     dir);
        REQUIRE(r2.exit_code == 0);
        CHECK(fs::exists(dir / "csvonly" / "prop1.csv"));
        CHECK_FALSE(fs::exists(dir / "csvonly" / "prop1.json"));
        CHECK_FALSE(fs::exists(dir / "csvonly" / "regions.svg"));
    }
}

TEST_CASE("discrete model accepts dense and factored pmf input") {
    const fs::path dir = make_scratch();
    // independent uniform bits through a noiseless XOR with the direct-layer
    // identifications V13 = X1, V23 = X2: dense form
    nlohmann::json dense;
    dense["model"] = "theorem1";
    dense["pmf"]["sizes"] = {{"V13", 2}, {"V23", 2}, {"X1", 2}, {"X2", 2}, {"Y3", 2}};
    std::vector<double> tensor(32, 0.0);
    for (int x1 = 0; x1 < 2; ++x1)
        for (int x2 = 0; x2 < 2; ++x2)
            tensor[std::size_t((((x1 * 2 + x2) * 2 + x1) * 2 + x2) * 2 + (x1 ^ x2))] = 0.25;
    dense["pmf"]["dense"] = tensor;
    write(dir / "dense.json", dense.dump(2));
    const RunOutput rd = run_cli("region --config " + (dir / "dense.json").string() + " --out " +
                                     (dir / "dense").string(),
                                 dir);
    REQUIRE(rd.exit_code == 0);
    const auto jd = nlohmann::json::parse(slurp(dir / "dense" / "theorem1.json"));

    // the same distribution via the nine factors
    nlohmann::json fact;
    fact["model"] = "theorem1";
    fact["pmf"]["sizes"] = {{"V13", 2}, {"V23", 2}, {"X1", 2}, {"X2", 2}, {"Y3", 2}};
    fact["pmf"]["factors"] = nlohmann::json::array();
    fact["pmf"]["factors"].push_back({1.0});                 // S0
    fact["pmf"]["factors"].push_back({1.0});                 // S1|S0
    fact["pmf"]["factors"].push_back({1.0});                 // S2|S0
    fact["pmf"]["factors"].push_back({1.0});                 // U|S0
    fact["pmf"]["factors"].push_back({1.0});                 // V1
    fact["pmf"]["factors"].push_back({1.0});                 // V2
    fact["pmf"]["factors"].push_back({0.5, 0.0, 0.0, 0.5});  // (V13, X1): V13 = X1 uniform
    fact["pmf"]["factors"].push_back({0.5, 0.0, 0.0, 0.5});  // (V23, X2)
    fact["pmf"]["factors"].push_back(                         // Y3 = X1 xor X2, nested per (x1, x2)
        nlohmann::json::array({nlohmann::json::array({1.0, 0.0}), nlohmann::json::array({0.0, 1.0}),
                               nlohmann::json::array({0.0, 1.0}),
                               nlohmann::json::array({1.0, 0.0})}));
    write(dir / "fact.json", fact.dump(2));
    const RunOutput rf = run_cli("region --config " + (dir / "fact.json").string() + " --out " +
                                     (dir / "fact").string(),
                                 dir);
    REQUIRE(rf.exit_code == 0);
    const auto jf = nlohmann::json::parse(slurp(dir / "fact" / "theorem1.json"));
    CHECK(jd.at("bounds") == jf.at("bounds"));
    CHECK(jd.at("bounds").at("b_sum").get<double>() == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("sumrate-sir is reproducible byte for byte") {
    const fs::path dir = make_scratch();
    write(dir / "s.json",
          "{\n  \"units\": \"dB\",\n"
          "  \"channel\": {\"p1\": 10, \"p2\": 10, \"n1\": -10, \"n2\": -10, \"n3\": 0},\n"
          "  \"sweep\": {\"rho_points\": 3, \"eta_points\": 3, \"split_points\": 3, "
          "\"alpha_points\": 3, \"refine_depth\": 1, \"weights\": 3},\n"
          "  \"sir_db\": [5]\n}\n");
    const RunOutput a =
        run_cli("sumrate-sir --config " + (dir / "s.json").string() + " --out " +
                    (dir / "a").string() + " --workers 1",
                dir);
    REQUIRE(a.exit_code == 0);
    const RunOutput b =
        run_cli("sumrate-sir --config " + (dir / "s.json").string() + " --out " +
                    (dir / "b").string() + " --workers 8",
                dir);
    REQUIRE(b.exit_code == 0);
    CHECK(slurp(dir / "a" / "sumrate-sir.csv") == slurp(dir / "b" / "sumrate-sir.csv"));
    // single SIR value -> exactly one data row
    std::istringstream rows(slurp(dir / "a" / "sumrate-sir.csv"));
    std::string line;
    int data_rows = 0;
    while (std::getline(rows, line))
        if (!line.empty() && line[0] != '#') ++data_rows;
    CHECK(data_rows == 1);
}

TEST_CASE("asymmetric powers are a model error for sumrate-sir") {
    const fs::path dir = make_scratch();
    write(dir / "s.json",
          "{\n  \"units\": \"dB\",\n"
          "  \"channel\": {\"p1\": 10, \"p2\": 5, \"n1\": -10, \"n2\": -10, \"n3\": 0},\n"
          "  \"sir_db\": [5]\n}\n");
    const RunOutput r = run_cli("sumrate-sir --config " + (dir / "s.json").string() + " --out " +
                                    (dir / "out").string(),
                                dir);
    CHECK(r.exit_code == 3);
}

TEST_CASE("worker count falls back to the environment variable") {
    const fs::path dir = make_scratch();
    write(dir / "r.json",
          "{\n  \"model\": \"prop1\",\n  \"units\": \"dB\",\n"
          "  \"channel\": {\"p1\": 10, \"p2\": 10, \"n1\": 0, \"n2\": 0, \"n3\": 7},\n"
          "  \"sweep\": {\"rho_points\": 3, \"split_points\": 3, \"weights\": 5, "
          "\"refine_depth\": 1}\n}\n");
    const fs::path log = dir / "cli.log";
    const std::string cmd = "GMAC_REGIONS_WORKERS=2 " + kCli + " region --config " +
                            (dir / "r.json").string() + " --out " + (dir / "env").string() +
                            " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(WIFEXITED(status));
    CHECK(WEXITSTATUS(status) == 0);
    // env-selected worker count must not change the result
    const RunOutput flag = run_cli("region --config " + (dir / "r.json").string() + " --out " +
                                       (dir / "flag").string() + " --workers 1",
                                   dir);
    REQUIRE(flag.exit_code == 0);
    CHECK(slurp(dir / "env" / "prop1.csv") == slurp(dir / "flag" / "prop1.csv"));
}

TEST_CASE("shipped figure configs parse") {
    for (const char* name : {"fig4.json", "fig5.json", "fig6.json", "fig6-regions.json",
                             "fig7.json", "fig8.json"}) {
        const RunConfig cfg = load_config(kConfigs + "/" + name);
        CHECK((cfg.has_channel || cfg.pmf.has_value()));
    }
}
