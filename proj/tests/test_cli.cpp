#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "zetacyl/adiabatic.hpp"
#include "zetacyl/config.hpp"
#include "zetacyl/errors.hpp"
#include "zetacyl/report.hpp"

using namespace zetacyl;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_tool(const std::string& args) {
    const char* bin = std::getenv("ZETACYL_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    return WEXITSTATUS(rc);
}

}  // namespace

TEST_CASE("minimal config gets defaults") {
    RunConfig cfg = parse_config("experiment = theorem1\nspectrum = half-integer\n");
    CHECK(cfg.experiment == "theorem1");
    CHECK(cfg.spectrum == "half-integer");
    REQUIRE(cfg.r_grid.size() == 4);
    CHECK(cfg.r_grid[0] == 2.0);
    CHECK(cfg.r_grid[3] == 8.0);
    CHECK(cfg.tol("limit", 1e-3) == 1e-3);
    CHECK(cfg.threads == 1);
}

TEST_CASE("config validation errors carry line and field") {
    CHECK_THROWS_AS(parse_config("experiment = warp-drive\n"), ConfigError);
    try {
        parse_config("# c\nexperiment = theorem1\nR_grid = 2,zap\n");
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(e.line == 3);
        CHECK(e.field_name == "R_grid");
    }
    CHECK_THROWS_AS(parse_config("experiment = theorem1\nR_grid = 4,2\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("experiment = theorem1\ntolerance.limit = -1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("experiment = theorem1\nbogus = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("spectrum = integer\n"), ConfigError);  // missing experiment
    CHECK_THROWS_AS(parse_config("experiment = theorem1\nepsilon = 1.5\n"), ConfigError);
}

TEST_CASE("config accepts the full field set") {
    RunConfig cfg = parse_config(
        "experiment = cylinder-identity\n"
        "spectrum = integer\n"
        "R_grid = 1,2.5,4\n"
        "s_samples = 1.5,0 2,0 3,0.5\n"
        "tolerance.identity = 1e-7\n"
        "output.json = out.json\n"
        "output.csv = out.csv\n"
        "output.plotdata = out.dat\n"
        "piece = 1\n"
        "threads = 2\n"
        "cutoff_count = 500\n");
    CHECK(cfg.s_samples.size() == 3);
    CHECK(cfg.s_samples[2] == Complex(3.0, 0.5));
    CHECK(cfg.tol("identity", 0.0) == 1e-7);
    CHECK(cfg.piece == 1);
    CHECK(cfg.cutoff_count == 500);
}

TEST_CASE("invalid spectrum file surfaces through run_experiment") {
    {
        std::ofstream out("bad_spec.txt");
        out << "1.0 1\n-0.5 1\n";
    }
    RunConfig cfg;
    cfg.experiment = "theorem2";
    cfg.spectrum = "bad_spec.txt";
    CHECK_THROWS_AS(run_experiment(cfg), NonPositiveEigenvalue);
    std::remove("bad_spec.txt");
}

TEST_CASE("report serialization shape") {
    RunConfig cfg;
    cfg.experiment = "theorem2";
    cfg.spectrum = "integer";
    cfg.r_grid = {2.0, 3.0};
    cfg.tolerances["limit"] = 1e-3;
    ExperimentReport rep = run_experiment(cfg);
    std::string json = report_to_json(rep, cfg);
    CHECK(json.find("\"experiment\": \"theorem2\"") != std::string::npos);
    CHECK(json.find("\"target\": 1.3862943611198906") != std::string::npos);
    CHECK(json.find("\"tool_version\"") != std::string::npos);
    std::string csv = report_to_csv(rep);
    // header plus one line per grid point
    int lines = 0;
    for (char c : csv)
        if (c == '\n') ++lines;
    CHECK(lines == 1 + int(cfg.r_grid.size()));
    CHECK(csv.rfind("R,value,logdet_circle,logdet_aps_pieces", 0) == 0);
    std::string plot = report_to_plotdata(rep);
    CHECK(plot.find("# R value abs(value-target)") == 0);
}

TEST_CASE("emitted reports are byte-identical across repeat runs") {
    RunConfig cfg;
    cfg.experiment = "aps-vs-chiral";
    cfg.spectrum = "integer";
    cfg.r_grid = {2.0, 4.0};
    cfg.out_json = "rep_a.json";
    cfg.out_csv = "rep_a.csv";
    cfg.out_plotdata = "rep_a.dat";
    emit_report(run_experiment(cfg), cfg);
    cfg.out_json = "rep_b.json";
    cfg.out_csv = "rep_b.csv";
    cfg.out_plotdata = "rep_b.dat";
    cfg.threads = 3;
    emit_report(run_experiment(cfg), cfg);
    CHECK(slurp("rep_a.json") == slurp("rep_b.json"));
    CHECK(slurp("rep_a.csv") == slurp("rep_b.csv"));
    CHECK(slurp("rep_a.dat") == slurp("rep_b.dat"));
    for (const char* f : {"rep_a.json", "rep_a.csv", "rep_a.dat", "rep_b.json", "rep_b.csv",
                          "rep_b.dat"})
        std::remove(f);
}

TEST_CASE("tool end-to-end: exit codes and byte-identical outputs") {
    {
        std::ofstream out("e2e.cfg");
        out << "experiment = theorem2\nspectrum = integer\nR_grid = 2,4\n"
            << "tolerance.limit = 1e-2\noutput.json = e2e_1.json\noutput.csv = e2e_1.csv\n";
    }
    CHECK(run_tool("run e2e.cfg") == 0);
    {
        std::ofstream out("e2e.cfg");
        out << "experiment = theorem2\nspectrum = integer\nR_grid = 2,4\n"
            << "tolerance.limit = 1e-2\noutput.json = e2e_2.json\noutput.csv = e2e_2.csv\n";
    }
    CHECK(run_tool("run e2e.cfg") == 0);
    CHECK(slurp("e2e_1.json") == slurp("e2e_2.json"));
    CHECK(slurp("e2e_1.csv") == slurp("e2e_2.csv"));
    CHECK(!slurp("e2e_1.json").empty());

    // verdict failure: unreachable tolerance at small R
    {
        std::ofstream out("e2e_fail.cfg");
        out << "experiment = theorem2\nspectrum = integer\nR_grid = 1,2\n"
            << "tolerance.limit = 1e-9\n";
    }
    CHECK(run_tool("run e2e_fail.cfg") == 2);

    // config error
    {
        std::ofstream out("e2e_bad.cfg");
        out << "experiment = nonsense\n";
    }
    CHECK(run_tool("run e2e_bad.cfg") == 1);
    CHECK(run_tool("run missing_file.cfg") == 1);

    CHECK(run_tool("preset-list") == 0);
    {
        std::ofstream out("spec_cli.txt");
        out << "0.5 1\n1.5 1\n";
    }
    CHECK(run_tool("spectrum-check spec_cli.txt") == 0);
    CHECK(run_tool("spectrum-check no_such_file.txt") == 1);
    CHECK(run_tool("mode-det --bc DR- --lambda 1 --length 2") == 0);
    CHECK(run_tool("mode-det --bc periodic --lambda 1 --length 4") == 0);
    CHECK(run_tool("gamma-limit") == 0);
    CHECK(run_tool("cylinder-identity --s 2,0 --spectrum integer") == 0);

    // experiment driven by an explicit spectrum file
    {
        std::ofstream out("e2e_file.cfg");
        out << "experiment = theorem2\nspectrum = spec_cli.txt\nR_grid = 4,8\n"
            << "tolerance.limit = 1e-3\n";
    }
    CHECK(run_tool("run e2e_file.cfg") == 0);

    for (const char* f : {"e2e.cfg", "e2e_1.json", "e2e_1.csv", "e2e_2.json", "e2e_2.csv",
                          "e2e_fail.cfg", "e2e_bad.cfg", "spec_cli.txt", "e2e_file.cfg"})
        std::remove(f);
}
