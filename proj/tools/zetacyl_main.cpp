// zetacyl: zeta-determinant decomposition experiments on model cylinders.
//
// Subcommands:
//   run <config>          execute an experiment described by a key=value file
//   preset-list           list the built-in tangential spectra
//   spectrum-check <file> validate an explicit spectrum file
//   mode-det              one boundary-value problem's determinant, closed vs oracle
//   gamma-limit           the Gamma-ratio limit experiment
//   cylinder-identity     the cylinder-contribution identity at chosen s

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zetacyl/adiabatic.hpp"
#include "zetacyl/config.hpp"
#include "zetacyl/errors.hpp"
#include "zetacyl/report.hpp"

namespace {

using namespace zetacyl;

void print_report(const ExperimentReport& rep) {
    std::printf("experiment: %s\n", rep.experiment.c_str());
    std::printf("spectrum:   %s\n", rep.spectrum.c_str());
    std::printf("target:     %.12g\n", rep.target);
    for (const auto& row : rep.rows) {
        std::printf("  R=%-8.6g value=%.12g", row.R, row.value);
        for (const auto& [name, v] : row.components) std::printf("  %s=%.10g", name.c_str(), v);
        std::printf("\n");
    }
    if (rep.fitted_rate != 0.0) std::printf("fitted_rate: %.6g\n", rep.fitted_rate);
    if (!rep.note.empty()) std::printf("note: %s\n", rep.note.c_str());
    std::printf("verdict: %s (tolerance %.3g)\n", rep.pass ? "pass" : "fail", rep.tolerance);
}

int run_and_emit(const RunConfig& cfg) {
    ExperimentReport rep = run_experiment(cfg);
    emit_report(rep, cfg);
    print_report(rep);
    return report_exit_code(rep);
}

int cmd_run(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::fprintf(stderr, "error: cannot open config '%s'\n", path.c_str());
        return 1;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return run_and_emit(parse_config(buf.str()));
}

int cmd_preset_list() {
    std::printf("integer        lambda_n = n        (zeta_{B^2}(0) = -1)\n");
    std::printf("half-integer   lambda_n = n - 1/2  (zeta_{B^2}(0) = 0)\n");
    return 0;
}

int cmd_spectrum_check(const std::string& path) {
    auto spec = TangentialSpectrum::from_file(path);
    std::printf("ok: %zu entries, lambda_min = %.12g, zeta_B2(0) = %.12g\n",
                spec.entries().size(), spec.lambda_min(), spec.zeta_b2_at_0());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"zeta-determinant decomposition experiments on model cylinders"};
    app.require_subcommand(1);

    std::string config_path;
    auto* run = app.add_subcommand("run", "execute an experiment from a config file");
    run->add_option("config", config_path, "key = value configuration file")->required();

    auto* presets = app.add_subcommand("preset-list", "list built-in spectra");

    std::string spectrum_path;
    auto* check = app.add_subcommand("spectrum-check", "validate a spectrum file");
    check->add_option("file", spectrum_path, "two-column lambda multiplicity file")->required();

    std::string bc = "DD";
    double lambda = 1.0, length = 2.0;
    auto* modedet = app.add_subcommand("mode-det", "one mode problem, closed form vs oracle");
    modedet->add_option("--bc", bc, "boundary pair: DD DN ND NN DR- R-D NR- R-N R-R- DR+ R+D or periodic");
    modedet->add_option("--lambda", lambda, "mode eigenvalue (positive)");
    modedet->add_option("--length", length, "interval length (circumference for periodic)");

    auto* gammalim = app.add_subcommand("gamma-limit", "Gamma-ratio limit check");

    std::string s_arg = "2,0";
    std::string spectrum_name = "integer";
    auto* cylid = app.add_subcommand("cylinder-identity", "cylinder contribution identity");
    cylid->add_option("--s", s_arg, "complex sample as re,im");
    cylid->add_option("--spectrum", spectrum_name, "preset name or spectrum file");

    try {
        app.parse(argc, argv);

        if (*run) return cmd_run(config_path);
        if (*presets) return cmd_preset_list();
        if (*check) return cmd_spectrum_check(spectrum_path);
        if (*modedet) {
            RunConfig cfg;
            cfg.experiment = "mode-det";
            cfg.spectrum = "integer";
            cfg.bc_pair = bc;
            cfg.lambda = lambda;
            cfg.length = length;
            return run_and_emit(cfg);
        }
        if (*gammalim) {
            RunConfig cfg;
            cfg.experiment = "gamma-limit";
            cfg.spectrum = "integer";
            return run_and_emit(cfg);
        }
        if (*cylid) {
            RunConfig cfg;
            cfg.experiment = "cylinder-identity";
            cfg.spectrum = spectrum_name;
            auto comma = s_arg.find(',');
            double re = std::stod(s_arg.substr(0, comma));
            double im = comma == std::string::npos ? 0.0 : std::stod(s_arg.substr(comma + 1));
            cfg.s_samples = {Complex(re, im)};
            return run_and_emit(cfg);
        }
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 1;
}
