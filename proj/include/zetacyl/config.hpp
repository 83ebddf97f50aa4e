#pragma once

#include <map>
#include <string>
#include <vector>

#include "zetacyl/specfun.hpp"

namespace zetacyl {

// Flat key = value configuration for one experiment run. Fully deterministic:
// no seeds, no timestamps.
struct RunConfig {
    std::string experiment;
    std::string spectrum = "half-integer";  // preset name or spectrum file path
    std::vector<double> r_grid = {2.0, 4.0, 6.0, 8.0};
    std::vector<Complex> s_samples = {Complex(1.5), Complex(2.0), Complex(3.0)};
    std::map<std::string, double> tolerances;
    std::string out_json;
    std::string out_csv;
    std::string out_plotdata;
    int piece = 2;            // aps-vs-chiral
    double epsilon = 0.5;     // large-time tail exponent (spectral experiments)
    double lambda = 1.0;      // mode-det
    double length = 2.0;      // mode-det
    std::string bc_pair = "DD";
    int cutoff_count = 10000;
    int threads = 1;

    double tol(const std::string& name, double fallback) const {
        auto it = tolerances.find(name);
        return it == tolerances.end() ? fallback : it->second;
    }
};

// Parses the flat key=value format ('#' comments, blank lines ignored) and
// validates fields; throws ConfigError naming the line and field.
RunConfig parse_config(const std::string& text);

const std::vector<std::string>& known_experiments();

}  // namespace zetacyl
