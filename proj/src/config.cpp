#include "zetacyl/config.hpp"

#include <algorithm>
#include <sstream>

#include "zetacyl/errors.hpp"

namespace zetacyl {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

double parse_double(int line, const std::string& field, const std::string& v) {
    try {
        size_t pos = 0;
        double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(line, field, "not a number: '" + v + "'");
    }
}

int parse_int(int line, const std::string& field, const std::string& v) {
    try {
        size_t pos = 0;
        int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("trailing characters");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(line, field, "not an integer: '" + v + "'");
    }
}

}  // namespace

const std::vector<std::string>& known_experiments() {
    static const std::vector<std::string> names = {
        "theorem1",     "theorem2",     "aps-vs-chiral", "cylinder-identity", "gamma-limit",
        "zeta-at-zero", "spectral-gap", "parametrix",    "mode-det",
    };
    return names;
}

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    bool have_experiment = false;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(line_no, line, "expected key = value");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(line_no, "?", "empty key");
        if (value.empty()) throw ConfigError(line_no, key, "empty value");

        if (key == "experiment") {
            const auto& names = known_experiments();
            if (std::find(names.begin(), names.end(), value) == names.end())
                throw ConfigError(line_no, key, "unknown experiment '" + value + "'");
            cfg.experiment = value;
            have_experiment = true;
        } else if (key == "spectrum") {
            cfg.spectrum = value;
        } else if (key == "R_grid") {
            cfg.r_grid.clear();
            for (const auto& tok : split(value, ',')) {
                double r = parse_double(line_no, key, trim(tok));
                if (!(r > 0.0)) throw ConfigError(line_no, key, "R values must be positive");
                cfg.r_grid.push_back(r);
            }
            if (cfg.r_grid.empty()) throw ConfigError(line_no, key, "empty R grid");
            for (size_t i = 1; i < cfg.r_grid.size(); ++i)
                if (cfg.r_grid[i] <= cfg.r_grid[i - 1])
                    throw ConfigError(line_no, key, "R grid must be strictly increasing");
        } else if (key == "s_samples") {
            cfg.s_samples.clear();
            std::istringstream ss(value);
            std::string tok;
            while (ss >> tok) {
                auto parts = split(tok, ',');
                if (parts.size() != 2)
                    throw ConfigError(line_no, key, "expected re,im pairs separated by spaces");
                cfg.s_samples.emplace_back(parse_double(line_no, key, parts[0]),
                                           parse_double(line_no, key, parts[1]));
            }
            if (cfg.s_samples.empty()) throw ConfigError(line_no, key, "empty sample list");
        } else if (key.rfind("tolerance.", 0) == 0) {
            double tol = parse_double(line_no, key, value);
            if (!(tol > 0.0)) throw ConfigError(line_no, key, "tolerance must be positive");
            cfg.tolerances[key.substr(10)] = tol;
        } else if (key == "tolerance") {
            double tol = parse_double(line_no, key, value);
            if (!(tol > 0.0)) throw ConfigError(line_no, key, "tolerance must be positive");
            cfg.tolerances["limit"] = tol;
        } else if (key == "output.json") {
            cfg.out_json = value;
        } else if (key == "output.csv") {
            cfg.out_csv = value;
        } else if (key == "output.plotdata") {
            cfg.out_plotdata = value;
        } else if (key == "piece") {
            cfg.piece = parse_int(line_no, key, value);
            if (cfg.piece != 1 && cfg.piece != 2)
                throw ConfigError(line_no, key, "piece must be 1 or 2");
        } else if (key == "epsilon") {
            cfg.epsilon = parse_double(line_no, key, value);
            if (!(cfg.epsilon > 0.0 && cfg.epsilon < 1.0))
                throw ConfigError(line_no, key, "epsilon must lie in (0,1)");
        } else if (key == "lambda") {
            cfg.lambda = parse_double(line_no, key, value);
            if (!(cfg.lambda > 0.0)) throw ConfigError(line_no, key, "lambda must be positive");
        } else if (key == "length") {
            cfg.length = parse_double(line_no, key, value);
            if (!(cfg.length > 0.0)) throw ConfigError(line_no, key, "length must be positive");
        } else if (key == "bc") {
            cfg.bc_pair = value;
        } else if (key == "cutoff_count") {
            cfg.cutoff_count = parse_int(line_no, key, value);
            if (cfg.cutoff_count < 1) throw ConfigError(line_no, key, "cutoff_count must be >= 1");
        } else if (key == "threads") {
            cfg.threads = parse_int(line_no, key, value);
            if (cfg.threads < 1 || cfg.threads > 256)
                throw ConfigError(line_no, key, "threads must be in [1, 256]");
        } else {
            throw ConfigError(line_no, key, "unknown key");
        }
    }
    if (!have_experiment) throw ConfigError(0, "experiment", "missing required field");
    return cfg;
}

}  // namespace zetacyl
