#include "zetacyl/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "zetacyl/errors.hpp"

namespace zetacyl {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << content;
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string report_to_json(const ExperimentReport& r, const RunConfig& cfg) {
    std::string j = "{\n";
    j += "  \"experiment\": \"" + json_escape(r.experiment) + "\",\n";
    j += "  \"spectrum\": \"" + json_escape(r.spectrum) + "\",\n";
    j += "  \"rows\": [\n";
    for (size_t i = 0; i < r.rows.size(); ++i) {
        const auto& row = r.rows[i];
        j += "    {\"R\": " + fmt(row.R) + ", \"value\": " + fmt(row.value) +
             ", \"components\": {";
        for (size_t k = 0; k < row.components.size(); ++k) {
            j += "\"" + json_escape(row.components[k].first) +
                 "\": " + fmt(row.components[k].second);
            if (k + 1 < row.components.size()) j += ", ";
        }
        j += "}}";
        if (i + 1 < r.rows.size()) j += ",";
        j += "\n";
    }
    j += "  ],\n";
    j += "  \"target\": " + fmt(r.target) + ",\n";
    j += "  \"fitted_rate\": " + fmt(r.fitted_rate) + ",\n";
    j += "  \"verdict\": \"" + std::string(r.pass ? "pass" : "fail") + "\",\n";
    j += "  \"tolerances\": {";
    bool first = true;
    for (const auto& [name, tol] : cfg.tolerances) {
        if (!first) j += ", ";
        j += "\"" + json_escape(name) + "\": " + fmt(tol);
        first = false;
    }
    if (first) j += "\"limit\": " + fmt(r.tolerance);
    j += "},\n";
    j += "  \"tool_version\": \"" + std::string(tool_version()) + "\"\n";
    j += "}\n";
    return j;
}

std::string report_to_csv(const ExperimentReport& r) {
    std::string csv = "R,value";
    if (!r.rows.empty())
        for (const auto& [name, _] : r.rows.front().components) csv += "," + name;
    csv += "\n";
    for (const auto& row : r.rows) {
        csv += fmt(row.R) + "," + fmt(row.value);
        for (const auto& [_, v] : row.components) csv += "," + fmt(v);
        csv += "\n";
    }
    return csv;
}

std::string report_to_plotdata(const ExperimentReport& r) {
    std::string out = "# R value abs(value-target)\n";
    for (const auto& row : r.rows) {
        out += fmt(row.R) + " " + fmt(row.value) + " " + fmt(std::fabs(row.value - r.target)) +
               "\n";
    }
    return out;
}

void emit_report(const ExperimentReport& r, const RunConfig& cfg) {
    if (!cfg.out_json.empty()) write_file(cfg.out_json, report_to_json(r, cfg));
    if (!cfg.out_csv.empty()) write_file(cfg.out_csv, report_to_csv(r));
    if (!cfg.out_plotdata.empty()) write_file(cfg.out_plotdata, report_to_plotdata(r));
}

int report_exit_code(const ExperimentReport& r) { return r.pass ? 0 : 2; }

}  // namespace zetacyl
