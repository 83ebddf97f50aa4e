#pragma once

#include <string>

#include "zetacyl/adiabatic.hpp"
#include "zetacyl/config.hpp"

namespace zetacyl {

// Deterministic serializations: doubles printed with %.17g, fields in fixed
// order, no timestamps.
std::string report_to_json(const ExperimentReport& r, const RunConfig& cfg);
std::string report_to_csv(const ExperimentReport& r);
std::string report_to_plotdata(const ExperimentReport& r);

// Writes whichever output paths the config names. Throws IoError.
void emit_report(const ExperimentReport& r, const RunConfig& cfg);

// 0 on pass, 2 on verdict failure.
int report_exit_code(const ExperimentReport& r);

inline const char* tool_version() { return "zetacyl 1.0.0"; }

}  // namespace zetacyl
