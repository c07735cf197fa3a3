#pragma once

#include <shv/cli/config.hpp>
#include <shv/cli/report.hpp>

namespace shv::cli {

Report cmd_relations(const RunConfig& cfg);
Report cmd_realize(const RunConfig& cfg);
Report cmd_singular(const RunConfig& cfg);
Report cmd_char(const RunConfig& cfg);
Report cmd_det(const RunConfig& cfg);
Report cmd_diagram(const RunConfig& cfg);
Report cmd_acceptance(const RunConfig& cfg);

// Validates cfg, dispatches on cfg.command and fills in the timing.  Throws
// UsageError for invalid input.
Report run_command(const RunConfig& cfg);

// Report rendered in the configured format.
std::string render(const Report& report, Format format);

}  // namespace shv::cli
