#ifndef COSSERAT_TOOLS_COMMANDS_HPP
#define COSSERAT_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "config.hpp"

namespace cosserat::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kConfigFailure = 2, kIntegrationFailure = 3 };

/// Writes the per-step table to `out`. Rows written before a failure are kept.
/// Returns kIntegrationFailure (with the step index on `diag`) if a step fails.
int write_simulation(const RunConfig& cfg, std::optional<int> steps_override, std::ostream& out,
                     std::ostream& diag);

/// Deviatoric section over the full plane and the compression meridian.
/// Throws ConfigError when p_section lies beyond the apex.
void write_deviatoric_section(const RunConfig& cfg, std::ostream& out);
void write_meridional_section(const RunConfig& cfg, std::ostream& out);

int cmd_simulate(const RunConfig& cfg, const std::string& out_dir,
                 std::optional<int> steps_override, std::ostream& diag);
int cmd_surface(const RunConfig& cfg, const std::string& out_dir, std::ostream& diag);

}  // namespace cosserat::cli

#endif  // COSSERAT_TOOLS_COMMANDS_HPP
