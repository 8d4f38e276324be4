#ifndef COSSERAT_TOOLS_VERIFY_HPP
#define COSSERAT_TOOLS_VERIFY_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "config.hpp"

namespace cosserat::cli {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string detail;
};

/// Shape-function implementation under test. Tests swap in a perturbed one.
struct ShapeHooks {
  std::function<double(const GCShape&, double)> gamma = gamma_value;
  std::function<double(const GCShape&, double)> dgamma = gamma_derivative;
};

std::vector<CheckResult> run_checks(const RunConfig& cfg, const ShapeHooks& hooks = {});

/// Prints one line per check; returns kOk if all pass, kCheckFailed otherwise.
int cmd_verify(const RunConfig& cfg, std::ostream& out, const ShapeHooks& hooks = {});

}  // namespace cosserat::cli

#endif  // COSSERAT_TOOLS_VERIFY_HPP
