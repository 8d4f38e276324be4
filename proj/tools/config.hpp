#ifndef COSSERAT_TOOLS_CONFIG_HPP
#define COSSERAT_TOOLS_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosserat/criterion.hpp"
#include "cosserat/elasticity.hpp"
#include "cosserat/integrator.hpp"

namespace cosserat::cli {

inline constexpr int kSchemaVersion = 1;

/// One proportional segment: the total increment split into equal steps.
struct Segment {
  Increment total;
  int steps = 1;
};

struct SurfaceOutput {
  double p_section = 0.0;
  int n_theta = 121;  ///< points per sector of the deviatoric section
  std::optional<double> p_min, p_max;
  int n_p = 101;
};

struct VerifyOptions {
  int samples = 200;
  std::uint64_t seed = 20240917;
};

struct RunConfig {
  CosseratMaterial material = CosseratMaterial::from_moduli(1.0, 1.0, 1.0, 0.0, 1.0, 1.0);
  CriterionPreset yield_preset = CriterionPreset::VonMises;
  CriterionPreset potential_preset = CriterionPreset::VonMises;
  GCShape yield;
  GCShape potential;
  HardeningLaw hardening{1.0, 1.0, 0.0, 0.0};
  MaterialState initial;
  std::vector<Increment> increments;  ///< explicit list, used when segments is empty
  std::vector<Segment> segments;
  SurfaceOutput surface;
  IntegratorSettings integrator;
  VerifyOptions verify;
  std::string hash;  ///< FNV-1a of the canonical JSON text

  GCCriterion criterion() const { return GCCriterion(yield, potential, hardening); }
};

/// Parses a config document. Throws ConfigError on any schema or domain violation.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

/// Built-in configuration used by `verify` without a file.
RunConfig default_config();

/// Expands the load program into increments; steps_override replaces every segment's step count.
std::vector<Increment> expand_program(const RunConfig& cfg, std::optional<int> steps_override = {});

std::string fnv1a_hex(const std::string& text);

}  // namespace cosserat::cli

#endif  // COSSERAT_TOOLS_CONFIG_HPP
