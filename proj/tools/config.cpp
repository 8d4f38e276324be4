#include "config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cosserat/errors.hpp"

namespace cosserat::cli {

using nlohmann::json;

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

const json& require(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ConfigError(where + ": missing key '" + key + "'");
  return obj.at(key);
}

double number(const json& obj, const char* key, const std::string& where) {
  const json& v = require(obj, key, where);
  if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(where + "." + key + ": not finite");
  return x;
}

double number_or(const json& obj, const char* key, double fallback, const std::string& where) {
  return obj.contains(key) ? number(obj, key, where) : fallback;
}

int integer_or(const json& obj, const char* key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
  return v.get<int>();
}

/// Accepts 9 numbers (row-major) or a 3x3 nested array.
Tensor2 tensor(const json& v, const std::string& where) {
  Tensor2 t;
  if (v.is_array() && v.size() == 9) {
    for (std::size_t k = 0; k < 9; ++k) {
      if (!v[k].is_number()) throw ConfigError(where + ": non-numeric component");
      t[k] = v[k].get<double>();
    }
  } else if (v.is_array() && v.size() == 3) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (!v[i].is_array() || v[i].size() != 3) throw ConfigError(where + ": expected 3x3 rows");
      for (std::size_t j = 0; j < 3; ++j) {
        if (!v[i][j].is_number()) throw ConfigError(where + ": non-numeric component");
        t(i, j) = v[i][j].get<double>();
      }
    }
  } else {
    throw ConfigError(where + ": expected 9 numbers or a 3x3 array");
  }
  for (std::size_t k = 0; k < 9; ++k)
    if (!std::isfinite(t[k])) throw ConfigError(where + ": non-finite component");
  return t;
}

Tensor2 tensor_or_zero(const json& obj, const char* key, const std::string& where) {
  return obj.contains(key) ? tensor(obj.at(key), where + "." + key) : Tensor2::zero();
}

CosseratMaterial parse_material(const json& m) {
  const std::string w = "material";
  if (!m.is_object()) throw ConfigError("material: expected an object");
  if (m.contains("l1")) {
    return CosseratMaterial::from_lengths(number(m, "K", w), number(m, "G", w), number(m, "l1", w),
                                          number(m, "l2", w), number(m, "l3", w),
                                          number_or(m, "gc_over_g", 1.0, w));
  }
  if (m.contains("E")) {
    return CosseratMaterial::from_engineering(number(m, "E", w), number(m, "nu", w),
                                              number(m, "Gc", w), number_or(m, "T", 0.0, w),
                                              number(m, "B", w), number(m, "Bc", w));
  }
  return CosseratMaterial::from_moduli(number(m, "K", w), number(m, "G", w), number(m, "Gc", w),
                                       number_or(m, "T", 0.0, w), number(m, "B", w),
                                       number(m, "Bc", w));
}

struct SurfaceSpec {
  CriterionPreset preset;
  double phi = 0.0;  // radians
};

SurfaceSpec parse_surface_spec(const json& s, const std::string& where) {
  const json& name = require(s, "preset", where);
  if (!name.is_string()) throw ConfigError(where + ".preset: expected a string");
  SurfaceSpec out{parse_preset(name.get<std::string>())};
  if (is_frictional(out.preset)) out.phi = number(s, "phi_deg", where) * kDeg;
  return out;
}

void parse_criterion(const json& c, RunConfig& cfg) {
  const std::string w = "criterion";
  const double rounding = number_or(c, "rounding", 0.0, w);
  const SurfaceSpec y = parse_surface_spec(require(c, "yield", w), w + ".yield");
  const SurfaceSpec g =
      c.contains("potential") ? parse_surface_spec(c.at("potential"), w + ".potential") : y;
  cfg.yield_preset = y.preset;
  cfg.potential_preset = g.preset;
  cfg.yield = preset(y.preset, is_frictional(y.preset) ? std::optional(y.phi) : std::nullopt, rounding);
  cfg.potential =
      preset(g.preset, is_frictional(g.preset) ? std::optional(g.phi) : std::nullopt, rounding);

  const json& h = require(c, "hardening", w);
  const double c_i = number(h, "c_i", w + ".hardening");
  cfg.hardening = HardeningLaw{c_i, number_or(h, "c_f", c_i, w + ".hardening"),
                               number_or(h, "a", 0.0, w + ".hardening"), y.phi};
  validate(cfg.hardening);
}

Increment parse_increment(const json& inc, const std::string& where) {
  return Increment{tensor_or_zero(inc, "d_gamma", where), tensor_or_zero(inc, "d_chi", where)};
}

void parse_program(const json& lp, RunConfig& cfg) {
  const std::string w = "load_program";
  if (lp.contains("increments")) {
    const json& list = lp.at("increments");
    if (!list.is_array()) throw ConfigError(w + ".increments: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i)
      cfg.increments.push_back(parse_increment(list[i], w + ".increments[" + std::to_string(i) + "]"));
  }
  if (lp.contains("segments")) {
    const json& list = lp.at("segments");
    if (!list.is_array()) throw ConfigError(w + ".segments: expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string wi = w + ".segments[" + std::to_string(i) + "]";
      Segment seg{parse_increment(list[i], wi), integer_or(list[i], "steps", 1, wi)};
      if (seg.steps < 1) throw ConfigError(wi + ".steps: must be >= 1");
      cfg.segments.push_back(seg);
    }
  }
  if (!cfg.increments.empty() && !cfg.segments.empty())
    throw ConfigError(w + ": give either increments or segments, not both");
  if (cfg.increments.empty() && cfg.segments.empty())
    throw ConfigError(w + ": empty load program");
}

void parse_integrator(const json& it, IntegratorSettings& s) {
  const std::string w = "integrator";
  s.newton_tol = number_or(it, "newton_tol", s.newton_tol, w);
  s.max_iter = integer_or(it, "max_iter", s.max_iter, w);
  s.max_halvings = integer_or(it, "max_halvings", s.max_halvings, w);
  s.max_subdivisions = integer_or(it, "max_subdivisions", s.max_subdivisions, w);
  s.fd_step = number_or(it, "fd_step", s.fd_step, w);
  if (!(s.newton_tol > 0.0) || s.max_iter < 1 || s.max_halvings < 0 || s.max_subdivisions < 0 ||
      !(s.fd_step > 0.0))
    throw ConfigError("integrator: settings out of range");
}

}  // namespace

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << h;
  return os.str();
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config: top level must be an object");
  const json& version = require(doc, "schema_version", "config");
  if (!version.is_number_integer() || version.get<int>() != kSchemaVersion)
    throw ConfigError("config: unsupported schema_version (expected " +
                      std::to_string(kSchemaVersion) + ")");
  RunConfig cfg;
  try {
    cfg.material = parse_material(require(doc, "material", "config"));
    parse_criterion(require(doc, "criterion", "config"), cfg);
    if (doc.contains("initial_state")) {
      const json& s = doc.at("initial_state");
      cfg.initial.sigma = tensor_or_zero(s, "sigma", "initial_state");
      cfg.initial.mu = tensor_or_zero(s, "mu", "initial_state");
      cfg.initial.lambda = number_or(s, "lambda", 0.0, "initial_state");
      if (cfg.initial.lambda < 0.0) throw ConfigError("initial_state.lambda: must be >= 0");
    }
    if (doc.contains("load_program")) parse_program(doc.at("load_program"), cfg);
    if (doc.contains("outputs") && doc.at("outputs").contains("surface")) {
      const json& s = doc.at("outputs").at("surface");
      const std::string w = "outputs.surface";
      cfg.surface.p_section = number_or(s, "p_section", 0.0, w);
      cfg.surface.n_theta = integer_or(s, "n_theta", cfg.surface.n_theta, w);
      cfg.surface.n_p = integer_or(s, "n_p", cfg.surface.n_p, w);
      if (s.contains("p_min")) cfg.surface.p_min = number(s, "p_min", w);
      if (s.contains("p_max")) cfg.surface.p_max = number(s, "p_max", w);
      if (cfg.surface.n_theta < 2 || cfg.surface.n_p < 2)
        throw ConfigError(w + ": n_theta and n_p must be >= 2");
    }
    if (doc.contains("integrator")) parse_integrator(doc.at("integrator"), cfg.integrator);
    if (doc.contains("verify")) {
      cfg.verify.samples = integer_or(doc.at("verify"), "samples", cfg.verify.samples, "verify");
      if (cfg.verify.samples < 1) throw ConfigError("verify.samples: must be >= 1");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.hash = fnv1a_hex(doc.dump());
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw ConfigError("config '" + path + "': " + e.what());
  }
  return parse_config(doc);
}

RunConfig default_config() {
  return parse_config(json::parse(R"({
    "schema_version": 1,
    "material": {"K": 2000, "G": 1000, "Gc": 500, "T": 0, "B": 10, "Bc": 5},
    "criterion": {
      "yield": {"preset": "mohr-coulomb", "phi_deg": 30},
      "potential": {"preset": "drucker-prager", "phi_deg": 10},
      "hardening": {"c_i": 100, "c_f": 20, "a": 10}
    },
    "load_program": {"segments": [{"d_gamma": [0,0.05,0, 0.05,0,0, 0,0,0], "steps": 100}]}
  })"));
}

std::vector<Increment> expand_program(const RunConfig& cfg, std::optional<int> steps_override) {
  if (steps_override && *steps_override < 1) throw ConfigError("--steps: must be >= 1");
  if (cfg.segments.empty()) {
    if (steps_override) throw ConfigError("--steps: only applies to segment load programs");
    return cfg.increments;
  }
  std::vector<Increment> out;
  for (const Segment& seg : cfg.segments) {
    const auto part = proportional_path(seg.total, steps_override.value_or(seg.steps));
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace cosserat::cli
