#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "cosserat/errors.hpp"
#include "verify.hpp"

using namespace cosserat;
using namespace cosserat::cli;

int main(int argc, char** argv) {
  CLI::App app{"Cosserat elastoplastic material point driver"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = ".";
  std::optional<int> steps;
  std::optional<std::uint64_t> seed;

  CLI::App* sim = app.add_subcommand("simulate", "integrate the load program, write simulate.csv");
  sim->add_option("config", config_path, "JSON config")->required();
  sim->add_option("--steps", steps, "override the step count of every segment");

  CLI::App* surf = app.add_subcommand("surface", "write deviatoric and meridional sections");
  surf->add_option("config", config_path, "JSON config")->required();

  CLI::App* ver = app.add_subcommand("verify", "run the property checks");
  ver->add_option("config", config_path, "JSON config (built-in default if omitted)");
  ver->add_option("--seed", seed, "seed for randomized checks");

  for (CLI::App* sub : {sim, surf}) sub->add_option("--out", out_dir, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigFailure;
  }

  try {
    RunConfig cfg = config_path.empty() ? default_config() : load_config(config_path);
    if (*sim) return cmd_simulate(cfg, out_dir, steps, std::cerr);
    if (*surf) return cmd_surface(cfg, out_dir, std::cerr);
    if (seed) cfg.verify.seed = *seed;
    return cmd_verify(cfg, std::cout);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigFailure;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigFailure;
  }
}
