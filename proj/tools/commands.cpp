#include "commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <ostream>
#include <span>

#include "cosserat/errors.hpp"
#include "cosserat/invariants.hpp"

namespace cosserat::cli {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void header(std::ostream& out, const RunConfig& cfg, const char* what) {
  out << "# cosserat " << what << "\n"
      << "# config_hash fnv1a64:" << cfg.hash << "\n"
      << "# units: stresses, p, q, cohesion in config stress units; couple stresses in "
         "stress*length; angles in radians; lambda dimensionless\n";
}

void write_row(std::ostream& out, const GCCriterion& cr, const CosseratMaterial& mat,
               std::size_t step, const MaterialState& s, bool plastic, int iterations) {
  const InvariantSet inv = invariants(mat, s.sigma, s.mu);
  out << step << ',' << fmt(inv.p) << ',' << fmt(inv.q) << ',' << fmt(inv.q_s) << ','
      << fmt(inv.theta_s) << ',' << fmt(s.lambda) << ',' << fmt(cohesion(cr.hardening(), s.lambda))
      << ',' << fmt(yield_value(cr, mat, s.sigma, s.mu, s.lambda));
  for (std::size_t k = 0; k < 9; ++k) out << ',' << fmt(s.sigma[k]);
  for (std::size_t k = 0; k < 9; ++k) out << ',' << fmt(s.mu[k]);
  out << ',' << (plastic ? 1 : 0) << ',' << iterations << '\n';
}

std::ofstream open_output(const std::string& dir, const std::string& name) {
  std::filesystem::create_directories(dir);
  const std::filesystem::path path = std::filesystem::path(dir) / name;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write '" + path.string() + "'");
  return out;
}

/// Maps a full-plane angle to the sector angle via the 6-fold symmetry.
double sector_angle(double omega) {
  double u = std::fmod(omega, 2.0 * kPi / 3.0);
  if (u < 0.0) u += 2.0 * kPi / 3.0;
  if (u > kPi / 3.0) u = 2.0 * kPi / 3.0 - u;
  return u - kPi / 6.0;
}

}  // namespace

int write_simulation(const RunConfig& cfg, std::optional<int> steps_override, std::ostream& out,
                     std::ostream& diag) {
  const std::vector<Increment> program = expand_program(cfg, steps_override);
  const GCCriterion cr = cfg.criterion();
  header(out, cfg, "simulate");
  out << "# step 0 is the initial state\n";
  out << "step,p,q,q_s,theta_s,lambda,cohesion,f";
  for (const char* t : {"sigma", "mu"})
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j) out << ',' << t << i << j;
  out << ",plastic,iterations\n";

  MaterialState state = cfg.initial;
  write_row(out, cr, cfg.material, 0, state, false, 0);
  for (std::size_t i = 0; i < program.size(); ++i) {
    try {
      const auto res = integrate_path(cfg.material, cr, state, std::span(&program[i], 1),
                                      cfg.integrator);
      state = res.front().state;
      write_row(out, cr, cfg.material, i + 1, state, res.front().plastic, res.front().iterations);
    } catch (const Error& e) {
      diag << "integration failed at step " << i + 1 << ": " << e.what() << "\n";
      return kIntegrationFailure;
    }
  }
  return kOk;
}

void write_deviatoric_section(const RunConfig& cfg, std::ostream& out) {
  const GCShape& y = cfg.yield;
  const double s0 = sigma0(cfg.hardening, cfg.initial.lambda);
  const double numer = s0 - y.Mc * cfg.surface.p_section;
  if (numer < 0.0)
    throw ConfigError("outputs.surface.p_section: beyond the apex (negative radius)");
  header(out, cfg, "surface deviatoric section");
  out << "# p_section " << fmt(cfg.surface.p_section) << "; omega = 0 is the compression meridian\n";
  out << "omega,theta_s,gamma,r,x,y\n";
  const int per_sector = cfg.surface.n_theta - 1;
  const int n = 6 * per_sector;
  for (int k = 0; k <= n; ++k) {
    const double omega = 2.0 * kPi * k / n;
    const double theta_c = sector_angle(omega);
    const double g = gamma_value(y, theta_c);
    const double r = numer / g;
    out << fmt(omega) << ',' << fmt(-theta_c) << ',' << fmt(g) << ',' << fmt(r) << ','
        << fmt(r * std::cos(omega)) << ',' << fmt(r * std::sin(omega)) << '\n';
  }
}

void write_meridional_section(const RunConfig& cfg, std::ostream& out) {
  const GCShape& y = cfg.yield;
  const double s0 = sigma0(cfg.hardening, cfg.initial.lambda);
  const double reach = s0 > 0.0 ? 2.0 * s0 : 1.0;
  const double apex = y.Mc > 0.0 ? s0 / y.Mc : reach;
  const double p_min = cfg.surface.p_min.value_or(y.Mc > 0.0 ? -2.0 * apex : -reach);
  const double p_max = cfg.surface.p_max.value_or(apex);
  if (!(p_max > p_min)) throw ConfigError("outputs.surface: p_max must exceed p_min");
  header(out, cfg, "surface meridional section");
  out << "# compression meridian, q = sigma0 - Mc p\n";
  out << "p,q\n";
  for (int k = 0; k < cfg.surface.n_p; ++k) {
    const double p = p_min + (p_max - p_min) * k / (cfg.surface.n_p - 1);
    out << fmt(p) << ',' << fmt(s0 - y.Mc * p) << '\n';
  }
}

int cmd_simulate(const RunConfig& cfg, const std::string& out_dir,
                 std::optional<int> steps_override, std::ostream& diag) {
  std::ofstream out = open_output(out_dir, "simulate.csv");
  return write_simulation(cfg, steps_override, out, diag);
}

int cmd_surface(const RunConfig& cfg, const std::string& out_dir, std::ostream&) {
  std::ofstream dev = open_output(out_dir, "surface_deviatoric.csv");
  write_deviatoric_section(cfg, dev);
  std::ofstream mer = open_output(out_dir, "surface_meridional.csv");
  write_meridional_section(cfg, mer);
  return kOk;
}

}  // namespace cosserat::cli
