#include "verify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

#include "commands.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/invariants.hpp"
#include "cosserat/sampling.hpp"

namespace cosserat::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;
constexpr std::array kPresets = {CriterionPreset::VonMises,    CriterionPreset::DruckerPrager,
                                 CriterionPreset::Tresca,      CriterionPreset::MohrCoulomb,
                                 CriterionPreset::MatsuokaNakai, CriterionPreset::LadeDuncan};

struct Tracker {
  CheckResult r;
  Tracker(std::string name, double tol) { r.name = std::move(name), r.tolerance = tol; }
  void add(double err) { r.max_error = std::max(r.max_error, std::isnan(err) ? INFINITY : err); }
  CheckResult done(std::string detail = {}) {
    r.passed = r.max_error <= r.tolerance;
    r.detail = std::move(detail);
    return r;
  }
};

double rel(double a, double b, double floor = 1e-300) {
  return std::abs(a - b) / std::max(std::abs(b), floor);
}

double rel(const Tensor2& a, const Tensor2& b) {
  return frobenius_norm(a - b) / std::max(frobenius_norm(b), 1e-300);
}

template <class F>
Tensor2 fd_gradient(F&& f, const Tensor2& x, double h) {
  Tensor2 g;
  for (std::size_t k = 0; k < 9; ++k) {
    Tensor2 xp = x, xm = x;
    xp[k] += h;
    xm[k] -= h;
    g[k] = (f(xp) - f(xm)) / (2.0 * h);
  }
  return g;
}

GCShape shape_for(CriterionPreset p, double phi_deg) {
  return preset(p, is_frictional(p) ? std::optional(phi_deg * kDeg) : std::nullopt);
}

/// Random stress/couple-stress pair away from Lode corners and the q = 0 axis.
void regular_state(Sampler& s, const CosseratMaterial& mat, double scale, Tensor2& sigma, Tensor2& mu) {
  do {
    sigma = s.tensor(scale);
    mu = s.tensor(scale * mat.l1());
  } while (std::abs(sin3_lode(sigma)) > 0.95 || q_symmetric(sigma) < 0.05 * scale);
}

CheckResult check_lengths(const RunConfig& cfg) {
  const CosseratMaterial& m = cfg.material;
  Tracker t("characteristic lengths", 1e-14);
  t.add(rel(m.l1(), std::sqrt(m.B() / m.G())));
  t.add(rel(m.l2(), std::sqrt(m.Bc() / m.G())));
  t.add(rel(m.l3(), std::sqrt(m.Kc() / (2.0 * m.G()))));
  char buf[160];
  std::snprintf(buf, sizeof buf, "l1=%.10g l2=%.10g l3=%.10g", m.l1(), m.l2(), m.l3());
  return t.done(buf);
}

CheckResult check_normalization(const ShapeHooks& hooks) {
  Tracker t("shape normalization", 1e-9);
  for (CriterionPreset p : kPresets)
    for (double phi : {10.0, 20.0, 30.0, 40.0}) t.add(std::abs(hooks.gamma(shape_for(p, phi), -kPi / 6) - 1.0));
  return t.done();
}

CheckResult check_circular(const ShapeHooks& hooks) {
  Tracker t("circular sections", 1e-12);
  for (CriterionPreset p : {CriterionPreset::VonMises, CriterionPreset::DruckerPrager}) {
    const GCShape sh = shape_for(p, 30.0);
    for (int i = 0; i < 1000; ++i) t.add(std::abs(hooks.gamma(sh, -kPi / 6 + kPi / 3 * i / 999.0) - 1.0));
  }
  return t.done();
}

double mc_exact(const Tensor2& sigma, double c, double phi) {
  Eigen::Matrix3d m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = sigma(i, j);
  const Eigen::Vector3d e = Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d>(m).eigenvalues();
  return 0.5 * (e[2] - e[0]) + 0.5 * (e[2] + e[0]) * std::sin(phi) - c * std::cos(phi);
}

CheckResult check_mohr_coulomb(Sampler& s, int n) {
  Tracker t("mohr-coulomb oracle", 0.0);
  int compared = 0;
  for (double phi_deg : {10.0, 20.0, 30.0, 40.0}) {
    const double phi = phi_deg * kDeg, c = 10.0;
    const GCShape y = shape_for(CriterionPreset::MohrCoulomb, phi_deg);
    const double s0 = c * 6.0 * std::cos(phi) / (3.0 - std::sin(phi));
    for (int i = 0; i < n; ++i) {
      const Tensor2 sigma = s.symmetric(3.0 * c) + s.uniform(-3.0 * c, c) * Tensor2::identity();
      const double exact = mc_exact(sigma, c, phi);
      if (std::abs(exact) <= 1e-8 * (c + frobenius_norm(sigma))) continue;
      const double f = q_symmetric(sigma) * gamma_at_lode(y, lode_angle(sigma)) +
                       y.Mc * mean_stress(sigma) - s0;
      ++compared;
      if ((f > 0.0) != (exact > 0.0)) t.add(1.0);
    }
  }
  return t.done(std::to_string(compared) + " states compared");
}

struct Principal {
  double i1, i2, i3;
};

Principal principal_invariants(const Tensor2& a) {
  const double i1 = trace(a);
  return {i1, 0.5 * (i1 * i1 - ddot(a, transpose(a))), determinant(a)};
}

CheckResult check_locus(Sampler& s, int n, CriterionPreset which) {
  const bool mn = which == CriterionPreset::MatsuokaNakai;
  Tracker t(mn ? "matsuoka-nakai locus" : "lade-duncan locus", 1e-6);
  for (double phi_deg : {10.0, 20.0, 30.0, 40.0}) {
    const double sp = std::sin(phi_deg * kDeg);
    const double k = mn ? (9.0 - sp * sp) / (1.0 - sp * sp)
                        : std::pow(3.0 - sp, 3) / ((1.0 + sp) * (1.0 - sp) * (1.0 - sp));
    const GCShape y = shape_for(which, phi_deg);
    const double s0 = 10.0, apex = s0 / y.Mc;
    for (int i = 0; i < n; ++i) {
      const Tensor2 dir = dev(s.symmetric(1.0));
      const double q = s.uniform(0.1, 3.0) * s0;
      const Tensor2 sd = dir * (q / q_symmetric(dir));
      const double p = (s0 - q * gamma_at_lode(y, lode_angle(sd))) / y.Mc;
      const Principal inv = principal_invariants(sd + (p - apex) * Tensor2::identity());
      t.add(rel(mn ? inv.i1 * inv.i2 / inv.i3 : inv.i1 * inv.i1 * inv.i1 / inv.i3, k));
    }
  }
  return t.done();
}

CheckResult check_mc_ratio() {
  Tracker t("mohr-coulomb strength ratio", 1e-9);
  const GCShape y = shape_for(CriterionPreset::MohrCoulomb, 30.0);
  t.add(std::abs(gamma_value(y, kPi / 6) / gamma_value(y, -kPi / 6) - 1.4));
  return t.done();
}

CheckResult check_hencky(Sampler& s, int n) {
  Tracker t("hencky identity", 1e-12);
  for (int i = 0; i < n; ++i) {
    const CosseratMaterial m = s.material();
    const Tensor2 sigma = s.tensor(100.0), mu = s.tensor(100.0 * m.l1());
    const double q = q_cosserat(m, sigma, mu);
    t.add(rel(distortion_energy(m, sigma, mu), q * q / (6.0 * m.G())));
  }
  return t.done();
}

CheckResult check_transpose(Sampler& s, int n) {
  Tracker t("transpose form", 1e-12);
  for (int i = 0; i < n; ++i) {
    const CosseratMaterial m = s.material();
    Tensor2 sigma, mu;
    s.plane_strain_state(100.0, sigma, mu);
    mu *= m.l1();
    t.add(rel(q_transpose_form(m, sigma, mu), q_cosserat(m, sigma, mu)));
  }
  return t.done();
}

std::vector<CheckResult> check_gradients(const RunConfig& cfg, const ShapeHooks& hooks, Sampler& s,
                                         int n) {
  const CosseratMaterial& m = cfg.material;
  const double scale = 100.0;
  const double tol = 1e-6;
  Tracker dqs("gradient dq/dsigma", tol), dqm("gradient dq/dmu", tol), dth("gradient dtheta/dsigma", tol),
      dgam("gradient dGamma/dtheta", tol), dfs("gradient df/dsigma", tol), dgs("gradient dg/dsigma", tol),
      dgm("gradient dg/dmu", tol);
  for (int i = 0; i < n; ++i) {
    Tensor2 sigma, mu;
    regular_state(s, m, scale, sigma, mu);
    const double hs = 1e-6 * frobenius_norm(sigma);
    const double hm = 1e-6 * std::max(frobenius_norm(mu), 1e-3 * frobenius_norm(sigma) * m.l1());
    dqs.add(rel(dq_dsigma(m, sigma, mu),
                fd_gradient([&](const Tensor2& x) { return q_cosserat(m, x, mu); }, sigma, hs)));
    dqm.add(rel(dq_dmu(m, sigma, mu),
                fd_gradient([&](const Tensor2& x) { return q_cosserat(m, sigma, x); }, mu, hm)));
    dth.add(rel(dlode_dsigma(sigma), fd_gradient([](const Tensor2& x) { return lode_angle(x); }, sigma, hs)));

    const CriterionPreset yp = kPresets[static_cast<std::size_t>(i) % kPresets.size()];
    const CriterionPreset gp = kPresets[static_cast<std::size_t>(i / 6) % kPresets.size()];
    const double phi = s.uniform(10.0, 40.0);
    const GCShape y = shape_for(yp, phi), g = shape_for(gp, 0.5 * phi);
    const double theta = s.uniform(-kPi / 6 + 0.02, kPi / 6 - 0.02);
    const double h = 1e-6;
    dgam.add(rel(hooks.dgamma(y, theta), (hooks.gamma(y, theta + h) - hooks.gamma(y, theta - h)) / (2 * h),
                 1e-6));

    const HardeningLaw law{10.0, 2.0, 3.0, is_frictional(yp) ? phi * kDeg : 0.0};
    const GCCriterion cr(y, g, law);
    const double lam = s.uniform(0.0, 0.5);
    dfs.add(rel(yield_gradients(cr, m, sigma, mu, lam).d_sigma,
                fd_gradient([&](const Tensor2& x) { return yield_value(cr, m, x, mu, lam); }, sigma, hs)));
    const SurfaceGradients ng = potential_gradients(cr, m, sigma, mu);
    dgs.add(rel(ng.d_sigma,
                fd_gradient([&](const Tensor2& x) { return potential_value(cr, m, x, mu); }, sigma, hs)));
    dgm.add(rel(ng.d_mu,
                fd_gradient([&](const Tensor2& x) { return potential_value(cr, m, sigma, x); }, mu, hm)));
  }
  return {dqs.done(), dqm.done(), dth.done(), dgam.done(), dfs.done(), dgs.done(), dgm.done()};
}

CheckResult check_isotropy(const RunConfig& cfg, Sampler& s, int n) {
  Tracker t("isotropy", 1e-10);
  const CosseratMaterial& m = cfg.material;
  const GCCriterion cr = cfg.criterion();
  for (int i = 0; i < n; ++i) {
    Tensor2 sigma, mu;
    regular_state(s, m, 100.0, sigma, mu);
    const Tensor2 r = s.rotation();
    const Tensor2 rs = rotate(sigma, r), rm = rotate(mu, r);
    const double scale = frobenius_norm(sigma);
    const InvariantSet a = invariants(m, sigma, mu), b = invariants(m, rs, rm);
    t.add(std::abs(a.p - b.p) / scale);
    t.add(rel(b.q, a.q));
    t.add(std::abs(a.theta_s - b.theta_s) / (kPi / 6));
    t.add(std::abs(yield_value(cr, m, sigma, mu, 0.1) - yield_value(cr, m, rs, rm, 0.1)) / scale);
    t.add(std::abs(potential_value(cr, m, sigma, mu) - potential_value(cr, m, rs, rm)) / scale);
  }
  return t.done();
}

std::vector<CheckResult> check_returns(const RunConfig& cfg, Sampler& s, int n) {
  const CosseratMaterial& m = cfg.material;
  const double s0 = 10.0;
  Tracker vm("return map: von mises radial", 1e-10), dp("return map: drucker-prager linear", 1e-10),
      pu("return map: p update", 1e-12);

  const GCShape v = shape_for(CriterionPreset::VonMises, 0.0);
  const GCCriterion vcr(v, v, HardeningLaw{0.5 * s0, 0.5 * s0, 0.0, 0.0});
  for (int i = 0; i < n; ++i) {
    MaterialState trial;
    trial.sigma = s.symmetric(1.0);
    trial.sigma = trial.sigma * (s.uniform(1.01, 5.0) * s0 / q_symmetric(trial.sigma)) +
                  s.uniform(-s0, s0) * Tensor2::identity();
    const double q_tr = q_symmetric(trial.sigma);
    const StepResult r = return_map(m, vcr, trial, cfg.integrator);
    vm.add(rel(q_symmetric(r.state.sigma), s0));
    vm.add(rel(r.delta_lambda, (q_tr - s0) / (3.0 * m.G())));
  }

  const double phi = 30.0 * kDeg;
  const GCShape d = shape_for(CriterionPreset::DruckerPrager, 30.0);
  const double c = s0 * (3.0 - std::sin(phi)) / (6.0 * std::cos(phi));
  const GCCriterion dcr(d, d, HardeningLaw{c, c, 0.0, phi});
  int tested = 0;
  for (int i = 0; tested < n && i < 50 * n; ++i) {
    MaterialState trial;
    trial.sigma = s.symmetric(1.0);
    const double p_tr = s.uniform(-3.0, 0.5) * s0 / d.Mc;
    trial.sigma = dev(trial.sigma) * (s.uniform(0.0, 5.0) * s0 / q_symmetric(dev(trial.sigma))) +
                  p_tr * Tensor2::identity();
    const double q_tr = q_symmetric(trial.sigma);
    const double f_tr = q_tr + d.Mc * p_tr - s0;
    const double dl = f_tr / (3.0 * m.G() + m.K() * d.Mc * d.Mc);
    if (f_tr <= 1e-6 * s0 || q_tr - 3.0 * m.G() * dl <= 1e-3 * s0) continue;
    const StepResult r = return_map(m, dcr, trial, cfg.integrator);
    ++tested;
    dp.add(rel(r.delta_lambda, dl));
    dp.add(rel(mean_stress(r.state.sigma), p_tr - m.K() * d.Mc * dl, s0));
    dp.add(rel(q_symmetric(r.state.sigma), q_tr - 3.0 * m.G() * dl, s0));
  }

  int plastic = 0, failed = 0;
  for (int i = 0; i < n; ++i) {
    const CriterionPreset yp = kPresets[static_cast<std::size_t>(i) % kPresets.size()];
    const double phi_deg = s.uniform(10.0, 40.0);
    const GCShape y = shape_for(yp, phi_deg);
    const GCShape g = shape_for(CriterionPreset::DruckerPrager, s.uniform(0.0, phi_deg));
    const GCCriterion cr(y, g, HardeningLaw{c, 0.2 * c, s.uniform(0.0, 10.0), is_frictional(yp) ? phi_deg * kDeg : 0.0});
    MaterialState trial;
    regular_state(s, m, 1.0, trial.sigma, trial.mu);
    const double apex = y.Mc > 0.0 ? sigma0(cr.hardening(), 0.0) / y.Mc : s0;
    trial.sigma += (s.uniform(-2.0, 0.5) * apex - mean_stress(trial.sigma)) * Tensor2::identity();
    const double p_room = sigma0(cr.hardening(), 0.0) - y.Mc * mean_stress(trial.sigma);
    const double qd = shape_value(y, m, trial.sigma, trial.mu) - y.Mc * mean_stress(trial.sigma);
    const double k = p_room * s.uniform(1.05, 2.0) / qd;
    trial.sigma = dev(trial.sigma) * k + mean_stress(trial.sigma) * Tensor2::identity();
    trial.mu = trial.mu * k;
    try {
      const StepResult r = return_map(m, cr, trial, cfg.integrator);
      if (!r.plastic) continue;
      ++plastic;
      pu.add(std::abs(mean_stress(r.state.sigma) -
                      (mean_stress(trial.sigma) - m.K() * g.Mc * r.delta_lambda)) /
             std::max(s0, std::abs(mean_stress(trial.sigma))));
    } catch (const Error&) {
      ++failed;
    }
  }
  return {vm.done(), dp.done(std::to_string(tested) + " cases"),
          pu.done(std::to_string(plastic) + " plastic steps, " + std::to_string(failed) +
                  " unconverged (corner returns) skipped")};
}

}  // namespace

std::vector<CheckResult> run_checks(const RunConfig& cfg, const ShapeHooks& hooks) {
  Sampler s(cfg.verify.seed);
  const int n = cfg.verify.samples;
  std::vector<CheckResult> out;
  out.push_back(check_lengths(cfg));
  out.push_back(check_normalization(hooks));
  out.push_back(check_circular(hooks));
  out.push_back(check_mohr_coulomb(s, std::max(n, 250)));
  out.push_back(check_locus(s, n, CriterionPreset::MatsuokaNakai));
  out.push_back(check_locus(s, n, CriterionPreset::LadeDuncan));
  out.push_back(check_mc_ratio());
  out.push_back(check_hencky(s, n));
  out.push_back(check_transpose(s, n));
  for (CheckResult& r : check_gradients(cfg, hooks, s, n)) out.push_back(std::move(r));
  out.push_back(check_isotropy(cfg, s, n));
  for (CheckResult& r : check_returns(cfg, s, n)) out.push_back(std::move(r));
  return out;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, const ShapeHooks& hooks) {
  bool all = true;
  for (const CheckResult& r : run_checks(cfg, hooks)) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s  %-34s max_err=%.3e tol=%.1e", r.passed ? "PASS" : "FAIL",
                  r.name.c_str(), r.max_error, r.tolerance);
    out << buf;
    if (!r.detail.empty()) out << "  (" << r.detail << ")";
    out << "\n";
    all = all && r.passed;
  }
  return all ? kOk : kCheckFailed;
}

}  // namespace cosserat::cli
