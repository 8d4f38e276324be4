#include "cosserat/integrator.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cosserat/errors.hpp"
#include "cosserat/invariants.hpp"

namespace cosserat {

namespace {

constexpr int kDim = 19;
using Vec = Eigen::Matrix<double, kDim, 1>;
using Mat = Eigen::Matrix<double, kDim, kDim>;

double stress_scale(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  return std::max(frobenius_norm(sigma), frobenius_norm(mu) / mat.l1());
}

/// Unknowns (sigma, mu, dl) of the corrector and the scales that make them O(1).
struct Scales {
  double stress = 1.0;
  double couple = 1.0;
  double multiplier = 1.0;
  double yield = 1.0;
};

struct Unknowns {
  Tensor2 sigma;
  Tensor2 mu;
  double dl = 0.0;
};

class Corrector {
 public:
  Corrector(const CosseratMaterial& mat, const GCCriterion& cr, const MaterialState& trial,
            const IntegratorSettings& settings)
      : mat_(mat), cr_(cr), trial_(trial), settings_(settings) {
    const double s0 = sigma0(cr.hardening(), trial.lambda);
    scales_.stress = std::max(s0, stress_scale(mat, trial.sigma, trial.mu));
    if (!(scales_.stress > 0.0)) scales_.stress = 1.0;
    scales_.couple = scales_.stress * mat.l1();
    scales_.multiplier = scales_.stress / mat.G();
    scales_.yield = s0 > 0.0 ? s0 : scales_.stress;
  }

  /// Scaled residual; fills the flow direction at x.
  Vec residual(const Unknowns& x, SurfaceGradients& flow) const {
    flow = potential_gradients(cr_, mat_, x.sigma, x.mu);
    const Tensor2 rs = x.sigma - trial_.sigma + x.dl * stress_from_strain(mat_, flow.d_sigma);
    const Tensor2 rm = x.mu - trial_.mu + x.dl * elastic_couple_stress(mat_, flow.d_mu);
    Vec r;
    for (int k = 0; k < 9; ++k) {
      r[k] = rs[k] / scales_.stress;
      r[9 + k] = rm[k] / scales_.couple;
    }
    r[18] = yield_value(cr_, mat_, x.sigma, x.mu, lambda_at(x.dl)) / scales_.yield;
    return r;
  }

  Mat jacobian(const Unknowns& x, const SurfaceGradients& flow) const {
    Mat J = Mat::Zero();
    const SurfaceGradients yg = yield_gradients(cr_, mat_, x.sigma, x.mu, lambda_at(x.dl));
    for (int j = 0; j < 18; ++j) {
      J(j, j) = 1.0;
      J(18, j) = j < 9 ? yg.d_sigma[j] * scales_.stress / scales_.yield
                       : yg.d_mu[j - 9] * scales_.couple / scales_.yield;
    }
    const Tensor2 cn_s = stress_from_strain(mat_, flow.d_sigma);
    const Tensor2 cn_m = elastic_couple_stress(mat_, flow.d_mu);
    for (int k = 0; k < 9; ++k) {
      J(k, 18) = cn_s[k] * scales_.multiplier / scales_.stress;
      J(9 + k, 18) = cn_m[k] * scales_.multiplier / scales_.couple;
    }
    J(18, 18) = yg.d_lambda * scales_.multiplier / scales_.yield;

    if (x.dl == 0.0) return J;
    // Second derivatives of g by central differences of its analytic gradient.
    const double h = settings_.fd_step;
    for (int j = 0; j < 18; ++j) {
      Unknowns plus = x;
      Unknowns minus = x;
      if (j < 9) {
        plus.sigma[j] += h * scales_.stress;
        minus.sigma[j] -= h * scales_.stress;
      } else {
        plus.mu[j - 9] += h * scales_.couple;
        minus.mu[j - 9] -= h * scales_.couple;
      }
      const SurfaceGradients gp = potential_gradients(cr_, mat_, plus.sigma, plus.mu);
      const SurfaceGradients gm = potential_gradients(cr_, mat_, minus.sigma, minus.mu);
      const Tensor2 dns = (gp.d_sigma - gm.d_sigma) / (2.0 * h);
      const Tensor2 dnm = (gp.d_mu - gm.d_mu) / (2.0 * h);
      const Tensor2 cs = stress_from_strain(mat_, dns);
      const Tensor2 cm = elastic_couple_stress(mat_, dnm);
      for (int k = 0; k < 9; ++k) {
        J(k, j) += x.dl * cs[k] / scales_.stress;
        J(9 + k, j) += x.dl * cm[k] / scales_.couple;
      }
    }
    return J;
  }

  Unknowns apply(const Unknowns& x, const Vec& du, double t) const {
    Unknowns y = x;
    for (int k = 0; k < 9; ++k) {
      y.sigma[k] += t * du[k] * scales_.stress;
      y.mu[k] += t * du[9 + k] * scales_.couple;
    }
    y.dl += t * du[18] * scales_.multiplier;
    return y;
  }

  /// Linearized multiplier at the trial state; softening is ignored so the guess stays positive.
  double initial_multiplier() const {
    const SurfaceGradients ng = potential_gradients(cr_, mat_, trial_.sigma, trial_.mu);
    const SurfaceGradients nf = yield_gradients(cr_, mat_, trial_.sigma, trial_.mu, trial_.lambda);
    const double f = yield_value(cr_, mat_, trial_.sigma, trial_.mu, trial_.lambda);
    const double stiff = ddot(nf.d_sigma, stress_from_strain(mat_, ng.d_sigma)) +
                         ddot(nf.d_mu, elastic_couple_stress(mat_, ng.d_mu)) +
                         std::max(0.0, -nf.d_lambda);
    return stiff > 0.0 ? f / stiff : 0.0;
  }

  double lambda_at(double dl) const { return std::max(0.0, trial_.lambda + dl); }

  const Scales& scales() const { return scales_; }

 private:
  const CosseratMaterial& mat_;
  const GCCriterion& cr_;
  const MaterialState& trial_;
  const IntegratorSettings& settings_;
  Scales scales_;
};

struct NewtonOutcome {
  bool converged = false;
  Unknowns x;
  SurfaceGradients flow;
  int iterations = 0;
  double residual = 0.0;
};

NewtonOutcome solve_newton(const Corrector& corrector, const Unknowns& x0,
                           const IntegratorSettings& settings) {
  NewtonOutcome out;
  out.x = x0;
  try {
    Vec r = corrector.residual(out.x, out.flow);
    for (int it = 0; it < settings.max_iter; ++it) {
      if (r.lpNorm<Eigen::Infinity>() <= settings.newton_tol) {
        out.converged = true;
        break;
      }
      const Mat J = corrector.jacobian(out.x, out.flow);
      const Vec du = J.partialPivLu().solve(-r);
      if (!du.allFinite()) break;
      const double r0 = r.norm();
      double t = 1.0;
      Unknowns trial_x;
      SurfaceGradients trial_flow;
      Vec trial_r;
      bool accepted = false;
      for (int halving = 0; halving <= settings.max_halvings; ++halving, t *= 0.5) {
        try {
          trial_x = corrector.apply(out.x, du, t);
          trial_r = corrector.residual(trial_x, trial_flow);
        } catch (const SingularGradient&) {
          continue;
        }
        if (trial_x.dl < 0.0) continue;
        if (trial_r.allFinite() && (trial_r.norm() < r0 || halving == settings.max_halvings)) {
          accepted = true;
          break;
        }
      }
      ++out.iterations;
      if (!accepted) break;
      out.x = trial_x;
      out.flow = trial_flow;
      r = trial_r;
    }
    // Converged to tolerance; a few full steps take the solution to round-off.
    for (int polish = 0; out.converged && polish < 3; ++polish) {
      SurfaceGradients next_flow;
      Unknowns next;
      Vec next_r;
      try {
        const Vec du = corrector.jacobian(out.x, out.flow).partialPivLu().solve(-r);
        next = corrector.apply(out.x, du, 1.0);
        next_r = corrector.residual(next, next_flow);
      } catch (const Error&) {
        break;
      }
      if (!next_r.allFinite() || !(next_r.norm() < r.norm()) || next.dl < 0.0) break;
      out.x = next;
      out.flow = next_flow;
      r = next_r;
    }
    out.residual = r.lpNorm<Eigen::Infinity>();
    if (!out.converged && out.residual <= settings.newton_tol) out.converged = true;
  } catch (const SingularGradient&) {
    out.converged = false;
  } catch (const CornerSingularity&) {
    out.converged = false;
  }
  return out;
}

/**
 * Fallback for trials far outside the surface: scales the deviatoric part of the
 * trial from the surface (where the answer is the trial itself) up to the full
 * trial, and solves each stage from the previous solution. The last stage is the
 * ordinary corrector for the actual trial.
 */
NewtonOutcome solve_continuation(const CosseratMaterial& mat, const GCCriterion& cr,
                                 const MaterialState& trial, const IntegratorSettings& settings) {
  NewtonOutcome out;
  const double p_tr = mean_stress(trial.sigma);
  const Tensor2 pi = p_tr * Tensor2::identity();
  const Tensor2 d_sigma = trial.sigma - pi;
  double s_start = 0.0;
  try {
    const double room = -yield_value(cr, mat, pi, Tensor2::zero(), trial.lambda);
    const double radial = shape_value(cr.yield(), mat, d_sigma, trial.mu);
    if (!(room > 0.0) || !(radial > 0.0)) return out;
    s_start = room / radial;
  } catch (const Error&) {
    return out;
  }
  if (!(s_start > 0.0 && s_start < 1.0)) return out;

  auto staged = [&](double s) {
    MaterialState t = trial;
    t.sigma = pi + s * d_sigma;
    t.mu = s * trial.mu;
    return t;
  };
  double s = s_start;
  double ds = (1.0 - s_start) / 4.0;
  MaterialState t_prev = staged(s);
  Unknowns x{t_prev.sigma, t_prev.mu, 0.0};
  for (int halvings = 0; halvings <= settings.max_halvings;) {
    const double s_next = std::min(1.0, s + ds);
    const MaterialState t_next = staged(s_next);
    const Corrector stage(mat, cr, t_next, settings);
    const NewtonOutcome r = solve_newton(stage, x, settings);
    out.iterations += r.iterations;
    if (r.converged && r.x.dl >= 0.0) {
      x = r.x;
      s = s_next;
      if (s >= 1.0) {
        out.converged = true;
        out.x = r.x;
        out.flow = r.flow;
        out.residual = r.residual;
        return out;
      }
      ds *= 1.5;
    } else {
      ds *= 0.5;
      ++halvings;
    }
  }
  return out;
}

/// Minimum of Gamma over the sector, sampled.
double min_gamma(const GCShape& shape) {
  double m = gamma_of_sin3(shape, -1.0);
  for (int i = 0; i <= 60; ++i) m = std::min(m, gamma_of_sin3(shape, -1.0 + i / 30.0));
  return m;
}

struct ApexOutcome {
  bool valid = false;
  double dl = 0.0;
  double p = 0.0;
};

/// Return to the apex p = sigma0 / Mc, q = 0, using p = p_tr - K Mc^ dl.
ApexOutcome solve_apex(const CosseratMaterial& mat, const GCCriterion& cr,
                       const MaterialState& trial) {
  ApexOutcome out;
  const double M = cr.yield().Mc;
  const double Mg = cr.potential().Mc;
  if (!(M > 0.0) || !(Mg > 0.0)) return out;
  const double p_tr = mean_stress(trial.sigma);
  const double KM = mat.K() * Mg;
  auto h = [&](double dl) {
    return p_tr - KM * dl - sigma0(cr.hardening(), trial.lambda + dl) / M;
  };
  if (!(h(0.0) > 0.0)) return out;
  double lo = 0.0;
  double hi = h(0.0) / KM;
  for (int i = 0; i < 200 && h(hi) > 0.0; ++i) hi *= 2.0;
  if (h(hi) > 0.0) return out;
  for (int i = 0; i < 200 && hi - lo > 1e-17 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0.0 ? lo : hi) = mid;
  }
  out.dl = 0.5 * (lo + hi);
  out.p = p_tr - KM * out.dl;
  out.valid = out.dl > 0.0;
  return out;
}

}  // namespace

MaterialState trial_state(const CosseratMaterial& mat, const MaterialState& state_n,
                          const Increment& inc) {
  MaterialState t = state_n;
  t.sigma += stress_from_strain(mat, inc.d_gamma);
  t.mu += elastic_couple_stress(mat, inc.d_chi);
  return t;
}

double yield_tolerance(const GCCriterion& cr, const CosseratMaterial& mat,
                       const MaterialState& state, const IntegratorSettings& settings) {
  const double s0 = sigma0(cr.hardening(), state.lambda);
  const double scale = s0 > 0.0 ? s0 : stress_scale(mat, state.sigma, state.mu);
  return settings.newton_tol * scale;
}

StepResult return_map(const CosseratMaterial& mat, const GCCriterion& cr,
                      const MaterialState& trial, const IntegratorSettings& settings) {
  StepResult result;
  result.state = trial;
  const double f_trial = yield_value(cr, mat, trial.sigma, trial.mu, trial.lambda);
  if (f_trial <= yield_tolerance(cr, mat, trial, settings)) return result;
  result.plastic = true;

  const double q_tr = q_cosserat(mat, trial.sigma, trial.mu);
  const double three_g = 3.0 * mat.G();
  auto finish_apex = [&](const ApexOutcome& apex) {
    MaterialState& s = result.state;
    s.sigma = apex.p * Tensor2::identity();
    s.mu = Tensor2::zero();
    s.lambda = trial.lambda + apex.dl;
    s.gamma_p += strain_from_stress(mat, trial.sigma - s.sigma);
    s.chi_p += wryness_from_couple_stress(mat, trial.mu);
    result.delta_lambda = apex.dl;
    result.apex = true;
    result.residual = 0.0;
    return result;
  };

  // Trial states whose distortional part is small relative to the apex flow go
  // straight to the apex; the Cauchy-Schwarz bound with min Gamma^ makes this safe.
  const ApexOutcome apex = solve_apex(mat, cr, trial);
  if (apex.valid && q_tr <= three_g * apex.dl * min_gamma(cr.potential())) return finish_apex(apex);

  const Corrector corrector(mat, cr, trial, settings);
  NewtonOutcome newton =
      solve_newton(corrector, {trial.sigma, trial.mu, corrector.initial_multiplier()}, settings);
  if (!newton.converged) {
    const NewtonOutcome cont = solve_continuation(mat, cr, trial, settings);
    if (cont.converged) newton = cont;
    newton.iterations += cont.iterations;
  }
  result.iterations = newton.iterations;
  result.residual = newton.residual;

  const bool usable = newton.converged && newton.x.dl > 0.0 &&
                      q_cosserat(mat, newton.x.sigma, newton.x.mu) > q_floor(newton.x.sigma);
  if (!usable) {
    // Necessary condition for the apex: q_tr <= 3G dl Gamma^(theta_tr).
    const double g_tr = gamma_at_lode(cr.potential(), lode_angle(trial.sigma));
    if (apex.valid && q_tr <= three_g * apex.dl * g_tr * (1.0 + 1e-8)) return finish_apex(apex);
    if (newton.converged && !(newton.x.dl > 0.0))
      throw ConsistencyError("return_map: non-positive plastic multiplier at the solution");
    throw IntegrationError("return_map: Newton did not converge after " +
                           std::to_string(newton.iterations) + " iterations (residual " +
                           std::to_string(newton.residual) + ")");
  }

  MaterialState& s = result.state;
  s.sigma = newton.x.sigma;
  s.mu = newton.x.mu;
  s.lambda = trial.lambda + newton.x.dl;
  s.gamma_p += newton.x.dl * newton.flow.d_sigma;
  s.chi_p += newton.x.dl * newton.flow.d_mu;
  result.delta_lambda = newton.x.dl;
  return result;
}

StepResult integrate_step(const CosseratMaterial& mat, const GCCriterion& cr,
                          const MaterialState& state_n, const Increment& inc,
                          const IntegratorSettings& settings) {
  return return_map(mat, cr, trial_state(mat, state_n, inc), settings);
}

namespace {

StepResult integrate_subdivided(const CosseratMaterial& mat, const GCCriterion& cr,
                                const MaterialState& state_n, const Increment& inc,
                                const IntegratorSettings& settings, int depth) {
  try {
    return integrate_step(mat, cr, state_n, inc, settings);
  } catch (const IntegrationError&) {
    if (depth >= settings.max_subdivisions) throw;
  } catch (const ConsistencyError&) {
    if (depth >= settings.max_subdivisions) throw;
  }
  const Increment half{0.5 * inc.d_gamma, 0.5 * inc.d_chi};
  const StepResult a = integrate_subdivided(mat, cr, state_n, half, settings, depth + 1);
  StepResult b = integrate_subdivided(mat, cr, a.state, half, settings, depth + 1);
  b.plastic = a.plastic || b.plastic;
  b.iterations += a.iterations;
  b.residual = std::max(a.residual, b.residual);
  b.delta_lambda += a.delta_lambda;
  b.substeps += a.substeps;
  return b;
}

}  // namespace

std::vector<StepResult> integrate_path(const CosseratMaterial& mat, const GCCriterion& cr,
                                       const MaterialState& state0,
                                       std::span<const Increment> path,
                                       const IntegratorSettings& settings) {
  std::vector<StepResult> results;
  results.reserve(path.size());
  MaterialState state = state0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    try {
      results.push_back(integrate_subdivided(mat, cr, state, path[i], settings, 0));
    } catch (const Error& e) {
      throw IntegrationError("integrate_path: step " + std::to_string(i) + ": " + e.what(), i);
    }
    state = results.back().state;
  }
  return results;
}

std::vector<Increment> proportional_path(const Increment& total, int steps) {
  if (steps < 1) throw InvalidInput("proportional_path: steps must be >= 1");
  const double w = 1.0 / steps;
  return std::vector<Increment>(static_cast<std::size_t>(steps),
                                Increment{w * total.d_gamma, w * total.d_chi});
}

}  // namespace cosserat
