#ifndef COSSERAT_INTEGRATOR_HPP
#define COSSERAT_INTEGRATOR_HPP

#include <span>
#include <vector>

#include "cosserat/criterion.hpp"
#include "cosserat/elasticity.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

struct MaterialState {
  Tensor2 sigma;     ///< stress
  Tensor2 mu;        ///< couple stress
  double lambda = 0.0;  ///< accumulated plastic multiplier
  Tensor2 gamma_p;   ///< plastic Cosserat strain
  Tensor2 chi_p;     ///< plastic wryness
};

struct StepResult {
  MaterialState state;
  bool plastic = false;
  int iterations = 0;
  double residual = 0.0;      ///< scaled infinity norm of the final residual
  double delta_lambda = 0.0;  ///< plastic multiplier increment of the step
  bool apex = false;          ///< return went to the cone apex
  int substeps = 1;
};

/// Strain and wryness increment of one load step.
struct Increment {
  Tensor2 d_gamma;
  Tensor2 d_chi;
};

struct IntegratorSettings {
  double newton_tol = 1e-10;
  int max_iter = 50;
  int max_halvings = 10;
  int max_subdivisions = 20;
  /// Relative step of the finite-difference Hessian of the potential.
  double fd_step = 1e-7;
};

/// Elastic predictor: sigma_n + C[d_gamma], mu_n + D[d_chi]; lambda and plastic strains unchanged.
MaterialState trial_state(const CosseratMaterial& mat, const MaterialState& state_n,
                          const Increment& inc);

/// Yield tolerance newton_tol * (sigma0(lambda) or a stress scale of the state when sigma0 = 0).
double yield_tolerance(const GCCriterion& cr, const CosseratMaterial& mat,
                       const MaterialState& state, const IntegratorSettings& settings = {});

/**
 * Plastic corrector.
 *
 * Returns the trial unchanged (plastic = false) when f(trial) <= yield_tolerance.
 * Otherwise solves sigma = sigma_tr - C[dl dg/dsigma], mu = mu_tr - D[dl dg/dmu],
 * f(sigma, mu, lambda_n + dl) = 0 by Newton with a halving line search, falling
 * back to the cone apex for pressure-sensitive surfaces. Throws IntegrationError
 * on non-convergence and ConsistencyError if dl <= 0 at the solution.
 */
StepResult return_map(const CosseratMaterial& mat, const GCCriterion& cr,
                      const MaterialState& trial, const IntegratorSettings& settings = {});

/// trial_state followed by return_map.
StepResult integrate_step(const CosseratMaterial& mat, const GCCriterion& cr,
                          const MaterialState& state_n, const Increment& inc,
                          const IntegratorSettings& settings = {});

/// One StepResult per increment; failing increments are bisected up to
/// settings.max_subdivisions levels. Throws IntegrationError with the step index.
std::vector<StepResult> integrate_path(const CosseratMaterial& mat, const GCCriterion& cr,
                                       const MaterialState& state0,
                                       std::span<const Increment> path,
                                       const IntegratorSettings& settings = {});

/// Splits a total increment into n equal increments.
std::vector<Increment> proportional_path(const Increment& total, int steps);

}  // namespace cosserat

#endif  // COSSERAT_INTEGRATOR_HPP
