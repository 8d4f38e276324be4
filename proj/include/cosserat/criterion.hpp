#ifndef COSSERAT_CRITERION_HPP
#define COSSERAT_CRITERION_HPP

#include <optional>
#include <string>
#include <string_view>

#include "cosserat/elasticity.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/**
 * Deviatoric shape of a Generalized Classical surface plus its meridional slope.
 *
 * Gamma(theta) = alpha cos[acos(beta sin 3 theta)/3 - gamma pi/6], where theta is
 * measured so that -pi/6 is triaxial compression (Gamma = 1 there for every preset)
 * and +pi/6 triaxial extension.
 */
struct GCShape {
  double alpha = 1.0;
  double beta = 0.0;
  double gamma = 1.0;
  double Mc = 0.0;
};

enum class CriterionPreset { VonMises, DruckerPrager, Tresca, MohrCoulomb, MatsuokaNakai, LadeDuncan };

/// Parses "von-mises", "drucker-prager", "tresca", "mohr-coulomb", "matsuoka-nakai", "lade-duncan".
CriterionPreset parse_preset(std::string_view name);
std::string preset_name(CriterionPreset preset);
/// Whether the preset needs an angle of shearing resistance.
bool is_frictional(CriterionPreset preset);

/// M_c = 6 sin(phi) / (3 - sin(phi)).
double meridional_slope(double phi);

/**
 * Shape parameters of the named criterion.
 *
 * phi (radians) is required for the frictional presets and must lie in [0, pi/2)
 * ((0, pi/2) for Matsuoka-Nakai and Lade-Duncan). von Mises and Tresca are
 * pressure-insensitive and get Mc = 0. A positive eps_round replaces beta = 1 by
 * 1 - eps_round and rescales alpha so that Gamma(-pi/6) stays 1.
 */
GCShape preset(CriterionPreset name, std::optional<double> phi = std::nullopt,
               double eps_round = 0.0);

/// Throws ParameterDomainError unless alpha > 0, 0 <= beta <= 1, 0 <= gamma <= 1, Mc >= 0.
void validate(const GCShape& shape);

/// Gamma at a compression-referenced angle theta in [-pi/6, pi/6] (InvalidInput otherwise).
double gamma_value(const GCShape& shape, double theta);

/// dGamma/dtheta. Throws CornerSingularity when beta = 1 and |sin 3 theta| = 1.
double gamma_derivative(const GCShape& shape, double theta);

/// Gamma as a function of x = sin 3 theta, and its derivative dGamma/dx.
double gamma_of_sin3(const GCShape& shape, double x);
double dgamma_dsin3(const GCShape& shape, double x);

/// Gamma evaluated at the stress Lode angle theta_s, i.e. gamma_value(shape, -theta_s).
double gamma_at_lode(const GCShape& shape, double theta_s);

/// Exponential cohesion law c'(lambda) = c_f + (c_i - c_f) exp(-a lambda).
struct HardeningLaw {
  double c_i = 0.0;
  double c_f = 0.0;
  double a = 0.0;
  double phi = 0.0;  ///< radians
};

void validate(const HardeningLaw& law);

double cohesion(const HardeningLaw& law, double lambda);
/// sigma0 = c'(lambda) 6 cos(phi) / (3 - sin(phi)).
double sigma0(const HardeningLaw& law, double lambda);
/// dsigma0/dlambda.
double hardening_modulus(const HardeningLaw& law, double lambda);

/// Yield surface f = q Gamma + Mc p - sigma0(lambda) and plastic potential g = q Gamma^ + Mc^ p.
class GCCriterion {
 public:
  GCCriterion(const GCShape& yield, const GCShape& potential, const HardeningLaw& hardening);

  const GCShape& yield() const { return yield_; }
  const GCShape& potential() const { return potential_; }
  const HardeningLaw& hardening() const { return hardening_; }

  bool associated() const;

 private:
  GCShape yield_;
  GCShape potential_;
  HardeningLaw hardening_;
};

/// Stress-space gradient of a surface; d_lambda is zero for the potential.
struct SurfaceGradients {
  Tensor2 d_sigma;
  Tensor2 d_mu;
  double d_lambda = 0.0;
};

/// q Gamma(theta_s) + Mc p for one shape (no cohesion term).
double shape_value(const GCShape& shape, const CosseratMaterial& mat, const Tensor2& sigma,
                   const Tensor2& mu);

/// Gradient of shape_value. The Lode term is dropped within kCornerTol of the corners
/// of a beta = 1 shape. Throws SingularGradient when q is below the floor.
SurfaceGradients shape_gradients(const GCShape& shape, const CosseratMaterial& mat,
                                 const Tensor2& sigma, const Tensor2& mu);

double yield_value(const GCCriterion& cr, const CosseratMaterial& mat, const Tensor2& sigma,
                   const Tensor2& mu, double lambda);
double potential_value(const GCCriterion& cr, const CosseratMaterial& mat, const Tensor2& sigma,
                       const Tensor2& mu);

SurfaceGradients yield_gradients(const GCCriterion& cr, const CosseratMaterial& mat,
                                 const Tensor2& sigma, const Tensor2& mu, double lambda);
SurfaceGradients potential_gradients(const GCCriterion& cr, const CosseratMaterial& mat,
                                     const Tensor2& sigma, const Tensor2& mu);

}  // namespace cosserat

#endif  // COSSERAT_CRITERION_HPP
