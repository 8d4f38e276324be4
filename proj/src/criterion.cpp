#include "cosserat/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cosserat/errors.hpp"
#include "cosserat/invariants.hpp"

namespace cosserat {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSixth = kPi / 6.0;

bool is_sharp(const GCShape& shape) { return shape.beta >= 1.0 - 1e-15; }

double require_phi(std::optional<double> phi, CriterionPreset name) {
  if (!phi) throw ParameterDomainError("preset " + preset_name(name) + ": phi is required");
  if (!(*phi >= 0.0 && *phi < kPi / 2.0))
    throw ParameterDomainError("preset " + preset_name(name) + ": phi must lie in [0, 90) degrees");
  return *phi;
}

}  // namespace

CriterionPreset parse_preset(std::string_view name) {
  if (name == "von-mises") return CriterionPreset::VonMises;
  if (name == "drucker-prager") return CriterionPreset::DruckerPrager;
  if (name == "tresca") return CriterionPreset::Tresca;
  if (name == "mohr-coulomb") return CriterionPreset::MohrCoulomb;
  if (name == "matsuoka-nakai") return CriterionPreset::MatsuokaNakai;
  if (name == "lade-duncan") return CriterionPreset::LadeDuncan;
  throw ParameterDomainError("unknown criterion preset '" + std::string(name) + "'");
}

std::string preset_name(CriterionPreset preset) {
  switch (preset) {
    case CriterionPreset::VonMises: return "von-mises";
    case CriterionPreset::DruckerPrager: return "drucker-prager";
    case CriterionPreset::Tresca: return "tresca";
    case CriterionPreset::MohrCoulomb: return "mohr-coulomb";
    case CriterionPreset::MatsuokaNakai: return "matsuoka-nakai";
    case CriterionPreset::LadeDuncan: return "lade-duncan";
  }
  return "unknown";
}

bool is_frictional(CriterionPreset preset) {
  return preset != CriterionPreset::VonMises && preset != CriterionPreset::Tresca;
}

double meridional_slope(double phi) {
  const double s = std::sin(phi);
  return 6.0 * s / (3.0 - s);
}

GCShape preset(CriterionPreset name, std::optional<double> phi, double eps_round) {
  if (!(eps_round >= 0.0 && eps_round < 1.0))
    throw ParameterDomainError("rounding parameter must lie in [0, 1)");
  GCShape shape;
  switch (name) {
    case CriterionPreset::VonMises:
      shape = {1.0, 0.0, 1.0, 0.0};
      break;
    case CriterionPreset::DruckerPrager:
      shape = {1.0, 0.0, 1.0, meridional_slope(require_phi(phi, name))};
      break;
    case CriterionPreset::Tresca:
      shape = {1.0 / std::cos(kSixth), 1.0, 1.0, 0.0};
      break;
    case CriterionPreset::MohrCoulomb: {
      const double p = require_phi(phi, name);
      const double gbar = 6.0 / kPi * std::atan(std::sin(p) / std::sqrt(3.0));
      shape = {1.0 / std::cos((gbar + 1.0) * kSixth), 1.0, 1.0 - gbar, meridional_slope(p)};
      break;
    }
    case CriterionPreset::MatsuokaNakai: {
      const double p = require_phi(phi, name);
      if (!(p > 0.0)) throw ParameterDomainError("matsuoka-nakai: phi must be positive");
      const double s2 = std::sin(p) * std::sin(p);
      const double k = (9.0 - s2) / (1.0 - s2);
      const double a1 = (k - 3.0) / (k - 9.0);
      const double a2 = k / (k - 9.0);
      const double mc = meridional_slope(p);
      shape = {2.0 / 3.0 * std::sqrt(a1) * mc, a2 / std::pow(a1, 1.5), 0.0, mc};
      break;
    }
    case CriterionPreset::LadeDuncan: {
      const double p = require_phi(phi, name);
      if (!(p > 0.0)) throw ParameterDomainError("lade-duncan: phi must be positive");
      const double s = std::sin(p);
      const double k = std::pow(3.0 - s, 3) / ((1.0 + s) * (1.0 - s) * (1.0 - s));
      const double a1 = k / (k - 27.0);
      const double mc = meridional_slope(p);
      shape = {2.0 / 3.0 * std::sqrt(a1) * mc, a1 / std::pow(a1, 1.5), 0.0, mc};
      break;
    }
  }
  if (shape.beta > 1.0 + 1e-12)
    throw ParameterDomainError("preset " + preset_name(name) + ": beta exceeds 1");
  if (eps_round > 0.0 && is_sharp(shape)) {
    shape.beta = 1.0 - eps_round;
    shape.alpha = 1.0;
    shape.alpha = 1.0 / gamma_of_sin3(shape, -1.0);
  }
  validate(shape);
  return shape;
}

void validate(const GCShape& shape) {
  if (!(shape.alpha > 0.0) || !std::isfinite(shape.alpha))
    throw ParameterDomainError("shape: alpha must be positive");
  if (!(shape.beta >= 0.0 && shape.beta <= 1.0))
    throw ParameterDomainError("shape: beta must lie in [0, 1]");
  if (!(shape.gamma >= 0.0 && shape.gamma <= 1.0))
    throw ParameterDomainError("shape: gamma must lie in [0, 1]");
  if (!(shape.Mc >= 0.0) || !std::isfinite(shape.Mc))
    throw ParameterDomainError("shape: Mc must be non-negative");
}

double gamma_of_sin3(const GCShape& shape, double x) {
  const double arg = std::clamp(shape.beta * x, -1.0, 1.0);
  return shape.alpha * std::cos(std::acos(arg) / 3.0 - shape.gamma * kSixth);
}

double dgamma_dsin3(const GCShape& shape, double x) {
  const double bx = std::clamp(shape.beta * x, -1.0, 1.0);
  const double root = std::sqrt(1.0 - bx * bx);
  if (shape.beta == 0.0) return 0.0;
  if (!(root > 0.0)) throw CornerSingularity("dGamma/dsin3theta: corner of a sharp shape");
  const double psi = std::acos(bx) / 3.0 - shape.gamma * kSixth;
  return shape.alpha * shape.beta * std::sin(psi) / (3.0 * root);
}

double gamma_value(const GCShape& shape, double theta) {
  if (!(std::abs(theta) <= kSixth * (1.0 + 1e-12)))
    throw InvalidInput("gamma_value: theta outside [-pi/6, pi/6]");
  return gamma_of_sin3(shape, std::sin(3.0 * theta));
}

double gamma_derivative(const GCShape& shape, double theta) {
  if (!(std::abs(theta) <= kSixth * (1.0 + 1e-12)))
    throw InvalidInput("gamma_derivative: theta outside [-pi/6, pi/6]");
  const double x = std::sin(3.0 * theta);
  if (shape.beta == 0.0) return 0.0;
  if (is_sharp(shape) && std::abs(x) > 1.0 - kCornerTol)
    throw CornerSingularity("gamma_derivative: corner of a sharp shape");
  return dgamma_dsin3(shape, x) * 3.0 * std::cos(3.0 * theta);
}

double gamma_at_lode(const GCShape& shape, double theta_s) { return gamma_value(shape, -theta_s); }

void validate(const HardeningLaw& law) {
  if (!(law.c_i >= 0.0) || !std::isfinite(law.c_i))
    throw ParameterDomainError("hardening: c_i must be non-negative");
  if (!(law.c_f >= 0.0) || !std::isfinite(law.c_f))
    throw ParameterDomainError("hardening: c_f must be non-negative");
  if (!(law.a >= 0.0) || !std::isfinite(law.a))
    throw ParameterDomainError("hardening: a must be non-negative");
  if (!(law.phi >= 0.0 && law.phi < kPi / 2.0))
    throw ParameterDomainError("hardening: phi must lie in [0, 90) degrees");
}

double cohesion(const HardeningLaw& law, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidInput("cohesion: lambda must be non-negative");
  return law.c_f + (law.c_i - law.c_f) * std::exp(-law.a * lambda);
}

namespace {
double cohesion_factor(const HardeningLaw& law) {
  return 6.0 * std::cos(law.phi) / (3.0 - std::sin(law.phi));
}
}  // namespace

double sigma0(const HardeningLaw& law, double lambda) {
  return cohesion(law, lambda) * cohesion_factor(law);
}

double hardening_modulus(const HardeningLaw& law, double lambda) {
  if (!(lambda >= 0.0)) throw InvalidInput("hardening_modulus: lambda must be non-negative");
  return -law.a * (law.c_i - law.c_f) * std::exp(-law.a * lambda) * cohesion_factor(law);
}

GCCriterion::GCCriterion(const GCShape& yield, const GCShape& potential,
                         const HardeningLaw& hardening)
    : yield_(yield), potential_(potential), hardening_(hardening) {
  validate(yield_);
  validate(potential_);
  validate(hardening_);
}

bool GCCriterion::associated() const {
  return yield_.alpha == potential_.alpha && yield_.beta == potential_.beta &&
         yield_.gamma == potential_.gamma && yield_.Mc == potential_.Mc;
}

double shape_value(const GCShape& shape, const CosseratMaterial& mat, const Tensor2& sigma,
                   const Tensor2& mu) {
  const double q = q_cosserat(mat, sigma, mu);
  // Gamma is referenced to compression, the stress Lode angle to its own sign convention.
  return q * gamma_of_sin3(shape, -sin3_lode(sigma)) + shape.Mc * mean_stress(sigma);
}

SurfaceGradients shape_gradients(const GCShape& shape, const CosseratMaterial& mat,
                                 const Tensor2& sigma, const Tensor2& mu) {
  const double q = q_cosserat(mat, sigma, mu);
  if (q <= q_floor(sigma)) throw SingularGradient("surface gradient: q below floor");
  const double x = -sin3_lode(sigma);
  const double gam = gamma_of_sin3(shape, x);
  SurfaceGradients g;
  g.d_sigma = shape.Mc / 3.0 * Tensor2::identity() + gam * dq_dsigma(mat, sigma, mu);
  g.d_mu = gam * dq_dmu(mat, sigma, mu);
  const bool corner = is_sharp(shape) && std::abs(x) > 1.0 - kCornerTol;
  if (shape.beta != 0.0 && !corner) {
    g.d_sigma -= q * dgamma_dsin3(shape, x) * dsin3_lode_dsigma(sigma);
  }
  return g;
}

double yield_value(const GCCriterion& cr, const CosseratMaterial& mat, const Tensor2& sigma,
                   const Tensor2& mu, double lambda) {
  return shape_value(cr.yield(), mat, sigma, mu) - sigma0(cr.hardening(), lambda);
}

double potential_value(const GCCriterion& cr, const CosseratMaterial& mat, const Tensor2& sigma,
                       const Tensor2& mu) {
  return shape_value(cr.potential(), mat, sigma, mu);
}

SurfaceGradients yield_gradients(const GCCriterion& cr, const CosseratMaterial& mat,
                                 const Tensor2& sigma, const Tensor2& mu, double lambda) {
  SurfaceGradients g = shape_gradients(cr.yield(), mat, sigma, mu);
  g.d_lambda = -hardening_modulus(cr.hardening(), lambda);
  return g;
}

SurfaceGradients potential_gradients(const GCCriterion& cr, const CosseratMaterial& mat,
                                     const Tensor2& sigma, const Tensor2& mu) {
  return shape_gradients(cr.potential(), mat, sigma, mu);
}

}  // namespace cosserat
