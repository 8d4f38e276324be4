#ifndef COSSERAT_INVARIANTS_HPP
#define COSSERAT_INVARIANTS_HPP

#include "cosserat/elasticity.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// |sin 3 theta| threshold above which the Lode-angle gradient is treated as singular.
inline constexpr double kCornerTol = 1e-9;

struct InvariantSet {
  double p = 0.0;        ///< mean stress tr(sigma)/3
  double q = 0.0;        ///< Cosserat equivalent von Mises stress
  double q_s = 0.0;      ///< sqrt(3/2 s_sym:s_sym)
  double theta_s = 0.0;  ///< Lode angle of s_sym, in [-pi/6, pi/6]
};

/// Hydrostatic-axis threshold 1e-10 * max(1, ||sigma||).
double q_floor(const Tensor2& sigma);

double mean_stress(const Tensor2& sigma);

/// sqrt(3/2 s_sym:s_sym), symmetric deviator only.
double q_symmetric(const Tensor2& sigma);

/// q = sqrt(3/2 [s_sym:s_sym + G/Gc s_skw:s_skw + G/B m_sym:m_sym + G/Bc m_skw:m_skw
///              + 2G/Kc tr^2(mu)/9]), so that q^2 / (6G) is the distortion energy.
double q_cosserat(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// Equivalent stress written with s:s and s:s^T (and m:m, m:m^T). Only valid in
/// plane strain (in-plane sigma, mu with row 3 in-plane entries only); throws
/// InvalidInput otherwise.
double q_transpose_form(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// True when sigma has no out-of-plane shear and mu only has mu_31, mu_32.
bool is_plane_strain(const Tensor2& sigma, const Tensor2& mu, double rel_tol = 1e-12);

/// -(27/2) det(s_sym) / q_s^3 clamped to [-1, 1]; 0 on the hydrostatic axis.
double sin3_lode(const Tensor2& sigma);

/// theta_s = asin(sin3_lode)/3.
double lode_angle(const Tensor2& sigma);

InvariantSet invariants(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// dq/dsigma = 3/(2q) [s_sym + G/Gc s_skw]. Throws SingularGradient if q is below q_floor.
Tensor2 dq_dsigma(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// dq/dmu = 3/(2q) [G/B m_sym + G/Bc m_skw] + G tr(mu)/(3 Kc q) I.
Tensor2 dq_dmu(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// Gradient of sin3_lode with respect to sigma (symmetric, traceless).
/// Zero on the hydrostatic axis.
Tensor2 dsin3_lode_dsigma(const Tensor2& sigma);

/// dtheta_s/dsigma. Zero on the hydrostatic axis; throws CornerSingularity when
/// |sin 3 theta| > 1 - kCornerTol.
Tensor2 dlode_dsigma(const Tensor2& sigma);

}  // namespace cosserat

#endif  // COSSERAT_INVARIANTS_HPP
