#ifndef COSSERAT_ELASTICITY_HPP
#define COSSERAT_ELASTICITY_HPP

#include "cosserat/tensor.hpp"

namespace cosserat {

/**
 * Isotropic linear Cosserat elastic moduli.
 *
 * K, G and Gc carry stress units; T, B and Bc carry moment per unit length.
 * Kc = T + 2B/3 and the three characteristic lengths are derived. Instances
 * are validated on construction and immutable afterwards.
 */
class CosseratMaterial {
 public:
  /// Six moduli directly. Throws ParameterDomainError unless K, G, Gc, B, Bc, Kc > 0.
  static CosseratMaterial from_moduli(double K, double G, double Gc, double T, double B, double Bc);

  /// Young's modulus and Poisson's ratio for K and G; Cosserat moduli as given.
  static CosseratMaterial from_engineering(double E, double nu, double Gc, double T, double B,
                                           double Bc);

  /// Bulk and shear moduli plus the three characteristic lengths and Gc/G.
  /// Solves B = G l1^2, Bc = G l2^2, Kc = 2G l3^2 and T = Kc - 2B/3.
  static CosseratMaterial from_lengths(double K, double G, double l1, double l2, double l3,
                                       double gc_over_g);

  double K() const { return K_; }
  double G() const { return G_; }
  double Gc() const { return Gc_; }
  double T() const { return T_; }
  double B() const { return B_; }
  double Bc() const { return Bc_; }
  double Kc() const { return Kc_; }

  double l1() const { return l1_; }
  double l2() const { return l2_; }
  double l3() const { return l3_; }

 private:
  CosseratMaterial(double K, double G, double Gc, double T, double B, double Bc);

  double K_, G_, Gc_, T_, B_, Bc_;
  double Kc_;
  double l1_, l2_, l3_;
};

/// sigma = K tr(eps) I + 2G dev(eps) + 2Gc omega. eps symmetric, omega skew (InvalidInput otherwise).
Tensor2 elastic_stress(const CosseratMaterial& mat, const Tensor2& eps_e, const Tensor2& omega_e);

/// Same law written with the Lame constants, (K - 2G/3) tr(eps) I + 2G eps + 2Gc omega.
Tensor2 elastic_stress_lame(const CosseratMaterial& mat, const Tensor2& eps_e,
                            const Tensor2& omega_e);

/// Stress from a general (non-symmetric) Cosserat strain, split internally.
Tensor2 stress_from_strain(const CosseratMaterial& mat, const Tensor2& gamma_e);

/// mu = Kc tr(chi) I + 2B dev(sym chi) + 2Bc skw(chi).
Tensor2 elastic_couple_stress(const CosseratMaterial& mat, const Tensor2& chi_e);

/// mu = T tr(chi) I + 2B sym(chi) + 2Bc skw(chi).
Tensor2 elastic_couple_stress_torsional(const CosseratMaterial& mat, const Tensor2& chi_e);

/// Inverse of stress_from_strain.
Tensor2 strain_from_stress(const CosseratMaterial& mat, const Tensor2& sigma);

/// Inverse of elastic_couple_stress.
Tensor2 wryness_from_couple_stress(const CosseratMaterial& mat, const Tensor2& mu);

/// Distortion energy in stress form,
/// 1/(4G) [s_sym:s_sym + G/Gc s_skw:s_skw + G/B m_sym:m_sym + G/Bc m_skw:m_skw + 2G/Kc tr^2(mu)/9].
double distortion_energy(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu);

/// Elastic potential from the four decoupled quadratic terms.
double strain_energy(const CosseratMaterial& mat, const Tensor2& eps_e, const Tensor2& omega_e,
                     const Tensor2& chi_e);

/// Volumetric part 1/2 K tr^2(eps).
double volumetric_energy(const CosseratMaterial& mat, const Tensor2& eps_e);

}  // namespace cosserat

#endif  // COSSERAT_ELASTICITY_HPP
