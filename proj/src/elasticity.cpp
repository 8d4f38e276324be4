#include "cosserat/elasticity.hpp"

#include <cmath>
#include <string>

#include "cosserat/errors.hpp"

namespace cosserat {

namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value))
    throw ParameterDomainError(std::string("material: ") + name + " must be positive and finite");
}

}  // namespace

CosseratMaterial::CosseratMaterial(double K, double G, double Gc, double T, double B, double Bc)
    : K_(K), G_(G), Gc_(Gc), T_(T), B_(B), Bc_(Bc), Kc_(T + 2.0 * B / 3.0) {
  require_positive(K_, "K");
  require_positive(G_, "G");
  require_positive(Gc_, "Gc");
  require_positive(B_, "B");
  require_positive(Bc_, "Bc");
  if (!std::isfinite(T_)) throw ParameterDomainError("material: T must be finite");
  require_positive(Kc_, "Kc = T + 2B/3");
  l1_ = std::sqrt(B_ / G_);
  l2_ = std::sqrt(Bc_ / G_);
  l3_ = std::sqrt(Kc_ / (2.0 * G_));
}

CosseratMaterial CosseratMaterial::from_moduli(double K, double G, double Gc, double T, double B,
                                               double Bc) {
  return CosseratMaterial(K, G, Gc, T, B, Bc);
}

CosseratMaterial CosseratMaterial::from_engineering(double E, double nu, double Gc, double T,
                                                    double B, double Bc) {
  require_positive(E, "E");
  if (!(nu > -1.0 && nu < 0.5)) throw ParameterDomainError("material: nu must lie in (-1, 0.5)");
  const double K = E / (3.0 * (1.0 - 2.0 * nu));
  const double G = E / (2.0 * (1.0 + nu));
  return CosseratMaterial(K, G, Gc, T, B, Bc);
}

CosseratMaterial CosseratMaterial::from_lengths(double K, double G, double l1, double l2,
                                                double l3, double gc_over_g) {
  require_positive(G, "G");
  require_positive(l1, "l1");
  require_positive(l2, "l2");
  require_positive(l3, "l3");
  require_positive(gc_over_g, "Gc/G");
  const double B = G * l1 * l1;
  const double Bc = G * l2 * l2;
  const double Kc = 2.0 * G * l3 * l3;
  return CosseratMaterial(K, G, gc_over_g * G, Kc - 2.0 * B / 3.0, B, Bc);
}

Tensor2 elastic_stress(const CosseratMaterial& mat, const Tensor2& eps_e, const Tensor2& omega_e) {
  if (!is_symmetric(eps_e)) throw InvalidInput("elastic_stress: strain must be symmetric");
  if (!is_skew(omega_e)) throw InvalidInput("elastic_stress: relative rotation must be skew");
  return mat.K() * trace(eps_e) * Tensor2::identity() + 2.0 * mat.G() * dev(eps_e) +
         2.0 * mat.Gc() * omega_e;
}

Tensor2 elastic_stress_lame(const CosseratMaterial& mat, const Tensor2& eps_e,
                            const Tensor2& omega_e) {
  if (!is_symmetric(eps_e)) throw InvalidInput("elastic_stress: strain must be symmetric");
  if (!is_skew(omega_e)) throw InvalidInput("elastic_stress: relative rotation must be skew");
  return (mat.K() - 2.0 * mat.G() / 3.0) * trace(eps_e) * Tensor2::identity() +
         2.0 * mat.G() * eps_e + 2.0 * mat.Gc() * omega_e;
}

Tensor2 stress_from_strain(const CosseratMaterial& mat, const Tensor2& gamma_e) {
  return mat.K() * trace(gamma_e) * Tensor2::identity() + 2.0 * mat.G() * dev(sym(gamma_e)) +
         2.0 * mat.Gc() * skw(gamma_e);
}

Tensor2 elastic_couple_stress(const CosseratMaterial& mat, const Tensor2& chi_e) {
  return mat.Kc() * trace(chi_e) * Tensor2::identity() + 2.0 * mat.B() * dev(sym(chi_e)) +
         2.0 * mat.Bc() * skw(chi_e);
}

Tensor2 elastic_couple_stress_torsional(const CosseratMaterial& mat, const Tensor2& chi_e) {
  return mat.T() * trace(chi_e) * Tensor2::identity() + 2.0 * mat.B() * sym(chi_e) +
         2.0 * mat.Bc() * skw(chi_e);
}

Tensor2 strain_from_stress(const CosseratMaterial& mat, const Tensor2& sigma) {
  return trace(sigma) / (9.0 * mat.K()) * Tensor2::identity() + dev(sym(sigma)) / (2.0 * mat.G()) +
         skw(sigma) / (2.0 * mat.Gc());
}

Tensor2 wryness_from_couple_stress(const CosseratMaterial& mat, const Tensor2& mu) {
  return trace(mu) / (9.0 * mat.Kc()) * Tensor2::identity() + dev(sym(mu)) / (2.0 * mat.B()) +
         skw(mu) / (2.0 * mat.Bc());
}

double distortion_energy(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  const Tensor2 s_sym = dev(sym(sigma));
  const Tensor2 s_skw = skw(sigma);
  const Tensor2 m_sym = dev(sym(mu));
  const Tensor2 m_skw = skw(mu);
  const double G = mat.G();
  const double tr_mu = trace(mu);
  return (ddot(s_sym, s_sym) + G / mat.Gc() * ddot(s_skw, s_skw) +
          G / mat.B() * ddot(m_sym, m_sym) + G / mat.Bc() * ddot(m_skw, m_skw) +
          2.0 * G / mat.Kc() * tr_mu * tr_mu / 9.0) /
         (4.0 * G);
}

double strain_energy(const CosseratMaterial& mat, const Tensor2& eps_e, const Tensor2& omega_e,
                     const Tensor2& chi_e) {
  if (!is_symmetric(eps_e)) throw InvalidInput("strain_energy: strain must be symmetric");
  if (!is_skew(omega_e)) throw InvalidInput("strain_energy: relative rotation must be skew");
  const Tensor2 e = dev(eps_e);
  const Tensor2 g_sym = dev(sym(chi_e));
  const Tensor2 g_skw = skw(chi_e);
  const double tr_eps = trace(eps_e);
  const double tr_chi = trace(chi_e);
  return 0.5 * mat.K() * tr_eps * tr_eps + mat.G() * ddot(e, e) +
         mat.Gc() * ddot(omega_e, omega_e) + 0.5 * mat.Kc() * tr_chi * tr_chi +
         mat.B() * ddot(g_sym, g_sym) + mat.Bc() * ddot(g_skw, g_skw);
}

double volumetric_energy(const CosseratMaterial& mat, const Tensor2& eps_e) {
  const double tr_eps = trace(eps_e);
  return 0.5 * mat.K() * tr_eps * tr_eps;
}

}  // namespace cosserat
