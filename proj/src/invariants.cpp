#include "cosserat/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "cosserat/errors.hpp"

namespace cosserat {

double q_floor(const Tensor2& sigma) { return 1e-10 * std::max(1.0, frobenius_norm(sigma)); }

double mean_stress(const Tensor2& sigma) { return trace(sigma) / 3.0; }

double q_symmetric(const Tensor2& sigma) {
  const Tensor2 s = dev(sym(sigma));
  return std::sqrt(1.5 * ddot(s, s));
}

double q_cosserat(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  const Tensor2 s_sym = dev(sym(sigma));
  const Tensor2 s_skw = skw(sigma);
  const Tensor2 m_sym = dev(sym(mu));
  const Tensor2 m_skw = skw(mu);
  const double G = mat.G();
  const double tr_mu = trace(mu);
  // The torsional term sits inside the 3/2 bracket so that q^2 = 6G * distortion energy.
  const double q2 = 1.5 * (ddot(s_sym, s_sym) + G / mat.Gc() * ddot(s_skw, s_skw) +
                           G / mat.B() * ddot(m_sym, m_sym) + G / mat.Bc() * ddot(m_skw, m_skw) +
                           2.0 * G / mat.Kc() * tr_mu * tr_mu / 9.0);
  return std::sqrt(q2);
}

bool is_plane_strain(const Tensor2& sigma, const Tensor2& mu, double rel_tol) {
  const double ts = rel_tol * std::max(1.0, frobenius_norm(sigma));
  const double tm = rel_tol * std::max(1.0, frobenius_norm(mu));
  if (std::abs(sigma(0, 2)) > ts || std::abs(sigma(2, 0)) > ts || std::abs(sigma(1, 2)) > ts ||
      std::abs(sigma(2, 1)) > ts)
    return false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      const bool in_plane_couple = (i == 2 && j < 2);
      if (!in_plane_couple && std::abs(mu(i, j)) > tm) return false;
    }
  return true;
}

double q_transpose_form(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  if (!is_plane_strain(sigma, mu))
    throw InvalidInput("q_transpose_form: state is not plane strain");
  // a3 tr(A^2) + a4 tr(W^2) == a1 a:a + a2 a:a^T with a1 = (a3 - a4)/2, a2 = (a3 + a4)/2.
  // Since tr(W^2) = -W:W, the skew weight G/Gc enters as a4 = -G/Gc.
  const double G = mat.G();
  const double Gc = mat.Gc();
  const double B = mat.B();
  const double Bc = mat.Bc();
  const Tensor2 s = dev(sigma);
  const Tensor2 m = dev(mu);
  const Tensor2 st = transpose(s);
  const Tensor2 mt = transpose(m);
  const double q2 = 1.5 * ((Gc + G) / (2.0 * Gc) * ddot(s, s) + (Gc - G) / (2.0 * Gc) * ddot(s, st) +
                           G / B * (Bc + B) / (2.0 * Bc) * ddot(m, m) +
                           G / B * (Bc - B) / (2.0 * Bc) * ddot(m, mt));
  return std::sqrt(q2);
}

double sin3_lode(const Tensor2& sigma) {
  const Tensor2 s = dev(sym(sigma));
  const double qs = std::sqrt(1.5 * ddot(s, s));
  if (qs <= q_floor(sigma)) return 0.0;
  const double x = -13.5 * determinant(s) / (qs * qs * qs);
  return std::clamp(x, -1.0, 1.0);
}

double lode_angle(const Tensor2& sigma) { return std::asin(sin3_lode(sigma)) / 3.0; }

InvariantSet invariants(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  return {mean_stress(sigma), q_cosserat(mat, sigma, mu), q_symmetric(sigma), lode_angle(sigma)};
}

Tensor2 dq_dsigma(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  const double q = q_cosserat(mat, sigma, mu);
  if (q <= q_floor(sigma)) throw SingularGradient("dq/dsigma: q below floor");
  return 1.5 / q * (dev(sym(sigma)) + mat.G() / mat.Gc() * skw(sigma));
}

Tensor2 dq_dmu(const CosseratMaterial& mat, const Tensor2& sigma, const Tensor2& mu) {
  const double q = q_cosserat(mat, sigma, mu);
  if (q <= q_floor(sigma)) throw SingularGradient("dq/dmu: q below floor");
  const double G = mat.G();
  return 1.5 / q * (G / mat.B() * dev(sym(mu)) + G / mat.Bc() * skw(mu)) +
         G * trace(mu) / (3.0 * mat.Kc() * q) * Tensor2::identity();
}

Tensor2 dsin3_lode_dsigma(const Tensor2& sigma) {
  const Tensor2 s = dev(sym(sigma));
  const double qs = std::sqrt(1.5 * ddot(s, s));
  if (qs <= q_floor(sigma)) return Tensor2::zero();
  const double qs3 = qs * qs * qs;
  return -13.5 * (dev(cofactor(s)) / qs3 - 4.5 * determinant(s) / (qs3 * qs * qs) * s);
}

Tensor2 dlode_dsigma(const Tensor2& sigma) {
  const double x = sin3_lode(sigma);
  if (q_symmetric(sigma) <= q_floor(sigma)) return Tensor2::zero();
  if (std::abs(x) > 1.0 - kCornerTol)
    throw CornerSingularity("dtheta/dsigma: Lode angle at a corner of the deviatoric section");
  return dsin3_lode_dsigma(sigma) / (3.0 * std::sqrt(1.0 - x * x));
}

}  // namespace cosserat
