#ifndef COSSERAT_TESTS_SUPPORT_HPP
#define COSSERAT_TESTS_SUPPORT_HPP

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "cosserat/criterion.hpp"
#include "cosserat/elasticity.hpp"
#include "cosserat/invariants.hpp"
#include "cosserat/tensor.hpp"

namespace support {

using namespace cosserat;

constexpr double kPi = std::numbers::pi;
constexpr double kDeg = kPi / 180.0;

inline constexpr CriterionPreset kAllPresets[] = {
    CriterionPreset::VonMises,    CriterionPreset::DruckerPrager, CriterionPreset::Tresca,
    CriterionPreset::MohrCoulomb, CriterionPreset::MatsuokaNakai, CriterionPreset::LadeDuncan};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(eng_); }
  double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
  Tensor2 tensor(double scale) {
    Tensor2 a;
    for (std::size_t k = 0; k < 9; ++k) a[k] = uniform(-scale, scale);
    return a;
  }
  Tensor2 symmetric(double scale) {
    const Tensor2 a = tensor(scale);
    return 0.5 * (a + transpose(a));
  }
  CosseratMaterial material(double g_lo = 1.0, double g_hi = 1e4) {
    const double G = log_uniform(g_lo, g_hi);
    const double B = G * log_uniform(1e-3, 1.0);
    const double Kc = G * log_uniform(1e-3, 1.0);
    return CosseratMaterial::from_moduli(G * log_uniform(0.4, 5.0), G, G * log_uniform(0.1, 10.0),
                                         Kc - 2.0 * B / 3.0, B, G * log_uniform(1e-3, 1.0));
  }
  /// Stress pair away from Lode corners and the hydrostatic axis.
  void regular_state(const CosseratMaterial& m, double scale, Tensor2& sigma, Tensor2& mu,
                     double max_sin3 = 0.95) {
    do {
      sigma = tensor(scale);
      mu = tensor(scale * m.l1());
    } while (std::abs(sin3_lode(sigma)) > max_sin3 || q_symmetric(sigma) < 0.05 * scale);
  }
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
};

inline GCShape shape_for(CriterionPreset p, double phi_deg) {
  return preset(p, is_frictional(p) ? std::optional(phi_deg * kDeg) : std::nullopt);
}

}  // namespace support

#endif  // COSSERAT_TESTS_SUPPORT_HPP
