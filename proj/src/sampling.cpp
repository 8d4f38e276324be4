#include "cosserat/sampling.hpp"

#include <cmath>

namespace cosserat {

double Sampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

double Sampler::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

Tensor2 Sampler::tensor(double scale) {
  Tensor2 a;
  for (std::size_t k = 0; k < 9; ++k) a[k] = uniform(-scale, scale);
  return a;
}

Tensor2 Sampler::symmetric(double scale) { return sym(tensor(scale)); }

Tensor2 Sampler::skew(double scale) { return skw(tensor(scale)); }

Vector3 Sampler::vector(double scale) {
  return Vector3{{uniform(-scale, scale), uniform(-scale, scale), uniform(-scale, scale)}};
}

Tensor2 Sampler::rotation() {
  std::normal_distribution<double> n(0.0, 1.0);
  double w = n(rng_), x = n(rng_), y = n(rng_), z = n(rng_);
  const double norm = std::sqrt(w * w + x * x + y * y + z * z);
  w /= norm;
  x /= norm;
  y /= norm;
  z /= norm;
  return Tensor2({1 - 2 * (y * y + z * z), 2 * (x * y - z * w), 2 * (x * z + y * w),
                  2 * (x * y + z * w), 1 - 2 * (x * x + z * z), 2 * (y * z - x * w),
                  2 * (x * z - y * w), 2 * (y * z + x * w), 1 - 2 * (x * x + y * y)});
}

CosseratMaterial Sampler::material() {
  const double G = log_uniform(1.0, 1e4);
  const double K = G * log_uniform(0.5, 5.0);
  const double Gc = G * log_uniform(0.1, 10.0);
  const double B = G * log_uniform(0.01, 1.0);
  const double Bc = G * log_uniform(0.01, 1.0);
  const double Kc = G * log_uniform(0.01, 1.0);
  return CosseratMaterial::from_moduli(K, G, Gc, Kc - 2.0 * B / 3.0, B, Bc);
}

void Sampler::plane_strain_state(double scale, Tensor2& sigma, Tensor2& mu) {
  sigma = Tensor2::zero();
  mu = Tensor2::zero();
  sigma(0, 0) = uniform(-scale, scale);
  sigma(1, 1) = uniform(-scale, scale);
  sigma(2, 2) = uniform(-scale, scale);
  sigma(0, 1) = uniform(-scale, scale);
  sigma(1, 0) = uniform(-scale, scale);
  mu(2, 0) = uniform(-scale, scale);
  mu(2, 1) = uniform(-scale, scale);
}

}  // namespace cosserat
