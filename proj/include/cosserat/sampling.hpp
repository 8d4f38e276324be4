#ifndef COSSERAT_SAMPLING_HPP
#define COSSERAT_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "cosserat/elasticity.hpp"
#include "cosserat/tensor.hpp"

namespace cosserat {

/// Random generators shared by the verification suite and the tests.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  /// Uniform in log space between lo and hi (both positive).
  double log_uniform(double lo, double hi);

  /// Components uniform in [-scale, scale].
  Tensor2 tensor(double scale = 1.0);
  Tensor2 symmetric(double scale = 1.0);
  Tensor2 skew(double scale = 1.0);
  Vector3 vector(double scale = 1.0);

  /// Uniformly distributed proper rotation (random unit quaternion).
  Tensor2 rotation();

  /// Positive moduli spanning a few orders of magnitude, lengths of order one.
  CosseratMaterial material();

  /// Plane-strain pair: sigma in the 1-2 plane plus sigma_33, mu with mu_31, mu_32.
  void plane_strain_state(double scale, Tensor2& sigma, Tensor2& mu);

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace cosserat

#endif  // COSSERAT_SAMPLING_HPP
