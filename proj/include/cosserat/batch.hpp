#ifndef COSSERAT_BATCH_HPP
#define COSSERAT_BATCH_HPP

#include <span>
#include <string>
#include <vector>

#include "cosserat/integrator.hpp"

namespace cosserat {

/// Outcome of one material point in a batch.
struct PointResult {
  MaterialState state;
  bool ok = true;
  int iterations = 0;  ///< Newton iterations summed over the path
  std::string error;   ///< diagnostic when !ok
};

/**
 * Integrates independent material points, each along its own path.
 *
 * paths[i] is the increment sequence of point i; states0 and paths must have the
 * same length. Failures are reported per point and never abort the batch.
 * integrate_batch distributes points over OpenMP threads; integrate_batch_serial
 * is the single-threaded reference and produces bit-identical results.
 */
std::vector<PointResult> integrate_batch(const CosseratMaterial& mat, const GCCriterion& cr,
                                         std::span<const MaterialState> states0,
                                         std::span<const std::vector<Increment>> paths,
                                         const IntegratorSettings& settings = {});

std::vector<PointResult> integrate_batch_serial(const CosseratMaterial& mat, const GCCriterion& cr,
                                                std::span<const MaterialState> states0,
                                                std::span<const std::vector<Increment>> paths,
                                                const IntegratorSettings& settings = {});

/// Number of threads integrate_batch will use.
int batch_threads();

}  // namespace cosserat

#endif  // COSSERAT_BATCH_HPP
