#include "cosserat/batch.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cosserat/errors.hpp"

namespace cosserat {

namespace {

void check_sizes(std::span<const MaterialState> states0,
                 std::span<const std::vector<Increment>> paths) {
  if (states0.size() != paths.size())
    throw InvalidInput("integrate_batch: states and paths differ in length");
}

PointResult integrate_point(const CosseratMaterial& mat, const GCCriterion& cr,
                            const MaterialState& state0, const std::vector<Increment>& path,
                            const IntegratorSettings& settings) {
  PointResult out;
  out.state = state0;
  try {
    const std::vector<StepResult> steps = integrate_path(mat, cr, state0, path, settings);
    if (!steps.empty()) out.state = steps.back().state;
    for (const StepResult& s : steps) out.iterations += s.iterations;
  } catch (const Error& e) {
    out.ok = false;
    out.error = e.what();
  }
  return out;
}

}  // namespace

std::vector<PointResult> integrate_batch(const CosseratMaterial& mat, const GCCriterion& cr,
                                         std::span<const MaterialState> states0,
                                         std::span<const std::vector<Increment>> paths,
                                         const IntegratorSettings& settings) {
  check_sizes(states0, paths);
  const auto n = static_cast<std::ptrdiff_t>(states0.size());
  std::vector<PointResult> out(states0.size());
  // Plastic points cost far more than elastic ones, hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    out[k] = integrate_point(mat, cr, states0[k], paths[k], settings);
  }
  return out;
}

std::vector<PointResult> integrate_batch_serial(const CosseratMaterial& mat, const GCCriterion& cr,
                                                std::span<const MaterialState> states0,
                                                std::span<const std::vector<Increment>> paths,
                                                const IntegratorSettings& settings) {
  check_sizes(states0, paths);
  std::vector<PointResult> out;
  out.reserve(states0.size());
  for (std::size_t i = 0; i < states0.size(); ++i)
    out.push_back(integrate_point(mat, cr, states0[i], paths[i], settings));
  return out;
}

int batch_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace cosserat
