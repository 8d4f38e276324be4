// Serial reference against the OpenMP batch kernel on a softening Matsuoka-Nakai
// material with a Drucker-Prager potential. Each point follows its own 50-step path.
#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "cosserat/batch.hpp"
#include "cosserat/sampling.hpp"

namespace {

using namespace cosserat;

struct Problem {
  CosseratMaterial mat = CosseratMaterial::from_moduli(2000, 1000, 500, 0, 10, 5);
  GCCriterion cr;
  std::vector<MaterialState> states;
  std::vector<std::vector<Increment>> paths;

  explicit Problem(std::size_t n)
      : cr(preset(CriterionPreset::MatsuokaNakai, std::numbers::pi / 6),
           preset(CriterionPreset::DruckerPrager, std::numbers::pi / 18),
           HardeningLaw{50, 10, 5, std::numbers::pi / 6}) {
    Sampler s(1234);
    states.assign(n, MaterialState{});
    paths.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      states[i].sigma = -100.0 * Tensor2::identity();
      paths[i] = proportional_path(Increment{s.tensor(0.05), s.tensor(0.005)}, 50);
    }
  }
};

void run(benchmark::State& st, bool parallel) {
  const Problem p(static_cast<std::size_t>(st.range(0)));
  for (auto _ : st) {
    auto r = parallel ? integrate_batch(p.mat, p.cr, p.states, p.paths)
                      : integrate_batch_serial(p.mat, p.cr, p.states, p.paths);
    benchmark::DoNotOptimize(r.data());
  }
  st.SetItemsProcessed(st.iterations() * st.range(0) * 50);
  st.counters["threads"] = parallel ? batch_threads() : 1;
}

void BM_serial(benchmark::State& st) { run(st, false); }
void BM_openmp(benchmark::State& st) { run(st, true); }

BENCHMARK(BM_serial)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_openmp)->Arg(256)->Arg(2048)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
