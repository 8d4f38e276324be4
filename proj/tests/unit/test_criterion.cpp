#include <doctest.h>

#include "cosserat/criterion.hpp"
#include "cosserat/errors.hpp"
#include "cosserat/invariants.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace cosserat;
using doctest::Approx;
using support::kDeg;
using support::kPi;
using support::shape_for;

namespace {
const CosseratMaterial kMat = CosseratMaterial::from_moduli(2000, 1000, 1000, 0, 10, 10);
}

TEST_CASE("preset names") {
  for (CriterionPreset p : support::kAllPresets) CHECK(parse_preset(preset_name(p)) == p);
  CHECK_THROWS_AS(parse_preset("hoek-brown"), ParameterDomainError);
  CHECK(is_frictional(CriterionPreset::DruckerPrager));
  CHECK_FALSE(is_frictional(CriterionPreset::Tresca));
}

TEST_CASE("table presets") {
  const GCShape vm = preset(CriterionPreset::VonMises);
  CHECK(vm.alpha == 1.0);
  CHECK(vm.beta == 0.0);
  CHECK(vm.gamma == 1.0);
  CHECK(vm.Mc == 0.0);

  const double phi = 30 * kDeg;
  const GCShape dp = preset(CriterionPreset::DruckerPrager, phi);
  CHECK(dp.Mc == Approx(6 * std::sin(phi) / (3 - std::sin(phi))));
  CHECK(meridional_slope(phi) == Approx(1.2));

  const GCShape tr = preset(CriterionPreset::Tresca);
  CHECK(tr.alpha == Approx(1.0 / std::cos(kPi / 6)));
  CHECK(tr.beta == 1.0);

  const GCShape mn = preset(CriterionPreset::MatsuokaNakai, phi);
  const double k = oracle::k_mn(phi);
  CHECK(k == Approx(35.0 / 3.0));
  CHECK(mn.beta > 0.0);
  CHECK(mn.beta < 1.0);
  CHECK(gamma_value(mn, -kPi / 6) == Approx(1.0));

  CHECK_THROWS_AS(preset(CriterionPreset::MohrCoulomb), ParameterDomainError);
  CHECK_THROWS_AS(preset(CriterionPreset::MohrCoulomb, 95 * kDeg), ParameterDomainError);
}

TEST_CASE("shape function values") {
  for (double t : {-kPi / 6, -0.3, 0.0, 0.2, kPi / 6}) CHECK(gamma_value(preset(CriterionPreset::VonMises), t) == Approx(1.0));
  const GCShape tr = preset(CriterionPreset::Tresca);
  CHECK(gamma_value(tr, kPi / 6) == Approx(1.0));
  CHECK(gamma_value(tr, -kPi / 6) == Approx(1.0));
  CHECK(gamma_value(tr, 0.0) == Approx(2.0 / std::sqrt(3.0)));
  const GCShape mc = shape_for(CriterionPreset::MohrCoulomb, 30);
  CHECK(gamma_value(mc, kPi / 6) == Approx(1.4));
  CHECK(gamma_value(mc, -kPi / 6) == Approx(1.0));
  CHECK_THROWS_AS(gamma_value(mc, 0.6), InvalidInput);
}

TEST_CASE("tresca agrees with the principal stress oracle") {
  const GCShape tr = preset(CriterionPreset::Tresca);
  const GCCriterion cr(tr, tr, HardeningLaw{5.0, 5.0, 0.0, 0.0});
  support::Rng rng(41);
  for (int i = 0; i < 500; ++i) {
    const Tensor2 s = rng.symmetric(10.0);
    const double exact = oracle::tresca(s, 5.0);
    if (std::abs(exact) < 1e-9) continue;
    CHECK((yield_value(cr, kMat, s, Tensor2::zero(), 0.0) > 0.0) == (exact > 0.0));
  }
}

TEST_CASE("shape function derivative") {
  CHECK(gamma_derivative(preset(CriterionPreset::VonMises), 0.1) == 0.0);
  const GCShape circle{1.3, 0.0, 0.4, 0.0};
  CHECK(gamma_derivative(circle, -0.2) == Approx(0.0));
  const GCShape mc = shape_for(CriterionPreset::MohrCoulomb, 30);
  CHECK(gamma_derivative(mc, 0.0) ==
        Approx(oracle::fd_derivative([&](double t) { return gamma_value(mc, t); }, 0.0, 1e-6)).epsilon(1e-7));
  CHECK_THROWS_AS(gamma_derivative(mc, kPi / 6), CornerSingularity);
  const GCShape mn = shape_for(CriterionPreset::MatsuokaNakai, 30);
  CHECK(std::isfinite(gamma_derivative(mn, kPi / 6)));
}

TEST_CASE("rounding keeps the compression value") {
  const GCShape r = preset(CriterionPreset::MohrCoulomb, 30 * kDeg, 1e-3);
  CHECK(r.beta < 1.0);
  CHECK(gamma_value(r, -kPi / 6) == Approx(1.0).epsilon(1e-12));
  CHECK(std::isfinite(gamma_derivative(r, kPi / 6)));
}

TEST_CASE("cohesion softening") {
  const HardeningLaw h{100, 20, 10, 0.0};
  CHECK(cohesion(h, 0.0) == 100.0);
  CHECK(cohesion(h, std::log(2.0) / 10) == Approx(60.0));
  CHECK(cohesion(HardeningLaw{100, 20, 0, 0}, 5.0) == 100.0);
  CHECK(sigma0(h, 0.0) == Approx(200.0));
  CHECK(hardening_modulus(h, 0.0) < 0.0);
  CHECK_THROWS_AS(cohesion(h, -1.0), InvalidInput);
  CHECK_THROWS_AS(validate(HardeningLaw{-1, 0, 0, 0}), ParameterDomainError);
  const HardeningLaw f{10, 10, 0, 30 * kDeg};
  CHECK(sigma0(f, 0.0) == Approx(10 * 6 * std::cos(30 * kDeg) / (3 - 0.5)));
}

TEST_CASE("yield function") {
  const GCShape vm = preset(CriterionPreset::VonMises);
  const GCCriterion v(vm, vm, HardeningLaw{50, 50, 0, 0});
  CHECK(yield_value(v, kMat, Tensor2::zero(), Tensor2::zero(), 0.0) == Approx(-100.0));
  CHECK(yield_value(v, kMat, Tensor2::diagonal(100, 0, 0), Tensor2::zero(), 0.0) == Approx(0.0).epsilon(1e-12));

  GCShape dp = preset(CriterionPreset::DruckerPrager, 30 * kDeg);
  CHECK(dp.Mc == Approx(1.2));
  const GCCriterion d(dp, dp, HardeningLaw{10, 10, 0, 30 * kDeg});
  const double s0 = sigma0(d.hardening(), 0.0);
  CHECK(yield_value(d, kMat, (s0 / 1.2) * Tensor2::identity(), Tensor2::zero(), 0.0) ==
        Approx(0.0).epsilon(1e-12));
}

TEST_CASE("flow direction") {
  const GCShape vm = preset(CriterionPreset::VonMises);
  const GCCriterion v(vm, vm, HardeningLaw{50, 50, 0, 0});
  const SurfaceGradients g = potential_gradients(v, kMat, Tensor2::diagonal(30, 0, 0), Tensor2::zero());
  CHECK(frobenius_norm(g.d_sigma - Tensor2::diagonal(1, -0.5, -0.5)) < 1e-14);
  CHECK(frobenius_norm(g.d_mu) == 0.0);

  support::Rng rng(42);
  for (int i = 0; i < 30; ++i) {
    const CriterionPreset p = support::kAllPresets[i % 6];
    const GCShape y = shape_for(p, 25), gshape = shape_for(support::kAllPresets[(i + 1) % 6], 15);
    const GCCriterion cr(y, gshape, HardeningLaw{10, 5, 1, is_frictional(p) ? 25 * kDeg : 0.0});
    Tensor2 s, m;
    rng.regular_state(kMat, 20.0, s, m);
    const SurfaceGradients n = potential_gradients(cr, kMat, s, m);
    CHECK(trace(n.d_sigma) == Approx(gshape.Mc).epsilon(1e-12).scale(1.0));
    const Tensor2 fd = oracle::fd_gradient([&](const Tensor2& x) { return potential_value(cr, kMat, x, m); }, s, 1e-5);
    CHECK(oracle::rel_err(n.d_sigma, fd) < 1e-6);
  }
  CHECK(GCCriterion(vm, vm, HardeningLaw{1, 1, 0, 0}).associated());
}
