#include <doctest.h>

#include <tuple>

#include "cosserat/errors.hpp"
#include "cosserat/tensor.hpp"
#include "support.hpp"

using namespace cosserat;
using doctest::Approx;

TEST_CASE("sym/skw split of symmetric, skew and general input") {
  auto [s, w] = sym_skw_split(Tensor2::identity());
  CHECK(s == Tensor2::identity());
  CHECK(w == Tensor2::zero());

  Tensor2 a;
  a(0, 1) = 1.0;
  a(1, 0) = -1.0;
  std::tie(s, w) = sym_skw_split(a);
  CHECK(s == Tensor2::zero());
  CHECK(w == a);

  Tensor2 b;
  b(0, 1) = 3.0;
  b(1, 0) = 1.0;
  std::tie(s, w) = sym_skw_split(b);
  CHECK(s(0, 1) == 2.0);
  CHECK(s(1, 0) == 2.0);
  CHECK(w(0, 1) == 1.0);
  CHECK(w(1, 0) == -1.0);
}

TEST_CASE("deviatoric/spherical split") {
  auto [d, p] = dev_sph_split(Tensor2::identity());
  CHECK(frobenius_norm(d) == Approx(0.0));
  CHECK(p == Approx(1.0));
  std::tie(d, p) = dev_sph_split(Tensor2::diagonal(2, -1, -1));
  CHECK(d == Tensor2::diagonal(2, -1, -1));
  CHECK(p == 0.0);
  std::tie(d, p) = dev_sph_split(Tensor2::diagonal(3, 0, 0));
  CHECK(frobenius_norm(d - Tensor2::diagonal(2, -1, -1)) < 1e-15);
  CHECK(p == Approx(1.0));
}

TEST_CASE("levi-civita symbol") {
  CHECK(levi_civita(0, 1, 2) == 1);
  CHECK(levi_civita(1, 2, 0) == 1);
  CHECK(levi_civita(2, 1, 0) == -1);
  CHECK(levi_civita(0, 0, 2) == 0);
}

TEST_CASE("axial vector and spin tensor") {
  CHECK(axial_vector(Tensor2::zero()) == Vector3{{0, 0, 0}});
  Tensor2 w;
  w(0, 1) = -1.0;
  w(1, 0) = 1.0;
  const Vector3 v = axial_vector(w);
  CHECK(v[0] == 0.0);
  CHECK(v[1] == 0.0);
  CHECK(v[2] == Approx(1.0));

  const Tensor2 s = spin_tensor({{0, 0, 1}});
  CHECK(s(0, 1) == -1.0);
  CHECK(s(1, 0) == 1.0);
  CHECK(max_abs(s - w) == 0.0);

  const Vector3 u{{0.3, -0.2, 0.5}};
  const Vector3 back = axial_vector(spin_tensor(u));
  for (std::size_t i = 0; i < 3; ++i) CHECK(back[i] == Approx(u[i]).epsilon(1e-15));

  support::Rng rng(1);
  for (int k = 0; k < 20; ++k) {
    const Vector3 r{{rng.uniform(-5, 5), rng.uniform(-5, 5), rng.uniform(-5, 5)}};
    const Vector3 rb = axial_vector(spin_tensor(r));
    for (std::size_t i = 0; i < 3; ++i) CHECK(rb[i] == Approx(r[i]).epsilon(1e-14));
  }
  CHECK_THROWS_AS(axial_vector(Tensor2::identity()), InvalidInput);
}

TEST_CASE("spin tensor acts as a cross product") {
  const Vector3 v{{0.3, -0.2, 0.5}}, x{{1.0, 2.0, -0.7}};
  const Tensor2 s = spin_tensor(v);
  // (v x x)_i
  const double cross[3] = {v[1] * x[2] - v[2] * x[1], v[2] * x[0] - v[0] * x[2], v[0] * x[1] - v[1] * x[0]};
  for (std::size_t i = 0; i < 3; ++i) {
    double sx = 0.0;
    for (std::size_t j = 0; j < 3; ++j) sx += s(i, j) * x[j];
    CHECK(sx == Approx(cross[i]));
  }
}

TEST_CASE("rotation of second-order tensors") {
  const Tensor2 a = support::Rng(3).tensor(1.0);
  CHECK(rotate(a, Tensor2::identity()) == a);
  const Tensor2 r = rotation_about({{0, 0, 1}}, support::kPi / 2);
  CHECK(frobenius_norm(rotate(Tensor2::identity(), r) - Tensor2::identity()) < 1e-15);
  CHECK(frobenius_norm(rotate(Tensor2::diagonal(1, 0, 0), r) - Tensor2::diagonal(0, 1, 0)) < 1e-15);
  CHECK_THROWS_AS(rotate(a, Tensor2::diagonal(1, 1, -1)), InvalidInput);
  CHECK_THROWS_AS(rotation_about({{0, 0, 0}}, 1.0), InvalidInput);
}

TEST_CASE("determinant and cofactor") {
  const Tensor2 a({2, 1, 0, 0, 3, 1, 1, 0, 1});
  CHECK(determinant(a) == Approx(7.0));
  const Tensor2 prod = dot(transpose(cofactor(a)), a);
  CHECK(frobenius_norm(prod - 7.0 * Tensor2::identity()) < 1e-13);
}
