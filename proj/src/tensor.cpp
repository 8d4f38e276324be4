#include "cosserat/tensor.hpp"

#include <algorithm>

#include "cosserat/errors.hpp"

namespace cosserat {

double trace(const Tensor2& a) { return a(0, 0) + a(1, 1) + a(2, 2); }

Tensor2 transpose(const Tensor2& a) {
  Tensor2 t;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) t(i, j) = a(j, i);
  return t;
}

double determinant(const Tensor2& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

Tensor2 cofactor(const Tensor2& a) {
  Tensor2 c;
  c(0, 0) = a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1);
  c(0, 1) = a(1, 2) * a(2, 0) - a(1, 0) * a(2, 2);
  c(0, 2) = a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0);
  c(1, 0) = a(0, 2) * a(2, 1) - a(0, 1) * a(2, 2);
  c(1, 1) = a(0, 0) * a(2, 2) - a(0, 2) * a(2, 0);
  c(1, 2) = a(0, 1) * a(2, 0) - a(0, 0) * a(2, 1);
  c(2, 0) = a(0, 1) * a(1, 2) - a(0, 2) * a(1, 1);
  c(2, 1) = a(0, 2) * a(1, 0) - a(0, 0) * a(1, 2);
  c(2, 2) = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  return c;
}

Tensor2 dot(const Tensor2& a, const Tensor2& b) {
  Tensor2 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

double ddot(const Tensor2& a, const Tensor2& b) {
  double s = 0.0;
  for (std::size_t k = 0; k < 9; ++k) s += a[k] * b[k];
  return s;
}

double frobenius_norm(const Tensor2& a) { return std::sqrt(ddot(a, a)); }

double max_abs(const Tensor2& a) {
  double m = 0.0;
  for (std::size_t k = 0; k < 9; ++k) m = std::max(m, std::abs(a[k]));
  return m;
}

Tensor2 sym(const Tensor2& a) {
  Tensor2 s;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) s(i, j) = 0.5 * (a(i, j) + a(j, i));
  return s;
}

Tensor2 skw(const Tensor2& a) {
  Tensor2 w;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) w(i, j) = 0.5 * (a(i, j) - a(j, i));
  return w;
}

std::pair<Tensor2, Tensor2> sym_skw_split(const Tensor2& a) { return {sym(a), skw(a)}; }

Tensor2 dev(const Tensor2& a) {
  Tensor2 d = a;
  const double m = trace(a) / 3.0;
  d(0, 0) -= m;
  d(1, 1) -= m;
  d(2, 2) -= m;
  return d;
}

std::pair<Tensor2, double> dev_sph_split(const Tensor2& a) { return {dev(a), trace(a) / 3.0}; }

bool is_skew(const Tensor2& w, double rel_tol) {
  return frobenius_norm(sym(w)) <= rel_tol * std::max(1.0, frobenius_norm(w));
}

bool is_symmetric(const Tensor2& a, double rel_tol) {
  return frobenius_norm(skw(a)) <= rel_tol * std::max(1.0, frobenius_norm(a));
}

Vector3 axial_vector(const Tensor2& w) {
  if (!is_skew(w)) throw InvalidInput("axial_vector: tensor is not skew-symmetric");
  Vector3 v;
  for (std::size_t k = 0; k < 3; ++k) {
    double s = 0.0;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) s += levi_civita(i, j, k) * w(i, j);
    v[k] = -0.5 * s;
  }
  return v;
}

Tensor2 spin_tensor(const Vector3& v) {
  Tensor2 w;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < 3; ++k) s += levi_civita(i, j, k) * v[k];
      w(i, j) = -s;
    }
  return w;
}

bool is_rotation(const Tensor2& r, double tol) {
  const Tensor2 e = dot(transpose(r), r) - Tensor2::identity();
  return frobenius_norm(e) <= tol && std::abs(determinant(r) - 1.0) <= tol;
}

Tensor2 rotate(const Tensor2& a, const Tensor2& r) {
  if (!is_rotation(r)) throw InvalidInput("rotate: R is not a proper rotation");
  return dot(dot(r, a), transpose(r));
}

Tensor2 rotation_about(const Vector3& axis, double angle) {
  const double n = std::sqrt(axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]);
  if (!(n > 0.0)) throw InvalidInput("rotation_about: zero axis");
  const Vector3 u{{axis[0] / n, axis[1] / n, axis[2] / n}};
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  // Rodrigues: R = cI + s [u]x + (1 - c) u u^T, and [u]x is spin_tensor(u).
  const Tensor2 cross = spin_tensor(u);
  Tensor2 r = c * Tensor2::identity();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) r(i, j) += s * cross(i, j) + (1.0 - c) * u[i] * u[j];
  return r;
}

}  // namespace cosserat
