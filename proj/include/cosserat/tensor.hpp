#ifndef COSSERAT_TENSOR_HPP
#define COSSERAT_TENSOR_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

namespace cosserat {

/// Three-component vector (micro-rotations, axial vectors).
struct Vector3 {
  std::array<double, 3> v{};

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr double operator[](std::size_t i) const { return v[i]; }

  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;
};

/**
 * Dense 3x3 second-order tensor, generally non-symmetric.
 *
 * Component (i, j): row i is the component direction, column j the face
 * normal. Storage is row-major. Plane-strain states use the same storage
 * with the out-of-plane components set to zero.
 */
class Tensor2 {
 public:
  constexpr Tensor2() = default;
  explicit constexpr Tensor2(const std::array<double, 9>& components) : a_(components) {}

  static constexpr Tensor2 zero() { return Tensor2{}; }
  static constexpr Tensor2 identity() {
    return Tensor2({1.0, 0.0, 0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 1.0});
  }
  static constexpr Tensor2 diagonal(double a, double b, double c) {
    return Tensor2({a, 0.0, 0.0, 0.0, b, 0.0, 0.0, 0.0, c});
  }

  constexpr double& operator()(std::size_t i, std::size_t j) { return a_[3 * i + j]; }
  constexpr double operator()(std::size_t i, std::size_t j) const { return a_[3 * i + j]; }

  /// Flat row-major access, k = 3i + j.
  constexpr double& operator[](std::size_t k) { return a_[k]; }
  constexpr double operator[](std::size_t k) const { return a_[k]; }

  constexpr const std::array<double, 9>& components() const { return a_; }

  constexpr Tensor2& operator+=(const Tensor2& o) {
    for (std::size_t k = 0; k < 9; ++k) a_[k] += o.a_[k];
    return *this;
  }
  constexpr Tensor2& operator-=(const Tensor2& o) {
    for (std::size_t k = 0; k < 9; ++k) a_[k] -= o.a_[k];
    return *this;
  }
  constexpr Tensor2& operator*=(double s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  constexpr Tensor2& operator/=(double s) {
    for (auto& x : a_) x /= s;
    return *this;
  }

  friend constexpr Tensor2 operator+(Tensor2 a, const Tensor2& b) { return a += b; }
  friend constexpr Tensor2 operator-(Tensor2 a, const Tensor2& b) { return a -= b; }
  friend constexpr Tensor2 operator-(Tensor2 a) { return a *= -1.0; }
  friend constexpr Tensor2 operator*(Tensor2 a, double s) { return a *= s; }
  friend constexpr Tensor2 operator*(double s, Tensor2 a) { return a *= s; }
  friend constexpr Tensor2 operator/(Tensor2 a, double s) { return a /= s; }

  friend constexpr bool operator==(const Tensor2&, const Tensor2&) = default;

 private:
  std::array<double, 9> a_{};
};

double trace(const Tensor2& a);
Tensor2 transpose(const Tensor2& a);
double determinant(const Tensor2& a);
/// Cofactor matrix; d(det a)/da = cofactor(a).
Tensor2 cofactor(const Tensor2& a);
/// Single contraction (matrix product) a.b.
Tensor2 dot(const Tensor2& a, const Tensor2& b);
/// Double contraction a:b = a_ij b_ij.
double ddot(const Tensor2& a, const Tensor2& b);
double frobenius_norm(const Tensor2& a);
/// Largest absolute component.
double max_abs(const Tensor2& a);

Tensor2 sym(const Tensor2& a);
Tensor2 skw(const Tensor2& a);
/// Returns (sym a, skw a); the two parts sum to a.
std::pair<Tensor2, Tensor2> sym_skw_split(const Tensor2& a);

Tensor2 dev(const Tensor2& a);
/// Returns (a - (tr a / 3) I, tr a / 3).
std::pair<Tensor2, double> dev_sph_split(const Tensor2& a);

/// Levi-Civita permutation symbol e_ijk with indices in {0, 1, 2}.
constexpr int levi_civita(std::size_t i, std::size_t j, std::size_t k) {
  if (i == j || j == k || i == k) return 0;
  return ((i + 1) % 3 == j) ? 1 : -1;
}

/// Whether ||sym w|| <= 1e-10 * max(1, ||w||) (Frobenius).
bool is_skew(const Tensor2& w, double rel_tol = 1e-10);
/// Whether ||skw a|| <= 1e-10 * max(1, ||a||) (Frobenius).
bool is_symmetric(const Tensor2& a, double rel_tol = 1e-10);

/// w_k = -1/2 e_ijk w_ij. Throws InvalidInput if w is not skew.
Vector3 axial_vector(const Tensor2& w);
/// w_ij = -e_ijk v_k.
Tensor2 spin_tensor(const Vector3& v);

/// Proper-rotation check: ||R^T R - I|| and |det R - 1| below tol.
bool is_rotation(const Tensor2& r, double tol = 1e-10);
/// R a R^T. Throws InvalidInput unless R is a proper rotation.
Tensor2 rotate(const Tensor2& a, const Tensor2& r);
/// Rotation by angle (radians) about a unit axis (Rodrigues).
Tensor2 rotation_about(const Vector3& axis, double angle);

}  // namespace cosserat

#endif  // COSSERAT_TENSOR_HPP
