#ifndef COSSERAT_KINEMATICS_HPP
#define COSSERAT_KINEMATICS_HPP

#include "cosserat/tensor.hpp"

namespace cosserat {

/// Displacement gradient u_{i,j}, micro-rotation theta_k and its gradient theta_{i,j}.
struct KinematicState {
  Tensor2 grad_u;
  Vector3 theta;
  Tensor2 grad_theta;
};

enum class CurvatureKind { None, Torsional, Bending, Mixed };

/// gamma = grad_u - spin_tensor(theta). Infinitesimal rotations only.
Tensor2 cosserat_strain(const Tensor2& grad_u, const Vector3& theta);

/// Same tensor assembled as eps + omega, eps = sym grad_u, omega = relative rotation.
Tensor2 cosserat_strain_split(const Tensor2& grad_u, const Vector3& theta);

/// chi = grad_theta.
Tensor2 wryness(const Tensor2& grad_theta);

/// omega = skw(grad_u) - spin_tensor(theta).
Tensor2 relative_rotation(const Tensor2& grad_u, const Vector3& theta);

/// Diagonal wryness entries are torsional curvatures, off-diagonal ones bending.
CurvatureKind classify_curvature(const Tensor2& chi);

}  // namespace cosserat

#endif  // COSSERAT_KINEMATICS_HPP
