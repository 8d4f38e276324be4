#include "cosserat/kinematics.hpp"

namespace cosserat {

Tensor2 cosserat_strain(const Tensor2& grad_u, const Vector3& theta) {
  return grad_u - spin_tensor(theta);
}

Tensor2 cosserat_strain_split(const Tensor2& grad_u, const Vector3& theta) {
  return sym(grad_u) + relative_rotation(grad_u, theta);
}

Tensor2 wryness(const Tensor2& grad_theta) { return grad_theta; }

Tensor2 relative_rotation(const Tensor2& grad_u, const Vector3& theta) {
  return skw(grad_u) - spin_tensor(theta);
}

CurvatureKind classify_curvature(const Tensor2& chi) {
  bool diag = false;
  bool off = false;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      if (chi(i, j) == 0.0) continue;
      (i == j ? diag : off) = true;
    }
  if (diag && off) return CurvatureKind::Mixed;
  if (diag) return CurvatureKind::Torsional;
  if (off) return CurvatureKind::Bending;
  return CurvatureKind::None;
}

}  // namespace cosserat
