#include "bbgeo/adjoint.hpp"

#include <cmath>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

AdjointRotation adjoint_rotation(const Matrix& u, const GeneratorBasis& basis,
                                 double tol) {
  const int n = basis.dimension;
  if (u.rows() != n || u.cols() != n)
    throw ShapeError("adjoint_rotation: unitary dimension does not match basis");
  if (!is_unitary(u, tol)) throw ValidityError("adjoint_rotation: matrix is not unitary");

  const int N = basis.count();
  RMatrix r(N, N);
  for (int j = 0; j < N; ++j) {
    const Matrix image = u.adjoint() * basis.elements[j] * u;
    for (int i = 0; i < N; ++i)
      r(i, j) = ((basis.elements[i] * image).trace() / basis.normalization).real();
  }
  return {basis.ref(), std::move(r)};
}

RMatrix axis_angle_rotation(const AxisAngle& p, double tol) {
  const double norm = p.axis.norm();
  if (norm <= tol) throw ValidityError("axis_angle_rotation: zero axis");
  if (std::abs(norm - 1.0) > tol)
    throw ValidityError("axis_angle_rotation: axis is not a unit vector");
  const Eigen::Vector3d n = p.axis / norm;
  const double c = std::cos(p.angle);
  const double s = std::sin(p.angle);
  RMatrix cross(3, 3);
  cross << 0, -n.z(), n.y(), n.z(), 0, -n.x(), -n.y(), n.x(), 0;
  return c * RMatrix::Identity(3, 3) + (1.0 - c) * (n * n.transpose()) - s * cross;
}

Matrix su2_from_axis_angle(const AxisAngle& p, double tol) {
  const double norm = p.axis.norm();
  if (norm <= tol) throw ValidityError("su2_from_axis_angle: zero axis");
  if (std::abs(norm - 1.0) > tol)
    throw ValidityError("su2_from_axis_angle: axis is not a unit vector");
  const Eigen::Vector3d n = p.axis / norm;
  const double half = 0.5 * p.angle;
  const Complex I(0.0, 1.0);
  // cos(t/2) 1 + i sin(t/2) n.sigma, written out for SU(2)
  Matrix u(2, 2);
  u(0, 0) = std::cos(half) + I * std::sin(half) * n.z();
  u(0, 1) = std::sin(half) * (I * n.x() + n.y());
  u(1, 0) = std::sin(half) * (I * n.x() - n.y());
  u(1, 1) = std::cos(half) - I * std::sin(half) * n.z();
  return u;
}

RMatrix euler_rotation(const EulerAngles& angles) {
  const Eigen::Vector3d y(0, 1, 0), z(0, 0, 1);
  return axis_angle_rotation({z, angles.alpha}) *
         axis_angle_rotation({y, angles.beta}) *
         axis_angle_rotation({z, angles.gamma});
}

Matrix euler_unitary(const EulerAngles& angles) {
  const Eigen::Vector3d y(0, 1, 0), z(0, 0, 1);
  return su2_from_axis_angle({z, -angles.gamma}) *
         su2_from_axis_angle({y, -angles.beta}) *
         su2_from_axis_angle({z, -angles.alpha});
}

}  // namespace bbgeo
