#ifndef BBGEO_ADJOINT_HPP
#define BBGEO_ADJOINT_HPP

#include "bbgeo/algebra.hpp"

namespace bbgeo {

// Orthogonal image of a unitary in coordinate space.
//
// Convention (fixed everywhere in this library): the stored matrix acts on
// coordinate column vectors for the map S -> U^dag S U, i.e.
//
//     coords(U^dag S U) = R * coords(S),   R_ij = (1/M) Tr(l_i U^dag l_j U).
//
// Because conjugation composes inside-out, the map reverses products:
//
//     adjoint_rotation(U * V) = adjoint_rotation(V) * adjoint_rotation(U).
//
// Equivalently, columnwise: U^dag l_j U = sum_i R_ij l_i.
struct AdjointRotation {
  BasisRef basis;
  RMatrix matrix;
};

// Unit axis and angle in radians for a coordinate-space rotation.
struct AxisAngle {
  Eigen::Vector3d axis;
  double angle = 0.0;
};

// z-y-z angles in radians.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

// Coordinate rotation of the conjugation S -> U^dag S U. U must be unitary
// within tol and match the basis dimension.
AdjointRotation adjoint_rotation(const Matrix& u, const GeneratorBasis& basis,
                                 double tol = numeric_tol);

// 3x3 rotation about a unit axis, in the same orientation the adjoint map
// produces for the corresponding SU(2) conjugation: for the x axis
//
//     [[1, 0, 0], [0, cos t, sin t], [0, -sin t, cos t]].
//
// axis_angle_rotation(n, t) == adjoint_rotation(su2_from_axis_angle(n, -t)).
RMatrix axis_angle_rotation(const AxisAngle& p, double tol = numeric_tol);

// exp(i (theta/2) n . sigma). Under S -> U^dag S U this unitary implements
// axis_angle_rotation(n, -theta); pass the negated angle for the forward
// rotation (both signs are reachable, no hidden convention).
Matrix su2_from_axis_angle(const AxisAngle& p, double tol = numeric_tol);

// Derived z-y-z rotation Rz(alpha) * Ry(beta) * Rz(gamma), each factor an
// axis_angle_rotation; equals adjoint_rotation(euler_unitary(angles)).
RMatrix euler_rotation(const EulerAngles& angles);

// exp(-i s3 gamma/2) exp(-i s2 beta/2) exp(-i s3 alpha/2); its conjugation
// action realizes euler_rotation(angles).
Matrix euler_unitary(const EulerAngles& angles);

}  // namespace bbgeo

#endif
