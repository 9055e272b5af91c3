#ifndef BBGEO_METRICS_HPP
#define BBGEO_METRICS_HPP

#include "bbgeo/algebra.hpp"

namespace bbgeo {

// Difference between achieved and target coordinate vectors.
struct ErrorVector {
  BasisRef basis;
  RVector components;   // achieved - target
  double magnitude = 0.0;  // Euclidean norm
};

ErrorVector error_vector(const CoefficientVector& achieved,
                         const CoefficientVector& target);

// ||a - b||_2 in coordinate space; equals the operator Hilbert-Schmidt
// distance of the reconstructions divided by sqrt(M).
double euclidean_distance(const CoefficientVector& a, const CoefficientVector& b);

// Conjugated inner-product distance for complex coordinate vectors
// (non-Hermitian evolution; accepted but flagged by name).
double euclidean_distance_complex(const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b);

// M * (a . b) = Tr[reconstruct(a) reconstruct(b)]
double hs_overlap(const CoefficientVector& a, const CoefficientVector& b);

// sqrt(1 - (1/n) Re Tr(U^dag V)). Sensitive to global phase by definition.
double unitary_trace_distance(const Matrix& u, const Matrix& v);

// sqrt(1 - (1/n) |Tr(U^dag V)|): the phase-minimized variant.
double unitary_trace_distance_phase_min(const Matrix& u, const Matrix& v);

// Exact short-time trace distance between exp(-i H t) generated by two
// coefficient vectors versus its first-order coordinate surrogate
// t sqrt(M/(2n)) ||a_target - a_achieved||. The relative gap shrinks as
// O(t^2) when t decreases.
struct ShortTimeComparison {
  double t = 0.0;
  double exact = 0.0;
  double surrogate = 0.0;
  double abs_difference = 0.0;
  double rel_difference = 0.0;  // abs_difference / exact (0 when exact == 0)
};

ShortTimeComparison short_time_distance_check(const CoefficientVector& a_target,
                                              const CoefficientVector& a_achieved,
                                              const GeneratorBasis& basis, double t);

}  // namespace bbgeo

#endif
