#include "bbgeo/metrics.hpp"

#include <cmath>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

namespace {

void require_same_basis(const CoefficientVector& a, const CoefficientVector& b,
                        const char* where) {
  if (!a.basis.compatible(b.basis) || a.values.size() != b.values.size())
    throw ShapeError(std::string(where) + ": basis mismatch");
}

}  // namespace

ErrorVector error_vector(const CoefficientVector& achieved,
                         const CoefficientVector& target) {
  require_same_basis(achieved, target, "error_vector");
  RVector e = achieved.values - target.values;
  const double d = e.norm();
  return {achieved.basis, std::move(e), d};
}

double euclidean_distance(const CoefficientVector& a, const CoefficientVector& b) {
  require_same_basis(a, b, "euclidean_distance");
  return (a.values - b.values).norm();
}

double euclidean_distance_complex(const Eigen::VectorXcd& a,
                                  const Eigen::VectorXcd& b) {
  if (a.size() != b.size()) throw ShapeError("euclidean_distance_complex: length mismatch");
  return (a - b).norm();
}

double hs_overlap(const CoefficientVector& a, const CoefficientVector& b) {
  require_same_basis(a, b, "hs_overlap");
  return a.basis.normalization * a.values.dot(b.values);
}

double unitary_trace_distance(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw ShapeError("unitary_trace_distance: shape mismatch");
  const double re = (u.adjoint() * v).trace().real();
  return std::sqrt(std::max(0.0, 1.0 - re / static_cast<double>(u.rows())));
}

double unitary_trace_distance_phase_min(const Matrix& u, const Matrix& v) {
  if (u.rows() != v.rows() || u.cols() != v.cols())
    throw ShapeError("unitary_trace_distance_phase_min: shape mismatch");
  const double mag = std::abs((u.adjoint() * v).trace());
  return std::sqrt(std::max(0.0, 1.0 - mag / static_cast<double>(u.rows())));
}

ShortTimeComparison short_time_distance_check(const CoefficientVector& a_target,
                                              const CoefficientVector& a_achieved,
                                              const GeneratorBasis& basis, double t) {
  require_same_basis(a_target, a_achieved, "short_time_distance_check");
  const Matrix ht = reconstruct(a_target, basis);
  const Matrix ha = reconstruct(a_achieved, basis);
  const Complex mi(0.0, -1.0);

  ShortTimeComparison cmp;
  cmp.t = t;
  cmp.exact = unitary_trace_distance(exp_hermitian(ht, mi * t), exp_hermitian(ha, mi * t));
  cmp.surrogate = t *
                  std::sqrt(basis.normalization / (2.0 * basis.dimension)) *
                  euclidean_distance(a_target, a_achieved);
  cmp.abs_difference = std::abs(cmp.exact - cmp.surrogate);
  cmp.rel_difference = cmp.exact > 0.0 ? cmp.abs_difference / cmp.exact : 0.0;
  return cmp;
}

}  // namespace bbgeo
