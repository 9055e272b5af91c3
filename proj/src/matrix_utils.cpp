#include "bbgeo/matrix_utils.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

namespace bbgeo {

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

bool is_hermitian(const Matrix& a, double tol) {
  return a.rows() == a.cols() && (a - a.adjoint()).norm() <= tol;
}

bool is_unitary(const Matrix& u, double tol) {
  if (u.rows() != u.cols()) return false;
  Matrix g = u.adjoint() * u;
  g -= Matrix::Identity(u.rows(), u.cols());
  return g.norm() <= tol;
}

Matrix hermitize(const Matrix& x) { return 0.5 * (x + x.adjoint()); }

Matrix project_traceless(const Matrix& x) {
  if (x.rows() != x.cols()) throw ShapeError("project_traceless: matrix must be square");
  const Complex shift = x.trace() / static_cast<double>(x.rows());
  return x - shift * Matrix::Identity(x.rows(), x.cols());
}

Matrix exp_hermitian(const Matrix& h, Complex factor) {
  if (!is_hermitian(h)) throw ValidityError("exp_hermitian: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  const Eigen::VectorXd& w = es.eigenvalues();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) phases(k) = std::exp(factor * w(k));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix log_unitary(const Matrix& u, double branch_tol) {
  if (!is_unitary(u, 1e-8)) throw ValidityError("log_unitary: matrix is not unitary");
  // Unitary matrices are normal, so the Schur form is diagonal to roundoff
  // and Q is exactly unitary; safer than a generic eigensolver near
  // degenerate eigenvalues.
  Eigen::ComplexSchur<Matrix> schur(u);
  const Matrix& t = schur.matrixT();
  const Matrix& q = schur.matrixU();
  Eigen::VectorXcd logs(t.rows());
  for (Eigen::Index k = 0; k < t.rows(); ++k) {
    const double phase = std::arg(t(k, k));
    if (std::abs(std::abs(phase) - M_PI) <= branch_tol)
      throw BranchCutError(
          "log_unitary: eigenphase at the +/-pi branch cut; shrink the pulse "
          "interval so the cycle propagator stays away from the cut");
    logs(k) = Complex(0.0, phase);
  }
  return q * logs.asDiagonal() * q.adjoint();
}

double optimal_global_phase(const Matrix& a, const Matrix& b) {
  const Complex z = (b.adjoint() * a).trace();
  return std::abs(z) == 0.0 ? 0.0 : std::arg(z);
}

double phase_insensitive_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("phase_insensitive_distance: shape mismatch");
  // Aligning the phase and differencing directly avoids the cancellation a
  // trace-based shortcut would hit when a ~ e^{i phi} b.
  const Complex phase = std::exp(Complex(0.0, optimal_global_phase(a, b)));
  return (a - phase * b).norm();
}

Matrix partial_trace_system(const Matrix& x, int system_dim, int bath_dim) {
  if (x.rows() != static_cast<Eigen::Index>(system_dim) * bath_dim || x.rows() != x.cols())
    throw ShapeError("partial_trace_system: operator does not factor as system (x) bath");
  Matrix out = Matrix::Zero(bath_dim, bath_dim);
  for (int s = 0; s < system_dim; ++s)
    out += x.block(s * bath_dim, s * bath_dim, bath_dim, bath_dim);
  return out;
}

}  // namespace bbgeo
