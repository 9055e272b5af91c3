#include "bbgeo/dynamics.hpp"

#include <cmath>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

Matrix free_propagator(const Matrix& h_total, double t) {
  if (!is_hermitian(h_total))
    throw ValidityError("free_propagator: Hamiltonian is not Hermitian");
  if (t < 0.0) throw ValidityError("free_propagator: negative time");
  return exp_hermitian(h_total, Complex(0.0, -t));
}

CyclePropagator cycle_propagator(const Matrix& h_total, const PulseSet& pulses,
                                 double dt, int bath_dim) {
  if (dt <= 0.0) throw ValidityError("cycle_propagator: interval must be positive");
  const int n = pulses.dimension();
  const Eigen::Index full = static_cast<Eigen::Index>(n) * bath_dim;
  if (h_total.rows() != full || h_total.cols() != full)
    throw ShapeError("cycle_propagator: Hamiltonian does not match system (x) bath");

  const Matrix u0 = free_propagator(h_total, dt);
  const Matrix id_bath = Matrix::Identity(bath_dim, bath_dim);
  Matrix cycle = Matrix::Identity(full, full);
  for (int k = 0; k < pulses.size(); ++k) {
    const Matrix gk = kron(pulses.unitaries[k], id_bath);
    cycle = (gk.adjoint() * u0 * gk) * cycle;  // k = 0 acts first
  }
  return {std::move(cycle), dt, dt * pulses.size(), n, bath_dim};
}

EffectiveHamiltonianEstimate extract_effective_hamiltonian(const CyclePropagator& p) {
  if (p.cycle_time <= 0.0)
    throw ValidityError("extract_effective_hamiltonian: cycle time must be positive");
  const Matrix log_u = log_unitary(p.matrix);
  Matrix h = (Complex(0.0, 1.0) / p.cycle_time) * log_u;
  h = project_traceless(hermitize(h));
  return {std::move(h), p.cycle_time};
}

Matrix ideal_average(const Matrix& h_total, const PulseSet& pulses, int bath_dim) {
  const Eigen::Index full = static_cast<Eigen::Index>(pulses.dimension()) * bath_dim;
  if (h_total.rows() != full || h_total.cols() != full)
    throw ShapeError("ideal_average: Hamiltonian does not match system (x) bath");
  const Matrix id_bath = Matrix::Identity(bath_dim, bath_dim);
  Matrix out = Matrix::Zero(full, full);
  for (int k = 0; k < pulses.size(); ++k) {
    const Matrix gk = kron(pulses.unitaries[k], id_bath);
    out += pulses.weights(k) * (gk.adjoint() * h_total * gk);
  }
  return hermitize(out);
}

Matrix system_nontrivial_part(const Matrix& x, int system_dim, int bath_dim) {
  const Matrix bath_part = partial_trace_system(x, system_dim, bath_dim);
  return x - kron(Matrix::Identity(system_dim, system_dim),
                  bath_part / static_cast<double>(system_dim));
}

ComponentNorms classify_components(const Matrix& x, const SystemHamiltonian& h,
                                   int bath_dim) {
  const int n = h.dimension;
  ComponentNorms norms;

  Matrix remainder = system_nontrivial_part(x, n, bath_dim);
  norms.bath_only = project_traceless(x - remainder).norm();

  Matrix wanted_part = Matrix::Zero(x.rows(), x.cols());
  Matrix error_part = Matrix::Zero(x.rows(), x.cols());
  for (const auto& term : h.terms) {
    Matrix bath = Matrix::Identity(bath_dim, bath_dim);
    if (const Matrix* b = std::get_if<Matrix>(&term.bath)) bath = *b;
    Matrix dir = kron(term.system_op, bath);
    const double dir_sq = dir.squaredNorm();
    if (dir_sq == 0.0) continue;
    const Complex coeff = (dir.adjoint() * remainder).trace() / dir_sq;
    const Matrix proj = coeff * dir;
    (term.wanted ? wanted_part : error_part) += proj;
    remainder -= proj;
  }
  norms.wanted = wanted_part.norm();
  norms.error_terms = error_part.norm();
  norms.other = remainder.norm();
  return norms;
}

std::vector<ScanPoint> convergence_scan(const Matrix& h_total, const PulseSet& pulses,
                                        const SystemHamiltonian& h_terms, int bath_dim,
                                        const std::vector<double>& dt_list) {
  if (dt_list.empty()) throw ValidityError("convergence_scan: empty interval list");
  for (size_t i = 0; i < dt_list.size(); ++i) {
    if (dt_list[i] <= 0.0) throw ValidityError("convergence_scan: intervals must be positive");
    if (i > 0 && dt_list[i] >= dt_list[i - 1])
      throw ValidityError("convergence_scan: intervals must be descending");
  }
  const int n = pulses.dimension();
  const Matrix ideal = ideal_average(h_total, pulses, bath_dim);

  std::vector<ScanPoint> points;
  points.reserve(dt_list.size());
  for (double dt : dt_list) {
    const auto est = extract_effective_hamiltonian(cycle_propagator(h_total, pulses, dt, bath_dim));
    const Matrix diff = est.matrix - ideal;
    ScanPoint pt;
    pt.delta_t = dt;
    pt.residual_interaction = system_nontrivial_part(diff, n, bath_dim).norm();
    pt.residual_total = diff.norm();
    pt.estimate_components = classify_components(est.matrix, h_terms, bath_dim);
    points.push_back(std::move(pt));
  }
  return points;
}

Matrix full_hamiltonian(const SystemHamiltonian& h, int bath_dim,
                        const Matrix* bath_hamiltonian) {
  const int n = h.dimension;
  const Eigen::Index full = static_cast<Eigen::Index>(n) * bath_dim;
  Matrix out = Matrix::Zero(full, full);
  for (const auto& term : h.terms) {
    if (std::holds_alternative<std::string>(term.bath))
      throw ConfigError("term '" + term.label +
                        "': abstract bath label; dynamics needs a concrete bath matrix");
    Matrix bath = Matrix::Identity(bath_dim, bath_dim);
    if (const Matrix* b = std::get_if<Matrix>(&term.bath)) {
      if (b->rows() != bath_dim)
        throw ShapeError("term '" + term.label + "': bath dimension mismatch");
      bath = *b;
    }
    out += kron(term.system_op, bath);
  }
  if (bath_hamiltonian) {
    if (bath_hamiltonian->rows() != bath_dim || bath_hamiltonian->cols() != bath_dim)
      throw ShapeError("bath Hamiltonian dimension mismatch");
    if (!is_hermitian(*bath_hamiltonian))
      throw ValidityError("bath Hamiltonian is not Hermitian");
    out += kron(Matrix::Identity(n, n), *bath_hamiltonian);
  }
  return out;
}

}  // namespace bbgeo
