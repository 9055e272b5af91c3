#include "bbgeo/symmetrize.hpp"

#include <cmath>

#include "bbgeo/matrix_utils.hpp"
#include "bbgeo/metrics.hpp"

namespace bbgeo {

PulseSet make_pulse_set(std::vector<Matrix> unitaries, double tol) {
  const auto m = unitaries.size();
  if (m == 0) throw ValidityError("pulse set must not be empty");
  RVector w = RVector::Constant(static_cast<Eigen::Index>(m), 1.0 / static_cast<double>(m));
  return make_pulse_set(std::move(unitaries), std::move(w), tol);
}

PulseSet make_pulse_set(std::vector<Matrix> unitaries, RVector weights, double tol) {
  if (unitaries.empty()) throw ValidityError("pulse set must not be empty");
  if (weights.size() != static_cast<Eigen::Index>(unitaries.size()))
    throw ShapeError("pulse set: one weight per unitary required");
  const Eigen::Index n = unitaries[0].rows();
  if ((unitaries[0] - Matrix::Identity(n, n)).norm() > tol)
    throw ValidityError("pulse set: U_0 must be the identity");
  for (const Matrix& u : unitaries) {
    if (u.rows() != n || u.cols() != n) throw ShapeError("pulse set: mixed dimensions");
    if (!is_unitary(u, tol)) throw ValidityError("pulse set: element is not unitary");
  }
  if (weights.minCoeff() <= 0.0) throw ValidityError("pulse set: weights must be positive");
  if (std::abs(weights.sum() - 1.0) > tol)
    throw ValidityError("pulse set: weights must sum to 1");
  return {std::move(unitaries), std::move(weights), Closure::Unchecked};
}

CoefficientVector average_vector(const CoefficientVector& a,
                                 const std::vector<AdjointRotation>& rotations,
                                 const RVector& weights) {
  if (weights.size() != static_cast<Eigen::Index>(rotations.size()))
    throw ShapeError("average_vector: one weight per rotation required");
  if (std::abs(weights.sum() - 1.0) > numeric_tol)
    throw ValidityError("average_vector: weights must sum to 1");
  RVector out = RVector::Zero(a.values.size());
  for (size_t k = 0; k < rotations.size(); ++k) {
    if (!rotations[k].basis.compatible(a.basis))
      throw ShapeError("average_vector: rotation basis does not match vector basis");
    out += weights(static_cast<Eigen::Index>(k)) * (rotations[k].matrix * a.values);
  }
  return {a.basis, std::move(out), a.label};
}

CoefficientVector average_vector(const CoefficientVector& a,
                                 const std::vector<AdjointRotation>& rotations) {
  RVector w = RVector::Constant(static_cast<Eigen::Index>(rotations.size()),
                                1.0 / static_cast<double>(rotations.size()));
  return average_vector(a, rotations, w);
}

SystemHamiltonian effective_hamiltonian(const SystemHamiltonian& h,
                                        const PulseSet& pulses) {
  if (pulses.dimension() != h.dimension)
    throw ShapeError("effective_hamiltonian: pulse dimension does not match system");
  SystemHamiltonian out;
  out.dimension = h.dimension;
  for (const auto& term : h.terms) {
    Matrix s = Matrix::Zero(h.dimension, h.dimension);
    for (int k = 0; k < pulses.size(); ++k)
      s += pulses.weights(k) *
           (pulses.unitaries[k].adjoint() * term.system_op * pulses.unitaries[k]);
    out.terms.push_back({term.label, hermitize(s), term.bath, term.wanted});
  }
  return out;
}

bool check_storage(const std::vector<CoefficientVector>& averaged, double tol) {
  for (const auto& a : averaged)
    if (a.values.norm() > tol) return false;
  return true;
}

bool check_target(const CoefficientVector& averaged, const CoefficientVector& target,
                  double tol) {
  if (!averaged.basis.compatible(target.basis) ||
      averaged.values.size() != target.values.size())
    throw ShapeError("check_target: basis mismatch");
  return (averaged.values - target.values).norm() <= tol;
}

bool centralizer_check(const Matrix& x, const PulseSet& pulses, double tol) {
  if (x.rows() != pulses.dimension() || x.cols() != pulses.dimension())
    throw ShapeError("centralizer_check: dimension mismatch");
  for (const Matrix& g : pulses.unitaries)
    if ((x * g - g * x).norm() > tol) return false;
  return true;
}

bool verify_group_closure(PulseSet& pulses, double tol) {
  const int m = pulses.size();
  auto in_set_up_to_phase = [&](const Matrix& a) {
    for (int i = 0; i < m; ++i)
      if (phase_insensitive_distance(a, pulses.unitaries[i]) <= tol) return true;
    return false;
  };
  bool closed = true;
  for (int j = 0; j < m && closed; ++j) {
    // inverse present?
    if (!in_set_up_to_phase(pulses.unitaries[j].adjoint())) closed = false;
    for (int k = 0; k < m && closed; ++k)
      if (!in_set_up_to_phase(pulses.unitaries[j] * pulses.unitaries[k])) closed = false;
  }
  pulses.group_closed = closed ? Closure::Yes : Closure::No;
  return closed;
}

bool little_group_check(const AdjointRotation& r, const CoefficientVector& v,
                        double tol) {
  if (!r.basis.compatible(v.basis) || r.matrix.cols() != v.values.size())
    throw ShapeError("little_group_check: basis mismatch");
  return (r.matrix * v.values - v.values).norm() <= tol;
}

DecouplingReport analyze(const SystemHamiltonian& h, PulseSet& pulses,
                         const GeneratorBasis& basis,
                         const std::map<std::string, CoefficientVector>& targets,
                         double tol) {
  if (h.dimension != basis.dimension)
    throw ShapeError("analyze: basis dimension does not match system");
  if (pulses.dimension() != h.dimension)
    throw ShapeError("analyze: pulse dimension does not match system");

  std::vector<AdjointRotation> rotations;
  rotations.reserve(static_cast<size_t>(pulses.size()));
  for (const Matrix& u : pulses.unitaries) rotations.push_back(adjoint_rotation(u, basis));

  verify_group_closure(pulses);

  DecouplingReport report;
  report.tolerance = tol;
  report.group_closed = pulses.group_closed;

  bool storage = true;
  for (const auto& term : h.terms) {
    TermReport tr;
    tr.label = term.label;
    tr.wanted = term.wanted;
    tr.original = expand(term.system_op, basis);
    tr.original.label = term.label;
    tr.averaged = average_vector(tr.original, rotations, pulses.weights);

    auto it = targets.find(term.label);
    if (it != targets.end()) {
      tr.target = it->second;
      if (!tr.target.basis.compatible(basis.ref()))
        throw ShapeError("analyze: target basis mismatch for term '" + term.label + "'");
    } else if (term.wanted) {
      tr.target = tr.original;
    } else {
      tr.target = {basis.ref(), RVector::Zero(basis.count()), term.label};
    }

    const ErrorVector ev = error_vector(tr.averaged, tr.target);
    tr.error = ev.components;
    tr.distance = ev.magnitude;
    tr.hs_overlap = hs_overlap(tr.averaged, tr.target);
    if (tr.averaged.values.norm() > tol) storage = false;
    report.max_distance = std::max(report.max_distance, tr.distance);
    report.terms.push_back(std::move(tr));
  }
  report.storage_achieved = storage;
  return report;
}

}  // namespace bbgeo
