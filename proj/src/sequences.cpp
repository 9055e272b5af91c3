#include "bbgeo/sequences.hpp"

#include <cmath>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

namespace {

const Eigen::Vector3d kXAxis(1, 0, 0);
const Eigen::Vector3d kYAxis(0, 1, 0);

// Unit axis orthogonal to v: y for vectors along z (the worked single-qubit
// geometry), otherwise the smallest-index coordinate axis with the largest
// orthogonal component.
Eigen::Vector3d first_rotation_axis(const Eigen::Vector3d& v) {
  const Eigen::Vector3d n = v.normalized();
  if (std::abs(std::abs(n.z()) - 1.0) <= exact_tol) return kYAxis;
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(n(i)) < std::abs(n(best))) best = i;
  Eigen::Vector3d e = Eigen::Vector3d::Zero();
  e(best) = 1.0;
  return (e - e.dot(n) * n).normalized();
}

}  // namespace

NamedSequence parity_kick() {
  GeneratorBasis pauli = make_pauli_basis();
  std::vector<Matrix> us{Matrix::Identity(2, 2),
                         Complex(0.0, -1.0) * pauli.elements[0]};
  NamedSequence seq{"parity-kick", make_pulse_set(std::move(us)), "pauli",
                    SequenceAction::Storage,
                    "order-2 cyclic kick; flips the s2 and s3 coordinates"};
  verify_group_closure(seq.pulses);
  return seq;
}

NamedSequence cyclic_sequence(int order, const Eigen::Vector3d& axis) {
  if (order < 2) throw DimensionError("cyclic_sequence: order must be >= 2");
  if (axis.norm() <= numeric_tol) throw ValidityError("cyclic_sequence: zero axis");
  const Eigen::Vector3d n = axis.normalized();
  std::vector<Matrix> us;
  us.reserve(static_cast<size_t>(order));
  for (int k = 0; k < order; ++k)
    us.push_back(su2_from_axis_angle({n, -2.0 * M_PI * k / order}));
  NamedSequence seq{"c" + std::to_string(order), make_pulse_set(std::move(us)),
                    "pauli", SequenceAction::Storage,
                    "cyclic rotations about one axis; clears the orthogonal plane"};
  verify_group_closure(seq.pulses);
  return seq;
}

NamedSequence vierergruppe() {
  GeneratorBasis pauli = make_pauli_basis();
  const Complex mi(0.0, -1.0);
  std::vector<Matrix> us{Matrix::Identity(2, 2), mi * pauli.elements[0],
                         mi * pauli.elements[1], mi * pauli.elements[2]};
  NamedSequence seq{"vierergruppe", make_pulse_set(std::move(us)), "pauli",
                    SequenceAction::Storage,
                    "pi rotations about three orthogonal axes; full one-qubit storage"};
  verify_group_closure(seq.pulses);
  return seq;
}

NamedSequence tetrahedron_sequence(const CoefficientVector& initial) {
  if (initial.values.size() != 3)
    throw ShapeError("tetrahedron_sequence: initial vector must have 3 components");
  if (initial.values.norm() <= numeric_tol)
    throw ValidityError("tetrahedron_sequence: initial vector must be nonzero");

  const double theta = std::acos(-1.0 / 3.0);
  const Eigen::Vector3d a1(initial.values(0), initial.values(1), initial.values(2));
  const Eigen::Vector3d first_axis = first_rotation_axis(a1);
  const Eigen::Vector3d a2 = axis_angle_rotation({first_axis, theta}) * a1;
  const Eigen::Vector3d second_axis = a2.normalized();

  // Rotation k is realized by the pulse su2_from_axis_angle(axis, -angle).
  std::vector<Matrix> us;
  us.push_back(Matrix::Identity(2, 2));
  us.push_back(su2_from_axis_angle({first_axis, -theta}));
  us.push_back(su2_from_axis_angle({second_axis, -2.0 * M_PI / 3.0}));
  us.push_back(su2_from_axis_angle({second_axis, 2.0 * M_PI / 3.0}));

  NamedSequence seq{"tetrahedron", make_pulse_set(std::move(us)), "pauli",
                    SequenceAction::Storage,
                    "non-subgroup set; images at tetrahedron vertices sum to zero"};
  verify_group_closure(seq.pulses);
  return seq;
}

TwoQubitExchangeExample two_qubit_exchange_example(double j_coupling, double g_coupling,
                                                   const Matrix* bath) {
  GeneratorBasis basis = make_pauli_tensor_basis(2);

  RVector v1 = RVector::Zero(15);
  v1(6) = v1(10) = v1(14) = j_coupling;  // s1s1, s2s2, s3s3 products
  RVector v2 = RVector::Zero(15);
  v2(2) = v2(5) = g_coupling;  // s3 (x) 1 and 1 (x) s3

  CoefficientVector exchange{basis.ref(), v1, "exchange"};
  CoefficientVector dephasing{basis.ref(), v2, "collective-dephasing"};

  Matrix bath_op(2, 2);
  bath_op << 1, 0, 0, -1;
  if (bath) bath_op = *bath;

  SystemHamiltonian h;
  h.dimension = 4;
  h.add_term("exchange", reconstruct(exchange, basis), std::monostate{}, true);
  h.add_term("collective-dephasing", reconstruct(dephasing, basis), bath_op, false);

  GeneratorBasis pauli = make_pauli_basis();
  std::vector<Matrix> us{Matrix::Identity(4, 4),
                         -kron(pauli.elements[0], pauli.elements[0])};
  NamedSequence seq{"two-qubit-exchange", make_pulse_set(std::move(us)),
                    "pauli-tensor", SequenceAction::PreserveSubspace,
                    "keeps the exchange coupling fixed while inverting collective dephasing"};
  verify_group_closure(seq.pulses);
  return {std::move(h), std::move(seq), std::move(exchange), std::move(dephasing)};
}

std::vector<std::string> catalog_names() {
  return {"parity-kick", "c3", "c4", "vierergruppe", "tetrahedron", "two-qubit-exchange"};
}

NamedSequence make_named_sequence(const std::string& name,
                                  const CoefficientVector* tetrahedron_initial) {
  if (name == "parity-kick") return parity_kick();
  if (name == "c3") return cyclic_sequence(3, kXAxis);
  if (name == "c4") return cyclic_sequence(4, kXAxis);
  if (name == "vierergruppe") return vierergruppe();
  if (name == "tetrahedron") {
    if (tetrahedron_initial) return tetrahedron_sequence(*tetrahedron_initial);
    GeneratorBasis pauli = make_pauli_basis();
    RVector v = RVector::Zero(3);
    v(2) = 1.0;
    return tetrahedron_sequence({pauli.ref(), v, {}});
  }
  if (name == "two-qubit-exchange") return two_qubit_exchange_example().sequence;
  throw ConfigError("unknown sequence name '" + name + "'");
}

}  // namespace bbgeo
