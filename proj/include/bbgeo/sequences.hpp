#ifndef BBGEO_SEQUENCES_HPP
#define BBGEO_SEQUENCES_HPP

#include "bbgeo/symmetrize.hpp"

namespace bbgeo {

enum class SequenceAction { Storage, PreserveSubspace };

// Catalog entry: a worked pulse set with its documented geometric action.
struct NamedSequence {
  std::string name;
  PulseSet pulses;
  std::string basis_name;
  SequenceAction action = SequenceAction::Storage;
  std::string note;
};

// {1, -i s1}: inverts the s2 and s3 coordinates, annihilating (0,0,g).
NamedSequence parity_kick();

// m pulses exp(-i (pi k/m) n.sigma) realizing the coordinate rotations
// R_axis(2 pi k / m); annihilates every vector orthogonal to the axis.
NamedSequence cyclic_sequence(int order, const Eigen::Vector3d& axis);

// {1, -i s1, -i s2, -i s3}: annihilates every single-qubit vector.
NamedSequence vierergruppe();

// Four rotations sending the initial vector to tetrahedron vertices
// (images sum to zero, pairwise normalized dot products -1/3). Not closed
// as a group.
NamedSequence tetrahedron_sequence(const CoefficientVector& initial);

// Heisenberg exchange preserved while collective dephasing is removed by
// {1 (x) 1, -s1 (x) s1}. Bath operator for the dephasing term defaults to
// s3 on a two-dimensional bath.
struct TwoQubitExchangeExample {
  SystemHamiltonian hamiltonian;
  NamedSequence sequence;
  CoefficientVector exchange_vector;   // J at the three product directions
  CoefficientVector dephasing_vector;  // g at the two collective-s3 directions
};
TwoQubitExchangeExample two_qubit_exchange_example(double j_coupling = 1.0,
                                                   double g_coupling = 1.0,
                                                   const Matrix* bath = nullptr);

// Stable listing of catalog names ("parity-kick", "c3", "c4", "vierergruppe",
// "tetrahedron", "two-qubit-exchange").
std::vector<std::string> catalog_names();

// Resolve a catalog name with its default parameters; the tetrahedron uses
// initial vector (0,0,1) unless one is supplied.
NamedSequence make_named_sequence(const std::string& name,
                                  const CoefficientVector* tetrahedron_initial = nullptr);

}  // namespace bbgeo

#endif
