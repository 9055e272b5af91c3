#ifndef BBGEO_SEARCH_HPP
#define BBGEO_SEARCH_HPP

#include "bbgeo/symmetrize.hpp"

namespace bbgeo {

// Labeled pool of candidate pulse unitaries.
struct CandidateLibrary {
  struct Candidate {
    std::string label;
    Matrix unitary;
  };
  BasisRef basis;
  std::vector<Candidate> candidates;
};

// 1, X, Y, Z on one qubit.
CandidateLibrary single_qubit_pauli_library();

// The 16 two-qubit Pauli products.
CandidateLibrary two_qubit_pauli_library();

// Rotations by 2 pi k / divisions (k = 1..divisions-1) about x, y and z.
CandidateLibrary axis_grid_library(int divisions);

struct SearchResult {
  std::vector<std::string> labels;
  PulseSet pulses;
  std::map<std::string, CoefficientVector> averaged;  // by term label
  double d_max = 0.0;
  int size = 0;
  bool group_closed = false;
  bool feasible = false;  // d_max <= tolerance
};

struct SearchOptions {
  int max_size = 2;
  double tolerance = storage_tol_default;
  long budget = 1'000'000;  // cap on evaluated subsets
  int top_k = 5;            // fallback result count when nothing is feasible
};

// Exhaustively grades every subset of the library that contains the
// identity, in increasing size then lexicographic label order. Returns all
// feasible subsets sorted by (size, d_max, labels); if none are feasible,
// the best top_k by d_max. Throws BudgetError when the enumeration would
// exceed the budget.
std::vector<SearchResult> find_pulse_sets(
    const SystemHamiltonian& h, const GeneratorBasis& basis,
    const std::map<std::string, CoefficientVector>& targets,
    const CandidateLibrary& library, const SearchOptions& options);

// Grade one user-supplied pulse set against the targets.
SearchResult grade_pulse_set(const SystemHamiltonian& h, const GeneratorBasis& basis,
                             const std::map<std::string, CoefficientVector>& targets,
                             PulseSet pulses);

}  // namespace bbgeo

#endif
