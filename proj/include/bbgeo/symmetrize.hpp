#ifndef BBGEO_SYMMETRIZE_HPP
#define BBGEO_SYMMETRIZE_HPP

#include <map>

#include "bbgeo/adjoint.hpp"

namespace bbgeo {

enum class Closure { Unchecked, Yes, No };

// Ordered pulse unitaries U_0..U_{m-1} with U_0 = identity and normalized
// positive weights (uniform by default).
struct PulseSet {
  std::vector<Matrix> unitaries;
  RVector weights;
  Closure group_closed = Closure::Unchecked;

  int size() const { return static_cast<int>(unitaries.size()); }
  int dimension() const { return unitaries.empty() ? 0 : static_cast<int>(unitaries[0].rows()); }
};

// Validating constructors; uniform weights when none are given.
PulseSet make_pulse_set(std::vector<Matrix> unitaries, double tol = numeric_tol);
PulseSet make_pulse_set(std::vector<Matrix> unitaries, RVector weights,
                        double tol = numeric_tol);

// Per-term outcome of averaging, plus aggregates.
struct TermReport {
  std::string label;
  bool wanted = false;
  CoefficientVector original;
  CoefficientVector averaged;
  CoefficientVector target;
  RVector error;       // averaged - target
  double distance = 0.0;
  double hs_overlap = 0.0;  // M * (averaged . target)
};

struct DecouplingReport {
  std::vector<TermReport> terms;
  bool storage_achieved = false;  // every ||averaged|| <= tol
  double max_distance = 0.0;
  Closure group_closed = Closure::Unchecked;
  double tolerance = storage_tol_default;
};

// a' = sum_k w_k R_k a. Rotations must share the vector's basis; weights
// must be normalized.
CoefficientVector average_vector(const CoefficientVector& a,
                                 const std::vector<AdjointRotation>& rotations,
                                 const RVector& weights);
CoefficientVector average_vector(const CoefficientVector& a,
                                 const std::vector<AdjointRotation>& rotations);

// Matrix-form averaging: each term's system operator becomes
// sum_k w_k U_k^dag S U_k; bath parts are untouched.
SystemHamiltonian effective_hamiltonian(const SystemHamiltonian& h,
                                        const PulseSet& pulses);

bool check_storage(const std::vector<CoefficientVector>& averaged, double tol);
bool check_target(const CoefficientVector& averaged, const CoefficientVector& target,
                  double tol);

// True iff X commutes with every pulse within tol.
bool centralizer_check(const Matrix& x, const PulseSet& pulses, double tol);

// True iff all pairwise products land back in the set up to a global phase
// and every element's inverse is present; records the result on the set.
bool verify_group_closure(PulseSet& pulses, double tol = numeric_tol);

// True iff R v = v within tol.
bool little_group_check(const AdjointRotation& r, const CoefficientVector& v,
                        double tol);

// Full coordinate-level pipeline: expand each term, average under the pulse
// rotations, compare against targets (default: zero for error terms, the
// original vector for wanted terms). Checks group closure as a side effect.
DecouplingReport analyze(const SystemHamiltonian& h, PulseSet& pulses,
                         const GeneratorBasis& basis,
                         const std::map<std::string, CoefficientVector>& targets = {},
                         double tol = storage_tol_default);

}  // namespace bbgeo

#endif
