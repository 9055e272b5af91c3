#ifndef BBGEO_DYNAMICS_HPP
#define BBGEO_DYNAMICS_HPP

#include "bbgeo/symmetrize.hpp"

namespace bbgeo {

// Exact propagator of one pulse cycle at finite pulse interval.
struct CyclePropagator {
  Matrix matrix;          // unitary on system (x) bath
  double interval = 0.0;  // free-evolution time between pulses
  double cycle_time = 0.0;  // |G| * interval
  int system_dim = 0;
  int bath_dim = 0;
};

// Hermitian, identity-projected estimate recovered from the cycle
// propagator; exp(-i H t) convention, so H_est = (i/T_c) Log U(T_c).
struct EffectiveHamiltonianEstimate {
  Matrix matrix;
  double cycle_time = 0.0;
};

// Norms of an operator's components classified against a reference
// Hamiltonian's term directions.
struct ComponentNorms {
  double wanted = 0.0;     // along wanted-term directions
  double error_terms = 0.0;  // along error-term directions
  double bath_only = 0.0;  // identity system factor
  double other = 0.0;      // remaining system-nontrivial part
};

// exp(-i H t) for Hermitian H.
Matrix free_propagator(const Matrix& h_total, double t);

// Product over pulses of U_k^dag U_0(dt) U_k with the k = 0 factor acting
// first (rightmost). Pulses act on the system factor and are extended by the
// identity on the bath.
CyclePropagator cycle_propagator(const Matrix& h_total, const PulseSet& pulses,
                                 double dt, int bath_dim);

// Principal-branch extraction; throws BranchCutError near eigenphase +/-pi.
EffectiveHamiltonianEstimate extract_effective_hamiltonian(const CyclePropagator& p);

// Ideal pulse average of a full-space Hamiltonian: sum_k w_k (U_k (x) 1)^dag H (U_k (x) 1).
Matrix ideal_average(const Matrix& h_total, const PulseSet& pulses, int bath_dim);

// Part of X with a traceless system factor (the complement of 1_S (x) *).
Matrix system_nontrivial_part(const Matrix& x, int system_dim, int bath_dim);

// Component norms of X along the full-space directions S_g (x) B_g of a
// reference Hamiltonian (all bath parts must be concrete), the identity
// system-factor subspace, and the remainder.
ComponentNorms classify_components(const Matrix& x, const SystemHamiltonian& h,
                                   int bath_dim);

struct ScanPoint {
  double delta_t = 0.0;
  double residual_interaction = 0.0;  // ||system-nontrivial part of (H_est - ideal)||_F
  double residual_total = 0.0;        // ||H_est - ideal||_F
  ComponentNorms estimate_components;
};

// Residuals of the finite-interval estimate against the ideal average at
// each interval in dt_list (positive, descending).
std::vector<ScanPoint> convergence_scan(const Matrix& h_total, const PulseSet& pulses,
                                        const SystemHamiltonian& h_terms, int bath_dim,
                                        const std::vector<double>& dt_list);

// Assemble the full-space matrix sum_g S_g (x) B_g (+ 1 (x) H_B when given).
// Abstract bath labels are rejected: dynamics needs concrete matrices.
Matrix full_hamiltonian(const SystemHamiltonian& h, int bath_dim,
                        const Matrix* bath_hamiltonian = nullptr);

}  // namespace bbgeo

#endif
