#ifndef BBGEO_MATRIX_UTILS_HPP
#define BBGEO_MATRIX_UTILS_HPP

#include "bbgeo/types.hpp"

namespace bbgeo {

Matrix kron(const Matrix& a, const Matrix& b);

bool is_hermitian(const Matrix& a, double tol = numeric_tol);
bool is_unitary(const Matrix& u, double tol = numeric_tol);

// (X + X^dag)/2
Matrix hermitize(const Matrix& x);

// X - (tr X / n) * I
Matrix project_traceless(const Matrix& x);

// exp(factor * H) for Hermitian H, via eigendecomposition.
Matrix exp_hermitian(const Matrix& h, Complex factor);

// Principal logarithm of a unitary matrix; eigenphases in (-pi, pi].
// Throws BranchCutError if an eigenphase lies within branch_tol of +/-pi.
Matrix log_unitary(const Matrix& u, double branch_tol = numeric_tol);

// min over global phases e^{i phi} of ||a - e^{i phi} b||_F
double phase_insensitive_distance(const Matrix& a, const Matrix& b);

// phi minimizing ||a - e^{i phi} b||_F
double optimal_global_phase(const Matrix& a, const Matrix& b);

// Trace over the system factor of an operator on system (x) bath,
// basis ordering index = s * bath_dim + b.
Matrix partial_trace_system(const Matrix& x, int system_dim, int bath_dim);

}  // namespace bbgeo

#endif
