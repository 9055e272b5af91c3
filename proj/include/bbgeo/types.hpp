#ifndef BBGEO_TYPES_HPP
#define BBGEO_TYPES_HPP

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace bbgeo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;   // dense complex operators
using RMatrix = Eigen::MatrixXd;   // adjoint-space rotations
using RVector = Eigen::VectorXd;   // coordinate vectors

// Tolerances: exact_tol for analytically exact constructions at n <= 4,
// numeric_tol for derived numerical comparisons.
inline constexpr double exact_tol = 1e-12;
inline constexpr double numeric_tol = 1e-9;
inline constexpr double storage_tol_default = 1e-9;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operand shapes or bases do not match.
struct ShapeError : Error {
  using Error::Error;
};

// Input violates a mathematical precondition (non-Hermitian, non-unitary, ...).
struct ValidityError : Error {
  using Error::Error;
};

// Dimension parameter outside the supported range.
struct DimensionError : Error {
  using Error::Error;
};

// Problem description cannot be parsed or validated.
struct ConfigError : Error {
  using Error::Error;
};

// Search would exceed the configured subset-count cap.
struct BudgetError : Error {
  using Error::Error;
};

// Matrix-logarithm eigenphase too close to the +/-pi branch cut.
struct BranchCutError : Error {
  using Error::Error;
};

}  // namespace bbgeo

#endif
