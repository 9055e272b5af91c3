#ifndef BBGEO_TEST_HELPERS_HPP
#define BBGEO_TEST_HELPERS_HPP

#include <random>

#include "bbgeo/algebra.hpp"
#include "bbgeo/matrix_utils.hpp"

namespace bbgeo::testing {

using Rng = std::mt19937;

inline Matrix random_ginibre(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) g(r, c) = Complex(gauss(rng), gauss(rng));
  return g;
}

// Haar-ish unitary: QR of a Ginibre matrix with phase-fixed R diagonal.
inline Matrix random_unitary(Rng& rng, int n) {
  const Matrix g = random_ginibre(rng, n);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= std::abs(d) == 0.0 ? 1.0 : d / std::abs(d);
  }
  return q;
}

inline Matrix random_traceless_hermitian(Rng& rng, int n) {
  return project_traceless(hermitize(random_ginibre(rng, n)));
}

inline RVector random_real_vector(Rng& rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  RVector v(n);
  for (int i = 0; i < n; ++i) v(i) = gauss(rng);
  return v;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

inline GeneratorBasis basis_for_dimension(int n) {
  if (n == 2) return make_pauli_basis();
  if (n == 4) return make_pauli_tensor_basis(2);
  return make_gell_mann_basis(n);
}

}  // namespace bbgeo::testing

#endif
