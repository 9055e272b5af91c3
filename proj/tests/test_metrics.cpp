#include <doctest.h>

#include "bbgeo/adjoint.hpp"
#include "bbgeo/metrics.hpp"
#include "helpers.hpp"

using namespace bbgeo;
using testing::Rng;

namespace {

CoefficientVector vec3(const GeneratorBasis& p, double x, double y, double z) {
  RVector v(3);
  v << x, y, z;
  return {p.ref(), v, {}};
}

}  // namespace

TEST_CASE("error_vector") {
  const GeneratorBasis p = make_pauli_basis();
  const double g = 0.9;
  const ErrorVector zero = error_vector(vec3(p, 0, 0, g), vec3(p, 0, 0, g));
  CHECK(zero.magnitude == 0.0);
  CHECK(zero.components.norm() == 0.0);

  const ErrorVector e = error_vector(vec3(p, 0, 0, 0), vec3(p, 0, 0, g));
  CHECK(std::abs(e.components(2) + g) <= exact_tol);
  CHECK(std::abs(e.magnitude - g) <= exact_tol);

  const GeneratorBasis gm = make_gell_mann_basis(3);
  CHECK_THROWS_AS(error_vector(vec3(p, 0, 0, 0), {gm.ref(), RVector::Zero(8), {}}),
                  ShapeError);
}

TEST_CASE("euclidean_distance basics") {
  const GeneratorBasis p = make_pauli_basis();
  Rng rng(11);
  const CoefficientVector a{p.ref(), testing::random_real_vector(rng, 3), {}};
  CHECK(euclidean_distance(a, a) == 0.0);
  const double g = 1.3;
  CHECK(std::abs(euclidean_distance(vec3(p, 0, 0, g), vec3(p, 0, 0, -g)) - 2 * g) <=
        exact_tol);
}

TEST_CASE("euclidean_distance is invariant under simultaneous rotation") {
  const GeneratorBasis p = make_pauli_basis();
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix u = testing::random_unitary(rng, 2);
    const AdjointRotation r = adjoint_rotation(u, p);
    const CoefficientVector a{p.ref(), testing::random_real_vector(rng, 3), {}};
    const CoefficientVector b{p.ref(), testing::random_real_vector(rng, 3), {}};
    const CoefficientVector ra{p.ref(), r.matrix * a.values, {}};
    const CoefficientVector rb{p.ref(), r.matrix * b.values, {}};
    CHECK(std::abs(euclidean_distance(a, b) - euclidean_distance(ra, rb)) <= numeric_tol);
  }
}

TEST_CASE("coordinate metric matches the operator Hilbert-Schmidt metric") {
  Rng rng(37);
  for (int n : {2, 3, 4}) {
    const GeneratorBasis basis = testing::basis_for_dimension(n);
    for (int trial = 0; trial < 30; ++trial) {
      const CoefficientVector a{basis.ref(), testing::random_real_vector(rng, basis.count()), {}};
      const CoefficientVector b{basis.ref(), testing::random_real_vector(rng, basis.count()), {}};
      const Matrix da = reconstruct(a, basis) - reconstruct(b, basis);
      const double lhs = euclidean_distance(a, b) * euclidean_distance(a, b) *
                         basis.normalization;
      const double rhs = (da * da).trace().real();
      CHECK(std::abs(lhs - rhs) <= numeric_tol * std::max(1.0, rhs));
    }
  }
}

TEST_CASE("hs_overlap") {
  const GeneratorBasis p = make_pauli_basis();
  const double g = 0.6;
  CHECK(std::abs(hs_overlap(vec3(p, 0, 0, g), vec3(p, 0, 0, g)) - 2 * g * g) <= exact_tol);
  CHECK(hs_overlap(vec3(p, 1, 2, 3), vec3(p, 0, 0, 0)) == 0.0);

  // the two-qubit exchange and dephasing directions are orthogonal
  const GeneratorBasis b4 = make_pauli_tensor_basis(2);
  RVector v1 = RVector::Zero(15), v2 = RVector::Zero(15);
  v1(6) = v1(10) = v1(14) = 1.0;
  v2(2) = v2(5) = 1.0;
  CHECK(hs_overlap({b4.ref(), v1, {}}, {b4.ref(), v2, {}}) == 0.0);

  // overlap equals the trace of the reconstructed product
  Rng rng(41);
  const CoefficientVector a{p.ref(), testing::random_real_vector(rng, 3), {}};
  const CoefficientVector c{p.ref(), testing::random_real_vector(rng, 3), {}};
  const double tr = (reconstruct(a, p) * reconstruct(c, p)).trace().real();
  CHECK(std::abs(hs_overlap(a, c) - tr) <= numeric_tol);
}

TEST_CASE("unitary_trace_distance") {
  const GeneratorBasis p = make_pauli_basis();
  Rng rng(43);
  const Matrix u = testing::random_unitary(rng, 2);
  CHECK(unitary_trace_distance(u, u) <= exact_tol);
  CHECK(std::abs(unitary_trace_distance(Matrix::Identity(2, 2),
                                        Complex(0, -1) * p.elements[0]) -
                 1.0) <= exact_tol);
  const double phi = 0.77;
  const Matrix phased = std::exp(Complex(0, phi)) * Matrix::Identity(2, 2);
  CHECK(std::abs(unitary_trace_distance(Matrix::Identity(2, 2), phased) -
                 std::sqrt(1.0 - std::cos(phi))) <= exact_tol);
  // the phase-minimized variant ignores the global phase; its resolution
  // floor is sqrt(machine eps) because of the 1 - |Tr|/n form
  CHECK(unitary_trace_distance_phase_min(Matrix::Identity(2, 2), phased) <= 1e-7);
  CHECK_THROWS_AS(unitary_trace_distance(u, Matrix::Identity(3, 3)), ShapeError);
}

TEST_CASE("distance minimization is overlap maximization at fixed norm") {
  // d^2 + 2 (a' . a_t) is constant while ||a'|| is fixed.
  const GeneratorBasis p = make_pauli_basis();
  Rng rng(47);
  const CoefficientVector target{p.ref(), testing::random_real_vector(rng, 3), {}};
  const double radius = 1.9;
  double reference = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    RVector dir = testing::random_real_vector(rng, 3);
    dir *= radius / dir.norm();
    const CoefficientVector a{p.ref(), dir, {}};
    const double d = euclidean_distance(a, target);
    const double combo = d * d + 2.0 * a.values.dot(target.values);
    if (trial == 0)
      reference = combo;
    else
      CHECK(std::abs(combo - reference) <= numeric_tol);
  }
}

TEST_CASE("short_time_distance_check: identical Hamiltonians give zero") {
  const GeneratorBasis p = make_pauli_basis();
  const CoefficientVector a = vec3(p, 0.4, -0.2, 0.9);
  const ShortTimeComparison cmp = short_time_distance_check(a, a, p, 1e-3);
  CHECK(cmp.exact <= exact_tol);
  CHECK(cmp.surrogate == 0.0);
}

TEST_CASE("short_time_distance_check: surrogate tracks the exact distance") {
  const GeneratorBasis p = make_pauli_basis();
  const double g = 1.0, t = 1e-3;
  const ShortTimeComparison cmp =
      short_time_distance_check(vec3(p, 0, 0, g), vec3(p, 0, 0, 0), p, t);
  // exact = sqrt(1 - cos(gt)) ~ gt/sqrt(2); surrogate = t sqrt(M/2n) g = gt/sqrt(2)
  CHECK(std::abs(cmp.surrogate - g * t / std::sqrt(2.0)) <= exact_tol);
  CHECK(std::abs(cmp.exact - std::sqrt(1.0 - std::cos(g * t))) <= exact_tol);
  CHECK(cmp.rel_difference <= 1e-5);
}

TEST_CASE("short_time_distance_check: relative gap shrinks ~4x when t halves") {
  Rng rng(53);
  const GeneratorBasis p = make_pauli_basis();
  const CoefficientVector a{p.ref(), testing::random_real_vector(rng, 3), {}};
  const CoefficientVector b{p.ref(), testing::random_real_vector(rng, 3), {}};
  const ShortTimeComparison full = short_time_distance_check(a, b, p, 1e-3);
  const ShortTimeComparison half = short_time_distance_check(a, b, p, 5e-4);
  const double ratio = full.rel_difference / half.rel_difference;
  CHECK(ratio >= 3.0);
  CHECK(ratio <= 5.0);
}

TEST_CASE("complex coordinate distance uses the conjugated inner product") {
  Eigen::VectorXcd a(2), b(2);
  a << Complex(1, 1), Complex(0, -2);
  b << Complex(1, 0), Complex(0, 0);
  CHECK(std::abs(euclidean_distance_complex(a, b) - std::sqrt(5.0)) <= exact_tol);
  CHECK_THROWS_AS(euclidean_distance_complex(a, Eigen::VectorXcd::Zero(3)), ShapeError);
}
