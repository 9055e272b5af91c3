#include "bbgeo/algebra.hpp"

#include <cmath>

#include <Eigen/LU>

#include "bbgeo/matrix_utils.hpp"

namespace bbgeo {

namespace {

Matrix pauli(int i) {
  Matrix m(2, 2);
  const Complex I(0.0, 1.0);
  switch (i) {
    case 0: m << 1, 0, 0, 1; break;
    case 1: m << 0, 1, 1, 0; break;
    case 2: m << 0, -I, I, 0; break;
    default: m << 1, 0, 0, -1; break;
  }
  return m;
}

}  // namespace

void SystemHamiltonian::add_term(std::string label, const Matrix& system_op,
                                 BathOperator bath, bool wanted) {
  if (system_op.rows() != dimension || system_op.cols() != dimension)
    throw ShapeError("SystemHamiltonian: term '" + label + "' is not " +
                     std::to_string(dimension) + "x" + std::to_string(dimension));
  if (!is_hermitian(system_op))
    throw ValidityError("SystemHamiltonian: term '" + label +
                        "' has a non-Hermitian system operator");
  if (std::abs(system_op.trace()) > exact_tol)
    warnings.push_back("term '" + label +
                       "': identity component projected out (contributes only a phase)");
  if (const Matrix* b = std::get_if<Matrix>(&bath)) {
    if (b->rows() != b->cols()) throw ShapeError("bath operator must be square");
    if (!is_hermitian(*b))
      throw ValidityError("SystemHamiltonian: term '" + label +
                          "' has a non-Hermitian bath operator");
  }
  terms.push_back({std::move(label), project_traceless(system_op), std::move(bath), wanted});
}

GeneratorBasis make_pauli_basis() {
  GeneratorBasis b{"pauli", 2, 2.0, {pauli(1), pauli(2), pauli(3)}};
  return b;
}

GeneratorBasis make_gell_mann_basis(int n) {
  if (n < 2) throw DimensionError("make_gell_mann_basis: n must be >= 2");
  GeneratorBasis b{"gell-mann", n, 2.0, {}};
  b.elements.reserve(static_cast<size_t>(n) * n - 1);
  const Complex I(0.0, 1.0);
  // symmetric family: E_jk + E_kj
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = 1.0;
      m(k, j) = 1.0;
      b.elements.push_back(m);
    }
  // antisymmetric family: -i (E_jk - E_kj)
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) {
      Matrix m = Matrix::Zero(n, n);
      m(j, k) = -I;
      m(k, j) = I;
      b.elements.push_back(m);
    }
  // diagonal family: sqrt(2/(l(l+1))) diag(1,...,1,-l,0,...)
  for (int l = 1; l < n; ++l) {
    Matrix m = Matrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) m(j, j) = scale;
    m(l, l) = -scale * l;
    b.elements.push_back(m);
  }
  return b;
}

GeneratorBasis make_pauli_tensor_basis(int q) {
  if (q < 1) throw DimensionError("make_pauli_tensor_basis: q must be >= 1");
  const int n = 1 << q;
  GeneratorBasis b{"pauli-tensor", n, static_cast<double>(n), {}};

  std::vector<std::vector<int>> tuples;
  if (q == 2) {
    // Fixed two-qubit label order: single-qubit terms first, then products.
    tuples = {{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3},
              {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3},
              {3, 1}, {3, 2}, {3, 3}};
  } else {
    std::vector<int> idx(q, 0);
    const long total = 1L << (2 * q);
    for (long code = 1; code < total; ++code) {
      long c = code;
      for (int pos = q - 1; pos >= 0; --pos) {
        idx[pos] = static_cast<int>(c & 3);
        c >>= 2;
      }
      tuples.push_back(idx);
    }
  }

  for (const auto& tup : tuples) {
    Matrix m = pauli(tup[0]);
    for (int pos = 1; pos < q; ++pos) m = kron(m, pauli(tup[pos]));
    b.elements.push_back(std::move(m));
  }
  return b;
}

CoefficientVector expand(const Matrix& s, const GeneratorBasis& basis,
                         bool* stripped_identity) {
  const int n = basis.dimension;
  if (s.rows() != n || s.cols() != n)
    throw ShapeError("expand: operator dimension does not match basis");
  if (!is_hermitian(s)) throw ValidityError("expand: operator is not Hermitian");

  const bool stripped = std::abs(s.trace()) > exact_tol;
  if (stripped_identity) *stripped_identity = stripped;
  const Matrix s0 = stripped ? project_traceless(s) : s;

  RVector a(basis.count());
  for (int i = 0; i < basis.count(); ++i)
    a(i) = ((basis.elements[i] * s0).trace() / basis.normalization).real();
  return {basis.ref(), std::move(a), {}};
}

Matrix reconstruct(const CoefficientVector& a, const GeneratorBasis& basis) {
  if (!a.basis.compatible(basis.ref()) || a.values.size() != basis.count())
    throw ShapeError("reconstruct: coefficient vector does not match basis");
  Matrix out = Matrix::Zero(basis.dimension, basis.dimension);
  for (int i = 0; i < basis.count(); ++i) out += a.values(i) * basis.elements[i];
  return out;
}

void validate_basis(const GeneratorBasis& basis, double tol) {
  const int n = basis.dimension;
  const int N = basis.count();
  if (N != n * n - 1)
    throw ValidityError("basis: expected n^2-1 elements");
  RMatrix gram(N, N);
  for (int i = 0; i < N; ++i) {
    const Matrix& li = basis.elements[i];
    if (li.rows() != n || li.cols() != n) throw ShapeError("basis: element shape mismatch");
    if ((li - li.adjoint()).norm() > tol)
      throw ValidityError("basis: element " + std::to_string(i + 1) + " is not Hermitian");
    if (std::abs(li.trace()) > tol)
      throw ValidityError("basis: element " + std::to_string(i + 1) + " is not traceless");
    for (int j = 0; j < N; ++j) {
      const Complex t = (li * basis.elements[j]).trace();
      gram(i, j) = t.real();
      const double expected = (i == j) ? basis.normalization : 0.0;
      if (std::abs(t - expected) > tol)
        throw ValidityError("basis: trace-orthogonality fails at (" +
                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
  Eigen::FullPivLU<RMatrix> lu(gram);
  if (lu.rank() != N) throw ValidityError("basis: Gram matrix is rank deficient");
}

}  // namespace bbgeo
