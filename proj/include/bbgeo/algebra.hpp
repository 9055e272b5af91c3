#ifndef BBGEO_ALGEBRA_HPP
#define BBGEO_ALGEBRA_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bbgeo/types.hpp"

namespace bbgeo {

// Lightweight identity of a generator basis, carried by coordinate vectors
// and rotations so mismatched operands are rejected cheaply.
struct BasisRef {
  std::string name;     // "pauli", "gell-mann", "pauli-tensor"
  int dimension = 0;    // n
  int count = 0;        // N = n^2 - 1
  double normalization = 0.0;  // M in Tr(l_i l_j) = M delta_ij

  bool compatible(const BasisRef& other) const {
    return name == other.name && dimension == other.dimension &&
           count == other.count && normalization == other.normalization;
  }
};

// Ordered trace-orthogonal set of traceless Hermitian n x n matrices
// spanning the traceless Hermitian operators: Tr(l_i l_j) = M delta_ij.
struct GeneratorBasis {
  std::string name;
  int dimension = 0;
  double normalization = 0.0;
  std::vector<Matrix> elements;

  int count() const { return static_cast<int>(elements.size()); }
  BasisRef ref() const { return {name, dimension, count(), normalization}; }
};

// Real coordinates of a traceless Hermitian operator in a generator basis.
struct CoefficientVector {
  BasisRef basis;
  RVector values;
  std::string label;  // optional term tag
};

// Bath side of a coupling term: implied identity, an abstract label, or a
// concrete Hermitian matrix (required for dynamics).
using BathOperator = std::variant<std::monostate, std::string, Matrix>;

// Sum of terms S_g (x) B_g with traceless Hermitian system parts. Identity
// components of supplied system operators are projected out at construction
// and a warning is recorded.
struct SystemHamiltonian {
  struct Term {
    std::string label;
    Matrix system_op;  // traceless Hermitian, n x n
    BathOperator bath;
    bool wanted = false;  // true: keep under averaging; false: error term
  };

  int dimension = 0;
  std::vector<Term> terms;
  std::vector<std::string> warnings;

  void add_term(std::string label, const Matrix& system_op, BathOperator bath,
                bool wanted);
};

// --- basis factories ------------------------------------------------------

// sigma_1, sigma_2, sigma_3 in the standard convention; M = 2.
GeneratorBasis make_pauli_basis();

// Generalized Gell-Mann matrices for SU(n): symmetric family, antisymmetric
// family, then diagonal family; M = 2. For n = 2 this is the Pauli basis.
GeneratorBasis make_gell_mann_basis(int n);

// All q-fold tensor products of {1, sigma_1, sigma_2, sigma_3} except the
// identity product; M = 2^q. For q = 2 the ordering is
//   l_1..l_3  = sigma_i (x) 1,      l_4..l_6  = 1 (x) sigma_i,
//   l_7..l_9  = sigma_1 (x) sigma_i, l_10..l_12 = sigma_2 (x) sigma_i,
//   l_13..l_15 = sigma_3 (x) sigma_i;
// other q use lexicographic ordering over the index tuples.
GeneratorBasis make_pauli_tensor_basis(int q);

// --- coordinate conversions -----------------------------------------------

// a_i = (1/M) Tr(l_i S). The identity component of S is stripped first;
// *stripped_identity reports whether |Tr S| exceeded exact_tol.
CoefficientVector expand(const Matrix& s, const GeneratorBasis& basis,
                         bool* stripped_identity = nullptr);

// sum_i a_i l_i
Matrix reconstruct(const CoefficientVector& a, const GeneratorBasis& basis);

// Throws if any basis invariant (Hermiticity, tracelessness,
// trace-orthogonality, full rank) fails at tolerance tol.
void validate_basis(const GeneratorBasis& basis, double tol = exact_tol);

}  // namespace bbgeo

#endif
