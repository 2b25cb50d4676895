#pragma once

#include <vector>

#include "ftlab/complex_matrix.hpp"

namespace ftlab {

// Eigendecomposition of a hermitian matrix: ascending eigenvalues,
// orthonormal eigenvector columns.  Deterministic for identical input bits.
struct EigenSystem {
  std::vector<double> values;
  CMat vectors;  // column i pairs with values[i]
};

// Hermitian eigensolver.  Rejects input whose hermiticity defect exceeds
// 1e-12 * ||A||_op (the defect magnitude is reported in the diagnostic).
// Small matrices go through cyclic Jacobi; larger ones through LAPACK zheev.
EigenSystem eig_hermitian(const CMat& a);

// Eigenpairs with eigenvalue in [lo, hi] only (LAPACK zheevr).  Used where
// full spectra would be wasted, e.g. in-gap ribbon states.
EigenSystem eig_hermitian_window(const CMat& a, double lo, double hi);

// exp(-i t A) for hermitian A, via eigendecomposition.
CMat unitary_exp(const CMat& a, double t);

// Largest singular value.
double op_norm(const CMat& a);

// Exposed for tests: force the Jacobi path regardless of dimension.
EigenSystem eig_hermitian_jacobi(const CMat& a);

}  // namespace ftlab
