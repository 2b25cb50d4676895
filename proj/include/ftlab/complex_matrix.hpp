#pragma once

#include <complex>
#include <vector>

#include "ftlab/errors.hpp"

namespace ftlab {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

// Dense complex matrix, row-major.  The universal carrier for Hamiltonians,
// propagators and projectors; energies are in rescaled units of the drive
// frequency throughout.
class CMat {
 public:
  CMat() = default;
  CMat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static CMat identity(int n) {
    CMat I(n, n);
    for (int i = 0; i < n; ++i) I(i, i) = 1.0;
    return I;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const cplx& operator()(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  CMat& operator+=(const CMat& b);
  CMat& operator-=(const CMat& b);
  CMat& operator*=(cplx s);

  friend CMat operator+(CMat a, const CMat& b) { return a += b; }
  friend CMat operator-(CMat a, const CMat& b) { return a -= b; }
  friend CMat operator*(CMat a, cplx s) { return a *= s; }
  friend CMat operator*(cplx s, CMat a) { return a *= s; }

 private:
  int rows_ = 0, cols_ = 0;
  cvec a_;
};

// Matrix product via BLAS (zgemm).
CMat operator*(const CMat& a, const CMat& b);

CMat adjoint(const CMat& a);
CMat kron(const CMat& a, const CMat& b);

cvec matvec(const CMat& a, const cvec& x);

double max_abs(const CMat& a);
bool all_finite(const CMat& a);

// max_ij |A_ij - conj(A_ji)|; the hermiticity certificate quantity.
double hermitian_defect(const CMat& a);

CMat block(const CMat& a, int i0, int j0, int r, int c);
void set_block(CMat& a, int i0, int j0, const CMat& b);

double norm2(const cvec& x);
cplx dot(const cvec& x, const cvec& y);  // conjugate-linear in x

// Pauli matrices and friends.
CMat pauli(int k);  // k = 1,2,3
CMat pauli_xi(double xi1, double xi2);  // xi1*s1 + xi2*s2

}  // namespace ftlab
