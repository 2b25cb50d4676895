#include "ftlab/complex_matrix.hpp"

#include <cblas.h>

#include <cmath>

namespace ftlab {

CMat& CMat::operator+=(const CMat& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ConfigError("matrix shape mismatch in +=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] += b.a_[i];
  return *this;
}

CMat& CMat::operator-=(const CMat& b) {
  if (rows_ != b.rows_ || cols_ != b.cols_) throw ConfigError("matrix shape mismatch in -=");
  for (size_t i = 0; i < a_.size(); ++i) a_[i] -= b.a_[i];
  return *this;
}

CMat& CMat::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

CMat operator*(const CMat& a, const CMat& b) {
  if (a.cols() != b.rows()) throw ConfigError("matrix shape mismatch in *");
  CMat c(a.rows(), b.cols());
  const cplx one(1.0, 0.0), zero(0.0, 0.0);
  cblas_zgemm(CblasRowMajor, CblasNoTrans, CblasNoTrans, a.rows(), b.cols(), a.cols(),
              &one, a.data(), a.cols(), b.data(), b.cols(), &zero, c.data(), c.cols());
  return c;
}

CMat adjoint(const CMat& a) {
  CMat b(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) b(j, i) = std::conj(a(i, j));
  return b;
}

CMat kron(const CMat& a, const CMat& b) {
  CMat c(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const cplx s = a(i, j);
      if (s == cplx(0.0, 0.0)) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) c(i * b.rows() + k, j * b.cols() + l) = s * b(k, l);
    }
  return c;
}

cvec matvec(const CMat& a, const cvec& x) {
  if (int(x.size()) != a.cols()) throw ConfigError("matvec shape mismatch");
  cvec y(a.rows());
  const cplx one(1.0, 0.0), zero(0.0, 0.0);
  cblas_zgemv(CblasRowMajor, CblasNoTrans, a.rows(), a.cols(), &one, a.data(), a.cols(),
              x.data(), 1, &zero, y.data(), 1);
  return y;
}

double max_abs(const CMat& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

bool all_finite(const CMat& a) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
  return true;
}

double hermitian_defect(const CMat& a) {
  if (!a.square()) throw ConfigError("hermitian_defect: matrix not square");
  double d = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j <= i; ++j) d = std::max(d, std::abs(a(i, j) - std::conj(a(j, i))));
  return d;
}

CMat block(const CMat& a, int i0, int j0, int r, int c) {
  CMat b(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) b(i, j) = a(i0 + i, j0 + j);
  return b;
}

void set_block(CMat& a, int i0, int j0, const CMat& b) {
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) a(i0 + i, j0 + j) = b(i, j);
}

double norm2(const cvec& x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

cplx dot(const cvec& x, const cvec& y) {
  cplx s = 0.0;
  for (size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

CMat pauli(int k) {
  CMat s(2, 2);
  switch (k) {
    case 1: s(0, 1) = 1.0; s(1, 0) = 1.0; break;
    case 2: s(0, 1) = cplx(0.0, -1.0); s(1, 0) = cplx(0.0, 1.0); break;
    case 3: s(0, 0) = 1.0; s(1, 1) = -1.0; break;
    default: throw ConfigError("pauli: index must be 1, 2 or 3");
  }
  return s;
}

CMat pauli_xi(double xi1, double xi2) {
  CMat s(2, 2);
  s(0, 1) = cplx(xi1, -xi2);
  s(1, 0) = cplx(xi1, xi2);
  return s;
}

}  // namespace ftlab
