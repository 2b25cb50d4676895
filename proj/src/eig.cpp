#include "ftlab/eig.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace ftlab {

namespace {

constexpr int kJacobiMaxDim = 32;

void check_hermitian(const CMat& a) {
  if (!a.square()) throw ConfigError("eig_hermitian: matrix not square");
  if (!all_finite(a)) throw NumericalError("eig_hermitian: non-finite entries");
  const double defect = hermitian_defect(a);
  // |A_ij| <= ||A||_op, so max_abs is a lower bound for the operator norm.
  const double scale = std::max(max_abs(a), 1e-300);
  if (defect > 1e-12 * scale) {
    std::ostringstream os;
    os << "eig_hermitian: input not hermitian, asymmetry " << defect
       << " exceeds 1e-12 * " << scale;
    throw NumericalError(os.str());
  }
}

// Cyclic Jacobi for complex hermitian matrices.  Sweeps annihilate each
// off-diagonal entry in a fixed (p,q) order, which makes the result a
// deterministic function of the input bits.
EigenSystem jacobi(CMat a) {
  const int n = a.rows();
  CMat v = CMat::identity(n);
  // work on the hermitized matrix so roundoff asymmetry cannot accumulate
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) {
      const cplx h = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = h;
      a(j, i) = std::conj(h);
    }

  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
  };
  double anorm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) anorm += std::norm(a(i, j));
  anorm = std::sqrt(anorm);
  const double tol = 1e-15 * std::max(anorm, 1e-300);

  for (int sweep = 0; sweep < 60 && off_norm() > tol; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const cplx apq = a(p, q);
        if (std::abs(apq) == 0.0) continue;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        // 2x2 hermitian rotation: [c, -conj(s); s, c] with c real
        const double theta = 0.5 * std::atan2(2.0 * std::abs(apq), aqq - app);
        const double c = std::cos(theta);
        const cplx s = std::sin(theta) * (apq / std::abs(apq));
        // rows/cols p and q update
        for (int k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - std::conj(s) * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = std::conj(s) * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - std::conj(s) * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<double> d(n);
  for (int i = 0; i < n; ++i) d[i] = a(i, i).real();
  std::stable_sort(idx.begin(), idx.end(), [&](int i, int j) { return d[i] < d[j]; });

  EigenSystem es;
  es.values.resize(n);
  es.vectors = CMat(n, n);
  for (int j = 0; j < n; ++j) {
    es.values[j] = d[idx[j]];
    for (int i = 0; i < n; ++i) es.vectors(i, j) = v(i, idx[j]);
  }
  return es;
}

EigenSystem zheev_full(CMat a) {
  const int n = a.rows();
  EigenSystem es;
  es.values.resize(n);
  const int info = LAPACKE_zheev(LAPACK_ROW_MAJOR, 'V', 'L', n,
                                 reinterpret_cast<lapack_complex_double*>(a.data()), n,
                                 es.values.data());
  if (info != 0) throw NumericalError("zheev failed, info=" + std::to_string(info));
  es.vectors = std::move(a);
  return es;
}

}  // namespace

EigenSystem eig_hermitian_jacobi(const CMat& a) {
  check_hermitian(a);
  return jacobi(a);
}

EigenSystem eig_hermitian(const CMat& a) {
  check_hermitian(a);
  if (a.rows() <= kJacobiMaxDim) return jacobi(a);
  return zheev_full(a);
}

EigenSystem eig_hermitian_window(const CMat& a, double lo, double hi) {
  check_hermitian(a);
  const int n = a.rows();
  if (n <= kJacobiMaxDim) {
    EigenSystem full = jacobi(a);
    EigenSystem es;
    es.vectors = CMat(n, 0);
    std::vector<int> keep;
    for (int j = 0; j < n; ++j)
      if (full.values[j] >= lo && full.values[j] <= hi) keep.push_back(j);
    es.values.resize(keep.size());
    es.vectors = CMat(n, int(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j) {
      es.values[j] = full.values[keep[j]];
      for (int i = 0; i < n; ++i) es.vectors(i, int(j)) = full.vectors(i, keep[j]);
    }
    return es;
  }
  CMat work = a;
  std::vector<double> w(n);
  CMat z(n, n);
  std::vector<lapack_int> isuppz(2 * size_t(std::max(1, n)));
  lapack_int m = 0;
  const int info = LAPACKE_zheevr(LAPACK_ROW_MAJOR, 'V', 'V', 'L', n,
                                  reinterpret_cast<lapack_complex_double*>(work.data()), n,
                                  lo, hi, 0, 0, 0.0, &m, w.data(),
                                  reinterpret_cast<lapack_complex_double*>(z.data()), n,
                                  isuppz.data());
  if (info != 0) throw NumericalError("zheevr failed, info=" + std::to_string(info));
  EigenSystem es;
  es.values.assign(w.begin(), w.begin() + m);
  es.vectors = CMat(n, m);
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < n; ++i) es.vectors(i, j) = z(i, j);
  return es;
}

CMat unitary_exp(const CMat& a, double t) {
  const EigenSystem es = eig_hermitian(a);
  const int n = a.rows();
  CMat u(n, n);
  // V exp(-i t diag) V^H
  CMat ph = es.vectors;
  for (int j = 0; j < n; ++j) {
    const cplx f = std::exp(cplx(0.0, -t * es.values[j]));
    for (int i = 0; i < n; ++i) ph(i, j) *= f;
  }
  return ph * adjoint(es.vectors);
}

double op_norm(const CMat& a) {
  if (a.rows() == 0 || a.cols() == 0) return 0.0;
  const CMat g = adjoint(a) * a;
  EigenSystem es;
  // g is hermitian by construction; roundoff defect is far below the gate
  es = eig_hermitian(g);
  const double lmax = std::max(0.0, es.values.back());
  return std::sqrt(lmax);
}

}  // namespace ftlab
