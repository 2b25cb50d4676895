#include "ftlab/replica.hpp"

#include <algorithm>
#include <cmath>

#include "ftlab/eig.hpp"

namespace ftlab {

void ReplicaModel::validate() const {
  if (n < 0) throw ConfigError("ReplicaModel: n must be >= 0");
  if (m < -1.0 || m > 1.0) throw ConfigError("ReplicaModel: m must lie in [-1,1]");
  if (!(eps > 0.0)) throw ConfigError("ReplicaModel: eps must be positive");
  if (eps > 0.5) throw ConfigError("ReplicaModel: eps > 0.5 is outside the validity regime");
}

CMat coupling_matrix(double m) {
  if (m < -1.0 || m > 1.0) throw ConfigError("coupling_matrix: m must lie in [-1,1]");
  CMat b(2, 2);
  b(0, 1) = 0.5 * (1.0 + m);
  b(1, 0) = 0.5 * (1.0 - m);
  return b;
}

CMat lambda_projector(int pm) {
  CMat l(2, 2);
  if (pm == 1)
    l(1, 1) = 1.0;
  else if (pm == -1)
    l(0, 0) = 1.0;
  else
    throw ConfigError("lambda_projector: argument must be +1 or -1");
  return l;
}

CMat bloch_hamiltonian(const ReplicaModel& model, const BlochPoint& p) {
  model.validate();
  const int nrep = 2 * model.n + 1;
  const CMat xs = pauli_xi(p.xi1, p.xi2);
  const CMat b = coupling_matrix(model.m);
  const CMat bh = adjoint(b);
  CMat h(2 * nrep, 2 * nrep);
  for (int i = 0; i < nrep; ++i) {
    const double k = double(model.n - i);
    CMat d = xs;
    d(0, 0) += k;
    d(1, 1) += k;
    set_block(h, 2 * i, 2 * i, d);
    if (i + 1 < nrep) {
      set_block(h, 2 * i, 2 * i + 2, model.eps * cplx(1.0, 0.0) * bh);
      set_block(h, 2 * i + 2, 2 * i, model.eps * cplx(1.0, 0.0) * b);
    }
  }
  return h;
}

CMat effective_2x2(const ReplicaModel& model, const BlochPoint& p) {
  model.validate();
  const CMat b = coupling_matrix(model.m);
  const CMat bh = adjoint(b);
  CMat h1 = bh * b - b * bh;
  h1 *= cplx(model.eps * model.eps, 0.0);
  return pauli_xi(p.xi1, p.xi2) + h1;
}

BandStructure band_structure(const ReplicaModel& model, const std::vector<BlochPoint>& grid,
                             Exec exec) {
  model.validate();
  if (grid.empty()) throw ConfigError("band_structure: empty grid");
  BandStructure bs;
  bs.grid = grid;
  bs.sheets.resize(grid.size());
  bs.gap_at_zero.resize(grid.size());
  parallel_for(exec, int(grid.size()), [&](int i) {
    const EigenSystem es = eig_hermitian(bloch_hamiltonian(model, grid[i]));
    bs.sheets[i] = es.values;
    double g = std::abs(es.values[0]);
    for (double e : es.values) g = std::min(g, std::abs(e));
    bs.gap_at_zero[i] = g;
  });
  return bs;
}

namespace {

double min_abs_energy(const ReplicaModel& model, double r) {
  const EigenSystem es = eig_hermitian(bloch_hamiltonian(model, {r, 0.0}));
  double g = std::abs(es.values[0]);
  for (double e : es.values) g = std::min(g, std::abs(e));
  return g;
}

}  // namespace

RingGap ring_gap(const ReplicaModel& model, int ell) {
  model.validate();
  if (ell < 0 || ell > model.n) throw ConfigError("ring_gap: need 0 <= ell <= n");
  const double r0 = (ell == 0) ? 0.0 : ell - 0.5;
  const double r1 = ell + 0.5;

  // coarse scan
  const int nscan = 257;
  double best_r = r0, best = min_abs_energy(model, r0);
  for (int i = 1; i < nscan; ++i) {
    const double r = r0 + (r1 - r0) * i / (nscan - 1);
    const double g = min_abs_energy(model, r);
    if (g < best) {
      best = g;
      best_r = r;
    }
  }

  // golden-section refinement around the scan minimum
  const double step = (r1 - r0) / (nscan - 1);
  double a = std::max(r0, best_r - step), b = std::min(r1, best_r + step);
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = min_abs_energy(model, x1), f2 = min_abs_energy(model, x2);
  while (b - a > 1e-12) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = min_abs_energy(model, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = min_abs_energy(model, x2);
    }
  }
  const double r = 0.5 * (a + b);
  return {2.0 * min_abs_energy(model, r), r};
}

cplx midgap_coupling(const ReplicaModel& model, int ell, double r, double theta) {
  model.validate();
  if (ell < 1 || ell > model.n) throw ConfigError("midgap_coupling: need 1 <= ell <= n");
  const BlochPoint p{r * std::cos(theta), r * std::sin(theta)};
  const CMat h = bloch_hamiltonian(model, p);
  const EigenSystem es = eig_hermitian(h);
  const int dim = h.rows();

  // two eigenpairs nearest E=0: with the symmetric spectrum these are
  // indices dim/2-1 and dim/2
  const int ilo = dim / 2 - 1, ihi = dim / 2;

  // zero-energy basis of the uncoupled +-ell replicas at |xi| = ell:
  // v1 lives in replica -ell on the + branch of xi.sigma, v2 in replica
  // +ell on the - branch
  const cplx xihat = cplx(p.xi1, p.xi2) / std::abs(cplx(p.xi1, p.xi2));
  const double s = 1.0 / std::sqrt(2.0);
  cvec v1(dim, 0.0), v2(dim, 0.0);
  const int row_minus = 2 * (model.n + ell);  // replica -ell block offset
  const int row_plus = 2 * (model.n - ell);   // replica +ell block offset
  v1[row_minus] = s * std::conj(xihat);
  v1[row_minus + 1] = s;
  v2[row_plus] = -s * std::conj(xihat);
  v2[row_plus + 1] = s;

  // compress H onto the two mid-gap eigenvectors, expressed in (v1, v2)
  cplx h12 = 0.0;
  for (int j : {ilo, ihi}) {
    cvec phi(dim);
    for (int i = 0; i < dim; ++i) phi[i] = es.vectors(i, j);
    const cplx c1 = dot(v1, phi);
    const cplx c2 = dot(v2, phi);
    h12 += es.values[j] * c1 * std::conj(c2);
  }
  return h12 / std::pow(model.eps, 2 * ell);
}

}  // namespace ftlab
