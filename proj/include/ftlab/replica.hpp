#pragma once

#include <vector>

#include "ftlab/complex_matrix.hpp"
#include "ftlab/parallel.hpp"

namespace ftlab {

// (2n+1)-replica bulk model at drive strength eps = 1/Omega and polarization
// (mass) parameter m.  The Bloch matrix at momentum xi has dimension 2(2n+1).
struct ReplicaModel {
  int n = 0;
  double m = 1.0;
  double eps = 0.1;

  int dim() const { return 2 * (2 * n + 1); }
  void validate() const;
};

struct BlochPoint {
  double xi1 = 0.0;
  double xi2 = 0.0;
};

struct BandStructure {
  std::vector<BlochPoint> grid;
  std::vector<std::vector<double>> sheets;  // ascending eigenvalues per point
  std::vector<double> gap_at_zero;          // min_i |E_i| per point
};

struct RingGap {
  double gap = 0.0;     // 2 * min |E|
  double radius = 0.0;  // location of the minimum
};

// B_m = (1+m)/2 * [[0,1],[0,0]] + (1-m)/2 * [[0,0],[1,0]]
CMat coupling_matrix(double m);
// Projectors Lambda_{+1} = diag(0,1), Lambda_{-1} = diag(1,0)
CMat lambda_projector(int pm);

// Block-tridiagonal replica Bloch matrix.  Replica index k runs from +n
// (top-left) down to -n (bottom-right); diagonal block k is k*I + xi.sigma,
// the (k,k+1) block is eps*B^H and the (k+1,k) block is eps*B.
CMat bloch_hamiltonian(const ReplicaModel& model, const BlochPoint& p);

// Central 2x2 effective Hamiltonian xi.sigma + eps^2 (B^H B - B B^H);
// for constant m this is xi.sigma - eps^2 m sigma_3.
CMat effective_2x2(const ReplicaModel& model, const BlochPoint& p);

BandStructure band_structure(const ReplicaModel& model, const std::vector<BlochPoint>& grid,
                             Exec exec = Exec::Parallel);

// Minimal spectral gap around E=0 on the ring |xi| in [ell-1/2, ell+1/2]
// (ball [0,1/2] for ell=0), located by radial scan plus golden-section
// refinement along the xi_1 axis.
RingGap ring_gap(const ReplicaModel& model, int ell);

// Effective coupling between the two mid-gap states at xi = r(cos t, sin t),
// extracted by compressing the Bloch matrix onto its two eigenvectors
// nearest E=0 and expressing the result in the zero-energy basis of the
// uncoupled +-ell replicas.  Reported with the eps^{2 ell} scale divided out.
cplx midgap_coupling(const ReplicaModel& model, int ell, double r, double theta);

}  // namespace ftlab
