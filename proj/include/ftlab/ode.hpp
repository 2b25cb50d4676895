#pragma once

#include <functional>

#include "ftlab/complex_matrix.hpp"

namespace ftlab {

// Propagator of i dU/dt = H(t) U from t0 to t1 with U(t0) = U0, by an
// adaptive embedded Dormand-Prince 5(4) pair on the matrix entries.
// Local error is controlled at tol per unit step; the unitarity defect of
// the result stays below 100*tol for hermitian H.  This is the exact-
// evolution oracle: plain, not structure-preserving, by choice.
CMat ode_propagate(const std::function<CMat(double)>& H_of_t, double t0, double t1,
                   double tol, const CMat& U0);

// Same, starting from the identity.
CMat ode_propagate(const std::function<CMat(double)>& H_of_t, double t0, double t1,
                   double tol);

}  // namespace ftlab
