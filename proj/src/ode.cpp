#include "ftlab/ode.hpp"

#include <cmath>
#include <sstream>

namespace ftlab {

namespace {

// Dormand-Prince RK5(4) coefficients.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// embedded 4th order weights
constexpr double e1 = 5179.0 / 57600, e3 = 7571.0 / 16695, e4 = 393.0 / 640,
                 e5 = -92097.0 / 339200, e6 = 187.0 / 2100, e7 = 1.0 / 40;

CMat axpy(const CMat& y, double h, std::initializer_list<std::pair<double, const CMat*>> terms) {
  CMat r = y;
  for (const auto& [w, k] : terms) {
    if (w == 0.0) continue;
    const cplx f(h * w, 0.0);
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < r.cols(); ++j) r(i, j) += f * (*k)(i, j);
  }
  return r;
}

}  // namespace

CMat ode_propagate(const std::function<CMat(double)>& H_of_t, double t0, double t1,
                   double tol, const CMat& U0) {
  if (t1 < t0) throw ConfigError("ode_propagate: t1 < t0");
  if (!(tol > 0.0) || tol > 1e-6) throw ConfigError("ode_propagate: tol must be in (0, 1e-6]");
  if (t1 == t0) return U0;

  const auto rhs = [&](double t, const CMat& u) {
    CMat k = H_of_t(t) * u;
    k *= cplx(0.0, -1.0);
    return k;
  };

  CMat u = U0;
  double t = t0;
  double h = std::min(1e-2, (t1 - t0) * 0.1);
  const double hmin = 1e-14 * std::max(1.0, t1 - t0);
  CMat k1 = rhs(t, u);
  bool have_k1 = true;

  while (t < t1) {
    h = std::min(h, t1 - t);
    if (!have_k1) k1 = rhs(t, u);
    const CMat y2 = axpy(u, h, {{a21, &k1}});
    const CMat k2 = rhs(t + c2 * h, y2);
    const CMat y3 = axpy(u, h, {{a31, &k1}, {a32, &k2}});
    const CMat k3 = rhs(t + c3 * h, y3);
    const CMat y4 = axpy(u, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}});
    const CMat k4 = rhs(t + c4 * h, y4);
    const CMat y5 = axpy(u, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}});
    const CMat k5 = rhs(t + c5 * h, y5);
    const CMat y6 = axpy(u, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}});
    const CMat k6 = rhs(t + h, y6);
    const CMat u5 = axpy(u, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const CMat k7 = rhs(t + h, u5);  // FSAL
    const CMat u4 = axpy(u, h, {{e1, &k1}, {e3, &k3}, {e4, &k4}, {e5, &k5}, {e6, &k6}, {e7, &k7}});

    double err = 0.0;
    for (int i = 0; i < u.rows(); ++i)
      for (int j = 0; j < u.cols(); ++j) err = std::max(err, std::abs(u5(i, j) - u4(i, j)));
    const double scale = std::max(1.0, max_abs(u));

    if (err <= tol * scale) {
      t += h;
      u = u5;
      k1 = k7;
      have_k1 = true;
    } else {
      have_k1 = false;
    }
    const double fac = (err > 0.0) ? 0.9 * std::pow(tol * scale / err, 0.2) : 5.0;
    h *= std::min(5.0, std::max(0.2, fac));
    if (h < hmin && t < t1) {
      std::ostringstream os;
      os << "ode_propagate: step-size underflow at t=" << t;
      throw NumericalError(os.str());
    }
  }
  return u;
}

CMat ode_propagate(const std::function<CMat(double)>& H_of_t, double t0, double t1,
                   double tol) {
  const CMat probe = H_of_t(t0);
  return ode_propagate(H_of_t, t0, t1, tol, CMat::identity(probe.rows()));
}

}  // namespace ftlab
