#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "warpstab/warping.hpp"

namespace warpstab {

// extended precision keeps the nested difference quotients well above round-off
// near the poles, where the frame carries 1/sin(phi1) factors
using Real = long double;
using Mat3 = std::array<std::array<Real, 3>, 3>;
using Christoffel = std::array<Mat3, 3>;                 // G[k][i][j] = Gamma^k_ij
using Riemann = std::array<std::array<Mat3, 3>, 3>;      // R[l][i][j][k] = R^l_ijk

/// Coordinate metric on (t, phi1, phi2).
struct CoordMetric {
  std::function<Mat3(Real t, Real phi1, Real phi2)> g;
  Interval t_range;  // where g can be evaluated
  // optional: told the stencil centre before each stencil, so a metric built
  // from an integrated h can expand around one local anchor
  std::function<void(Real t)> localize;

  /// dt^2 + h^2 (dphi1^2 + sin^2 phi1 dphi2^2)
  static CoordMetric warped(const WarpingModel& model);
};

struct Point3 {
  Real t = 0.0;
  Real phi1 = 0.0;
  Real phi2 = 0.0;
};

/// Gamma^k_ij from 4th-order central differences of g.
Christoffel christoffel_fd(const CoordMetric& metric, Point3 p, double step = 1e-3);

/// R^l_ijk = d_j Gamma^l_ik - d_k Gamma^l_ij + Gamma^l_jm Gamma^m_ik - Gamma^l_km Gamma^m_ij,
/// so R(d_j, d_k) d_i = R^l_ijk d_l with R(X,Y) = [nabla_X, nabla_Y] - nabla_[X,Y].
Riemann riemann_fd(const CoordMetric& metric, Point3 p, double step = 1e-3,
                   double* bianchi_residual = nullptr);

struct OracleEntry {
  std::string quantity;
  double max_error = 0.0;  // relative, denominator max(|closed|, |fd|, 1e-3)
  double at_t = 0.0;
  double at_phi1 = 0.0;
};

struct OracleReport {
  std::string model;
  int n_t = 0;
  int n_phi = 0;
  double tol = 0.0;
  std::vector<OracleEntry> entries;
  double bianchi_max = 0.0;
  bool pass = false;

  [[nodiscard]] double worst() const;
};

/// Compares K_tan, K_rad, Ric(N,N) for nu in {-1, -0.5, 0, 0.5, 1}, scal and
/// the three-term curvature tensor on random frames against the finite
/// difference tensors, on an n_t x n_phi grid of (t, phi1) with
/// phi1 in [0.1, pi - 0.1]. The t-grid spans the native interval.
OracleReport verify_model(const WarpingModel& model, Interval native, int n_t = 20, int n_phi = 10,
                          double tol = 1e-6);

}  // namespace warpstab
