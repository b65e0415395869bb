#pragma once

#include "warpstab/numerics.hpp"
#include "warpstab/warping.hpp"

namespace warpstab {

struct CurvatureState {
  double t = 0.0;
  double h = 0.0;
  double hp = 0.0;
  double hpp = 0.0;
  double k_tan = 0.0;  // (1 - h'^2)/h^2, planes tangent to the fiber
  double k_rad = 0.0;  // -h''/h, planes containing d/dt
};

CurvatureState curvature_state(const Jet& jet);
CurvatureState curvature_state(const WarpingModel& model, double t);
CurvatureState curvature_state_native(const WarpingModel& model, double x);

struct CurvaturePair {
  double k_tan = 0.0;
  double k_rad = 0.0;
};

/// m/r^3 + c and -m/(2r^3) + c on [s0, s1].
CurvaturePair dss_curvatures_in_r(double m, double c, double r);
/// (2m - 2q^2/r)/(2r^3) and -(m - 2q^2/r)/(2r^3) for r >= s0.
CurvaturePair rn_curvatures_in_r(double m, double q, double r);

/// Tangent vector in the orthonormal frame {d/dt, e1, e2}, e1 and e2 tangent
/// to the fiber.
struct Vec3W {
  double t = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;

  [[nodiscard]] double norm() const;
};

Vec3W operator+(Vec3W a, Vec3W b);
Vec3W operator-(Vec3W a, Vec3W b);
Vec3W operator*(double s, Vec3W a);
double dot(Vec3W a, Vec3W b);

/// R(X,Y)Z with the sign convention R(X,Y)Z = K(<X,Z>Y - <Y,Z>X) on a space
/// form of curvature K, i.e. minus the usual nabla_X nabla_Y - ... tensor.
Vec3W riemann_apply(const CurvatureState& s, Vec3W x, Vec3W y, Vec3W z);

/// Sectional curvature of span{X, Y}: <R(X,Y)X, Y>/(|X|^2|Y|^2 - <X,Y>^2).
double sectional(const CurvatureState& s, Vec3W x, Vec3W y);

/// Ric(N,N) for a unit normal with nu = <N, d/dt>.
double ricci_normal(const CurvatureState& s, double nu);

struct RicciForms {
  double tan_form = 0.0;  // 2K_tan + (K_rad - K_tan)(1 + nu^2)
  double rad_form = 0.0;  // 2K_rad + (K_tan - K_rad)(1 - nu^2)
};
RicciForms ricci_normal_forms(const CurvatureState& s, double nu);

/// Normalized scalar curvature (K_tan + 2 K_rad)/3.
double scalar_curvature(const CurvatureState& s);

struct BrendleResult {
  double lhs = 0.0;  // dK_rad/dt
  double rhs = 0.0;  // (h'/h)(K_tan - K_rad)
  bool holds = false;
};

/// Analytic h''' when the model has it, 4th-order differences in the native
/// parameter otherwise.
BrendleResult brendle_condition(const WarpingModel& model, double t);
BrendleResult brendle_condition_native(const WarpingModel& model, double x);

/// inf over a native interval of min(2 K_rad, K_tan + K_rad), the smaller
/// Ricci eigenvalue.
Extremum ricci_infimum(const WarpingModel& model, Interval native);

}  // namespace warpstab
