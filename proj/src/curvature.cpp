#include "warpstab/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "warpstab/error.hpp"

namespace warpstab {

CurvatureState curvature_state(const Jet& j) {
  if (!(j.h > 0.0)) {
    throw Error(ErrorCode::out_of_domain, "h = " + std::to_string(j.h) + " is not positive");
  }
  CurvatureState s;
  s.t = j.t;
  s.h = j.h;
  s.hp = j.hp;
  s.hpp = j.hpp;
  s.k_tan = (1.0 - j.hp * j.hp) / (j.h * j.h);
  s.k_rad = -j.hpp / j.h;
  return s;
}

CurvatureState curvature_state(const WarpingModel& model, double t) {
  return curvature_state(model.jet(t));
}

CurvatureState curvature_state_native(const WarpingModel& model, double x) {
  return curvature_state(model.jet_native(x));
}

CurvaturePair dss_curvatures_in_r(double m, double c, double r) {
  const DssDomain d = dss_domain(m, c);
  if (r < d.s0 || (!d.s1_infinite && r > d.s1)) {
    throw Error(ErrorCode::out_of_domain, "r = " + std::to_string(r) + " outside the dss domain");
  }
  const double r3 = r * r * r;
  return {m / r3 + c, -m / (2.0 * r3) + c};
}

CurvaturePair rn_curvatures_in_r(double m, double q, double r) {
  const double s0 = rn_s0(m, q);
  if (r < s0) {
    throw Error(ErrorCode::out_of_domain, "r = " + std::to_string(r) + " below s0");
  }
  const double r3 = r * r * r;
  return {(2.0 * m - 2.0 * q * q / r) / (2.0 * r3), -(m - 2.0 * q * q / r) / (2.0 * r3)};
}

double Vec3W::norm() const { return std::sqrt(t * t + e1 * e1 + e2 * e2); }

Vec3W operator+(Vec3W a, Vec3W b) { return {a.t + b.t, a.e1 + b.e1, a.e2 + b.e2}; }
Vec3W operator-(Vec3W a, Vec3W b) { return {a.t - b.t, a.e1 - b.e1, a.e2 - b.e2}; }
Vec3W operator*(double s, Vec3W a) { return {s * a.t, s * a.e1, s * a.e2}; }
double dot(Vec3W a, Vec3W b) { return a.t * b.t + a.e1 * b.e1 + a.e2 * b.e2; }

Vec3W riemann_apply(const CurvatureState& s, Vec3W x, Vec3W y, Vec3W z) {
  const Vec3W dt{1.0, 0.0, 0.0};
  const Vec3W w = dot(x, z) * y - dot(y, z) * x;
  const double diff = s.k_tan - s.k_rad;
  return s.k_tan * w - (diff * dot(w, dt)) * dt - (diff * z.t) * (x.t * y - y.t * x);
}

double sectional(const CurvatureState& s, Vec3W x, Vec3W y) {
  const double area2 = dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y);
  return dot(riemann_apply(s, x, y, x), y) / area2;
}

RicciForms ricci_normal_forms(const CurvatureState& s, double nu) {
  if (!(std::abs(nu) <= 1.0)) {
    throw Error(ErrorCode::nu_out_of_range, "nu = " + std::to_string(nu) + " outside [-1, 1]");
  }
  const double n2 = nu * nu;
  return {2.0 * s.k_tan + (s.k_rad - s.k_tan) * (1.0 + n2),
          2.0 * s.k_rad + (s.k_tan - s.k_rad) * (1.0 - n2)};
}

double ricci_normal(const CurvatureState& s, double nu) { return ricci_normal_forms(s, nu).tan_form; }

double scalar_curvature(const CurvatureState& s) { return (s.k_tan + 2.0 * s.k_rad) / 3.0; }

namespace {

BrendleResult brendle_from(const Jet& j, double dkrad_dt) {
  const CurvatureState s = curvature_state(j);
  BrendleResult r;
  r.lhs = dkrad_dt;
  r.rhs = (j.hp / j.h) * (s.k_tan - s.k_rad);
  r.holds = r.lhs <= r.rhs + 1e-12;
  return r;
}

}  // namespace

BrendleResult brendle_condition_native(const WarpingModel& model, double x) {
  const Jet j = model.jet_native(x);
  if (j.has_hppp) {
    return brendle_from(j, -(j.hppp * j.h - j.hpp * j.hp) / (j.h * j.h));
  }
  // dK_rad/ds by central differences, then ds/dt = sqrt(1 - h'^2)
  const Interval dom = model.native_domain();
  double step = 1e-3 * std::max(1.0, std::abs(x));
  const double room = std::min(x - dom.lo, dom.hi - x) / 2.0;
  step = std::min(step, room);
  if (!(step > 1e-7)) {
    throw Error(ErrorCode::step_underflow,
                "no room for differences at " + std::to_string(x) + " near the domain end");
  }
  auto krad = [&](double s) {
    const Jet js = model.jet_native(s);
    return -js.hpp / js.h;
  };
  const double d = (krad(x - 2 * step) - 8 * krad(x - step) + 8 * krad(x + step) -
                    krad(x + 2 * step)) /
                   (12.0 * step);
  double ds_dt = 1.0;
  if (model.kind() == ModelKind::profile) ds_dt = std::sqrt(std::max(0.0, 1.0 - j.hp * j.hp));
  return brendle_from(j, d * ds_dt);
}

BrendleResult brendle_condition(const WarpingModel& model, double t) {
  const Jet j = model.jet(t);
  if (j.has_hppp) return brendle_from(j, -(j.hppp * j.h - j.hpp * j.hp) / (j.h * j.h));
  return brendle_condition_native(model, model.native_of_t(t));
}

Extremum ricci_infimum(const WarpingModel& model, Interval native) {
  if (!(native.hi >= native.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  auto f = [&](double x) {
    const CurvatureState s = curvature_state_native(model, x);
    return std::min(2.0 * s.k_rad, s.k_tan + s.k_rad);
  };
  const bool log_spaced = model.capped() && native.hi >= model.native_domain().hi;
  return scan_infimum(f, native, 2001, log_spaced);
}

}  // namespace warpstab
