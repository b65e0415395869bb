#include "warpstab/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <random>
#include <string>
#include <tuple>

#include "warpstab/curvature.hpp"
#include "warpstab/error.hpp"
#include "warpstab/quadrature.hpp"

namespace warpstab {

namespace {

Mat3 warped_g(Real h, Real p1) {
  const Real s = std::sin(p1);
  Mat3 g{};
  g[0][0] = 1.0;
  g[1][1] = h * h;
  g[2][2] = h * h * s * s;
  return g;
}

// h'' as a function of h for the ODE models, in extended precision
struct WarpOde {
  ModelKind kind;
  Real m, c, q;
  [[nodiscard]] Real rhs(Real h) const {
    if (kind == ModelKind::dss) return m / (2 * h * h) - c * h;
    return m / (2 * h * h) - q * q / (h * h * h);
  }
};

struct Anchor {
  Real t = 0, h = 0, hp = 0;
};

struct ProfileAnchor {
  Real t = 0, s = 0, u = 0;
};

}  // namespace

CoordMetric CoordMetric::warped(const WarpingModel& model) {
  CoordMetric m;
  m.t_range = model.t_domain();
  switch (model.kind()) {
    case ModelKind::space_form: {
      const Real c = model.c();
      m.g = [c](Real t, Real p1, Real) {
        Real h = t;
        if (c > 0) h = std::sin(std::sqrt(c) * t) / std::sqrt(c);
        if (c < 0) h = std::sinh(std::sqrt(-c) * t) / std::sqrt(-c);
        return warped_g(h, p1);
      };
      break;
    }
    case ModelKind::dss:
    case ModelKind::rn: {
      // the double trajectory is noisy at the 1e-16 h level, which nested
      // stencils turn into 1e-6; integrate in long double from an anchor instead
      const WarpOde ode{model.kind(), model.m(), model.c(), model.q()};
      auto anchor = std::make_shared<Anchor>();
      m.localize = [model, anchor](Real t) {
        const Jet j = model.jet(static_cast<double>(t));
        *anchor = {static_cast<Real>(j.t), j.h, j.hp};
      };
      m.localize(m.t_range.lo + 0.5 * (m.t_range.hi - m.t_range.lo));
      m.g = [ode, anchor](Real t, Real p1, Real) {
        Real h = anchor->h;
        Real v = anchor->hp;
        // fixed substep count keeps h smooth in t
        const Real dt = (t - anchor->t) / 4;
        for (int k = 0; k < 4; ++k) {
          const Real k1h = v, k1v = ode.rhs(h);
          const Real k2h = v + dt / 2 * k1v, k2v = ode.rhs(h + dt / 2 * k1h);
          const Real k3h = v + dt / 2 * k2v, k3v = ode.rhs(h + dt / 2 * k2h);
          const Real k4h = v + dt * k3v, k4v = ode.rhs(h + dt * k3h);
          h += dt / 6 * (k1h + 2 * k2h + 2 * k3h + k4h);
          v += dt / 6 * (k1v + 2 * k2v + 2 * k3v + k4v);
        }
        return warped_g(h, p1);
      };
      break;
    }
    case ModelKind::profile: {
      // t and h as integrals of sqrt(1 + u'^2) and u' from an anchor: the
      // round-off then scales with the step instead of with h
      const ProfileCurve curve = *model.profile_curve();
      auto anchor = std::make_shared<ProfileAnchor>();
      m.localize = [model, curve, anchor](Real t) {
        const double s = model.native_of_t(static_cast<double>(t));
        *anchor = {t, s, curve.eval(s).u};
      };
      m.localize(m.t_range.lo + 0.5 * (m.t_range.hi - m.t_range.lo));
      m.g = [curve, anchor](Real t, Real p1, Real) {
        const auto& gl = quadrature::gauss_legendre(12);
        const Real s0 = anchor->s;
        auto speed = [&](Real x) {
          const Real up = curve.eval(static_cast<double>(x)).up;
          return std::sqrt(1 + up * up);
        };
        auto integral = [&](Real s, auto&& f) {
          Real acc = 0;
          for (std::size_t i = 0; i < gl.nodes.size(); ++i)
            acc += gl.weights[i] * f(s0 + (s - s0) * (1 + static_cast<Real>(gl.nodes[i])) / 2);
          return acc * (s - s0) / 2;
        };
        const Real dt = t - anchor->t;
        Real s = s0 + dt / speed(s0);
        for (int it = 0; it < 20; ++it) {
          const Real step = (integral(s, speed) - dt) / speed(s);
          s -= step;
          if (std::abs(step) <= 1e-19L * (1 + std::abs(s))) break;
        }
        const Real h = anchor->u + integral(s, [&](Real x) {
                         return static_cast<Real>(curve.eval(static_cast<double>(x)).up);
                       });
        return warped_g(h, p1);
      };
      break;
    }
    default:
      m.g = [model](Real t, Real p1, Real) { return warped_g(model.jet(static_cast<double>(t)).h, p1); };
  }
  return m;
}

namespace {

constexpr double kPoleGap = 0.1;

void check_pole(Real p1) {
  if (p1 < kPoleGap - 1e-12 || p1 > std::numbers::pi - kPoleGap + 1e-12) {
    throw Error(ErrorCode::pole_proximity, "phi1 = " + std::to_string(static_cast<double>(p1)) + " within 0.1 of a pole");
  }
}

Mat3 inverse(const Mat3& g) {
  const Real det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
                     g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
                     g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  // Hadamard: |det| <= product of the row norms
  Real bound = 1.0;
  for (const auto& row : g) bound *= std::sqrt(row[0] * row[0] + row[1] * row[1] + row[2] * row[2]);
  if (!(std::abs(det) > 1e-14 * bound)) {
    throw Error(ErrorCode::singular_metric, "metric determinant " + std::to_string(static_cast<double>(det)));
  }
  Mat3 inv{};
  inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  return inv;
}

Point3 shifted(Point3 p, int axis, Real d) {
  if (axis == 0) p.t += d;
  if (axis == 1) p.phi1 += d;
  if (axis == 2) p.phi2 += d;
  return p;
}

// step in t shrunk so that `reach` steps stay inside the metric's range
Real fit_step(const CoordMetric& metric, Real t, double step, double reach) {
  const Real room = std::min<Real>(t - metric.t_range.lo, metric.t_range.hi - t);
  const Real s = std::min<Real>(step, room / (reach + 0.5));
  if (!(s >= 1e-6)) {
    throw Error(ErrorCode::step_underflow, "t = " + std::to_string(static_cast<double>(t)) + " too close to the domain end");
  }
  return s;
}

template <class F>
auto central4(F&& f, Point3 p, int axis, Real d) {
  auto a = f(shifted(p, axis, -2 * d));
  auto b = f(shifted(p, axis, -d));
  auto c = f(shifted(p, axis, d));
  auto e = f(shifted(p, axis, 2 * d));
  return std::make_tuple(a, b, c, e);
}

Christoffel christoffel_at(const CoordMetric& metric, Point3 p, Real d) {
  std::array<Mat3, 3> dg{};  // dg[m][i][j] = d_m g_ij
  for (int m = 0; m < 3; ++m) {
    auto [a, b, c, e] =
        central4([&](Point3 q) { return metric.g(q.t, q.phi1, q.phi2); }, p, m, d);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        dg[m][i][j] = (a[i][j] - 8 * b[i][j] + 8 * c[i][j] - e[i][j]) / (12 * d);
  }
  const Mat3 gi = inverse(metric.g(p.t, p.phi1, p.phi2));
  Christoffel G{};
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Real s = 0.0;
        for (int l = 0; l < 3; ++l) s += gi[k][l] * (dg[i][j][l] + dg[j][i][l] - dg[l][i][j]);
        G[k][i][j] = 0.5 * s;
      }
  return G;
}

}  // namespace

Christoffel christoffel_fd(const CoordMetric& metric, Point3 p, double step) {
  check_pole(p.phi1);
  if (metric.localize) metric.localize(p.t);
  return christoffel_at(metric, p, fit_step(metric, p.t, step, 2.0));
}

namespace {

Riemann riemann_at(const CoordMetric& metric, Point3 p, Real d) {
  const Christoffel G = christoffel_at(metric, p, d);
  std::array<Christoffel, 3> dG{};  // dG[m] = d_m Gamma
  for (int m = 0; m < 3; ++m) {
    auto [a, b, c, e] = central4([&](Point3 q) { return christoffel_at(metric, q, d); }, p, m, d);
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          dG[m][k][i][j] = (a[k][i][j] - 8 * b[k][i][j] + 8 * c[k][i][j] - e[k][i][j]) / (12 * d);
  }
  Riemann R{};
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          Real v = dG[j][l][i][k] - dG[k][l][i][j];
          for (int m = 0; m < 3; ++m) v += G[l][j][m] * G[m][i][k] - G[l][k][m] * G[m][i][j];
          R[l][i][j][k] = v;
        }
  return R;
}

}  // namespace

Riemann riemann_fd(const CoordMetric& metric, Point3 p, double step, double* bianchi_residual) {
  check_pole(p.phi1);
  const Real d = fit_step(metric, p.t, step, 4.0);
  if (metric.localize) metric.localize(p.t);
  // the nested stencils lose accuracy near the poles where cot(phi1) varies
  // quickly; one Richardson step on the 4th-order pair fixes that
  const Riemann coarse = riemann_at(metric, p, d);
  const Riemann fine = riemann_at(metric, p, d / 2);
  Riemann R{};
  Real biggest = 0.0;
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) {
          R[l][i][j][k] = (16.0L * fine[l][i][j][k] - coarse[l][i][j][k]) / 15.0L;
          biggest = std::max(biggest, std::abs(R[l][i][j][k]));
        }
  if (bianchi_residual) {
    Real worst = 0.0;
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            worst = std::max(worst, std::abs(R[l][i][j][k] + R[l][j][k][i] + R[l][k][i][j]));
    *bianchi_residual = static_cast<double>(worst / std::max(Real{1}, biggest));
  }
  return R;
}

double OracleReport::worst() const {
  double w = 0.0;
  for (const auto& e : entries) w = std::max(w, e.max_error);
  return w;
}

namespace {

std::string ric_label(double nu) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "Ric(N,N) nu=%+.1f", nu);
  return buf;
}

double rel_err(double closed, double fd) {
  return std::abs(closed - fd) / std::max({std::abs(closed), std::abs(fd), 1e-3});
}

// R(X,Y)Z in the orthonormal frame, usual sign convention, from coordinate components
struct FrameTensor {
  const Riemann& R;
  Real h;
  Real sin1;

  [[nodiscard]] Vec3W apply(Vec3W x, Vec3W y, Vec3W z) const {
    const Real scale[3] = {1.0L, h, h * sin1};
    const Real X[3] = {x.t, x.e1 / scale[1], x.e2 / scale[2]};
    const Real Y[3] = {y.t, y.e1 / scale[1], y.e2 / scale[2]};
    const Real Z[3] = {z.t, z.e1 / scale[1], z.e2 / scale[2]};
    Real out[3] = {0, 0, 0};
    for (int l = 0; l < 3; ++l)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k) out[l] += R[l][i][j][k] * Z[i] * X[j] * Y[k];
    return {static_cast<double>(out[0]), static_cast<double>(out[1] * scale[1]),
            static_cast<double>(out[2] * scale[2])};
  }

  // <R(X,Y)Y, X> / |X ^ Y|^2
  [[nodiscard]] double sectional(Vec3W x, Vec3W y) const {
    const double area2 = dot(x, x) * dot(y, y) - dot(x, y) * dot(x, y);
    return dot(apply(x, y, y), x) / area2;
  }

  [[nodiscard]] double ricci(Vec3W n) const {
    double s = 0.0;
    for (const Vec3W e : {Vec3W{1, 0, 0}, Vec3W{0, 1, 0}, Vec3W{0, 0, 1}}) s += dot(apply(e, n, n), e);
    return s;
  }
};

}  // namespace

OracleReport verify_model(const WarpingModel& model, Interval native, int n_t, int n_phi, double tol) {
  if (n_t < 1 || n_phi < 1) throw Error(ErrorCode::invalid_parameters, "empty oracle grid");
  OracleReport rep;
  rep.model = model.describe();
  rep.n_t = n_t;
  rep.n_phi = n_phi;
  rep.tol = tol;
  const CoordMetric metric = CoordMetric::warped(model);
  const double t0 = model.t_of_native(native.lo);
  const double t1 = model.t_of_native(native.hi);

  const double nus[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  std::vector<OracleEntry> entries;
  auto bump = [&](const std::string& name, double err, double t, double p1) {
    for (auto& e : entries) {
      if (e.quantity == name) {
        if (err > e.max_error) e = {name, err, t, p1};
        return;
      }
    }
    entries.push_back({name, err, t, p1});
  };
  for (const char* q : {"K_tan", "K_rad"}) bump(q, 0.0, t0, 0.1);
  for (double nu : nus) bump(ric_label(nu), 0.0, t0, 0.1);
  bump("scal", 0.0, t0, 0.1);
  bump("R(X,Y)Z", 0.0, t0, 0.1);

  std::mt19937_64 rng(1234);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int a = 0; a < n_t; ++a) {
    // cell centres keep the stencils off the domain ends
    const double t = t0 + (t1 - t0) * (a + 0.5) / n_t;
    const CurvatureState s = curvature_state(model, t);
    for (int b = 0; b < n_phi; ++b) {
      const double p1 = n_phi == 1 ? std::numbers::pi / 2
                                   : kPoleGap + (std::numbers::pi - 2 * kPoleGap) * b / (n_phi - 1);
      const double p2 = 0.3 + 0.5 * b;
      double bianchi = 0.0;
      const Riemann R = riemann_fd(metric, {t, p1, p2}, 1e-3, &bianchi);
      rep.bianchi_max = std::max(rep.bianchi_max, bianchi);
      const FrameTensor F{R, s.h, std::sin(static_cast<Real>(p1))};
      const Vec3W et{1, 0, 0};
      const Vec3W e1{0, 1, 0};
      const Vec3W e2{0, 0, 1};
      bump("K_tan", rel_err(s.k_tan, F.sectional(e1, e2)), t, p1);
      bump("K_rad", std::max(rel_err(s.k_rad, F.sectional(et, e1)), rel_err(s.k_rad, F.sectional(et, e2))),
           t, p1);
      for (double nu : nus) {
        const double sn = std::sqrt(1.0 - nu * nu);
        const double psi = 0.4 + 0.3 * b;
        const Vec3W N{nu, sn * std::cos(psi), sn * std::sin(psi)};
        bump(ric_label(nu), rel_err(ricci_normal(s, nu), F.ricci(N)), t, p1);
      }
      const double scal_fd = (F.ricci(et) + F.ricci(e1) + F.ricci(e2)) / 6.0;
      bump("scal", rel_err(scalar_curvature(s), scal_fd), t, p1);
      double tensor_err = 0.0;
      for (int trial = 0; trial < 3; ++trial) {
        const Vec3W x{gauss(rng), gauss(rng), gauss(rng)};
        const Vec3W y{gauss(rng), gauss(rng), gauss(rng)};
        const Vec3W z{gauss(rng), gauss(rng), gauss(rng)};
        const Vec3W closed = riemann_apply(s, x, y, z);
        // the closed form carries the opposite sign convention
        const Vec3W fd = -1.0 * F.apply(x, y, z);
        tensor_err = std::max({tensor_err, rel_err(closed.t, fd.t), rel_err(closed.e1, fd.e1),
                               rel_err(closed.e2, fd.e2)});
      }
      bump("R(X,Y)Z", tensor_err, t, p1);
    }
  }
  rep.entries = std::move(entries);
  rep.pass = rep.worst() <= tol && rep.bianchi_max <= 1e-8;
  return rep;
}

}  // namespace warpstab
