#include "warpstab/warping.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

#include "warpstab/error.hpp"
#include "warpstab/quadrature.hpp"

namespace warpstab {

namespace {

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

}  // namespace

double default_cap() {
  const char* env = std::getenv("WARPSTAB_CAP");
  if (env == nullptr || *env == '\0') return 50.0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (end == env || *end != '\0' || !(v > 0.0) || !std::isfinite(v)) {
    throw Error(ErrorCode::invalid_parameters,
                std::string("WARPSTAB_CAP must be a positive number, got '") + env + "'");
  }
  return v;
}

const char* to_string(ModelKind kind) {
  switch (kind) {
    case ModelKind::space_form: return "space_form";
    case ModelKind::dss: return "dss";
    case ModelKind::rn: return "rn";
    case ModelKind::profile: return "profile";
  }
  return "unknown";
}

DssDomain dss_domain(double m, double c) {
  if (!(m > 0.0)) throw Error(ErrorCode::invalid_parameters, "dss requires m > 0");
  if (c > 0.0 && !(c * m * m < 4.0 / 27.0)) {
    throw Error(ErrorCode::invalid_parameters, "dss with c > 0 requires c m^2 < 4/27");
  }
  DssDomain d;
  if (c == 0.0) {
    d.s0 = m;
    return d;
  }
  auto cubic = [m, c](double r) { return c * r * r * r - r + m; };
  if (c < 0.0) {
    // cubic is decreasing on r > 0, positive at 0 and c m^3 < 0 at r = m
    d.s0 = bisect(cubic, 0.0, m, 1e-12);
    return d;
  }
  const double rc = 1.0 / std::sqrt(3.0 * c);  // local minimum of the cubic
  d.s0 = bisect(cubic, 0.0, rc, 1e-12);
  d.s1 = bisect(cubic, rc, 1.0 / std::sqrt(c), 1e-12);
  d.s1_infinite = false;
  d.s2 = -(d.s0 + d.s1);
  return d;
}

double rn_s0(double m, double q) {
  if (!(q > 0.0) || !(m > 2.0 * q)) {
    throw Error(ErrorCode::invalid_parameters, "rn requires m > 2q > 0");
  }
  // 2q^2/(m - sqrt(m^2 - 4q^2)) rationalized; no cancellation as q -> 0
  return 0.5 * (m + std::sqrt((m - 2.0 * q) * (m + 2.0 * q)));
}

Jet space_form_h(double c, double t) {
  if (t < 0.0) throw Error(ErrorCode::out_of_domain, "space form needs t >= 0");
  Jet j;
  j.t = t;
  j.has_hppp = true;
  if (c > 0.0) {
    const double k = std::sqrt(c);
    if (t > std::numbers::pi / k) {
      throw Error(ErrorCode::out_of_domain, "space form with c > 0 needs t <= pi/sqrt(c)");
    }
    j.h = std::sin(k * t) / k;
    j.hp = std::cos(k * t);
  } else if (c < 0.0) {
    const double k = std::sqrt(-c);
    j.h = std::sinh(k * t) / k;
    j.hp = std::cosh(k * t);
  } else {
    j.h = t;
    j.hp = 1.0;
  }
  j.hpp = -c * j.h;
  j.hppp = -c * j.hp;
  return j;
}

// ---------------------------------------------------------------------------
// profiles

ProfileCurve ProfileCurve::ellipsoid(double b) {
  if (!(b > 0.0)) throw Error(ErrorCode::invalid_parameters, "ellipsoid needs b > 0");
  ProfileCurve p;
  p.shape = Shape::ellipsoid;
  p.b = b;
  return p;
}

ProfileCurve ProfileCurve::hyperboloid(double b) {
  if (!(b > 0.0)) throw Error(ErrorCode::invalid_parameters, "hyperboloid needs b > 0");
  ProfileCurve p;
  p.shape = Shape::hyperboloid;
  p.b = b;
  return p;
}

ProfileCurve ProfileCurve::sampled(std::vector<double> s, std::vector<double> u) {
  if (s.size() != u.size() || s.size() < 5) {
    throw Error(ErrorCode::invalid_parameters,
                "sampled profile needs matching s and u arrays of length >= 5");
  }
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!(s[i] > s[i - 1])) {
      throw Error(ErrorCode::invalid_parameters, "sampled profile s must be strictly increasing");
    }
  }
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] > 0.0)) {
      throw Error(ErrorCode::nonpositive_profile,
                  "u(" + num(s[i]) + ") = " + num(u[i]) + " is not positive");
    }
  }
  ProfileCurve p;
  p.shape = Shape::samples;
  p.s = std::move(s);
  p.u = std::move(u);
  return p;
}

ProfileCurve ProfileCurve::callable(std::function<Derivs(double)> fn) {
  ProfileCurve p;
  p.shape = Shape::callable;
  p.fn = std::move(fn);
  return p;
}

ProfileCurve::Derivs ProfileCurve::eval(double x) const {
  switch (shape) {
    case Shape::ellipsoid: {
      const double w = b * b - x * x;
      if (!(w > 0.0)) {
        throw Error(ErrorCode::nonpositive_profile, "ellipsoid profile vanishes at s = " + num(x));
      }
      const double sw = std::sqrt(w);
      return {sw / b, -x / (b * sw), -b / (w * sw)};
    }
    case Shape::hyperboloid: {
      const double w = b * b + x * x;
      const double sw = std::sqrt(w);
      return {sw / b, x / (b * sw), b / (w * sw)};
    }
    case Shape::callable: return fn(x);
    case Shape::samples: break;
  }
  // 5-point interpolating polynomial around x, Newton form
  const std::size_t n = s.size();
  auto it = std::lower_bound(s.begin(), s.end(), x);
  std::size_t centre = static_cast<std::size_t>(it - s.begin());
  std::size_t first = centre >= 2 ? centre - 2 : 0;
  first = std::min(first, n - 5);
  double xs[5];
  double cs[5];
  for (int k = 0; k < 5; ++k) {
    xs[k] = s[first + k];
    cs[k] = u[first + k];
  }
  for (int lvl = 1; lvl < 5; ++lvl) {
    for (int k = 4; k >= lvl; --k) cs[k] = (cs[k] - cs[k - 1]) / (xs[k] - xs[k - lvl]);
  }
  double p = cs[4];
  double dp = 0.0;
  double d2p = 0.0;
  for (int k = 3; k >= 0; --k) {
    const double dx = x - xs[k];
    d2p = 2.0 * dp + dx * d2p;
    dp = p + dx * dp;
    p = cs[k] + dx * p;
  }
  return {p, dp, d2p};
}

Interval ProfileCurve::default_interval(double cap) const {
  switch (shape) {
    case Shape::ellipsoid: return {-b * (1.0 - 1e-4), b * (1.0 - 1e-4)};
    case Shape::hyperboloid: return {-cap, cap};
    case Shape::samples: return {s.front(), s.back()};
    case Shape::callable: break;
  }
  return {-cap, cap};
}

// ---------------------------------------------------------------------------
// model implementations

namespace detail {

struct ModelImpl {
  ModelKind kind = ModelKind::space_form;
  double m = 0.0;
  double c = 0.0;
  double q = 0.0;
  double b = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
  Interval t_dom;
  Interval native_dom;
  bool capped = false;
  bool lower_open = false;
  bool upper_open = false;

  virtual ~ModelImpl() = default;
  virtual Jet jet(double t) const = 0;
  virtual Jet jet_native(double x) const = 0;
  virtual double t_of_native(double x) const = 0;
  virtual double native_of_t(double t) const = 0;
  virtual const Trajectory* trajectory() const { return nullptr; }
  virtual const ProfileCurve* curve() const { return nullptr; }

  // Clamps tiny overshoots (round-off in callers' grids) and rejects the rest.
  double check(double x, Interval dom, const char* what) const {
    const double slack = 1e-12 * std::max(1.0, std::max(std::abs(dom.lo), std::abs(dom.hi)));
    if (!(x >= dom.lo - slack && x <= dom.hi + slack)) {
      throw Error(ErrorCode::out_of_domain, std::string(what) + " = " + num(x) + " outside [" +
                                                num(dom.lo) + ", " + num(dom.hi) + "]");
    }
    x = std::clamp(x, dom.lo, dom.hi);
    if ((lower_open && x <= dom.lo) || (upper_open && x >= dom.hi)) {
      throw Error(ErrorCode::out_of_domain,
                  std::string(what) + " = " + num(x) + " is a degenerate endpoint (h = 0)");
    }
    return x;
  }
};

namespace {

struct SpaceFormImpl final : ModelImpl {
  Jet jet(double t) const override { return space_form_h(c, check(t, t_dom, "t")); }
  Jet jet_native(double x) const override { return jet(x); }
  double t_of_native(double x) const override { return check(x, native_dom, "t"); }
  double native_of_t(double t) const override { return check(t, t_dom, "t"); }
};

// dSS and RN: h'' = rhs(h), first integral h'^2 = V(h).
struct OdeImpl final : ModelImpl {
  double s2 = 0.0;  // dss c > 0: negative root of the cubic
  Trajectory traj;

  double V(double r) const {
    if (kind == ModelKind::dss) return 1.0 - m / r - c * r * r;
    return 1.0 - m / r + q * q / (r * r);
  }
  double rhs(double h) const {
    if (kind == ModelKind::dss) return m / (2.0 * h * h) - c * h;
    return m / (2.0 * h * h) - q * q / (h * h * h);
  }
  double drhs(double h) const {
    const double h3 = h * h * h;
    if (kind == ModelKind::dss) return -m / h3 - c;
    return -m / h3 + 3.0 * q * q / (h3 * h);
  }
  // V(r)/(r - s0), finite and positive at r = s0
  double W(double r) const {
    if (kind == ModelKind::dss) return -(c * r * r + c * s0 * r + (c * s0 * s0 - 1.0)) / r;
    return (r - q * q / s0) / (r * r);
  }

  // t = F(r) = integral of 1/sqrt(V) from s0
  double F(double r) const {
    if (r <= s0) return 0.0;
    if (kind == ModelKind::dss && c > 0.0) {
      // r = mid - half cos(theta) absorbs both square-root ends
      const double mid = 0.5 * (s0 + s1);
      const double half = 0.5 * (s1 - s0);
      const double theta = std::acos(std::clamp((mid - r) / half, -1.0, 1.0));
      auto g = [&](double th) {
        const double rr = mid - half * std::cos(th);
        return std::sqrt(rr / (c * (rr - s2)));
      };
      const int panels = std::max(1, static_cast<int>(std::ceil(theta / 0.25)));
      return quadrature::integrate(g, 0.0, theta, panels, 20);
    }
    const double xi_max = std::sqrt(r - s0);
    auto g = [&](double xi) { return 2.0 / std::sqrt(W(s0 + xi * xi)); };
    const int panels = std::max(1, static_cast<int>(std::ceil(xi_max / 0.25)));
    return quadrature::integrate(g, 0.0, xi_max, panels, 20);
  }

  Jet make(double t, double h, double hp) const {
    Jet j;
    j.t = t;
    j.h = h;
    j.hp = hp;
    j.hpp = rhs(h);
    j.hppp = drhs(h) * hp;
    j.has_hppp = true;
    return j;
  }

  // one classical RK4 step of (h, h') over dt
  void rk4(double& h, double& hp, double dt) const {
    const double k1h = hp;
    const double k1v = rhs(h);
    const double k2h = hp + 0.5 * dt * k1v;
    const double k2v = rhs(h + 0.5 * dt * k1h);
    const double k3h = hp + 0.5 * dt * k2v;
    const double k3v = rhs(h + 0.5 * dt * k2h);
    const double k4h = hp + dt * k3v;
    const double k4v = rhs(h + dt * k3h);
    h += dt / 6.0 * (k1h + 2.0 * k2h + 2.0 * k3h + k4h);
    hp += dt / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
  }

  // Integrates to t_max or until h turns (c > 0, outer root reached).
  Trajectory integrate(double t_max, double step) const {
    if (!(step > 0.0)) throw Error(ErrorCode::invalid_parameters, "step must be positive");
    Trajectory tr;
    tr.step = step;
    auto push = [&](double t, double h, double hp) {
      const double res = std::abs(hp * hp - V(h));
      tr.samples.push_back({t, h, hp, rhs(h), res});
      tr.residual_max = std::max(tr.residual_max, res);
    };
    push(0.0, s0, 0.0);
    const std::size_t n = static_cast<std::size_t>(std::ceil(t_max / step - 1e-9));
    if (n == 0) return tr;
    // even Taylor start: h = s0 + f tau^2/2 + f' f tau^4/24
    const double f0 = rhs(s0);
    const double f1 = drhs(s0);
    const double tau = std::min(step, t_max);
    double h = s0 + f0 * tau * tau / 2.0 + f1 * f0 * std::pow(tau, 4) / 24.0;
    double hp = f0 * tau + f1 * f0 * tau * tau * tau / 6.0;
    push(tau, h, hp);
    for (std::size_t i = 2; i <= n; ++i) {
      const double t0 = static_cast<double>(i - 1) * step;
      const double t1 = std::min(static_cast<double>(i) * step, t_max);
      double hn = h;
      double hpn = hp;
      rk4(hn, hpn, t1 - t0);
      if (hpn < 0.0 || (turns() && hn > s1)) break;
      h = hn;
      hp = hpn;
      push(t1, h, hp);
    }
    return tr;
  }
  bool turns() const { return kind == ModelKind::dss && c > 0.0; }

  Jet jet(double t) const override {
    t = check(t, t_dom, "t");
    const auto& sm = traj.samples;
    std::size_t i = static_cast<std::size_t>(std::llround(t / traj.step));
    i = std::min(i, sm.size() - 1);
    double h = sm[i].h;
    double hp = sm[i].hp;
    const double dt = t - sm[i].t;
    if (dt != 0.0) rk4(h, hp, dt);
    return make(t, h, hp);
  }

  Jet jet_native(double r) const override {
    r = check(r, native_dom, "r");
    return make(F(r), r, std::sqrt(std::max(0.0, V(r))));
  }

  double t_of_native(double r) const override { return F(check(r, native_dom, "r")); }
  double native_of_t(double t) const override { return jet(t).h; }
  const Trajectory* trajectory() const override { return &traj; }
};

struct ProfileImpl final : ModelImpl {
  ProfileCurve pc;
  std::vector<double> edges;  // panel boundaries in s
  std::vector<double> G;      // G at the boundaries, zero at the midpoint

  double Gprime(double s) const {
    const double up = pc.eval(s).up;
    return std::sqrt(1.0 + up * up);
  }

  std::size_t panel_of(double s) const {
    auto it = std::upper_bound(edges.begin(), edges.end(), s);
    std::size_t k = static_cast<std::size_t>(it - edges.begin());
    k = k == 0 ? 0 : k - 1;
    return std::min(k, edges.size() - 2);
  }

  double G_of(double s) const {
    const std::size_t k = panel_of(s);
    if (s == edges[k]) return G[k];
    return G[k] + quadrature::integrate([&](double x) { return Gprime(x); }, edges[k], s, 1, 16);
  }

  double G_inverse(double t) const {
    auto it = std::upper_bound(G.begin(), G.end(), t);
    std::size_t k = static_cast<std::size_t>(it - G.begin());
    k = k == 0 ? 0 : k - 1;
    k = std::min(k, G.size() - 2);
    double lo = edges[k];
    double hi = edges[k + 1];
    if (t <= G[k]) return lo;
    if (t >= G[k + 1]) return hi;
    double s = lo + (hi - lo) * (t - G[k]) / (G[k + 1] - G[k]);
    // safeguarded Newton inside the panel, G increasing
    for (int it2 = 0; it2 < 80; ++it2) {
      const double r = G_of(s) - t;
      if (r > 0.0) hi = s;
      else lo = s;
      double next = s - r / Gprime(s);
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
      if (std::abs(next - s) <= 4e-16 * std::max(1.0, std::abs(s))) return next;
      s = next;
    }
    return s;
  }

  Jet jet_at_s(double s, double t) const {
    const auto d = pc.eval(s);
    if (!(d.u > 0.0)) {
      throw Error(ErrorCode::nonpositive_profile, "u(" + num(s) + ") = " + num(d.u));
    }
    const double w = 1.0 + d.up * d.up;
    Jet j;
    j.t = t;
    j.h = d.u;
    j.hp = d.up / std::sqrt(w);
    j.hpp = d.upp / (w * w);
    return j;
  }

  Jet jet(double t) const override {
    t = check(t, t_dom, "t");
    return jet_at_s(G_inverse(t), t);
  }
  Jet jet_native(double s) const override {
    s = check(s, native_dom, "s");
    return jet_at_s(s, G_of(s));
  }
  double t_of_native(double s) const override { return G_of(check(s, native_dom, "s")); }
  double native_of_t(double t) const override { return G_inverse(check(t, t_dom, "t")); }
  const ProfileCurve* curve() const override { return &pc; }
};

}  // namespace
}  // namespace detail

WarpingModel WarpingModel::space_form(double c, double cap) {
  if (!std::isfinite(c)) throw Error(ErrorCode::invalid_parameters, "c must be finite");
  auto impl = std::make_shared<detail::SpaceFormImpl>();
  impl->kind = ModelKind::space_form;
  impl->c = c;
  impl->lower_open = true;
  if (c > 0.0) {
    impl->t_dom = {0.0, std::numbers::pi / std::sqrt(c)};
    impl->upper_open = true;
  } else {
    if (!(cap > 0.0)) throw Error(ErrorCode::invalid_parameters, "cap must be positive");
    impl->t_dom = {0.0, cap};
    impl->capped = true;
  }
  impl->native_dom = impl->t_dom;
  return WarpingModel(std::move(impl));
}

WarpingModel WarpingModel::dss(double m, double c, double cap) {
  const DssDomain d = dss_domain(m, c);
  auto impl = std::make_shared<detail::OdeImpl>();
  impl->kind = ModelKind::dss;
  impl->m = m;
  impl->c = c;
  impl->s0 = d.s0;
  impl->s2 = d.s2;
  double r_hi = d.s1;
  if (d.s1_infinite) {
    if (!(cap > d.s0)) {
      throw Error(ErrorCode::invalid_parameters,
                  "cap " + num(cap) + " must exceed s0 = " + num(d.s0));
    }
    impl->s1 = std::numeric_limits<double>::infinity();
    r_hi = cap;
    impl->capped = true;
  } else {
    impl->s1 = d.s1;
  }
  impl->native_dom = {d.s0, r_hi};
  impl->t_dom = {0.0, impl->F(r_hi)};
  impl->traj = impl->integrate(impl->t_dom.hi, 1e-3);
  return WarpingModel(std::move(impl));
}

WarpingModel WarpingModel::rn(double m, double q, double cap) {
  const double s0 = rn_s0(m, q);
  if (!(cap > s0)) {
    throw Error(ErrorCode::invalid_parameters, "cap " + num(cap) + " must exceed s0 = " + num(s0));
  }
  auto impl = std::make_shared<detail::OdeImpl>();
  impl->kind = ModelKind::rn;
  impl->m = m;
  impl->q = q;
  impl->s0 = s0;
  impl->s1 = std::numeric_limits<double>::infinity();
  impl->capped = true;
  impl->native_dom = {s0, cap};
  impl->t_dom = {0.0, impl->F(cap)};
  impl->traj = impl->integrate(impl->t_dom.hi, 1e-3);
  return WarpingModel(std::move(impl));
}

WarpingModel WarpingModel::profile(const ProfileCurve& curve, Interval iv, int panels) {
  if (!(iv.hi > iv.lo)) throw Error(ErrorCode::empty_interval, "profile s-interval is empty");
  if (panels < 2) throw Error(ErrorCode::invalid_parameters, "profile needs >= 2 panels");
  if (panels % 2 == 1) ++panels;
  auto impl = std::make_shared<detail::ProfileImpl>();
  impl->kind = ModelKind::profile;
  impl->pc = curve;
  if (curve.shape == ProfileCurve::Shape::ellipsoid ||
      curve.shape == ProfileCurve::Shape::hyperboloid) {
    impl->b = curve.b;
  }
  if (curve.shape == ProfileCurve::Shape::samples &&
      (iv.lo < curve.s.front() || iv.hi > curve.s.back())) {
    throw Error(ErrorCode::out_of_domain, "s-interval exceeds the sampled range");
  }
  // cosine clustering: profiles like the ellipsoid steepen at both ends
  const double mid = 0.5 * (iv.lo + iv.hi);
  const double half = 0.5 * (iv.hi - iv.lo);
  impl->edges.resize(static_cast<std::size_t>(panels) + 1);
  for (int k = 0; k <= panels; ++k) {
    impl->edges[k] = mid - half * std::cos(std::numbers::pi * k / panels);
  }
  impl->edges.front() = iv.lo;
  impl->edges.back() = iv.hi;
  impl->edges[panels / 2] = mid;
  const auto& gl = quadrature::gauss_legendre(16);
  impl->G.assign(impl->edges.size(), 0.0);
  for (int k = 0; k < panels; ++k) {
    const double a = impl->edges[k];
    const double w = impl->edges[k + 1] - a;
    double sum = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double x = a + 0.5 * w * (gl.nodes[i] + 1.0);
      const auto d = curve.eval(x);
      if (!(d.u > 0.0)) {
        throw Error(ErrorCode::nonpositive_profile, "u(" + num(x) + ") = " + num(d.u));
      }
      sum += gl.weights[i] * std::sqrt(1.0 + d.up * d.up);
    }
    impl->G[k + 1] = impl->G[k] + 0.5 * w * sum;
  }
  for (double x : {iv.lo, iv.hi}) {
    if (!(curve.eval(x).u > 0.0)) {
      throw Error(ErrorCode::nonpositive_profile, "u(" + num(x) + ") is not positive");
    }
  }
  const double g_mid = impl->G[panels / 2];
  for (double& g : impl->G) g -= g_mid;
  impl->native_dom = iv;
  impl->t_dom = {impl->G.front(), impl->G.back()};
  impl->capped = curve.shape == ProfileCurve::Shape::hyperboloid;
  return WarpingModel(std::move(impl));
}

WarpingModel profile_reparametrize(const ProfileCurve& curve, Interval s_interval, int panels) {
  return WarpingModel::profile(curve, s_interval, panels);
}

ModelKind WarpingModel::kind() const { return impl_->kind; }
double WarpingModel::m() const { return impl_->m; }
double WarpingModel::c() const { return impl_->c; }
double WarpingModel::q() const { return impl_->q; }
double WarpingModel::b() const { return impl_->b; }
const ProfileCurve* WarpingModel::profile_curve() const { return impl_->curve(); }
double WarpingModel::s0() const { return impl_->s0; }
double WarpingModel::s1() const { return impl_->s1; }
Interval WarpingModel::t_domain() const { return impl_->t_dom; }
Interval WarpingModel::native_domain() const { return impl_->native_dom; }
bool WarpingModel::capped() const { return impl_->capped; }
bool WarpingModel::lower_open() const { return impl_->lower_open; }
bool WarpingModel::upper_open() const { return impl_->upper_open; }

const char* WarpingModel::native_name() const {
  switch (impl_->kind) {
    case ModelKind::dss:
    case ModelKind::rn: return "r";
    case ModelKind::profile: return "s";
    case ModelKind::space_form: break;
  }
  return "t";
}

Jet WarpingModel::jet(double t) const { return impl_->jet(t); }
Jet WarpingModel::jet_native(double x) const { return impl_->jet_native(x); }
double WarpingModel::t_of_native(double x) const { return impl_->t_of_native(x); }
double WarpingModel::native_of_t(double t) const { return impl_->native_of_t(t); }
const Trajectory* WarpingModel::trajectory() const { return impl_->trajectory(); }

std::string WarpingModel::describe() const {
  switch (impl_->kind) {
    case ModelKind::space_form: return "space_form(c=" + num(impl_->c) + ")";
    case ModelKind::dss: return "dss(m=" + num(impl_->m) + ",c=" + num(impl_->c) + ")";
    case ModelKind::rn: return "rn(m=" + num(impl_->m) + ",q=" + num(impl_->q) + ")";
    case ModelKind::profile: break;
  }
  const ProfileCurve* pc = impl_->curve();
  switch (pc->shape) {
    case ProfileCurve::Shape::ellipsoid: return "profile(ellipsoid,b=" + num(pc->b) + ")";
    case ProfileCurve::Shape::hyperboloid: return "profile(hyperboloid,b=" + num(pc->b) + ")";
    case ProfileCurve::Shape::samples:
      return "profile(samples,n=" + std::to_string(pc->s.size()) + ")";
    case ProfileCurve::Shape::callable: break;
  }
  return "profile(callable)";
}

Trajectory integrate_h(const WarpingModel& model, double t_max, double step) {
  const auto* ode = dynamic_cast<const detail::OdeImpl*>(model.impl_.get());
  if (ode == nullptr) {
    throw Error(ErrorCode::model_kind_mismatch, "integrate_h needs a dss or rn model");
  }
  if (!(t_max >= 0.0)) throw Error(ErrorCode::invalid_parameters, "t_max must be >= 0");
  Trajectory tr = ode->integrate(t_max, step);
  if (tr.samples.back().t < t_max - 1e-12 * std::max(1.0, t_max)) {
    throw Error(ErrorCode::domain_exit, "h reached the outer root s1 = " + num(ode->s1) +
                                            " at t = " + num(tr.samples.back().t));
  }
  if (tr.residual_max > 1e-8) {
    throw Error(ErrorCode::step_too_large,
                "first-integral residual " + num(tr.residual_max) + " exceeds 1e-8");
  }
  return tr;
}

Interval working_interval(const WarpingModel& model) {
  Interval iv = model.native_domain();
  const double pad = 1e-6 * iv.width();
  if (model.lower_open()) iv.lo += pad;
  if (model.upper_open()) iv.hi -= pad;
  return iv;
}

std::vector<WarpingModel> builtin_models() {
  return {WarpingModel::space_form(1.0),
          WarpingModel::space_form(0.0),
          WarpingModel::space_form(-1.0),
          WarpingModel::dss(1.0, 0.0),
          WarpingModel::dss(1.0, 0.05),
          WarpingModel::rn(2.0, 0.5),
          WarpingModel::profile(ProfileCurve::ellipsoid(1.5)),
          WarpingModel::profile(ProfileCurve::hyperboloid(1.0))};
}

}  // namespace warpstab
