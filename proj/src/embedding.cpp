#include "warpstab/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "warpstab/error.hpp"
#include "warpstab/quadrature.hpp"

namespace warpstab {

FlatEmbedding::FlatEmbedding(WarpingModel model, int kappa, std::vector<double> t,
                             std::vector<double> f)
    : model_(std::move(model)), kappa_(kappa), t_(std::move(t)), f_(std::move(f)) {}

double FlatEmbedding::fprime(double t) const {
  const double hp = model_.jet(t).hp;
  return std::sqrt(std::max(0.0, kappa_ * (1.0 - hp * hp)));
}

double FlatEmbedding::f_increment(double t, double dt) const {
  if (dt == 0.0) return 0.0;
  return quadrature::integrate([this](double x) { return fprime(x); }, t, t + dt, 1, 20);
}

double FlatEmbedding::f_at(double t) const {
  auto it = std::upper_bound(t_.begin(), t_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - t_.begin());
  k = k == 0 ? 0 : std::min(k - 1, t_.size() - 1);
  return f_[k] + f_increment(t_[k], t - t_[k]);
}

Vec4 FlatEmbedding::point(double t, double phi1, double phi2) const {
  const double h = model_.jet(t).h;
  return {f_at(t), h * std::sin(phi1) * std::cos(phi2), h * std::sin(phi1) * std::sin(phi2),
          h * std::cos(phi1)};
}

double FlatEmbedding::relation_residual() const {
  double worst = 0.0;
  const Interval r = t_range();
  for (double t : t_) {
    const double room = std::min(t - r.lo, r.hi - t);
    const double d = std::min(1e-3, room / 2.5);
    if (d < 1e-7) continue;
    const double fp = (-f_increment(t, 2 * d) + 8 * f_increment(t, d) - 8 * f_increment(t, -d) +
                       f_increment(t, -2 * d)) /
                      (12 * d);
    const double hp = model_.jet(t).hp;
    worst = std::max(worst, std::abs(kappa_ * fp * fp + hp * hp - 1.0));
  }
  return worst;
}

FlatEmbedding build_embedding(const WarpingModel& model, Interval native, int n) {
  if (!(native.hi > native.lo)) throw Error(ErrorCode::empty_interval, "embedding interval");
  if (n < 2) n = 2;
  const double t0 = model.t_of_native(native.lo);
  const double t1 = model.t_of_native(native.hi);
  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) t[i] = t0 + (t1 - t0) * i / (n - 1);
  t.back() = t1;
  int pos = 0;
  int neg = 0;
  for (double x : t) {
    const double k = curvature_state(model, x).k_tan;
    if (k > 0.0) ++pos;
    if (k < 0.0) ++neg;
  }
  if (pos > 0 && neg > 0) {
    throw Error(ErrorCode::sign_change,
                "K_tan changes sign on the interval; no single embedding type");
  }
  const int kappa = neg > 0 ? -1 : 1;
  auto fp = [&](double x) {
    const double hp = model.jet(x).hp;
    return std::sqrt(std::max(0.0, kappa * (1.0 - hp * hp)));
  };
  std::vector<double> f = quadrature::cumulative_integral(fp, t);
  return FlatEmbedding(model, kappa, std::move(t), std::move(f));
}

SecondForm second_form_closed(const CurvatureState& s) {
  const double scale = std::max(std::abs(s.k_rad), 1.0 / (s.h * s.h));
  if (std::abs(s.k_tan) <= 1e-13 * scale) {
    throw Error(ErrorCode::vanishing_ktan,
                "K_tan = " + std::to_string(s.k_tan) + " at t = " + std::to_string(s.t) +
                    "; delta = K_rad - K_tan = " + std::to_string(s.k_rad - s.k_tan));
  }
  SecondForm sf;
  sf.kappa = s.k_tan > 0.0 ? 1 : -1;
  sf.k_tan = s.k_tan;
  sf.k_rad = s.k_rad;
  const double root = std::sqrt(std::abs(s.k_tan));
  sf.a = sf.kappa * root;
  sf.eps = (s.k_rad - s.k_tan) / s.k_tan;
  sf.delta = sf.eps * sf.a * sf.a;
  sf.dt2_coeff = -(s.k_tan - s.k_rad) / root;
  return sf;
}

SecondForm second_form_closed(const WarpingModel& model, double t) {
  return second_form_closed(curvature_state(model, t));
}

namespace {

double det3(double a, double b, double c, double d, double e, double f, double g, double h,
            double i) {
  return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g);
}

// Euclidean vector orthogonal to u, v, w in R^4
Vec4 cross4(const Vec4& u, const Vec4& v, const Vec4& w) {
  return {det3(u[1], u[2], u[3], v[1], v[2], v[3], w[1], w[2], w[3]),
          -det3(u[0], u[2], u[3], v[0], v[2], v[3], w[0], w[2], w[3]),
          det3(u[0], u[1], u[3], v[0], v[1], v[3], w[0], w[1], w[3]),
          -det3(u[0], u[1], u[2], v[0], v[1], v[2], w[0], w[1], w[2])};
}

// sin(x + d) - sin(x), cos(x + d) - cos(x) without cancellation
double dsin(double x, double d) { return 2.0 * std::cos(x + 0.5 * d) * std::sin(0.5 * d); }
double dcos(double x, double d) { return -2.0 * std::sin(x + 0.5 * d) * std::sin(0.5 * d); }

struct Derivs {
  Vec4 first[3];
  Vec4 hess[3][3];
};

// Increments G(k) = F(x + sum k_i d_i e_i) - F(x) for k_i in {-2..2}, then
// 4th-order central stencils.
Derivs differentiate(const FlatEmbedding& emb, double t, double p1, double p2, double d) {
  const WarpingModel& model = emb.model();
  const double h = model.jet(t).h;
  double df[5];
  double dh[5];
  for (int k = -2; k <= 2; ++k) {
    df[k + 2] = emb.f_increment(t, k * d);
    dh[k + 2] = k == 0 ? 0.0
                       : quadrature::integrate([&](double x) { return model.jet(x).hp; }, t,
                                               t + k * d, 1, 20);
  }
  auto G = [&](int kt, int k1, int k2) -> Vec4 {
    const double a1 = k1 * d;
    const double a2 = k2 * d;
    // w(p1 + a1, p2 + a2) - w(p1, p2), each component as a sum of small terms
    const double s1 = std::sin(p1);
    const double c1 = std::cos(p1);
    const double s2 = std::sin(p2);
    const double c2 = std::cos(p2);
    const double ds1 = dsin(p1, a1);
    const double dc1 = dcos(p1, a1);
    const double ds2 = dsin(p2, a2);
    const double dc2 = dcos(p2, a2);
    const double w0x = s1 * c2;
    const double w0y = s1 * s2;
    const double w0z = c1;
    const double dwx = ds1 * c2 + s1 * dc2 + ds1 * dc2;
    const double dwy = ds1 * s2 + s1 * ds2 + ds1 * ds2;
    const double dwz = dc1;
    const double Dh = dh[kt + 2];
    return {df[kt + 2], h * dwx + Dh * (w0x + dwx), h * dwy + Dh * (w0y + dwy),
            h * dwz + Dh * (w0z + dwz)};
  };
  auto at = [&](int axis, int k) {
    int kk[3] = {0, 0, 0};
    kk[axis] = k;
    return G(kk[0], kk[1], kk[2]);
  };
  auto at2 = [&](int i, int ki, int j, int kj) {
    int kk[3] = {0, 0, 0};
    kk[i] += ki;
    kk[j] += kj;
    return G(kk[0], kk[1], kk[2]);
  };
  const double w1[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};  // offsets -2,-1,1,2
  const int off[4] = {-2, -1, 1, 2};
  Derivs out{};
  for (int i = 0; i < 3; ++i) {
    Vec4 fd{};
    Vec4 sd{};
    for (int q = 0; q < 4; ++q) {
      const Vec4 g = at(i, off[q]);
      for (int c = 0; c < 4; ++c) fd[c] += w1[q] * g[c] / d;
    }
    const double w2[4] = {-1.0 / 12, 16.0 / 12, 16.0 / 12, -1.0 / 12};
    for (int q = 0; q < 4; ++q) {
      const Vec4 g = at(i, off[q]);
      for (int c = 0; c < 4; ++c) sd[c] += w2[q] * g[c] / (d * d);
    }
    out.first[i] = fd;
    out.hess[i][i] = sd;
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      Vec4 m{};
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          const Vec4 g = at2(i, off[a], j, off[b]);
          for (int c = 0; c < 4; ++c) m[c] += w1[a] * w1[b] * g[c] / (d * d);
        }
      }
      out.hess[i][j] = m;
      out.hess[j][i] = m;
    }
  }
  return out;
}

SecondFormSample sample_from(const FlatEmbedding& emb, const Derivs& D, double t, double p1,
                             double p2) {
  const int kappa = emb.kappa();
  const Vec4 n = cross4(D.first[0], D.first[1], D.first[2]);
  Vec4 N{kappa * n[0], n[1], n[2], n[3]};
  const double nn = kappa * N[0] * N[0] + N[1] * N[1] + N[2] * N[2] + N[3] * N[3];
  const double scale = std::sqrt(std::abs(nn));
  for (double& x : N) x /= scale;
  const double w[3] = {std::sin(p1) * std::cos(p2), std::sin(p1) * std::sin(p2), std::cos(p1)};
  const double spatial = N[1] * w[0] + N[2] * w[1] + N[3] * w[2];
  if ((spatial < 0.0) != (kappa < 0)) {
    for (double& x : N) x = -x;
  }
  auto eta = [kappa](const Vec4& a, const Vec4& b) {
    return kappa * a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
  };
  const double h = emb.model().jet(t).h;
  const double norms[3] = {1.0, h, h * std::sin(p1)};
  double II[3][3];
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) II[i][j] = -eta(D.hess[i][j], N) / (norms[i] * norms[j]);
  }
  SecondFormSample s;
  s.tt = II[0][0];
  s.e1e1 = II[1][1];
  s.e2e2 = II[2][2];
  s.off_diag = std::max({std::abs(II[0][1]), std::abs(II[0][2]), std::abs(II[1][2])});
  s.normal_sign = eta(N, N);
  return s;
}

}  // namespace

SecondFormSample second_form_numeric(const FlatEmbedding& emb, double t, double phi1,
                                     double phi2) {
  if (phi1 < 0.1 || phi1 > 3.141592653589793 - 0.1) {
    throw Error(ErrorCode::pole_proximity,
                "phi1 = " + std::to_string(phi1) + " is within 0.1 of a pole");
  }
  const Interval r = emb.t_range();
  const double room = std::min(t - r.lo, r.hi - t);
  double d = std::min(1e-3, room / 2.5);
  if (!(d >= 1e-6)) {
    throw Error(ErrorCode::step_underflow,
                "t = " + std::to_string(t) + " leaves no room for difference stencils");
  }
  const SecondFormSample coarse = sample_from(emb, differentiate(emb, t, phi1, phi2, d), t, phi1, phi2);
  const SecondFormSample fine =
      sample_from(emb, differentiate(emb, t, phi1, phi2, d / 2), t, phi1, phi2);
  const double scale = std::max({1.0, std::abs(fine.tt), std::abs(fine.e1e1), std::abs(fine.e2e2)});
  const double gap = std::max({std::abs(coarse.tt - fine.tt), std::abs(coarse.e1e1 - fine.e1e1),
                               std::abs(coarse.e2e2 - fine.e2e2)});
  SecondFormSample out = fine;
  out.step = d / 2;
  if (gap > 1e-8 * scale) {
    out.richardson = true;
    out.tt = (16 * fine.tt - coarse.tt) / 15;
    out.e1e1 = (16 * fine.e1e1 - coarse.e1e1) / 15;
    out.e2e2 = (16 * fine.e2e2 - coarse.e2e2) / 15;
  }
  return out;
}

double mean_vector_norm(const SecondForm& sf) { return std::abs(sf.a * (3.0 + sf.eps)) / 3.0; }

double mean_vector_norm(const WarpingModel& model, double t) {
  return mean_vector_norm(second_form_closed(model, t));
}

double gauss_scal(const SecondForm& sf) {
  const double a2 = sf.a * sf.a;
  return sf.kappa * (6.0 * a2 + 4.0 * sf.eps * a2) / 6.0;
}

double ii_terms(const SecondForm& sf, double nu, double psi, double x1, double x2) {
  if (!(std::abs(nu) <= 1.0)) {
    throw Error(ErrorCode::nu_out_of_range, "nu = " + std::to_string(nu) + " outside [-1, 1]");
  }
  const double sn = std::sqrt(std::max(0.0, 1.0 - nu * nu));
  // complete the unit normal (nu, sn cos psi, sn sin psi) to an orthonormal frame {E1, E2, N}
  const Vec3W E1{-sn, nu * std::cos(psi), nu * std::sin(psi)};
  const Vec3W E2{0.0, -std::sin(psi), std::cos(psi)};
  const Vec3W X = x1 * E1 + x2 * E2;
  const Vec3W JX = -x2 * E1 + x1 * E2;
  auto II = [&](Vec3W u, Vec3W v) { return sf.a * dot(u, v) + sf.dt2_coeff * u.t * v.t; };
  double sum = 0.0;
  for (const Vec3W& e : {E1, E2}) {
    const double p = II(e, X);
    const double q = II(e, JX);
    sum += p * p + q * q;
  }
  return sum;
}

double EmbeddingReport::worst() const {
  double w = 0.0;
  for (const auto& e : entries) w = std::max(w, e.max_error);
  return w;
}

EmbeddingReport verify_embedding(const WarpingModel& model, Interval native, int n_t, double tol) {
  if (n_t < 1) throw Error(ErrorCode::invalid_parameters, "empty embedding grid");
  const FlatEmbedding emb = build_embedding(model, native);
  EmbeddingReport rep;
  rep.model = model.describe();
  rep.kappa = emb.kappa();
  rep.tol = tol;
  rep.relation_residual = emb.relation_residual();
  for (const char* q : {"II(t,t)", "II(e1,e1)", "II(e2,e2)", "II off-diagonal"}) {
    rep.entries.push_back({q, -1.0, 0.0, 0.0});  // first sample always replaces it
  }
  auto rel = [](double got, double want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-3);
  };
  auto bump = [&](std::size_t i, double err, double t, double p1) {
    auto& e = rep.entries[i];
    if (err > e.max_error) e = {e.quantity, err, t, p1};
  };
  const Interval tr = emb.t_range();
  for (int i = 0; i < n_t; ++i) {
    const double t = tr.lo + tr.width() * (i + 0.5) / n_t;
    const SecondForm sf = second_form_closed(model, t);
    for (int k = 0; k < 5; ++k) {
      const double p1 = 0.3 + (std::numbers::pi - 0.6) * k / 4.0;
      const SecondFormSample num = second_form_numeric(emb, t, p1);
      bump(0, rel(num.tt, sf.tt()), t, p1);
      bump(1, rel(num.e1e1, sf.a), t, p1);
      bump(2, rel(num.e2e2, sf.a), t, p1);
      bump(3, std::abs(num.off_diag) / std::max(std::abs(sf.a), 1e-3), t, p1);
    }
  }
  rep.pass = rep.worst() <= tol && rep.relation_residual <= 1e-10;
  return rep;
}

}  // namespace warpstab
