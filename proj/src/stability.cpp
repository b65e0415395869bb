#include "warpstab/stability.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "warpstab/embedding.hpp"
#include "warpstab/error.hpp"
#include "warpstab/quadrature.hpp"

namespace warpstab {

namespace {

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

bool reaches_cap(const WarpingModel& model, Interval native) {
  // profiles cap both ends symmetrically and keep their structure in the
  // middle, so they stay on uniform grids
  if (!model.capped() || model.kind() == ModelKind::profile) return false;
  const double hi = model.native_domain().hi;
  return native.hi >= hi - 1e-12 * std::max(1.0, std::abs(hi));
}

void require_slice_model(const WarpingModel& model) {
  if (model.kind() == ModelKind::profile) {
    throw Error(ErrorCode::model_kind_mismatch,
                std::string("slice theorems need a dss, rn or space-form model, got ") + model.describe());
  }
}

void require_space_form_radius(const WarpingModel& model, double r) {
  const double c = model.c();
  if (!(r > 0.0) || (c > 0.0 && r > 1.0 / std::sqrt(c))) {
    throw Error(ErrorCode::out_of_domain, "slice radius " + std::to_string(r) + " not attained in " +
                                              model.describe());
  }
}

}  // namespace

// ---- slices -----------------------------------------------------------------

double slice_required_h2(const WarpingModel& model, double r) {
  require_slice_model(model);
  const double r3 = r * r * r;
  // a space form is the m = 0 member of the dss family
  if (model.kind() == ModelKind::space_form) return -model.c();
  if (model.kind() == ModelKind::dss) return model.m() / (2.0 * r3) - model.c();
  const double q = model.q();
  return (model.m() - 2.0 * q * q / r) / (2.0 * r3);
}

double slice_h2(const WarpingModel& model, double r) {
  if (model.kind() == ModelKind::space_form) {
    // h'^2 = 1 - c h^2
    require_space_form_radius(model, r);
    return (1.0 - model.c() * r * r) / (r * r);
  }
  const Jet j = model.jet_native(r);
  return j.hp * j.hp / (j.h * j.h);
}

SliceReport slice_report(const WarpingModel& model, double t, int l_max) {
  if (l_max < 1) throw Error(ErrorCode::invalid_parameters, "l_max must be at least 1");
  const CurvatureState s = curvature_state(model, t);
  SliceReport rep;
  rep.t = t;
  rep.r = s.h;
  rep.H = s.hp / s.h;
  const double h2 = s.h * s.h;
  const double H2 = rep.H * rep.H;
  const double potential = 2.0 * s.k_rad + 2.0 * H2;  // Ric(N,N) + |A|^2 at nu = -1
  for (int l = 1; l <= l_max; ++l) rep.mu.push_back(l * (l + 1) / h2 - potential);
  rep.lambda1 = 2.0 / h2;

  // Rayleigh quotient of cos(phi1): |grad f|^2 = sin^2(phi1)/h^2 on the slice
  const auto num_int = quadrature::integrate_slice(
      [&](double p1, double) {
        const double sn = std::sin(p1);
        const double cs = std::cos(p1);
        return sn * sn / h2 - potential * cs * cs;
      },
      model, t);
  const auto den_int = quadrature::integrate_slice(
      [](double p1, double) { return std::cos(p1) * std::cos(p1); }, model, t);
  rep.rayleigh_mu1 = num_int.value / den_int.value;

  const double tol = 1e-12 * (2.0 / h2 + 2.0 * std::abs(s.k_rad) + 2.0 * H2 + 2.0 * s.hp * s.hp / h2);
  rep.stable_by_mu = rep.mu[0] >= -tol;
  rep.stable_by_ordering = 2.0 * (s.k_tan - s.k_rad) >= -tol;
  rep.stable_by_rayleigh = rep.rayleigh_mu1 >= -tol;
  rep.stable = rep.stable_by_mu;

  if (model.kind() == ModelKind::dss || model.kind() == ModelKind::rn) {
    const double req = slice_required_h2(model, s.h);
    rep.threshold_cmp[model.kind() == ModelKind::dss ? "stab-ss" : "stab-rn"] = {req, H2, H2 >= req};
  }
  if (s.k_tan >= s.k_rad) {
    rep.threshold_cmp["stab-main-i"] = {-s.k_rad, H2, H2 >= -s.k_rad};
  } else {
    rep.threshold_cmp["stab-main-ii"] = {-s.k_tan, H2, H2 >= -s.k_tan};
  }
  return rep;
}

HypothesisVerdict thm_slice_hypothesis(const WarpingModel& model, double r0, double H) {
  require_slice_model(model);
  if (model.kind() == ModelKind::space_form) require_space_form_radius(model, r0);
  else (void)model.jet_native(r0);  // domain check
  HypothesisVerdict v;
  v.required = slice_required_h2(model, r0);
  v.actual = H * H;
  v.margin = v.actual - v.required;
  v.boundary = std::abs(v.margin) <= 1e-12;
  v.satisfied = v.margin >= 0.0;
  if (model.kind() == ModelKind::rn) {
    v.has_gate = true;
    v.gate_margin = std::sqrt(15.0) * model.m() / 4.0 - 2.0 * model.q();
    v.gate = v.gate_margin >= 0.0;
  }
  return v;
}

ThresholdRadius slice_threshold_radius(const WarpingModel& model) {
  require_slice_model(model);
  if (model.kind() == ModelKind::space_form) {
    // margin is 1/r^2 > 0
    throw Error(ErrorCode::no_crossing, "every slice of " + model.describe() + " qualifies");
  }
  const Interval dom = model.native_domain();
  auto g = [&](double r) { return slice_h2(model, r) - slice_required_h2(model, r); };
  const auto roots = find_all_roots(g, dom.lo, dom.hi, 4001, 1e-14);
  ThresholdRadius out;
  bool found = false;
  for (double r : roots) {
    // the crossing where slices start to qualify
    const double d = 1e-6 * std::max(1.0, r);
    if (r + d <= dom.hi && g(r + d) > 0.0) {
      out.r = r;
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::no_crossing,
                "H(r)^2 never crosses the required value on [" + num(dom.lo) + ", " + num(dom.hi) + "]");
  }
  const double m = model.m();
  if (model.kind() == ModelKind::dss) {
    out.closed = 1.5 * m;
  } else {
    const double q = model.q();
    out.closed = (3.0 * m + std::sqrt(9.0 * m * m - 32.0 * q * q)) / 4.0;
  }
  return out;
}

Monotonicity slice_monotonicity(const WarpingModel& model, double t) {
  const Jet j = model.jet(t);
  Monotonicity m;
  m.value = j.hpp * j.h - j.hp * j.hp;
  m.nonincreasing = m.value <= 0.0;
  return m;
}

// ---- suprema ----------------------------------------------------------------

Supremum stab_main_threshold(const WarpingModel& model, Interval native, MainCase which) {
  if (!(native.hi >= native.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  const bool log_spaced = reaches_cap(model, native);
  for (double x : scan_grid(native, 2001, log_spaced)) {
    const CurvatureState s = curvature_state_native(model, x);
    const double diff = which == MainCase::i ? s.k_tan - s.k_rad : s.k_rad - s.k_tan;
    const double scale = std::abs(s.k_tan) + std::abs(s.k_rad) + 1.0 / (s.h * s.h);
    if (diff < -1e-12 * scale) {
      throw Error(ErrorCode::case_precondition_violated,
                  std::string(which == MainCase::i ? "K_tan < K_rad" : "K_rad < K_tan") + " at " +
                      model.native_name() + " = " + num(x));
    }
  }
  auto f = [&](double x) {
    const CurvatureState s = curvature_state_native(model, x);
    return which == MainCase::i ? -s.k_rad : -s.k_tan;
  };
  const Extremum e = scan_supremum(f, native, 2001, log_spaced);
  Supremum sup;
  sup.value = e.value;
  sup.arg = e.arg;
  sup.attained = !(e.at_upper && log_spaced);
  return sup;
}

// ---- epsilon window ---------------------------------------------------------

namespace {

void check_y(double y) {
  if (!(y >= 0.0 && y <= 1.0)) {
    throw Error(ErrorCode::y_out_of_range, "y = " + num(y) + " outside [0, 1]");
  }
}

}  // namespace

double p_poly(double eps, double y) {
  check_y(y);
  return 4.0 * (1.0 + eps) - 2.0 * eps * y - eps * eps * y * y;
}

double p_a_poly(double eps, double H_a, double y) {
  check_y(y);
  return 4.0 * (H_a * H_a + 1.0 + eps) - 2.0 * eps * y - eps * eps * y * y;
}

bool in_eps_window(double eps) { return eps >= -1.0 && eps <= kWindowUpper; }

WindowCheck eps_window_check_detail(double eps, int grid) {
  WindowCheck w;
  // p is concave in y with roots (-1 -+ sqrt(5 + 4 eps))/eps; p >= 0 on [0, 1]
  // iff [0, 1] lies between them
  constexpr double slack = 1e-12;
  if (eps == 0.0) {
    w.by_roots = true;
  } else {
    const double disc = 5.0 + 4.0 * eps;
    if (disc < 0.0) {
      w.by_roots = false;
    } else {
      const double sq = std::sqrt(disc);
      const double y1 = (-1.0 - sq) / eps;
      const double y2 = (-1.0 + sq) / eps;
      const double lo = std::min(y1, y2);
      const double hi = std::max(y1, y2);
      w.by_roots = lo <= slack && hi >= 1.0 - slack;
    }
  }
  double mn = INFINITY;
  for (int i = 0; i < grid; ++i) {
    const double y = static_cast<double>(i) / (grid - 1);
    mn = std::min(mn, p_poly(eps, y));
  }
  w.scan_min = mn;
  w.by_scan = mn >= -slack * std::max(1.0, eps * eps);
  return w;
}

bool eps_window_check(double eps) { return eps_window_check_detail(eps).by_roots; }

H2Threshold h2_threshold(double eps, double a) {
  if (a == 0.0) throw Error(ErrorCode::zero_a, "a = 0: the second fundamental form is degenerate");
  if (in_eps_window(eps)) {
    throw Error(ErrorCode::eps_in_window, "eps = " + num(eps) + " lies in [-1, 1+sqrt5]; no threshold");
  }
  const double a2 = a * a;
  H2Threshold out;
  if (eps > kWindowUpper) {
    out.case_id = 1;
    out.value = a2 * (eps * eps - 2.0 * eps - 4.0) / 4.0;
  } else if (eps >= -2.0) {
    out.case_id = 2;
    out.value = a2 * (std::abs(eps) - 1.0);
  } else {
    out.case_id = 3;
    out.value = a2 * (0.25 * eps * eps + 0.5 * std::abs(eps) - 1.0);
  }
  return out;
}

double h2_threshold_scan(double eps, double a, int ny) {
  if (a == 0.0) throw Error(ErrorCode::zero_a, "a = 0");
  const double a2 = a * a;
  auto positive = [&](double H2) {
    const double Ha = std::sqrt(H2 / a2);
    for (int i = 0; i < ny; ++i) {
      if (p_a_poly(eps, Ha, static_cast<double>(i) / (ny - 1)) <= 0.0) return false;
    }
    return true;
  };
  double lo = 0.0;
  if (positive(lo)) return 0.0;
  double hi = a2;
  while (!positive(hi)) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (positive(mid) ? hi : lo) = mid;
  }
  return hi;
}

StabilityWindow stability_window(double eps, double a) {
  if (a == 0.0) throw Error(ErrorCode::zero_a, "a = 0");
  StabilityWindow w;
  w.a = a;
  w.eps = eps;
  w.delta = eps * a * a;
  w.window = in_eps_window(eps);
  if (!w.window) {
    const H2Threshold t = h2_threshold(eps, a);
    w.case_id = t.case_id;
    w.h2_min = t.value;
  }
  return w;
}

StabilityWindow delta_thresholds(double delta, double a) {
  if (a == 0.0) throw Error(ErrorCode::zero_a, "a = 0");
  const double a2 = a * a;
  StabilityWindow w;
  w.a = a;
  w.delta = delta;
  w.eps = delta / a2;
  if (delta >= -a2 && delta <= a2 * kWindowUpper) {
    w.window = true;
    return w;
  }
  if (delta > a2 * kWindowUpper) {
    w.case_id = 1;
    w.h2_min = 0.25 * delta * delta / a2 - 0.5 * delta - a2;
  } else if (delta >= -2.0 * a2) {
    w.case_id = 2;
    w.h2_min = -delta - a2;
  } else {
    w.case_id = 3;
    w.h2_min = 0.25 * delta * delta / a2 - 0.5 * delta - a2;
  }
  return w;
}

// ---- c0 and classification --------------------------------------------------

namespace {

constexpr double kCaseSlack = 1e-12;

char case_of_ratio(double rho) {
  if (rho > kRatioUpper + kCaseSlack) return 'a';
  if (rho >= -kCaseSlack) return 'w';
  if (rho >= -1.0 - kCaseSlack) return 'b';
  return 'c';
}

}  // namespace

double c0_pointwise(const CurvatureState& s, char* case_id) {
  if (!(s.k_tan > 0.0)) {
    throw Error(ErrorCode::hypothesis_violated,
                "K_tan = " + num(s.k_tan) + " <= 0 at t = " + num(s.t));
  }
  const double rho = s.k_rad / s.k_tan;
  const char c = case_of_ratio(rho);
  if (case_id) *case_id = c;
  switch (c) {
    case 'a':
      return s.k_tan * (rho * rho - 4.0 * rho - 1.0) / 4.0;
    case 'b':
      return -s.k_rad;
    case 'c': {
      const double x = -rho;
      return s.k_tan * (x * x + 4.0 * x - 1.0) / 4.0;
    }
    default:
      return 0.0;
  }
}

C0Result c0(const WarpingModel& model, Interval native) {
  if (!(native.hi >= native.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  const bool log_spaced = reaches_cap(model, native);
  const std::vector<double> grid = scan_grid(native, 2001, log_spaced);
  auto case_at = [&](double x) {
    char c = '?';
    (void)c0_pointwise(curvature_state_native(model, x), &c);
    return c;
  };
  auto rho_at = [&](double x) {
    const CurvatureState s = curvature_state_native(model, x);
    return s.k_rad / s.k_tan;
  };

  // runs of constant case, boundaries refined by bisection on the ratio
  C0Result out;
  std::vector<char> cases;
  for (double x : grid) cases.push_back(case_at(x));
  double seg_lo = grid.front();
  for (std::size_t i = 1; i <= grid.size(); ++i) {
    if (i < grid.size() && cases[i] == cases[i - 1]) continue;
    double seg_hi = grid.back();
    double next_lo = seg_hi;
    if (i < grid.size()) {
      const char a = cases[i - 1];
      const char b = cases[i];
      double level = 0.0;
      if ((a == 'a') != (b == 'a') && (a == 'a' || b == 'a')) level = kRatioUpper;
      else if ((a == 'w') != (b == 'w')) level = 0.0;
      else level = -1.0;
      seg_hi = bisect([&](double x) { return rho_at(x) - level; }, grid[i - 1], grid[i], 1e-13);
      next_lo = seg_hi;
    }
    C0Segment seg;
    seg.case_id = cases[i - 1];
    seg.native = {seg_lo, seg_hi};
    if (seg.case_id != 'w') {
      const Extremum e = scan_supremum(
          [&](double x) { return c0_pointwise(curvature_state_native(model, x)); }, seg.native, 401,
          log_spaced && seg_hi >= grid.back());
      seg.value = e.value;
      seg.arg = e.arg;
      seg.attained = !(e.at_upper && log_spaced && seg_hi >= grid.back());
    }
    out.segments.push_back(seg);
    seg_lo = next_lo;
  }

  std::string ids;
  bool any = false;
  for (char c : std::string("abc")) {
    for (const auto& s : out.segments) {
      if (s.case_id == c) {
        if (!ids.empty()) ids += ",";
        ids += c;
        break;
      }
    }
  }
  for (const auto& s : out.segments) {
    if (s.case_id == 'w') continue;
    if (!any || s.value > out.value) {
      out.value = s.value;
      out.arg = s.arg;
      out.attained = s.attained;
      any = true;
    }
  }
  if (!any) {
    throw Error(ErrorCode::hypothesis_violated,
                "0 <= K_rad/K_tan <= 2+sqrt5 on the whole interval: the window theorem applies, "
                "no c0 case does");
  }
  out.case_id = ids.find(',') == std::string::npos ? ids : "mixed(" + ids + ")";
  return out;
}

Classification classify(const WarpingModel& model, Interval native) {
  if (!(native.hi >= native.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  const bool log_spaced = reaches_cap(model, native);
  const std::vector<double> grid = scan_grid(native, 2001, log_spaced);
  Classification cl;
  cl.ratio_min = INFINITY;
  cl.ratio_max = -INFINITY;
  cl.ordering_tan_ge_rad = true;
  cl.brendle_holds = true;
  cl.brendle_worst = INFINITY;
  bool ktan_positive = true;
  double bad_x = 0.0;
  bool all_window = true;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const CurvatureState s = curvature_state_native(model, x);
    if (!(s.k_tan > 0.0)) {
      if (ktan_positive) bad_x = x;
      ktan_positive = false;
    } else {
      const double rho = s.k_rad / s.k_tan;
      cl.ratio_min = std::min(cl.ratio_min, rho);
      cl.ratio_max = std::max(cl.ratio_max, rho);
      if (case_of_ratio(rho) != 'w') all_window = false;
    }
    if (s.k_tan < s.k_rad) cl.ordering_tan_ge_rad = false;
    // differences need room inside the interval; skip its ends
    if (model.kind() == ModelKind::profile && (i == 0 || i + 1 == grid.size())) continue;
    const BrendleResult b = brendle_condition_native(model, x);
    cl.brendle_holds = cl.brendle_holds && b.holds;
    cl.brendle_worst = std::min(cl.brendle_worst, b.rhs - b.lhs);
  }
  if (!ktan_positive) {
    cl.theorem = "inapplicable";
    cl.reason = std::string("K_tan <= 0 at ") + model.native_name() + " = " + num(bad_x);
    return cl;
  }
  if (all_window) {
    cl.theorem = "theo-warped-1";
    cl.case_id = "window";
    cl.reason = "0 <= K_rad/K_tan <= 2+sqrt5 on the interval";
    return cl;
  }
  const C0Result c = c0(model, native);
  cl.theorem = "theo-warped-2";
  cl.case_id = c.case_id;
  cl.c0 = c.value;
  cl.c0_attained = c.attained;
  cl.reason = "K_rad/K_tan leaves [0, 2+sqrt5]";
  return cl;
}

// ---- Q-sums and general thresholds ------------------------------------------

QSum qsum_detail(const QSumInput& in) {
  if (!(std::abs(in.nu) <= 1.0)) {
    throw Error(ErrorCode::nu_out_of_range, "nu = " + num(in.nu) + " outside [-1, 1]");
  }
  if (!(in.X_norm2 >= 0.0)) throw Error(ErrorCode::negative_norm, "|X|^2 = " + num(in.X_norm2));
  const double y = 1.0 - in.nu * in.nu;
  const double a2 = in.a * in.a;
  const double e = in.eps;
  const double H2 = in.H * in.H;
  QSum q;
  q.factored = (4.0 * H2 + a2 * (4.0 + 4.0 * e - 2.0 * e * y - e * e * y * y)) * in.X_norm2;
  q.expanded = (4.0 * H2 + 6.0 * a2 + 4.0 * e * a2) * in.X_norm2 -
               a2 * (2.0 + 2.0 * e * y + e * e * y * y) * in.X_norm2;
  q.scale = (4.0 * H2 + a2 * (6.0 + 4.0 * std::abs(e)) +
             a2 * (2.0 + 2.0 * std::abs(e) * y + e * e * y * y)) *
            in.X_norm2;
  return q;
}

double qsum(const QSumInput& in) { return qsum_detail(in).factored; }

double qsum_general(double H, double scal, double ii_terms, double X_norm2) {
  if (!(X_norm2 >= 0.0)) throw Error(ErrorCode::negative_norm, "|X|^2 = " + num(X_norm2));
  if (!(ii_terms >= 0.0)) throw Error(ErrorCode::negative_norm, "II terms = " + num(ii_terms));
  return (4.0 * H * H + 6.0 * scal) * X_norm2 - ii_terms;
}

GeneralThreshold general_threshold(const WarpingModel& model, Interval native) {
  if (!(native.hi >= native.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  const bool log_spaced = reaches_cap(model, native);
  int pos = 0;
  int neg = 0;
  for (double x : scan_grid(native, 2001, log_spaced)) {
    const double k = curvature_state_native(model, x).k_tan;
    if (k > 0.0) ++pos;
    if (k < 0.0) ++neg;
  }
  if (neg > 0) {
    throw Error(ErrorCode::embedding_unavailable,
                pos > 0 ? "K_tan changes sign on the interval; no codimension-1 flat embedding"
                        : "K_tan < 0: the flat embedding is Lorentzian and the threshold assumes "
                          "a Euclidean one");
  }
  auto f = [&](double x) {
    const CurvatureState s = curvature_state_native(model, x);
    double mean = 0.0;
    try {
      mean = mean_vector_norm(second_form_closed(s));
    } catch (const Error& e) {
      // flat points: II = 0
      if (e.code() != ErrorCode::vanishing_ktan || std::abs(s.k_rad) > 1e-13 / (s.h * s.h)) throw;
    }
    return scalar_curvature(s) - 0.75 * mean * mean;
  };
  const Extremum e = scan_infimum(f, native, 2001, log_spaced);
  GeneralThreshold g;
  g.raw = -3.0 * e.value;
  g.value = std::max(0.0, g.raw);
  g.vacuous = g.raw < 0.0;
  g.arg = e.arg;
  const Extremum r = ricci_infimum(model, native);
  g.frensel_raw = -0.5 * r.value;
  g.frensel = std::max(0.0, g.frensel_raw);
  g.frensel_vacuous = g.frensel_raw < 0.0;
  g.frensel_arg = r.arg;
  return g;
}

// ---- slice integrals --------------------------------------------------------

SliceIntegrals slice_integral_checks(const WarpingModel& model, double t, int order) {
  const CurvatureState s = curvature_state(model, t);
  const double H = s.hp / s.h;
  const double ric = ricci_normal(s, -1.0);
  SliceIntegrals out;
  out.order = order;
  out.souam = quadrature::integrate_slice([&](double, double) { return H * H + s.k_tan; }, model, t, order).value;
  out.genus =
      quadrature::integrate_slice([&](double, double) { return 2.0 * H * H + ric; }, model, t, order).value;
  out.gauss_bonnet =
      quadrature::integrate_slice([&](double, double) { return 1.0 / (s.h * s.h); }, model, t, order).value;
  const double four_pi = 4.0 * std::numbers::pi;
  out.souam_holds = out.souam >= four_pi * (1.0 - 1e-10);
  out.genus_holds = out.genus <= 2.0 * four_pi * (1.0 + 1e-10);
  return out;
}

IntegralReport verify_integrals(const WarpingModel& model, Interval native, int n, int order, double tol) {
  if (n < 1) throw Error(ErrorCode::invalid_parameters, "no slices to integrate over");
  IntegralReport rep;
  rep.model = model.describe();
  rep.order = order;
  rep.slices = n;
  rep.tol = tol;
  const double four_pi = 4.0 * std::numbers::pi;
  bool genus_ok = true;
  double worst = -1.0;
  for (int i = 0; i < n; ++i) {
    const double x = native.lo + native.width() * (i + 0.5) / n;
    const SliceIntegrals si = slice_integral_checks(model, model.t_of_native(x), order);
    rep.souam_err = std::max(rep.souam_err, std::abs(si.souam - four_pi));
    rep.gauss_bonnet_err = std::max(rep.gauss_bonnet_err, std::abs(si.gauss_bonnet - four_pi));
    rep.genus_max = i == 0 ? si.genus : std::max(rep.genus_max, si.genus);
    genus_ok = genus_ok && si.genus_holds;
    const double w = std::max(std::abs(si.souam - four_pi), std::abs(si.gauss_bonnet - four_pi));
    if (w > worst) {
      worst = w;
      rep.worst_native = x;
    }
  }
  rep.pass = rep.souam_err <= tol && rep.gauss_bonnet_err <= tol && genus_ok;
  return rep;
}

}  // namespace warpstab
