#include "warpstab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "warpstab/error.hpp"

namespace warpstab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::invalid_parameters: return "invalid-parameters";
    case ErrorCode::out_of_domain: return "out-of-domain";
    case ErrorCode::step_too_large: return "step-too-large";
    case ErrorCode::domain_exit: return "domain-exit";
    case ErrorCode::nonpositive_profile: return "nonpositive-profile";
    case ErrorCode::nu_out_of_range: return "nu-out-of-range";
    case ErrorCode::empty_interval: return "empty-interval";
    case ErrorCode::y_out_of_range: return "y-out-of-range";
    case ErrorCode::eps_in_window: return "eps-in-window";
    case ErrorCode::zero_a: return "zero-a";
    case ErrorCode::hypothesis_violated: return "hypothesis-violated";
    case ErrorCode::case_precondition_violated: return "case-precondition-violated";
    case ErrorCode::no_crossing: return "no-crossing-in-domain";
    case ErrorCode::model_kind_mismatch: return "model-not-dss-or-rn";
    case ErrorCode::embedding_unavailable: return "embedding-unavailable";
    case ErrorCode::sign_change: return "sign-change-of-K_tan";
    case ErrorCode::vanishing_ktan: return "vanishing-K_tan";
    case ErrorCode::pole_proximity: return "pole-proximity";
    case ErrorCode::step_underflow: return "step-underflow";
    case ErrorCode::singular_metric: return "singular-metric";
    case ErrorCode::order_too_small: return "order-too-small";
    case ErrorCode::non_converged: return "non-converged";
    case ErrorCode::non_integrable: return "non-integrable-singularity";
    case ErrorCode::negative_norm: return "negative-norm";
    case ErrorCode::config_parse: return "config-parse";
  }
  return "unknown";
}

double bisect(const ScalarFn& f, double lo, double hi, double xtol) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw Error(ErrorCode::no_crossing,
                "no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  for (int it = 0; it < 400; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if (std::signbit(fmid) == std::signbit(flo)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
    // Keep halving past xtol for a few rounds: the caller's tolerance is a
    // floor, not a target.
    if (hi - lo < 1e-3 * xtol) break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> find_all_roots(const ScalarFn& f, double lo, double hi, int n, double xtol) {
  std::vector<double> roots;
  double x0 = lo;
  double f0 = f(x0);
  for (int i = 1; i < n; ++i) {
    const double x1 = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    const double f1 = f(x1);
    if (f0 == 0.0) {
      roots.push_back(x0);
    } else if (f1 != 0.0 && std::signbit(f0) != std::signbit(f1)) {
      roots.push_back(bisect(f, x0, x1, xtol));
    }
    x0 = x1;
    f0 = f1;
  }
  if (f0 == 0.0) roots.push_back(x0);
  return roots;
}

double golden_section_max(const ScalarFn& f, double lo, double hi, double xtol) {
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < 200 && (b - a) > xtol; ++it) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

std::vector<double> scan_grid(Interval iv, int n, bool log_spaced) {
  if (n < 2) n = 2;
  std::vector<double> xs(static_cast<std::size_t>(n));
  if (!log_spaced || iv.width() <= 0.0) {
    for (int i = 0; i < n; ++i) xs[i] = iv.lo + iv.width() * static_cast<double>(i) / (n - 1);
  } else {
    // geometric in the distance from lo, first step ~ width * 1e-6
    const double offset = std::max(iv.width() * 1e-6, 1e-12);
    const double ratio = std::log((iv.width() + offset) / offset);
    for (int i = 0; i < n; ++i) {
      xs[i] = iv.lo + offset * std::expm1(ratio * static_cast<double>(i) / (n - 1));
    }
    xs.front() = iv.lo;
    xs.back() = iv.hi;
  }
  return xs;
}

Extremum scan_supremum(const ScalarFn& f, Interval iv, int n, bool log_spaced) {
  if (!(iv.hi >= iv.lo)) throw Error(ErrorCode::empty_interval, "interval hi < lo");
  const auto xs = scan_grid(iv, n, log_spaced);
  std::size_t best = 0;
  std::vector<double> fs(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    fs[i] = f(xs[i]);
    if (fs[i] > fs[best]) best = i;
  }
  Extremum e{fs[best], xs[best], best == 0, best + 1 == xs.size()};
  if (!e.at_lower && !e.at_upper) {
    const double x = golden_section_max(f, xs[best - 1], xs[best + 1],
                                        1e-12 * std::max(1.0, std::abs(xs[best])));
    const double fx = f(x);
    if (fx > e.value) {
      e.value = fx;
      e.arg = x;
    }
  }
  return e;
}

}  // namespace warpstab
