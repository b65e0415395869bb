#pragma once

#include <functional>
#include <vector>

namespace warpstab {

/// Closed interval [lo, hi] in whatever parameter the caller works in.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  [[nodiscard]] double width() const { return hi - lo; }
  [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
};

using ScalarFn = std::function<double(double)>;

/// Bracketing bisection. Requires a sign change on [lo, hi]; iterates until the
/// bracket is narrower than `xtol` or stops shrinking in floating point.
double bisect(const ScalarFn& f, double lo, double hi, double xtol = 1e-12);

/// Every sign change of f on a uniform n-point grid, each refined by bisection.
std::vector<double> find_all_roots(const ScalarFn& f, double lo, double hi, int n,
                                   double xtol = 1e-12);

/// Golden-section search for a local maximum of f inside [lo, hi].
double golden_section_max(const ScalarFn& f, double lo, double hi, double xtol = 1e-12);

struct Extremum {
  double value = 0.0;
  double arg = 0.0;
  bool at_lower = false;
  bool at_upper = false;
};

/// Supremum of f over [lo, hi]: a dense scan followed by golden-section
/// refinement around the best sample when it is interior. With `log_spaced`
/// the samples are geometric in (x - lo + offset), which resolves the inner
/// end of long capped intervals.
Extremum scan_supremum(const ScalarFn& f, Interval iv, int n = 2001, bool log_spaced = false);

inline Extremum scan_infimum(const ScalarFn& f, Interval iv, int n = 2001, bool log_spaced = false) {
  Extremum e = scan_supremum([&](double x) { return -f(x); }, iv, n, log_spaced);
  e.value = -e.value;
  return e;
}

/// Sample points used by scan_supremum; exposed so sweeps and scans agree.
std::vector<double> scan_grid(Interval iv, int n, bool log_spaced);

}  // namespace warpstab
