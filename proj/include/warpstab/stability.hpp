#pragma once

#include <map>
#include <string>
#include <vector>

#include "warpstab/curvature.hpp"
#include "warpstab/numerics.hpp"
#include "warpstab/warping.hpp"

namespace warpstab {

// ---- slices -----------------------------------------------------------------

struct ThresholdCmp {
  double required = 0.0;  // H^2 the hypothesis asks for
  double actual = 0.0;    // H^2 of the slice
  bool satisfied = false;
};

/// The slice {t} x S^2 with unit normal -d/dt (nu = -1), H = h'/h, |A|^2 = 2H^2.
struct SliceReport {
  double t = 0.0;
  double r = 0.0;  // h(t)
  double H = 0.0;
  std::vector<double> mu;  // Jacobi eigenvalues l(l+1)/r^2 - 2K_rad - 2H^2, l = 1..l_max
  double lambda1 = 0.0;    // first nonzero Laplacian eigenvalue 2/r^2
  double rayleigh_mu1 = 0.0;  // mu_1 from the Rayleigh quotient of cos(phi1) by quadrature
  bool stable = false;
  // the three verdicts that must agree
  bool stable_by_mu = false;
  bool stable_by_ordering = false;
  bool stable_by_rayleigh = false;
  std::map<std::string, ThresholdCmp> threshold_cmp;
};

SliceReport slice_report(const WarpingModel& model, double t, int l_max = 8);

/// H^2 >= m/(2 r0^3) - c (dss) or H^2 >= (m - 2q^2/r0)/(2 r0^3) with the gate
/// 2q <= sqrt(15) m/4 (rn).
struct HypothesisVerdict {
  double required = 0.0;
  double actual = 0.0;
  double margin = 0.0;  // actual - required
  bool satisfied = false;
  bool boundary = false;  // |margin| <= 1e-12
  bool has_gate = false;
  bool gate = true;
  double gate_margin = 0.0;  // sqrt(15) m/4 - 2q
};

HypothesisVerdict thm_slice_hypothesis(const WarpingModel& model, double r0, double H);

/// Required H^2 at radius r for the dss/rn slice theorems.
double slice_required_h2(const WarpingModel& model, double r);
/// H(r)^2 of the slice at radius r, exactly from the defining function.
double slice_h2(const WarpingModel& model, double r);

struct ThresholdRadius {
  double r = 0.0;       // by bisection on H(r)^2 - required(r)
  double closed = 0.0;  // 3m/2, or (3m + sqrt(9m^2 - 32q^2))/4
};

ThresholdRadius slice_threshold_radius(const WarpingModel& model);

struct Monotonicity {
  double value = 0.0;  // h''h - h'^2
  bool nonincreasing = false;
};

Monotonicity slice_monotonicity(const WarpingModel& model, double t);

// ---- suprema ----------------------------------------------------------------

struct Supremum {
  double value = 0.0;
  double arg = 0.0;       // native parameter
  bool attained = true;   // false: approached at the cap, reported as a limit
};

enum class MainCase { i, ii };

/// sup of -K_rad (case i, needs K_tan >= K_rad) or -K_tan (case ii, needs
/// K_rad >= K_tan) over a native interval.
Supremum stab_main_threshold(const WarpingModel& model, Interval native, MainCase which);

// ---- epsilon window ---------------------------------------------------------

constexpr double kWindowUpper = 3.2360679774997896964;  // 1 + sqrt 5
constexpr double kRatioUpper = 4.2360679774997896964;   // 2 + sqrt 5

/// 4(1 + eps) - 2 eps y - eps^2 y^2
double p_poly(double eps, double y);
/// 4(H_a^2 + 1 + eps) - 2 eps y - eps^2 y^2
double p_a_poly(double eps, double H_a, double y);

struct WindowCheck {
  bool by_roots = false;
  bool by_scan = false;
  double scan_min = 0.0;  // min of p(eps, .) on the grid
};

WindowCheck eps_window_check_detail(double eps, int grid = 10001);
bool eps_window_check(double eps);
bool in_eps_window(double eps);

struct H2Threshold {
  double value = 0.0;
  int case_id = 0;  // 1: eps > 1+sqrt5, 2: -2 <= eps < -1, 3: eps < -2
};

H2Threshold h2_threshold(double eps, double a);

/// Minimal H^2 with p_a > 0 on a y-grid, found by bisection in H^2.
double h2_threshold_scan(double eps, double a, int ny = 10001);

struct StabilityWindow {
  bool window = false;
  int case_id = 0;
  double h2_min = 0.0;
  double a = 0.0;
  double eps = 0.0;
  double delta = 0.0;
};

/// The same classification phrased in delta = eps a^2.
StabilityWindow delta_thresholds(double delta, double a);
StabilityWindow stability_window(double eps, double a);

// ---- c0 and classification --------------------------------------------------

struct C0Segment {
  char case_id = '?';  // 'a', 'b', 'c', or 'w' for window points
  Interval native;
  double value = 0.0;  // sup of the case expression, 0 on window segments
  double arg = 0.0;
  bool attained = true;
};

struct C0Result {
  std::string case_id;  // "a", "b", "c", or "mixed(a,b,...)"
  double value = 0.0;
  double arg = 0.0;
  bool attained = true;
  std::vector<C0Segment> segments;
};

/// The case expression at one state, equal to h2_threshold(eps, a) there.
double c0_pointwise(const CurvatureState& s, char* case_id = nullptr);

C0Result c0(const WarpingModel& model, Interval native);

struct Classification {
  std::string theorem;  // "theo-warped-1", "theo-warped-2", "inapplicable"
  std::string case_id;
  double c0 = 0.0;
  bool c0_attained = true;
  double ratio_min = 0.0;  // K_rad/K_tan over the interval
  double ratio_max = 0.0;
  bool ordering_tan_ge_rad = false;  // K_tan >= K_rad everywhere: slice theorems apply
  bool brendle_holds = false;
  double brendle_worst = 0.0;  // min of rhs - lhs over the grid
  std::string reason;
};

Classification classify(const WarpingModel& model, Interval native);

// ---- Q-sums and general thresholds ------------------------------------------

struct QSumInput {
  double H = 0.0;
  double a = 0.0;
  double eps = 0.0;
  double nu = 0.0;
  double X_norm2 = 0.0;
};

struct QSum {
  double factored = 0.0;
  double expanded = 0.0;
  double scale = 0.0;  // sum of the magnitudes of the terms in the expanded form
};

QSum qsum_detail(const QSumInput& in);
double qsum(const QSumInput& in);

/// (4H^2 + 6 scal)|X|^2 - II_terms
double qsum_general(double H, double scal, double ii_terms, double X_norm2);

struct GeneralThreshold {
  double value = 0.0;  // -3 inf(scal - 3/4 |mean vector|^2), clamped at 0
  double raw = 0.0;
  bool vacuous = false;
  double arg = 0.0;
  double frensel = 0.0;  // -1/2 inf ric, clamped at 0
  double frensel_raw = 0.0;
  bool frensel_vacuous = false;
  double frensel_arg = 0.0;
};

GeneralThreshold general_threshold(const WarpingModel& model, Interval native);

// ---- slice integrals --------------------------------------------------------

struct SliceIntegrals {
  double souam = 0.0;  // int (H^2 + K_s) >= 4 pi
  double genus = 0.0;  // int (2H^2 + Ric(N,N)) <= 8 pi (1 - k), k = 0
  double gauss_bonnet = 0.0;
  bool souam_holds = false;
  bool genus_holds = false;
  int order = 0;
};

SliceIntegrals slice_integral_checks(const WarpingModel& model, double t, int order = 16);

struct IntegralReport {
  std::string model;
  int order = 0;
  int slices = 0;
  double souam_err = 0.0;  // max |int (H^2 + K_s) - 4 pi|
  double gauss_bonnet_err = 0.0;
  double genus_max = 0.0;  // max int (2H^2 + Ric(N,N)), bounded by 8 pi
  double worst_native = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// The slice integrals at n native cell centres of the interval.
IntegralReport verify_integrals(const WarpingModel& model, Interval native, int n = 20, int order = 16,
                                double tol = 1e-8);

}  // namespace warpstab
