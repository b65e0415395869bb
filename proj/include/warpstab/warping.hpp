#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "warpstab/numerics.hpp"

namespace warpstab {

/// Upper cap for parameters whose domain is unbounded. Taken from the
/// WARPSTAB_CAP environment variable, 50 when unset.
double default_cap();

enum class ModelKind { space_form, dss, rn, profile };

const char* to_string(ModelKind kind);

/// h and its t-derivatives at one point. hppp is only meaningful when
/// has_hppp is set (closed-form and ODE models).
struct Jet {
  double t = 0.0;
  double h = 0.0;
  double hp = 0.0;
  double hpp = 0.0;
  double hppp = 0.0;
  bool has_hppp = false;
};

/// Roots of 1 - m/r - c r^2 = 0 bounding the dSS domain. s2 is the negative
/// third root of c r^3 - r + m (meaningful only for c > 0).
struct DssDomain {
  double s0 = 0.0;
  double s1 = 0.0;
  bool s1_infinite = true;
  double s2 = 0.0;
};

DssDomain dss_domain(double m, double c);

/// Larger root of 1 - m/r + q^2/r^2.
double rn_s0(double m, double q);

/// h = sin(sqrt(c) t)/sqrt(c), t, sinh(sqrt(-c) t)/sqrt(-c).
Jet space_form_h(double c, double t);

struct TrajectorySample {
  double t = 0.0;
  double h = 0.0;
  double hp = 0.0;
  double hpp = 0.0;
  double residual = 0.0;  // first-integral drift |h'^2 - V(h)|
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  double step = 0.0;
  double residual_max = 0.0;
};

/// Samples of a meridian u(s) > 0 of a hypersurface of revolution.
struct ProfileCurve {
  enum class Shape { ellipsoid, hyperboloid, samples, callable };
  struct Derivs {
    double u = 0.0;
    double up = 0.0;
    double upp = 0.0;
  };

  Shape shape = Shape::ellipsoid;
  double b = 1.0;
  std::vector<double> s;  // Shape::samples only, strictly increasing
  std::vector<double> u;
  std::function<Derivs(double)> fn;  // Shape::callable only

  static ProfileCurve ellipsoid(double b);
  static ProfileCurve hyperboloid(double b);
  static ProfileCurve sampled(std::vector<double> s, std::vector<double> u);
  static ProfileCurve callable(std::function<Derivs(double)> fn);

  /// u, u', u'' at s. Samples use a local 5-point interpolating polynomial.
  [[nodiscard]] Derivs eval(double s) const;

  /// Default s-interval: ellipsoids stop 1e-4*b short of the poles,
  /// hyperboloids run to +-cap, sampled curves use their own range.
  [[nodiscard]] Interval default_interval(double cap) const;
};

namespace detail {
struct ModelImpl;
}

class WarpingModel;

/// Integrates h'' = m/(2h^2) - c h (dSS) or h'' = m/(2h^2) - q^2/h^3 (RN) from
/// h(0) = s0, h'(0) = 0 with classical RK4, started from the even Taylor
/// expansion of h at t = 0. Throws domain-exit if h reaches s1 before t_max and
/// step-too-large if the first-integral residual exceeds 1e-8.
Trajectory integrate_h(const WarpingModel& model, double t_max, double step = 1e-3);

/// A warping function h on an interval of t, with t = 0 at the inner end for
/// space forms, dSS and RN. Every model also has a native parameter in which
/// users usually describe intervals: r = h for dSS and RN, t for space forms,
/// the meridian parameter s for profiles.
class WarpingModel {
 public:
  static WarpingModel space_form(double c, double cap = default_cap());
  static WarpingModel dss(double m, double c, double cap = default_cap());
  static WarpingModel rn(double m, double q, double cap = default_cap());
  static WarpingModel profile(const ProfileCurve& curve, Interval s_interval, int panels = 400);
  static WarpingModel profile(const ProfileCurve& curve) {
    return profile(curve, curve.default_interval(default_cap()));
  }

  [[nodiscard]] ModelKind kind() const;
  [[nodiscard]] double m() const;
  [[nodiscard]] double c() const;
  [[nodiscard]] double q() const;
  [[nodiscard]] double b() const;  // profiles built from ellipsoid/hyperboloid
  [[nodiscard]] const ProfileCurve* profile_curve() const;

  /// Inner and outer roots of the defining function (dss/rn).
  [[nodiscard]] double s0() const;
  [[nodiscard]] double s1() const;

  [[nodiscard]] Interval t_domain() const;
  [[nodiscard]] Interval native_domain() const;
  /// Whether the upper end of the domain is an artificial cap.
  [[nodiscard]] bool capped() const;
  /// Ends excluded from the domain because h vanishes there (space forms).
  [[nodiscard]] bool lower_open() const;
  [[nodiscard]] bool upper_open() const;
  [[nodiscard]] const char* native_name() const;

  [[nodiscard]] Jet jet(double t) const;
  [[nodiscard]] Jet jet_native(double x) const;
  [[nodiscard]] double t_of_native(double x) const;
  [[nodiscard]] double native_of_t(double t) const;

  /// The integrated ODE backing jet(t) for dss/rn models, null otherwise.
  [[nodiscard]] const Trajectory* trajectory() const;

  [[nodiscard]] std::string describe() const;

 private:
  friend Trajectory integrate_h(const WarpingModel& model, double t_max, double step);
  explicit WarpingModel(std::shared_ptr<const detail::ModelImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::ModelImpl> impl_;
};

/// The native domain with degenerate (h = 0) ends pulled in by 1e-6 of its
/// width, so every point can be evaluated.
Interval working_interval(const WarpingModel& model);

/// Space forms c = 1, 0, -1; dss(1, 0), dss(1, 0.05); rn(2, 0.5); the
/// ellipsoid b = 1.5 and the hyperboloid b = 1.
std::vector<WarpingModel> builtin_models();

/// Profile models built on the s-grid; same as WarpingModel::profile.
WarpingModel profile_reparametrize(const ProfileCurve& curve, Interval s_interval,
                                   int panels = 400);

}  // namespace warpstab
