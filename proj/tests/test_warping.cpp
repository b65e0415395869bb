#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>

#include "warpstab/error.hpp"
#include "warpstab/warping.hpp"

using namespace warpstab;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::invalid_parameters;
}

// t = F(r) for dss(m=1, c=0) in closed form
double schwarzschild_F(double r) { return std::sqrt(r * (r - 1)) + std::acosh(std::sqrt(r)); }

}  // namespace

TEST_CASE("dss domain") {
  auto d = dss_domain(1.0, 0.0);
  CHECK(d.s0 == 1.0);
  CHECK(d.s1_infinite);
  CHECK(dss_domain(1.0, -0.5).s1_infinite);
  CHECK(dss_domain(1.0, -3.0).s1_infinite);

  d = dss_domain(1.0, 0.1);
  CHECK_FALSE(d.s1_infinite);
  // reference roots of 0.1 r^3 - r + 1 (30-digit arithmetic)
  CHECK(std::abs(d.s0 - 1.15346730514576260) < 1e-12);
  CHECK(std::abs(d.s1 - 2.42362213999069884) < 1e-12);
  for (double r : {d.s0, d.s1, d.s2}) CHECK(std::abs(0.1 * r * r * r - r + 1) < 1e-12);

  CHECK(code_of([] { dss_domain(1.0, 4.0 / 27.0); }) == ErrorCode::invalid_parameters);
  CHECK(code_of([] { dss_domain(0.0, 0.0); }) == ErrorCode::invalid_parameters);
  CHECK(code_of([] { dss_domain(-1.0, -1.0); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("dss domain near the double root stays ordered") {
  const double c = 4.0 / 27.0 * (1 - 1e-8);
  const auto d = dss_domain(1.0, c);
  CHECK(d.s0 < d.s1);
  CHECK(std::abs(c * d.s0 * d.s0 * d.s0 - d.s0 + 1) < 1e-12);
}

TEST_CASE("rn outer root") {
  CHECK(std::abs(rn_s0(2.0, 1e-9) - 2.0) < 1e-12);
  CHECK(std::abs(rn_s0(2.0, 0.5) - 1.86602540378443865) < 1e-10);
  const double s = rn_s0(2.0, 1.0 - 1e-9);
  CHECK(std::isfinite(s));
  CHECK(std::abs(s - 1.0) < 1e-4);
  CHECK(std::abs(1 - 2 / s + (1 - 1e-9) * (1 - 1e-9) / (s * s)) < 1e-12);
  CHECK(code_of([] { rn_s0(2.0, 1.0); }) == ErrorCode::invalid_parameters);
  CHECK(code_of([] { rn_s0(2.0, 0.0); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("space forms") {
  auto j = space_form_h(0.0, 2.0);
  CHECK(j.h == 2.0);
  CHECK(j.hp == 1.0);
  CHECK(j.hpp == 0.0);
  j = space_form_h(1.0, pi / 2);
  CHECK(std::abs(j.h - 1.0) < 1e-15);
  CHECK(std::abs(j.hp) < 1e-15);
  CHECK(std::abs(j.hpp + 1.0) < 1e-15);
  j = space_form_h(-1.0, 1.0);
  CHECK(j.h == std::sinh(1.0));
  CHECK(j.hp == std::cosh(1.0));
  CHECK(j.hpp == std::sinh(1.0));
  CHECK(code_of([] { space_form_h(1.0, 4.0); }) == ErrorCode::out_of_domain);

  const auto sph = WarpingModel::space_form(1.0);
  CHECK(sph.upper_open());
  CHECK(code_of([&] { (void)sph.jet(0.0); }) == ErrorCode::out_of_domain);
  CHECK(code_of([&] { (void)sph.jet(pi); }) == ErrorCode::out_of_domain);
}

TEST_CASE("trajectory of dss(1,0)") {
  const auto model = WarpingModel::dss(1.0, 0.0);
  const Trajectory tr = integrate_h(model, 10.0, 1e-3);
  CHECK(tr.samples.front().t == 0.0);
  CHECK(tr.samples.front().h == 1.0);
  CHECK(tr.samples.front().hp == 0.0);
  CHECK(std::abs(tr.samples.back().t - 10.0) < 1e-12);
  CHECK(tr.residual_max <= 1e-10);
  for (std::size_t i = 1; i < tr.samples.size(); ++i) {
    CHECK(tr.samples[i].t > tr.samples[i - 1].t);
    CHECK(tr.samples[i].h > 0.0);
  }
  // h'' at 0 equals m/(2 s0^2) - c s0
  CHECK(std::abs(tr.samples.front().hpp - 0.5) < 1e-9);

  // at h = 2 (t = F(2) in closed form), h' = sqrt(1/2)
  const double t2 = schwarzschild_F(2.0);
  CHECK(std::abs(t2 - 2.29558714939263806) < 1e-14);
  const Jet j = model.jet(t2);
  CHECK(std::abs(j.h - 2.0) < 1e-9);
  CHECK(std::abs(j.hp - std::sqrt(0.5)) < 1e-9);
}

TEST_CASE("trajectory of rn(2,0.5)") {
  const auto model = WarpingModel::rn(2.0, 0.5);
  const Trajectory tr = integrate_h(model, 10.0, 1e-3);
  CHECK(tr.residual_max <= 1e-10);
  const double s0 = rn_s0(2.0, 0.5);
  CHECK(std::abs(tr.samples.front().hpp - (2.0 / (2 * s0 * s0) - 0.25 / (s0 * s0 * s0))) < 1e-9);
}

TEST_CASE("integration errors") {
  const auto closed = WarpingModel::dss(1.0, 0.1);
  CHECK(code_of([&] { integrate_h(closed, 100.0, 1e-3); }) == ErrorCode::domain_exit);
  CHECK(code_of([&] { integrate_h(WarpingModel::dss(1.0, 0.0), 10.0, 0.5); }) ==
        ErrorCode::step_too_large);
  CHECK(code_of([] { integrate_h(WarpingModel::space_form(0.0), 1.0, 1e-3); }) ==
        ErrorCode::model_kind_mismatch);
}

TEST_CASE("F round trip h(F(r)) = r") {
  for (auto model : {WarpingModel::dss(1.0, 0.0), WarpingModel::dss(1.0, -1.0),
                     WarpingModel::dss(1.0, 0.05), WarpingModel::rn(2.0, 0.5)}) {
    const Interval dom = model.native_domain();
    for (int i = 0; i <= 40; ++i) {
      const double r = dom.lo + (dom.hi - dom.lo) * i / 40.0;
      const double t = model.t_of_native(r);
      CHECK(std::abs(model.jet(t).h - r) <= 1e-8 * std::max(1.0, r));
    }
  }
  const auto sch = WarpingModel::dss(1.0, 0.0);
  for (double r : {1.0, 1.0001, 1.5, 3.0, 20.0}) {
    CHECK(std::abs(sch.t_of_native(r) - schwarzschild_F(r)) < 1e-11);
  }
}

TEST_CASE("dss with c > 0 reaches the outer root") {
  const auto model = WarpingModel::dss(1.0, 0.05);
  CHECK_FALSE(model.capped());
  const double t1 = model.t_domain().hi;
  const Jet j = model.jet(t1);
  CHECK(std::abs(j.h - model.s1()) < 1e-6);
  CHECK(std::abs(j.hp) < 1e-3);
  // reference t at r = 1.5, 30-digit quadrature
  CHECK(std::abs(model.t_of_native(1.5) - 1.62309679817197258) < 1e-11);
}

TEST_CASE("native jets agree with the ODE path") {
  const auto model = WarpingModel::rn(2.0, 0.5);
  for (double r : {1.9, 2.5, 4.0, 10.0}) {
    const Jet a = model.jet_native(r);
    const Jet b = model.jet(a.t);
    CHECK(std::abs(a.h - b.h) < 1e-9);
    CHECK(std::abs(a.hp - b.hp) < 1e-9);
    CHECK(std::abs(a.hpp - b.hpp) < 1e-9);
    CHECK(std::abs(a.hppp - b.hppp) < 1e-9);
  }
}

TEST_CASE("cap from environment") {
  setenv("WARPSTAB_CAP", "12", 1);
  CHECK(default_cap() == 12.0);
  CHECK(WarpingModel::rn(2.0, 0.5).native_domain().hi == 12.0);
  setenv("WARPSTAB_CAP", "abc", 1);
  CHECK(code_of([] { default_cap(); }) == ErrorCode::invalid_parameters);
  unsetenv("WARPSTAB_CAP");
  CHECK(default_cap() == 50.0);
}

TEST_CASE("profiles") {
  // b = 1 ellipsoid is the round sphere
  const auto e1 = WarpingModel::profile(ProfileCurve::ellipsoid(1.0));
  for (int i = 0; i <= 20; ++i) {
    const double s = -0.99 + 1.98 * i / 20.0;
    const Jet j = e1.jet_native(s);
    CHECK(std::abs(j.hp * j.hp + j.h * j.h - 1.0) < 1e-12);
    // and t = asin(s) with G(0) = 0
    CHECK(std::abs(j.t - std::asin(s)) < 1e-10);
  }

  // hyperboloid b = 2 at s = 0
  const auto hb = WarpingModel::profile(ProfileCurve::hyperboloid(2.0));
  const Jet j0 = hb.jet_native(0.0);
  CHECK(std::abs(j0.h - 1.0) < 1e-15);
  CHECK(std::abs(j0.hp) < 1e-15);
  CHECK(std::abs(j0.hpp - 0.25) < 1e-15);  // u'' = b/(b^2+s^2)^{3/2} = 2/8
  // finite-difference cross-check of u''
  const auto u = [](double s) { return std::sqrt(4.0 + s * s) / 2.0; };
  const double d = 1e-3;
  CHECK(std::abs((u(d) - 2 * u(0) + u(-d)) / (d * d) - 0.25) < 1e-6);

  // G strictly increasing, jet(t) inverts t_of_native
  double prev = -1e300;
  for (int i = 0; i <= 50; ++i) {
    const double s = -10 + 20.0 * i / 50;
    const double t = hb.t_of_native(s);
    CHECK(t > prev);
    prev = t;
    CHECK(std::abs(hb.native_of_t(t) - s) < 1e-10);
  }
}

TEST_CASE("sampled profile matches its source") {
  std::vector<double> s;
  std::vector<double> u;
  for (int i = 0; i <= 400; ++i) {
    s.push_back(-3.0 + 6.0 * i / 400);
    u.push_back(std::sqrt(4.0 + s.back() * s.back()) / 2.0);
  }
  const auto sampled = WarpingModel::profile(ProfileCurve::sampled(s, u));
  const auto exact = WarpingModel::profile(ProfileCurve::hyperboloid(2.0), {-3.0, 3.0});
  for (double x : {-2.9, -1.0, 0.0, 0.37, 2.5}) {
    const Jet a = sampled.jet_native(x);
    const Jet b = exact.jet_native(x);
    CHECK(std::abs(a.h - b.h) < 1e-9);
    CHECK(std::abs(a.hp - b.hp) < 1e-7);
    CHECK(std::abs(a.hpp - b.hpp) < 1e-5);
    CHECK(std::abs(a.t - b.t) < 1e-7);
  }
  CHECK(code_of([] {
          ProfileCurve::sampled({0, 1, 2, 3, 4}, {1, 1, -1, 1, 1});
        }) == ErrorCode::nonpositive_profile);
  CHECK(code_of([] {
          WarpingModel::profile(ProfileCurve::callable([](double x) {
                                  return ProfileCurve::Derivs{x, 1.0, 0.0};
                                }),
                                {-1.0, 1.0});
        }) == ErrorCode::nonpositive_profile);
}

TEST_CASE("property: first integral along random dss/rn trajectories") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (int trial = 0; trial < 12; ++trial) {
    const double m = 0.5 + 1.5 * U(rng);
    WarpingModel model = trial % 2 == 0
                             ? WarpingModel::dss(m, -1.0 + 1.0 * U(rng), 20.0)
                             : WarpingModel::rn(m, m / 2 * (0.05 + 0.9 * U(rng)), 20.0);
    const Trajectory* tr = model.trajectory();
    REQUIRE(tr != nullptr);
    CHECK(tr->residual_max < 1e-8);
    for (std::size_t i = 1; i < tr->samples.size(); ++i) {
      CHECK(tr->samples[i].h > tr->samples[i - 1].h);
    }
  }
}
