#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "warpstab/curvature.hpp"
#include "warpstab/error.hpp"

using namespace warpstab;

namespace {

Vec3W random_vec(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng), n(rng)};
}

double rel(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("dss curvatures at r = 2") {
  const auto m = WarpingModel::dss(1.0, 0.0);
  const auto s = curvature_state_native(m, 2.0);
  CHECK(std::abs(s.k_tan - 0.125) < 1e-13);
  CHECK(std::abs(s.k_rad + 0.0625) < 1e-13);
  CHECK(std::abs(scalar_curvature(s)) < 1e-13);
  const auto p = dss_curvatures_in_r(1.0, 0.0, 2.0);
  CHECK(p.k_tan == 0.125);
  CHECK(p.k_rad == -0.0625);
  CHECK_THROWS_AS(dss_curvatures_in_r(1.0, 0.0, 0.5), Error);
}

TEST_CASE("rn curvatures") {
  const auto p = rn_curvatures_in_r(2.0, 0.5, 2.0);
  CHECK(std::abs(p.k_tan - 0.234375) < 1e-15);
  CHECK(std::abs(p.k_rad + 0.109375) < 1e-15);
  const auto m = WarpingModel::rn(2.0, 0.5);
  const auto s = curvature_state_native(m, 2.0);
  CHECK(std::abs(s.k_tan - p.k_tan) < 1e-13);
  CHECK(std::abs(s.k_rad - p.k_rad) < 1e-13);
  CHECK_THROWS_AS(rn_curvatures_in_r(2.0, 0.5, 1.0), Error);
}

TEST_CASE("space form curvature is constant") {
  for (double c : {1.0, 0.0, -1.0, 0.25}) {
    const auto m = WarpingModel::space_form(c);
    for (double t : {0.3, 1.0, 2.5}) {
      const auto s = curvature_state(m, t);
      CHECK(std::abs(s.k_tan - c) < 1e-12);
      CHECK(std::abs(s.k_rad - c) < 1e-12);
    }
  }
}

TEST_CASE("sectional curvatures of coordinate planes") {
  CurvatureState s;
  s.h = 1.0;
  s.k_tan = 0.7;
  s.k_rad = -0.3;
  CHECK(std::abs(sectional(s, {1, 0, 0}, {0, 1, 0}) - s.k_rad) < 1e-15);
  CHECK(std::abs(sectional(s, {0, 1, 0}, {0, 0, 1}) - s.k_tan) < 1e-15);
  // mixed plane: K_rad cos^2 + K_tan sin^2 of the angle to d/dt
  const double th = 0.4;
  const Vec3W x{std::cos(th), std::sin(th), 0};
  CHECK(std::abs(sectional(s, x, {0, 0, 1}) -
                 (s.k_rad * std::cos(th) * std::cos(th) + s.k_tan * std::sin(th) * std::sin(th))) <
        1e-14);
}

TEST_CASE("property: curvature tensor symmetries") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> k(-2.0, 2.0);
  for (int trial = 0; trial < 300; ++trial) {
    CurvatureState s;
    s.h = 1.0;
    s.k_tan = k(rng);
    s.k_rad = k(rng);
    const Vec3W x = random_vec(rng), y = random_vec(rng), z = random_vec(rng), w = random_vec(rng);
    auto R4 = [&](Vec3W a, Vec3W b, Vec3W c, Vec3W d) { return dot(riemann_apply(s, a, b, c), d); };
    const double base = R4(x, y, z, w);
    CHECK(std::abs(base + R4(y, x, z, w)) < 1e-12);
    CHECK(std::abs(base + R4(x, y, w, z)) < 1e-12);
    CHECK(std::abs(base - R4(z, w, x, y)) < 1e-12);
    const Vec3W bianchi = riemann_apply(s, x, y, z) + riemann_apply(s, y, z, x) + riemann_apply(s, z, x, y);
    CHECK(bianchi.norm() < 1e-12);
  }
}

TEST_CASE("property: Ricci of a unit normal, trace and closed forms agree") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> k(-3.0, 3.0);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  for (int trial = 0; trial < 300; ++trial) {
    CurvatureState s;
    s.h = 1.0;
    s.k_tan = k(rng);
    s.k_rad = k(rng);
    const double nu = u(rng);
    const double psi = ang(rng);
    const double sn = std::sqrt(1 - nu * nu);
    const Vec3W N{nu, sn * std::cos(psi), sn * std::sin(psi)};
    double trace = 0.0;
    for (const Vec3W e : {Vec3W{1, 0, 0}, Vec3W{0, 1, 0}, Vec3W{0, 0, 1}}) {
      trace += dot(riemann_apply(s, N, e, N), e);
    }
    const auto f = ricci_normal_forms(s, nu);
    CHECK(rel(f.tan_form, trace) < 1e-12);
    CHECK(rel(f.rad_form, trace) < 1e-12);
    CHECK(ricci_normal(s, nu) == f.tan_form);
  }
  CurvatureState s;
  CHECK_THROWS_AS(ricci_normal_forms(s, 1.5), Error);
}

TEST_CASE("Brendle condition: equality for dss, strict gap for rn") {
  const auto d = WarpingModel::dss(1.0, 0.0);
  for (double r : {1.5, 2.0, 5.0, 20.0}) {
    const auto b = brendle_condition_native(d, r);
    CHECK(std::abs(b.lhs - b.rhs) < 1e-13);
    CHECK(b.holds);
  }
  const auto d2 = WarpingModel::dss(1.0, 0.05);
  const auto b2 = brendle_condition_native(d2, 2.0);
  CHECK(std::abs(b2.lhs - b2.rhs) < 1e-13);

  const double m = 2.0, q = 0.5;
  const auto rn = WarpingModel::rn(m, q);
  for (double r : {2.0, 3.0, 10.0}) {
    const auto b = brendle_condition_native(rn, r);
    const double hp = std::sqrt(1 - m / r + q * q / (r * r));
    CHECK(std::abs((b.rhs - b.lhs) - 2 * q * q * hp / std::pow(r, 5)) < 1e-13);
    CHECK(b.holds);
  }
  // via t on the trajectory
  const auto bt = brendle_condition(d, d.t_of_native(3.0));
  CHECK(std::abs(bt.lhs - bt.rhs) < 1e-10);
}

TEST_CASE("Brendle condition on a profile uses differences") {
  // round sphere as the b = 1 ellipsoid: K_rad constant, K_tan = K_rad
  const auto p = WarpingModel::profile(ProfileCurve::ellipsoid(1.0));
  const auto b = brendle_condition_native(p, 0.3);
  CHECK(std::abs(b.lhs) < 1e-8);
  CHECK(std::abs(b.rhs) < 1e-8);
}

TEST_CASE("Ricci infimum") {
  const auto d = WarpingModel::dss(1.0, 0.0);
  const auto e = ricci_infimum(d, {2.0, 4.0});
  CHECK(std::abs(e.value + 0.125) < 1e-13);
  CHECK(e.at_lower);
  CHECK_THROWS_AS(ricci_infimum(d, {4.0, 2.0}), Error);
}
