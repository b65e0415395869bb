#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "warpstab/error.hpp"
#include "warpstab/oracle.hpp"

using namespace warpstab;
using std::numbers::pi;

TEST_CASE("Christoffel symbols of flat polar coordinates") {
  const auto flat = CoordMetric::warped(WarpingModel::space_form(0.0));
  const auto G = christoffel_fd(flat, {1.0, pi / 2, 0.3});
  CHECK(std::abs(G[0][2][2] + 1.0) < 1e-10);  // Gamma^t_{phi2 phi2} = -t sin^2
  CHECK(std::abs(G[0][1][1] + 1.0) < 1e-10);
  CHECK(std::abs(G[1][0][1] - 1.0) < 1e-10);  // Gamma^phi1_{t phi1} = 1/t
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) CHECK(std::abs(G[k][i][j] - G[k][j][i]) < 1e-10);
}

TEST_CASE("Christoffel symbol of dss against the hand formula") {
  const auto m = WarpingModel::dss(1.0, 0.0);
  const double t = m.t_of_native(2.0);
  const auto G = christoffel_fd(CoordMetric::warped(m), {t, 1.0, 0.5});
  const auto j = m.jet(t);
  CHECK(std::abs(G[0][1][1] + j.h * j.hp) < 1e-7);
}

TEST_CASE("Riemann tensor of the round sphere") {
  const auto sph = CoordMetric::warped(WarpingModel::space_form(1.0));
  double bianchi = 1.0;
  const auto R = riemann_fd(sph, {1.0, 1.2, 0.4}, 1e-3, &bianchi);
  const double h = std::sin(1.0);
  // R(d_t, d_phi1) d_phi1 = K g_11 d_t for the usual sign, K = 1
  CHECK(std::abs(R[0][1][0][1] - h * h) < 1e-7);
  CHECK(bianchi < 1e-8);
}

TEST_CASE("fourth-order convergence") {
  const auto sph = CoordMetric::warped(WarpingModel::space_form(1.0));
  const double h = std::sin(1.0);
  const double e1 = std::abs(christoffel_fd(sph, {1.0, 1.2, 0.4}, 0.1)[0][1][1] + h * std::cos(1.0));
  const double e2 = std::abs(christoffel_fd(sph, {1.0, 1.2, 0.4}, 0.05)[0][1][1] + h * std::cos(1.0));
  CHECK(e1 / e2 >= 8.0);
}

TEST_CASE("oracle errors") {
  const auto sph = CoordMetric::warped(WarpingModel::space_form(1.0));
  CHECK_THROWS_AS(christoffel_fd(sph, {1.0, 0.05, 0.0}), Error);
  try {
    riemann_fd(sph, {1.0, 3.1, 0.0});
    FAIL("expected pole-proximity");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::pole_proximity);
  }
  try {
    christoffel_fd(sph, {1e-8, 1.0, 0.0});
    FAIL("expected step-underflow");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::step_underflow);
  }
  CoordMetric degenerate;
  degenerate.t_range = {0.0, 10.0};
  degenerate.g = [](double, double, double) { return Mat3{}; };
  try {
    christoffel_fd(degenerate, {1.0, 1.0, 0.0});
    FAIL("expected singular-metric");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::singular_metric);
  }
}

TEST_CASE("verify_model on flat space") {
  const auto flat = WarpingModel::space_form(0.0);
  const auto rep = verify_model(flat, {0.5, 3.0}, 5, 4);
  CHECK(rep.pass);
  // the only error left is stencil truncation of the 1/sin(phi1) terms
  CHECK(rep.worst() <= 1e-6);
  CHECK(rep.bianchi_max <= 1e-12);
}

TEST_CASE("verify_model passes on dss and rn") {
  const auto d = WarpingModel::dss(1.0, 0.05);
  const auto rd = verify_model(d, working_interval(d));
  INFO("worst ", rd.worst());
  CHECK(rd.pass);
  const auto rn = WarpingModel::rn(2.0, 0.5);
  const auto rr = verify_model(rn, working_interval(rn));
  CHECK(rr.pass);
  CHECK(rr.entries.size() == 9);
}

TEST_CASE("verify_model passes on profile models") {
  for (double b : {1.5, 0.4}) {
    const auto e = WarpingModel::profile(ProfileCurve::ellipsoid(b));
    const auto r = verify_model(e, working_interval(e));
    INFO("ellipsoid b=", b, " worst ", r.worst());
    CHECK(r.pass);
  }
  const auto hy = WarpingModel::profile(ProfileCurve::hyperboloid(1.0));
  const auto r = verify_model(hy, working_interval(hy));
  INFO("worst ", r.worst());
  CHECK(r.pass);
}
