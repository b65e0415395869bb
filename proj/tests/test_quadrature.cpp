#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "warpstab/error.hpp"
#include "warpstab/quadrature.hpp"
#include "warpstab/warping.hpp"

using namespace warpstab;
using std::numbers::pi;

TEST_CASE("gauss-legendre nodes and weights") {
  for (int n : {1, 2, 5, 16, 40}) {
    const auto& gl = quadrature::gauss_legendre(n);
    double wsum = 0.0;
    for (std::size_t i = 0; i < gl.weights.size(); ++i) {
      CHECK(gl.weights[i] > 0.0);
      wsum += gl.weights[i];
      if (i > 0) CHECK(gl.nodes[i] > gl.nodes[i - 1]);
    }
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
  }
  // exact on x^(2n-1) and x^(2n-2)
  const auto& gl = quadrature::gauss_legendre(6);
  double s = 0.0;
  for (std::size_t i = 0; i < 6; ++i) s += gl.weights[i] * std::pow(gl.nodes[i], 10);
  CHECK(s == doctest::Approx(2.0 / 11.0).epsilon(1e-14));
  CHECK_THROWS_AS(quadrature::gauss_legendre(0), Error);
}

TEST_CASE("sphere rule exactness") {
  const auto rule = quadrature::sphere_rule(16);
  double wsum = 0.0;
  for (double w : rule->weights) {
    CHECK(w > 0.0);
    wsum += w;
  }
  CHECK(std::abs(wsum - 4 * pi) < 1e-12);

  const double one = quadrature::integrate_sphere([](double, double) { return 1.0; }, *rule);
  CHECK(std::abs(one - 4 * pi) < 1e-13);

  const double c2 = quadrature::integrate_sphere(
      [](double p1, double) { return std::cos(p1) * std::cos(p1); }, *rule);
  CHECK(std::abs(c2 - 4 * pi / 3) < 1e-12);

  // Y_2^0 = sqrt(5/(16 pi)) (3cos^2 - 1), unit L2 norm
  const double y20 = quadrature::integrate_sphere(
      [](double p1, double) {
        const double y = std::sqrt(5.0 / (16.0 * pi)) * (3 * std::cos(p1) * std::cos(p1) - 1);
        return y * y;
      },
      *rule);
  CHECK(std::abs(y20 - 1.0) < 1e-10);

  // real Y_2^2 ~ sin^2 cos(2 phi2), norm^2 = 15/(32 pi) * int sin^4 cos^2(2phi) = 1
  const double y22 = quadrature::integrate_sphere(
      [](double p1, double p2) {
        const double y = std::sqrt(15.0 / (16.0 * pi)) * std::sin(p1) * std::sin(p1) *
                         std::cos(2 * p2);
        return y * y;
      },
      *rule);
  CHECK(std::abs(y22 - 1.0) < 1e-10);

  // orthogonality of distinct harmonics
  const double cross = quadrature::integrate_sphere(
      [](double p1, double p2) { return std::cos(p1) * std::sin(p1) * std::cos(p2); }, *rule);
  CHECK(std::abs(cross) < 1e-13);

  CHECK_THROWS_AS(quadrature::sphere_rule(1), Error);
}

TEST_CASE("sphere rules are cached") {
  CHECK(quadrature::sphere_rule(8).get() == quadrature::sphere_rule(8).get());
}

TEST_CASE("slice integrals") {
  const auto sphere = WarpingModel::space_form(1.0);
  const double t = 1.1;
  const double h = std::sin(t);
  auto area = quadrature::integrate_slice([](double, double) { return 1.0; }, sphere, t);
  CHECK(std::abs(area.value - 4 * pi * h * h) < 1e-12);
  auto gb = quadrature::integrate_slice([&](double, double) { return 1.0 / (h * h); }, sphere, t);
  CHECK(std::abs(gb.value - 4 * pi) < 1e-12);
  // a field the low-order rule cannot resolve trips the doubling check
  CHECK_THROWS_AS(quadrature::integrate_slice(
                      [](double p1, double) { return std::pow(std::cos(p1), 40); }, sphere, t, 4),
                  Error);
}

TEST_CASE("cumulative integral with inverse square-root endpoint") {
  std::vector<double> grid{0.0, 0.25, 0.5, 1.0};
  auto F = quadrature::cumulative_integral([](double x) { return 1.0 / std::sqrt(x); }, grid,
                                           quadrature::LeftEndpoint::inverse_sqrt);
  CHECK(std::abs(F.back() - 2.0) < 1e-10);
  CHECK(std::abs(F[1] - 1.0) < 1e-12);
  CHECK(std::abs(F[2] - 2.0 * std::sqrt(0.5)) < 1e-12);

  // f(t) for the round sphere: f' = sin t, f = 1 - cos t
  std::vector<double> tg;
  for (int i = 0; i <= 30; ++i) tg.push_back(0.1 * i);
  auto f = quadrature::cumulative_integral([](double x) { return std::sin(x); }, tg);
  for (std::size_t i = 0; i < tg.size(); ++i) CHECK(std::abs(f[i] - (1 - std::cos(tg[i]))) < 1e-10);
}

TEST_CASE("non-integrable endpoint is reported") {
  std::vector<double> grid{0.0, 1.0};
  CHECK_THROWS_AS(quadrature::cumulative_integral([](double x) { return 1.0 / x; }, grid,
                                                  quadrature::LeftEndpoint::inverse_sqrt),
                  Error);
  std::vector<double> bad{0.0, 0.0};
  CHECK_THROWS_AS(quadrature::cumulative_integral([](double) { return 1.0; }, bad), Error);
}

TEST_CASE("property: polynomials of degree < 2n integrate exactly") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-2.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 10;
    std::vector<double> c(2 * n);
    for (double& v : c) v = coef(rng);
    const double a = coef(rng);
    const double b = a + 0.1 + std::abs(coef(rng));
    auto p = [&](double x) {
      double s = 0.0;
      for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
      return s;
    };
    double exact = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      exact += c[k] * (std::pow(b, k + 1) - std::pow(a, k + 1)) / (k + 1);
    }
    const double got = quadrature::integrate(p, a, b, 1, n);
    CHECK(std::abs(got - exact) <= 1e-11 * std::max(1.0, std::abs(exact)));
  }
}
