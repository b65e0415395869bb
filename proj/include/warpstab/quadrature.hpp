#pragma once

#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace warpstab {

class WarpingModel;

namespace quadrature {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point Gauss-Legendre rule (n >= 1). Rules are built once and shared.
const GaussLegendre& gauss_legendre(int n);

/// Integral of f over [a, b] with `panels` equal Gauss-Legendre panels of `order` nodes.
double integrate(const std::function<double(double)>& f, double a, double b, int panels = 1,
                 int order = 20);

/// Tensor-product rule on the unit sphere: Gauss-Legendre in cos(phi1), uniform
/// in phi2. Integrates spherical harmonics up to degree 2*order-1 exactly.
struct SphereRule {
  int order = 0;
  std::vector<double> phi1;
  std::vector<double> phi2;
  std::vector<double> weights;
};

std::shared_ptr<const SphereRule> sphere_rule(int order);

/// Sum of weights * f(phi1, phi2) over a sphere rule.
double integrate_sphere(const std::function<double(double, double)>& f, const SphereRule& rule);

struct SliceIntegral {
  double value = 0.0;     // at the requested order
  double doubled = 0.0;   // at twice the order, the self-check
  int order = 0;
};

/// Integral over the slice {t} x S^2 of radius h(t): h^2 * integral over S^2.
/// Throws non-converged if doubling the order moves the result by more than
/// `tol` (relative to max(1, |value|)).
SliceIntegral integrate_slice(const std::function<double(double, double)>& f,
                              const WarpingModel& model, double t, int order = 16,
                              double tol = 1e-8);

enum class LeftEndpoint { regular, inverse_sqrt };

/// Antiderivative samples F(grid[k]) = integral from grid[0] to grid[k] of f,
/// composite Gauss-Legendre per panel. With LeftEndpoint::inverse_sqrt the
/// first panel is mapped by x = grid[0] + xi^2, which makes integrands that
/// blow up like (x - grid[0])^(-1/2) smooth. A first panel whose value keeps
/// moving under order doubling is reported as non-integrable.
std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        std::span<const double> grid,
                                        LeftEndpoint left = LeftEndpoint::regular,
                                        int order = 20);

}  // namespace quadrature
}  // namespace warpstab
