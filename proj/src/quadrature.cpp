#include "warpstab/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "warpstab/error.hpp"
#include "warpstab/warping.hpp"

namespace warpstab::quadrature {

namespace {

GaussLegendre build_gauss_legendre(int n) {
  GaussLegendre rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = (n == 1) ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

}  // namespace

const GaussLegendre& gauss_legendre(int n) {
  if (n < 1) throw Error(ErrorCode::order_too_small, "Gauss-Legendre order must be >= 1");
  static std::map<int, std::unique_ptr<const GaussLegendre>> cache;
  std::lock_guard lock(cache_mutex());
  auto it = cache.find(n);
  if (it == cache.end()) {
    if (n == 1) {
      it = cache.emplace(n, std::make_unique<const GaussLegendre>(GaussLegendre{{0.0}, {2.0}}))
               .first;
    } else {
      it = cache.emplace(n, std::make_unique<const GaussLegendre>(build_gauss_legendre(n))).first;
    }
  }
  return *it->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int order) {
  const auto& gl = gauss_legendre(order);
  const double width = (b - a) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    double panel = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      panel += gl.weights[i] * f(mid + 0.5 * width * gl.nodes[i]);
    }
    sum += 0.5 * width * panel;
  }
  return sum;
}

std::shared_ptr<const SphereRule> sphere_rule(int order) {
  if (order < 2) {
    throw Error(ErrorCode::order_too_small, "sphere rule order must be >= 2, got " +
                                                std::to_string(order));
  }
  static std::map<int, std::shared_ptr<const SphereRule>> cache;
  {
    std::lock_guard lock(cache_mutex());
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  const auto& gl = gauss_legendre(order);
  auto rule = std::make_shared<SphereRule>();
  rule->order = order;
  const int n_phi = 2 * order;
  const double dphi = 2.0 * std::numbers::pi / n_phi;
  for (int i = 0; i < order; ++i) {
    const double phi1 = std::acos(gl.nodes[i]);
    for (int j = 0; j < n_phi; ++j) {
      rule->phi1.push_back(phi1);
      rule->phi2.push_back((j + 0.5) * dphi);
      rule->weights.push_back(gl.weights[i] * dphi);
    }
  }
  std::lock_guard lock(cache_mutex());
  return cache.emplace(order, std::move(rule)).first->second;
}

double integrate_sphere(const std::function<double(double, double)>& f, const SphereRule& rule) {
  double sum = 0.0;
  for (std::size_t k = 0; k < rule.weights.size(); ++k) {
    sum += rule.weights[k] * f(rule.phi1[k], rule.phi2[k]);
  }
  return sum;
}

SliceIntegral integrate_slice(const std::function<double(double, double)>& f,
                              const WarpingModel& model, double t, int order, double tol) {
  const double h = model.jet(t).h;
  SliceIntegral out;
  out.order = order;
  out.value = h * h * integrate_sphere(f, *sphere_rule(order));
  out.doubled = h * h * integrate_sphere(f, *sphere_rule(2 * order));
  if (std::abs(out.value - out.doubled) > tol * std::max(1.0, std::abs(out.value))) {
    throw Error(ErrorCode::non_converged,
                "slice integral changed by " + std::to_string(std::abs(out.value - out.doubled)) +
                    " under order doubling (order " + std::to_string(order) + ")");
  }
  return out;
}

std::vector<double> cumulative_integral(const std::function<double(double)>& f,
                                        std::span<const double> grid, LeftEndpoint left,
                                        int order) {
  std::vector<double> out(grid.size(), 0.0);
  if (grid.size() < 2) return out;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    if (!(grid[k] > grid[k - 1])) {
      throw Error(ErrorCode::invalid_parameters, "cumulative_integral grid must be increasing");
    }
  }
  const auto& gl = gauss_legendre(order);
  auto panel = [&](double a, double b) {
    double s = 0.0;
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) s += gl.weights[i] * f(mid + half * gl.nodes[i]);
    return half * s;
  };
  double first = 0.0;
  if (left == LeftEndpoint::inverse_sqrt) {
    const double x0 = grid[0];
    const double xi_max = std::sqrt(grid[1] - grid[0]);
    auto mapped = [&](double xi) { return 2.0 * xi * f(x0 + xi * xi); };
    first = integrate(mapped, 0.0, xi_max, 1, order);
    const double check = integrate(mapped, 0.0, xi_max, 2, order);
    if (!std::isfinite(first) ||
        std::abs(first - check) > 1e-6 * std::max(1.0, std::abs(check))) {
      throw Error(ErrorCode::non_integrable,
                  "first panel diverges under refinement (" + std::to_string(first) + " vs " +
                      std::to_string(check) + ")");
    }
    first = check;
  } else {
    first = panel(grid[0], grid[1]);
  }
  out[1] = first;
  for (std::size_t k = 2; k < grid.size(); ++k) out[k] = out[k - 1] + panel(grid[k - 1], grid[k]);
  return out;
}

}  // namespace warpstab::quadrature
