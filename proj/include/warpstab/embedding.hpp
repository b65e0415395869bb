#pragma once

#include <array>
#include <string>
#include <vector>

#include "warpstab/curvature.hpp"
#include "warpstab/warping.hpp"

namespace warpstab {

using Vec4 = std::array<double, 4>;

/// The warped product as a rotational hypersurface F(t, w) = (f(t), h(t) w) of
/// flat 4-space with metric kappa dx0^2 + dx1^2 + dx2^2 + dx3^2, where
/// kappa f'^2 + h'^2 = 1.
class FlatEmbedding {
 public:
  FlatEmbedding(WarpingModel model, int kappa, std::vector<double> t, std::vector<double> f);

  [[nodiscard]] int kappa() const { return kappa_; }
  [[nodiscard]] const WarpingModel& model() const { return model_; }
  [[nodiscard]] const std::vector<double>& t_grid() const { return t_; }
  [[nodiscard]] const std::vector<double>& f_samples() const { return f_; }
  [[nodiscard]] Interval t_range() const { return {t_.front(), t_.back()}; }

  [[nodiscard]] double fprime(double t) const;
  [[nodiscard]] double f_at(double t) const;
  /// f(t + dt) - f(t) without cancellation.
  [[nodiscard]] double f_increment(double t, double dt) const;
  [[nodiscard]] Vec4 point(double t, double phi1, double phi2) const;

  /// max |kappa f'^2 + h'^2 - 1| over the interior grid, f' taken by central
  /// differences of the integrated f.
  [[nodiscard]] double relation_residual() const;

 private:
  WarpingModel model_;
  int kappa_;
  std::vector<double> t_;
  std::vector<double> f_;
};

/// kappa is the sign of K_tan on the interval (+1 where K_tan vanishes
/// identically). Throws sign-change-of-K_tan when K_tan takes both signs.
FlatEmbedding build_embedding(const WarpingModel& model, Interval native, int n = 201);

/// a <.,.> + eps a dt^2, the closed form of the second fundamental form.
struct SecondForm {
  int kappa = 1;
  double k_tan = 0.0;
  double k_rad = 0.0;
  double a = 0.0;          // kappa sqrt|K_tan|, the metric coefficient
  double eps = 0.0;        // (K_rad - K_tan)/K_tan
  double delta = 0.0;      // eps a^2 = K_rad - K_tan up to sign kappa
  double dt2_coeff = 0.0;  // -(K_tan - K_rad)/sqrt|K_tan| = eps a

  [[nodiscard]] double tt() const { return a + dt2_coeff; }
};

SecondForm second_form_closed(const CurvatureState& s);
SecondForm second_form_closed(const WarpingModel& model, double t);

/// Entries of the second fundamental form in the orthonormal frame
/// {d/dt, e_phi1, e_phi2}, from finite differences of F.
struct SecondFormSample {
  double tt = 0.0;
  double e1e1 = 0.0;
  double e2e2 = 0.0;
  double off_diag = 0.0;      // largest off-diagonal entry, zero in exact arithmetic
  double normal_sign = 0.0;   // eta(N, N) of the unit normal: kappa
  double step = 0.0;
  bool richardson = false;    // the two step sizes disagreed; extrapolated value used
};

SecondFormSample second_form_numeric(const FlatEmbedding& emb, double t, double phi1,
                                     double phi2 = 0.7);

/// |trace II|/3 = |a(3 + eps)|/3.
double mean_vector_norm(const SecondForm& sf);
double mean_vector_norm(const WarpingModel& model, double t);

/// scal from the Gauss equation of the embedding: kappa (6a^2 + 4 eps a^2)/6.
double gauss_scal(const SecondForm& sf);

/// sum_i II(e_i, X)^2 + II(e_i, JX)^2 over an orthonormal frame e_1, e_2 of a
/// surface with unit normal N, nu = <N, d/dt>, psi the azimuth of N's fiber
/// part, X = x1 e_1 + x2 e_2.
double ii_terms(const SecondForm& sf, double nu, double psi, double x1, double x2);

struct EmbeddingEntry {
  std::string quantity;  // "II(t,t)", "II(e1,e1)", "II(e2,e2)", "II off-diagonal"
  double max_error = 0.0;  // relative, denominator max(|closed|, 1e-3)
  double at_t = 0.0;
  double at_phi1 = 0.0;
};

struct EmbeddingReport {
  std::string model;
  int kappa = 1;
  std::vector<EmbeddingEntry> entries;
  double relation_residual = 0.0;  // max |kappa f'^2 + h'^2 - 1|
  double tol = 0.0;
  bool pass = false;

  [[nodiscard]] double worst() const;
};

/// Numeric against closed-form second fundamental form on an n_t x 5 grid of
/// (t, phi1), t at cell centres of the embedded range, phi1 in [0.3, pi - 0.3].
/// Passes when every entry is within tol and the relation residual within 1e-10.
EmbeddingReport verify_embedding(const WarpingModel& model, Interval native, int n_t = 20,
                                 double tol = 1e-6);

}  // namespace warpstab
