#pragma once

// Variance-preserving diffusion: linear beta(t) schedule, the closed-form
// perturbation kernel, the sigma^2-weighted denoising score-matching loss and
// one Euler-Maruyama step of the reverse-time SDE.

#include <cstddef>
#include <span>
#include <vector>

#include "fairdiff/matrix.hpp"
#include "fairdiff/mlp.hpp"
#include "fairdiff/rng.hpp"

namespace fairdiff {

struct NoiseSchedule {
  double beta_min = 0.1;
  double beta_max = 20.0;
  size_t n_steps = 1000;
  double t_eps = 1e-3;
  static constexpr double t_max = 1.0;

  /// Throws a config error unless 0 < beta_min < beta_max, n_steps >= 1 and 0 < t_eps < 1.
  void validate() const;
  bool operator==(const NoiseSchedule&) const = default;
};

struct ScheduleCoefficients {
  double beta;        // beta(t)
  double mean_coeff;  // sqrt(alpha_bar(t))
  double sigma;       // sqrt(1 - alpha_bar(t))
};

ScheduleCoefficients schedule_coefficients(const NoiseSchedule& sched, double t);

struct PerturbSample {
  std::vector<double> x_t;
  std::vector<double> eps;
  double mean_coeff = 1.0;
  double sigma = 0.0;
};

PerturbSample perturb(const NoiseSchedule& sched, std::span<const double> x0, double t, Rng& rng);

struct LossAndGrad {
  double loss = 0.0;
  std::vector<float> grads;
};

/// ||sigma * score + eps||^2 for one row.
double denoising_term(double sigma, std::span<const float> score, std::span<const double> eps);

/// Batch-mean weighted score-matching loss with explicit per-row times and
/// noise draws (eps is rows x features).
LossAndGrad score_loss_with_noise(const NoiseSchedule& sched, const MlpParams& score_net, const MatrixD& x0,
                                  std::span<const double> t, const MatrixD& eps);

/// Draws t ~ U[t_eps, 1] and eps ~ N(0, I) per row from rng, then evaluates the loss.
LossAndGrad score_loss(const NoiseSchedule& sched, const MlpParams& score_net, const MatrixD& x0, Rng& rng);

/// Score network evaluated on a batch at per-row times.
MatrixF eval_score(const MlpParams& score_net, const MatrixF& x, std::span<const float> t);

/// One Euler-Maruyama step from t to t - dt of the reverse SDE given the
/// total (possibly guided) score. The noise term is omitted when
/// final_step is set or t - dt reaches 0.
std::vector<double> reverse_step(const NoiseSchedule& sched, std::span<const double> x, double t, double dt,
                                 std::span<const double> drift_score, Rng& rng, bool final_step = false);

}  // namespace fairdiff
