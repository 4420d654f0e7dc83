#pragma once

// Classifier guidance for the reverse SDE. The label term is the input
// gradient of log p(y | x_t); the fairness term is the input gradient of the
// entropy of the sensitive posterior p(z | x_t). The normalisation constant
// of exp(H) is constant in x and is never formed.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fairdiff/diffusion.hpp"
#include "fairdiff/matrix.hpp"
#include "fairdiff/mlp.hpp"
#include "fairdiff/rng.hpp"
#include "fairdiff/tabular.hpp"

namespace fairdiff {

/// Lower bound applied to probabilities inside every logarithm.
inline constexpr double kProbClamp = 1e-12;

struct GuidanceWeights {
  double lambda_y = 0.0;
  double lambda_z = 0.0;
  void validate() const;
};

enum class ClassifierTarget { label, sensitive };

/// Mean clamped cross-entropy of log-probability rows against targets.
double cross_entropy(const MatrixF& log_probs, std::span<const int> targets);

/// One training evaluation of a time-conditioned classifier on perturbed
/// inputs with explicit per-row times and noise.
LossAndGrad classifier_loss_with_noise(const NoiseSchedule& sched, const MlpParams& net, const MatrixD& x0,
                                       std::span<const int> targets, std::span<const double> t, const MatrixD& eps);

/// Draws t ~ U[t_eps, 1] and the perturbation per row, then evaluates the
/// cross-entropy of net(x_t, t) against the chosen target column.
LossAndGrad train_guidance_classifier(const NoiseSchedule& sched, const MlpParams& net, const EncodedDataset& ds,
                                      ClassifierTarget target, Rng& rng);

/// Rows of grad_x log p(y_i | x_i, t_i).
MatrixF label_grad(const MlpParams& net, const MatrixF& x, std::span<const float> t, std::span<const int> y);
std::vector<float> label_grad(const MlpParams& net, std::span<const float> x, float t, int y);

struct EntropyGrad {
  std::vector<double> entropy;  // per row, in nats
  MatrixF grad;                 // grad_x H per row
};

EntropyGrad entropy_grad(const MlpParams& net, const MatrixF& x, std::span<const float> t);

struct EntropyPoint {
  double entropy;
  std::vector<float> grad;
};
EntropyPoint entropy_grad(const MlpParams& net, std::span<const float> x, float t);

/// Networks used by the sampler. Guidance nets may be null when their weight is zero.
struct GuidanceModels {
  const MlpParams* score = nullptr;
  const MlpParams* label = nullptr;
  const MlpParams* sensitive = nullptr;
};

struct GuidanceOptions {
  bool clip = true;
  double clip_scale = 10.0;  // guidance gradients clipped to |g| <= clip_scale / sigma(t)
  size_t threads = 1;
  size_t block_rows = 256;
  double divergence_limit = 1e4;
};

struct GuidedTerms {
  MatrixD score;  // s_theta(x, t)
  MatrixD label;  // clipped label gradient (unweighted), zeros if lambda_y == 0
  MatrixD fair;   // clipped entropy gradient (unweighted), zeros if lambda_z == 0
  MatrixD total;  // score + lambda_y * label + lambda_z * fair
};

GuidedTerms guided_score_terms(const GuidanceModels& nets, const NoiseSchedule& sched, const MatrixF& x,
                               std::span<const float> t, std::span<const int> y, const GuidanceWeights& w,
                               const GuidanceOptions& opts = {});
MatrixD guided_score(const GuidanceModels& nets, const NoiseSchedule& sched, const MatrixF& x,
                     std::span<const float> t, std::span<const int> y, const GuidanceWeights& w,
                     const GuidanceOptions& opts = {});

struct LabelRequest {
  std::vector<int> labels;  // one target class per generated row
  size_t size() const { return labels.size(); }
};

/// Policies: "prior" (counts proportional to `prior`, largest remainder),
/// "uniform", or "fixed:<class index>".
LabelRequest make_label_request(const std::string& policy, size_t n, const std::vector<double>& prior, Rng& rng);
std::vector<double> label_prior(const EncodedDataset& ds, size_t num_classes);

/// Runs n reverse-SDE chains from N(0, I) at t = 1 down to t_eps over
/// sched.n_steps Euler-Maruyama steps. Chain c draws all of its noise from
/// rng.derive("chain", c), so output is independent of threads and blocking.
MatrixD generate(const GuidanceModels& nets, const NoiseSchedule& sched, const LabelRequest& req,
                 const GuidanceWeights& w, const Rng& rng, const GuidanceOptions& opts = {});

}  // namespace fairdiff
