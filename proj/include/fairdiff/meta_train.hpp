#pragma once

// Joint meta-training of the score network and both guidance classifiers.
// Each iteration holds out one source domain: every model takes one inner
// gradient step on the held-in rows, is scored on the held-out rows at the
// adapted parameters, and is updated with the gradient of
// L_in(theta) + beta * L_out(theta_hat). The default meta-gradient is first
// order; an exact mode adds the Hessian term through the inner step with a
// finite-difference Hessian-vector product.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fairdiff/diffusion.hpp"
#include "fairdiff/guidance.hpp"
#include "fairdiff/mlp.hpp"
#include "fairdiff/optimizer.hpp"
#include "fairdiff/rng.hpp"
#include "fairdiff/tabular.hpp"

namespace fairdiff {

struct MetaHyperparams {
  double alpha_score = 1e-3, alpha_y = 1e-3, alpha_z = 1e-3;
  double beta_score = 1.0, beta_y = 1.0, beta_z = 1.0;
  double gamma_score = 1e-3, gamma_y = 1e-3, gamma_z = 1e-3;
  void validate() const;
};

struct MetaBatch {
  EncodedDataset in;
  EncodedDataset out;
  int held_out_domain = -1;
  std::vector<size_t> in_rows;  // indices into the source dataset
  std::vector<size_t> out_rows;
};

/// Holds out one domain uniformly at random and samples up to batch_size rows
/// spread over domains in proportion to their size (at least one per domain).
MetaBatch split_meta_batch(const EncodedDataset& ds, const DomainPartition& part, size_t batch_size, Rng& rng);

using LossFn = std::function<LossAndGrad(const MlpParams&, const EncodedDataset&, Rng&)>;

/// theta - alpha * grad L(b_in, theta); alpha == 0 returns params unchanged.
MlpParams inner_adapt(const MlpParams& params, const LossFn& loss, const EncodedDataset& b_in, double alpha, Rng& rng);
MlpParams sgd_update(const MlpParams& params, std::span<const float> grads, double rate);

enum class MetaGradientMode { first_order, exact };

struct ModelUpdate {
  MlpParams params;
  double loss_in = 0.0;
  double loss_out = 0.0;
};

/// Meta update of a single model. rng_in drives L_in, rng_out drives L_out.
/// The outer step uses `opt` (its learning rate is the outer rate gamma).
ModelUpdate meta_update(const MlpParams& params, OptimizerState& opt, const LossFn& loss, const MetaBatch& batch,
                        double alpha, double beta, MetaGradientMode mode, const Rng& rng_in, const Rng& rng_out);

struct ModelSlot {
  MlpParams params;
  OptimizerState opt;
};

inline constexpr std::array<const char*, 3> kModelNames = {"score", "label", "sensitive"};

struct TrainState {
  std::array<ModelSlot, 3> models;  // score, label, sensitive
  uint64_t iteration = 0;
  MlpParams& score() { return models[0].params; }
  MlpParams& label() { return models[1].params; }
  MlpParams& sensitive() { return models[2].params; }
  const MlpParams& score() const { return models[0].params; }
  const MlpParams& label() const { return models[1].params; }
  const MlpParams& sensitive() const { return models[2].params; }
};

struct NetworkConfig {
  std::vector<size_t> score_hidden{256, 256, 256};
  std::vector<size_t> classifier_hidden{128, 128};
  Activation activation = Activation::relu;
};

struct TrainOptions {
  NoiseSchedule schedule;
  NetworkConfig networks;
  MetaHyperparams hp;
  size_t batch_size = 256;
  OptimizerMethod outer_optimizer = OptimizerMethod::sgd;
  MetaGradientMode mode = MetaGradientMode::first_order;
  size_t checkpoint_interval = 0;  // 0 disables periodic callbacks
};

TrainState init_train_state(size_t encoded_width, size_t num_labels, size_t num_sensitive, const TrainOptions& opts,
                            Rng& rng);

/// Loss functions for the three models, in kModelNames order.
std::array<LossFn, 3> model_losses(const NoiseSchedule& sched);

struct StepLosses {
  uint64_t iteration = 0;
  std::array<double, 3> loss_in{};
  std::array<double, 3> loss_out{};
};

/// One iteration over all three models. Each model draws from
/// rng.derive(model name), so update order does not matter.
StepLosses meta_step(TrainState& state, const MetaBatch& batch, const MetaHyperparams& hp,
                     const std::array<LossFn, 3>& losses, MetaGradientMode mode, const Rng& rng);

using CheckpointFn = std::function<void(const TrainState&, const std::vector<StepLosses>&)>;

struct FitResult {
  TrainState state;
  std::vector<StepLosses> history;
};

/// Runs iterations until state.iteration reaches `iterations`. Iteration i
/// uses Rng(seed).derive("train", i), so a resumed run reproduces an
/// uninterrupted one.
FitResult fit(const EncodedDataset& ds, const DomainPartition& part, const TrainOptions& opts, uint64_t iterations,
              uint64_t seed, TrainState state, std::vector<StepLosses> history = {},
              const CheckpointFn& on_checkpoint = {});

std::string history_csv(const std::vector<StepLosses>& history);

}  // namespace fairdiff
