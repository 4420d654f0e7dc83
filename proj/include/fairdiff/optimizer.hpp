#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairdiff/mlp.hpp"

namespace fairdiff {

enum class OptimizerMethod { sgd, adam };

OptimizerMethod parse_optimizer(const std::string& s);
std::string to_string(OptimizerMethod m);

struct OptimizerState {
  OptimizerMethod method = OptimizerMethod::sgd;
  uint64_t step_count = 0;
  float learning_rate = 1e-3f;
  std::vector<float> m;  // adam only
  std::vector<float> v;

  static constexpr double beta1 = 0.9;
  static constexpr double beta2 = 0.999;
  static constexpr double epsilon = 1e-8;
};

OptimizerState make_optimizer(OptimizerMethod method, float learning_rate, size_t num_params);

/// Applies one update and returns the new parameters. sgd computes
/// params - lr * grads elementwise; adam uses bias-corrected moments.
MlpParams optimizer_step(OptimizerState& state, const MlpParams& params, std::span<const float> grads);

}  // namespace fairdiff
