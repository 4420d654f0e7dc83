#pragma once

// On-disk network checkpoints: a directory holding a JSON `manifest` and one
// raw little-endian float32 file per tensor (`layer{i}.w`, `layer{i}.b`).
// Weight tensors are fan_in x fan_out, row-major.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "fairdiff/diffusion.hpp"
#include "fairdiff/mlp.hpp"
#include "fairdiff/optimizer.hpp"

namespace fairdiff {

inline constexpr int kCheckpointFormatVersion = 1;

struct CheckpointInfo {
  std::string module;  // score, label, sensitive, downstream
  std::optional<NoiseSchedule> schedule;
  std::string schema_fingerprint;
  uint64_t seed = 0;
  bool time_conditioned = false;
};

struct LoadedCheckpoint {
  MlpParams params;
  CheckpointInfo info;
};

void save_checkpoint(const std::filesystem::path& dir, const MlpParams& params, const CheckpointInfo& info);
LoadedCheckpoint load_checkpoint(const std::filesystem::path& dir);
/// FNV-1a over the manifest and tensor files, hex encoded.
std::string checkpoint_hash(const std::filesystem::path& dir);

void save_optimizer(const std::filesystem::path& dir, const OptimizerState& state);
OptimizerState load_optimizer(const std::filesystem::path& dir);

}  // namespace fairdiff
