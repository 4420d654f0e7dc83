#pragma once

// End-to-end orchestration used by the command-line tool: prepare, train,
// sample, evaluate and leave-one-domain-out selection. All randomness is
// derived from PipelineConfig::seed through named substreams
// ("train", "sample", "eval").

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "fairdiff/config.hpp"
#include "fairdiff/diffusion.hpp"
#include "fairdiff/fairness.hpp"
#include "fairdiff/guidance.hpp"
#include "fairdiff/meta_train.hpp"
#include "fairdiff/tabular.hpp"

namespace fairdiff {

struct PipelineConfig {
  std::filesystem::path data_csv;
  std::filesystem::path schema_path;
  std::filesystem::path out_dir = "fairdiff_out";

  NoiseSchedule schedule;
  NetworkConfig networks;
  MetaHyperparams hp;
  size_t iterations = 1000;
  size_t batch_size = 256;
  size_t checkpoint_interval = 100;
  OptimizerMethod outer_optimizer = OptimizerMethod::sgd;
  MetaGradientMode gradient_mode = MetaGradientMode::first_order;
  std::vector<std::string> exclude_domains;

  GuidanceWeights weights{1.0, 1.0};
  bool clip_guidance = true;
  size_t num_samples = 1000;
  size_t sample_steps = 1000;
  std::string label_policy = "prior";

  DownstreamConfig downstream;
  uint64_t seed = 0;
  size_t threads = 1;

  /// Throws a config error on unknown keys or invalid values.
  static PipelineConfig from_flat(const FlatConfig& flat);
  /// Applies dotted-key overrides on top of this config.
  PipelineConfig with_overrides(const FlatConfig& overrides) const;
  FlatConfig to_flat() const;
  TrainOptions train_options() const;
  GuidanceOptions guidance_options() const;
};

struct PreparedData {
  TabularSchema schema;
  EncodedDataset data;
  DomainPartition part;
};

/// Loads and encodes the CSV, writes the encoded cache, fitted schema and a
/// per-domain summary under out_dir, and returns the prepared data.
PreparedData prepare(const PipelineConfig& cfg, std::ostream& log);
PreparedData load_prepared(const PipelineConfig& cfg);

/// Rows whose domain name is not excluded.
EncodedDataset source_rows(const PreparedData& prep, const std::vector<std::string>& exclude);
int domain_index(const TabularSchema& schema, const std::string& name);

struct TrainedModels {
  MlpParams score, label, sensitive;
};

/// Meta-trains the three networks on `source`; with a checkpoint directory,
/// writes checkpoints periodically and can resume from one.
TrainedModels train_models(const PipelineConfig& cfg, const EncodedDataset& source, const TabularSchema& schema,
                           const std::filesystem::path& checkpoint_dir = {}, bool resume = false,
                           std::vector<StepLosses>* history = nullptr);
TrainedModels load_models(const std::filesystem::path& checkpoint_dir, const TabularSchema& schema);

struct SyntheticData {
  MatrixD samples;  // encoded space, one-hot blocks snapped by decode/encode
  std::vector<int> labels;
  RawTable table;   // decoded rows (features + label)
};

SyntheticData sample_synthetic(const PipelineConfig& cfg, const TrainedModels& models, const TabularSchema& schema,
                               const std::vector<double>& prior);

/// Trains the downstream classifier on synthetic (x, y).
MlpParams fit_downstream(const PipelineConfig& cfg, const EncodedDataset& syn, const TabularSchema& schema);

/// Full pipeline on `train`, scored on `reserved`: returns the fairness row.
FairnessRow run_fold(const PipelineConfig& cfg, const EncodedDataset& train, const EncodedDataset& reserved,
                     const TabularSchema& schema, const std::string& reserved_name);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace fairdiff
