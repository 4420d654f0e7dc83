#pragma once

// Downstream evaluation: accuracy and min-ratio group fairness (demographic
// parity and equalized opportunity) on real target data, plus the
// leave-one-domain-out model selection protocol.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "fairdiff/mlp.hpp"
#include "fairdiff/tabular.hpp"

namespace fairdiff {

struct PredictionSet {
  std::vector<int> y_hat;
  std::vector<int> y;
  std::vector<int> z;  // binary sensitive attribute
  void validate() const;
};

/// Min-ratio of two positive rates: equal rates give 1, both zero give 1
/// (flagged degenerate), exactly one zero gives 0.
struct RatioResult {
  double value = 1.0;
  bool degenerate = false;
};

RatioResult rate_ratio(double rate0, double rate1);

/// P(y_hat = 1 | z = 0) vs P(y_hat = 1 | z = 1). Throws a data error if a group is empty.
RatioResult r_dp(const PredictionSet& pred);
/// Same construction over rows with y = 1. Throws a data error if a group has no positives.
RatioResult r_eop(const PredictionSet& pred);

struct FairnessRow {
  std::string domain;
  double acc = 0.0;
  double r_dp = 1.0;
  double r_eop = 1.0;
  bool eop_defined = true;  // false when a group had no positives
  std::vector<std::string> warnings;
};

struct FairnessReport {
  std::vector<FairnessRow> rows;
  FairnessRow average;  // unweighted means over rows

  std::string to_csv() const;
  /// Domains as column groups (ACC, R_DP, R_EOp) followed by Avg.
  std::string to_table() const;
};

FairnessReport summarize(std::vector<FairnessRow> rows);

struct DownstreamConfig {
  std::vector<size_t> hidden{64};
  size_t epochs = 200;
  double val_fraction = 0.1;
  double learning_rate = 1e-3;
  size_t batch_size = 128;
  size_t patience = 20;  // epochs without validation improvement before stopping
};

/// Trains the downstream classifier on (x, y) with early stopping on a
/// held-out validation split; returns the best-validation parameters.
MlpParams train_downstream(const EncodedDataset& syn, size_t num_classes, const DownstreamConfig& cfg, uint64_t seed);
std::vector<int> predict(const MlpParams& net, const MatrixD& x);
double accuracy(const std::vector<int>& y_hat, const std::vector<int>& y);

/// ACC, R_DP and R_EOp of the downstream classifier on real target rows.
FairnessRow evaluate_target(const MlpParams& net, const EncodedDataset& target, const std::string& domain_name);

struct LodoFold {
  size_t candidate = 0;
  int domain = 0;
  double accuracy = 0.0;
};

struct LodoResult {
  std::vector<LodoFold> folds;   // candidate-major, domains ascending
  std::vector<double> mean_acc;  // per candidate
  size_t winner = 0;
};

/// Trains on `train`, returns accuracy on `reserved`.
using FoldRunner =
    std::function<double(size_t candidate, const EncodedDataset& train, const EncodedDataset& reserved, int domain)>;

/// For every candidate and every domain, runs the pipeline on the remaining
/// domains and scores the reserved one; the candidate with the highest mean
/// accuracy wins, ties to the lowest index. `final_fit`, when set, is called
/// with the winner to retrain on all domains.
LodoResult leave_one_domain_out(const EncodedDataset& ds, const DomainPartition& part, size_t num_candidates,
                                const FoldRunner& run_fold, size_t threads = 1,
                                const std::function<void(size_t)>& final_fit = {});

}  // namespace fairdiff
