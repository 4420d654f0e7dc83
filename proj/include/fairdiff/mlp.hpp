#pragma once

// Fixed-topology multilayer perceptron with reverse-mode gradients for both
// parameters and inputs. Weights of layer l are stored fan_in x fan_out
// row-major, so a batch forward pass is y = x * W + b.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fairdiff/matrix.hpp"
#include "fairdiff/rng.hpp"

namespace fairdiff {

enum class Activation { relu, tanh };
enum class OutputHead { linear, log_softmax };

std::string to_string(Activation a);
std::string to_string(OutputHead h);
Activation parse_activation(const std::string& s);
OutputHead parse_head(const std::string& s);

struct MlpSpec {
  std::vector<size_t> layer_widths;  // input first, output last
  Activation activation = Activation::relu;
  OutputHead output_head = OutputHead::linear;

  size_t input_dim() const { return layer_widths.front(); }
  size_t output_dim() const { return layer_widths.back(); }
  size_t num_layers() const { return layer_widths.size() - 1; }
  /// Throws a config error if fewer than two widths or any width is zero.
  void validate() const;
  bool operator==(const MlpSpec&) const = default;
};

/// Builds a spec from input width, hidden widths and output width.
MlpSpec make_spec(size_t input_dim, const std::vector<size_t>& hidden, size_t output_dim, Activation act,
                  OutputHead head);

/// All weights and biases in a single contiguous buffer.
class MlpParams {
 public:
  MlpParams() = default;
  explicit MlpParams(MlpSpec spec);

  const MlpSpec& spec() const { return spec_; }
  size_t size() const { return values_.size(); }

  std::span<float> values() { return values_; }
  std::span<const float> values() const { return values_; }

  std::span<float> weight(size_t layer);
  std::span<const float> weight(size_t layer) const;
  std::span<float> bias(size_t layer);
  std::span<const float> bias(size_t layer) const;

  size_t weight_offset(size_t layer) const { return offsets_[layer]; }
  size_t bias_offset(size_t layer) const { return offsets_[layer] + fan_in(layer) * fan_out(layer); }
  size_t fan_in(size_t layer) const { return spec_.layer_widths[layer]; }
  size_t fan_out(size_t layer) const { return spec_.layer_widths[layer + 1]; }

  bool all_finite() const;
  bool operator==(const MlpParams& o) const { return spec_ == o.spec_ && values_ == o.values_; }

 private:
  MlpSpec spec_;
  std::vector<float> values_;
  std::vector<size_t> offsets_;
};

/// He-uniform weights for relu, Glorot-uniform for tanh; zero biases.
MlpParams init_mlp(const MlpSpec& spec, Rng& rng);

/// Intermediate values kept by a forward pass for the backward pass.
struct ForwardTrace {
  std::vector<MatrixF> layer_inputs;  // input to each layer
  std::vector<MatrixF> pre;           // pre-activation of each layer
  MatrixF output;                     // after activation or head
};

ForwardTrace forward_trace(const MlpParams& params, const MatrixF& x);
MatrixF forward(const MlpParams& params, const MatrixF& x);
std::vector<float> forward(const MlpParams& params, std::span<const float> x);

struct GradientBundle {
  std::vector<float> param_grads;  // same layout as MlpParams::values()
  MatrixF input_grad;              // empty unless requested
};

/// Reverse-mode derivative of sum_rows <upstream, forward(x)>.
GradientBundle backward(const MlpParams& params, const ForwardTrace& trace, const MatrixF& upstream,
                        bool want_input_grad);
GradientBundle backward(const MlpParams& params, const MatrixF& x, const MatrixF& upstream, bool want_input_grad);

/// Number of time-conditioning columns: t, then sin and cos of 2*pi*k*t for k = 1..8.
inline constexpr size_t kTimeFeatureDim = 17;
void write_time_features(float t, std::span<float> out);
/// Returns [x | time features(t_i)] row by row.
MatrixF with_time_features(const MatrixF& x, std::span<const float> t);

}  // namespace fairdiff
