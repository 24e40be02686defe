#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phycnn/tensor.hpp"

namespace phycnn {

enum class Activation { kRelu, kTanh, kLinear };

Activation activation_from_tag(const std::string& tag);
std::string activation_tag(Activation act);

/// Where the k-1 length-preserving zeros go. End padding gives each output
/// step the window [i, i+k-1]; begin padding gives [i-k+1, i] (causal).
enum class Padding { kEnd, kBegin };

Padding padding_from_tag(const std::string& tag);
std::string padding_tag(Padding p);

/// Stride is fixed at 1 and padding at k-1, so temporal length is preserved.
struct ConvLayerSpec {
  std::size_t kernel = 1;
  std::size_t in_features = 1;
  std::size_t filters = 1;
  Activation activation = Activation::kLinear;
  Padding padding = Padding::kEnd;

  std::size_t pad() const { return kernel - 1; }
  void validate() const;
};

struct ConvGrads {
  Tensor3 input;
  std::vector<double> weights;  // [k][Cin][Cout]
  std::vector<double> bias;     // [Cout]
};

/// Pre-activation temporal convolution. weights laid out [k][Cin][Cout],
/// one bias per filter. Output entry (s,i,j) accumulates bias first, then
/// kernel taps in (tap, channel) order.
Tensor3 conv1d_forward(const Tensor3& input, const std::vector<double>& weights,
                       const std::vector<double>& bias, const ConvLayerSpec& spec);

/// Reverse-mode gradients of a scalar loss through conv1d_forward.
ConvGrads conv1d_backward(const Tensor3& upstream, const Tensor3& input,
                          const std::vector<double>& weights, const ConvLayerSpec& spec);

/// Elementwise activation.
Tensor3 activation_forward(const Tensor3& x, Activation act);
/// Upstream gradient times the activation derivative evaluated at the cached
/// pre-activation input. ReLU derivative at 0 is 0.
Tensor3 activation_backward(const Tensor3& upstream, const Tensor3& input, Activation act);

enum class DropoutMode { kTrain, kInfer };

/// Inverted dropout: training zeroes entries with probability `rate` and
/// scales survivors by 1/(1-rate); inference is the identity. The mask is a
/// deterministic function of the seed.
Tensor3 dropout(const Tensor3& x, double rate, DropoutMode mode, std::uint64_t seed);
/// Same mask applied to the upstream gradient (mask regenerated from seed).
Tensor3 dropout_backward(const Tensor3& upstream, double rate, DropoutMode mode,
                         std::uint64_t seed);

struct DenseGrads {
  Tensor3 input;
  std::vector<double> weights;  // [Cin][Cout]
  std::vector<double> bias;     // [Cout]
};

/// Affine map applied independently at every timestep: out = in * W + b.
Tensor3 fc_forward(const Tensor3& input, const std::vector<double>& weights,
                   const std::vector<double>& bias, std::size_t in_features,
                   std::size_t out_features);

DenseGrads fc_backward(const Tensor3& upstream, const Tensor3& input,
                       const std::vector<double>& weights, std::size_t in_features,
                       std::size_t out_features);

/// Temporal derivative per feature: second-order central differences inside,
/// second-order one-sided stencils at both boundaries. Exact on linear ramps.
Tensor3 finite_difference(const Tensor3& y, double dt);

/// Adjoint (transpose) of the finite_difference stencil; the reverse-mode
/// gradient of the differentiator.
Tensor3 finite_difference_adjoint(const Tensor3& upstream, double dt);

/// (1/N) * sum((a-b)^2), N = total entry count.
double mse(const Tensor3& a, const Tensor3& b);

}  // namespace phycnn
