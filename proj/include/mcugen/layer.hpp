// Copyright 2026 The mcugen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "mcugen/tensor.hpp"

namespace mcugen {

/// Id used in LayerSpec::inputs to refer to the network input.
inline constexpr std::string_view kInputId = "__input__";

enum class Activation { kLinear, kRelu, kSigmoid, kTanh, kSoftmax };

enum class Padding { kValid, kSame };

std::string_view to_string(Activation act) noexcept;
std::string_view to_string(Padding pad) noexcept;
std::optional<Activation> parse_activation(std::string_view name) noexcept;
std::optional<Padding> parse_padding(std::string_view name) noexcept;

struct Dense {
  std::size_t units = 0;
  Activation activation = Activation::kLinear;
  friend bool operator==(const Dense&, const Dense&) = default;
};

struct Conv1D {
  std::size_t filters = 0;
  std::size_t kernel_size = 0;
  std::size_t stride = 1;
  Padding padding = Padding::kValid;
  Activation activation = Activation::kLinear;
  friend bool operator==(const Conv1D&, const Conv1D&) = default;
};

struct Conv2D {
  std::size_t filters = 0;
  std::size_t kernel_h = 0;
  std::size_t kernel_w = 0;
  std::size_t stride_h = 1;
  std::size_t stride_w = 1;
  Padding padding = Padding::kValid;
  Activation activation = Activation::kLinear;
  friend bool operator==(const Conv2D&, const Conv2D&) = default;
};

struct MaxPool1D {
  std::size_t pool_size = 0;
  std::size_t stride = 0;
  friend bool operator==(const MaxPool1D&, const MaxPool1D&) = default;
};

struct MaxPool2D {
  std::size_t pool_h = 0;
  std::size_t pool_w = 0;
  std::size_t stride_h = 0;
  std::size_t stride_w = 0;
  friend bool operator==(const MaxPool2D&, const MaxPool2D&) = default;
};

struct Flatten {
  friend bool operator==(const Flatten&, const Flatten&) = default;
};

using LayerKind = std::variant<Dense, Conv1D, Conv2D, MaxPool1D, MaxPool2D, Flatten>;

struct LayerSpec {
  std::string id;
  LayerKind kind;
  std::vector<std::string> inputs;

  friend bool operator==(const LayerSpec&, const LayerSpec&) = default;
};

/// Canonical schema name of a layer kind ("dense", "conv1d", ...).
std::string_view kind_name(const LayerKind& kind) noexcept;

/// Dense and convolution kinds carry a kernel and a bias.
bool has_weights(const LayerKind& kind) noexcept;

/// Activation of the layer, or linear for kinds without one.
Activation activation_of(const LayerKind& kind) noexcept;

struct LayerWeights {
  TensorData kernel;
  TensorData bias;
  friend bool operator==(const LayerWeights&, const LayerWeights&) = default;
};

/// Expected kernel/bias shapes for a weighted layer applied to `input_shape`.
/// Throws ShapeError if the layer cannot accept that input rank.
struct WeightShapes {
  Shape kernel;
  Shape bias;
};
WeightShapes expected_weight_shapes(const LayerKind& kind, const Shape& input_shape);

/// Output shape of a single layer (channels-last). Throws ShapeError on rank
/// mismatch, non-positive output length, or softmax on a rank>1 output.
Shape output_shape(const LayerKind& kind, const Shape& input_shape);

/// Pad amount before the first element along one axis for `same` padding
/// (pad_total = max((out-1)*stride + kernel - in, 0), left = floor(total/2)).
std::size_t same_pad_before(std::size_t in, std::size_t kernel, std::size_t stride) noexcept;

/// Output length along one axis.
std::size_t conv_out_length(std::size_t in, std::size_t kernel, std::size_t stride,
                            Padding padding);

}  // namespace mcugen
