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

#include "mcugen/layer.hpp"

#include <algorithm>

#include "mcugen/errors.hpp"

namespace mcugen {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void require_rank(const Shape& in, std::size_t rank, std::string_view kind) {
  if (in.size() != rank) {
    throw ShapeError(std::string(kind) + " expects a rank-" + std::to_string(rank) +
                     " input, got " + to_string(in));
  }
}

std::size_t checked_length(std::size_t in, std::size_t kernel, std::size_t stride,
                           Padding padding, std::string_view kind) {
  if (kernel == 0 || stride == 0) {
    throw ShapeError(std::string(kind) + " window and stride must be >= 1");
  }
  const std::size_t out = conv_out_length(in, kernel, stride, padding);
  if (out == 0) {
    throw ShapeError(std::string(kind) + " window " + std::to_string(kernel) +
                     " does not fit input length " + std::to_string(in));
  }
  return out;
}

}  // namespace

std::string_view to_string(Activation act) noexcept {
  switch (act) {
    case Activation::kLinear: return "linear";
    case Activation::kRelu: return "relu";
    case Activation::kSigmoid: return "sigmoid";
    case Activation::kTanh: return "tanh";
    case Activation::kSoftmax: return "softmax";
  }
  return "linear";
}

std::string_view to_string(Padding pad) noexcept {
  return pad == Padding::kSame ? "same" : "valid";
}

std::optional<Activation> parse_activation(std::string_view name) noexcept {
  for (Activation a : {Activation::kLinear, Activation::kRelu, Activation::kSigmoid,
                       Activation::kTanh, Activation::kSoftmax}) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<Padding> parse_padding(std::string_view name) noexcept {
  if (name == "valid") return Padding::kValid;
  if (name == "same") return Padding::kSame;
  return std::nullopt;
}

std::string_view kind_name(const LayerKind& kind) noexcept {
  return std::visit(Overloaded{
                        [](const Dense&) { return std::string_view("dense"); },
                        [](const Conv1D&) { return std::string_view("conv1d"); },
                        [](const Conv2D&) { return std::string_view("conv2d"); },
                        [](const MaxPool1D&) { return std::string_view("maxpool1d"); },
                        [](const MaxPool2D&) { return std::string_view("maxpool2d"); },
                        [](const Flatten&) { return std::string_view("flatten"); },
                    },
                    kind);
}

bool has_weights(const LayerKind& kind) noexcept {
  return std::holds_alternative<Dense>(kind) || std::holds_alternative<Conv1D>(kind) ||
         std::holds_alternative<Conv2D>(kind);
}

Activation activation_of(const LayerKind& kind) noexcept {
  if (auto* d = std::get_if<Dense>(&kind)) return d->activation;
  if (auto* c = std::get_if<Conv1D>(&kind)) return c->activation;
  if (auto* c = std::get_if<Conv2D>(&kind)) return c->activation;
  return Activation::kLinear;
}

std::size_t conv_out_length(std::size_t in, std::size_t kernel, std::size_t stride,
                            Padding padding) {
  if (stride == 0) return 0;
  if (padding == Padding::kSame) return (in + stride - 1) / stride;
  if (kernel > in) return 0;
  return (in - kernel) / stride + 1;
}

std::size_t same_pad_before(std::size_t in, std::size_t kernel, std::size_t stride) noexcept {
  const std::size_t out = (in + stride - 1) / stride;
  const std::size_t span = (out - 1) * stride + kernel;
  const std::size_t total = span > in ? span - in : 0;
  return total / 2;
}

WeightShapes expected_weight_shapes(const LayerKind& kind, const Shape& in) {
  return std::visit(
      Overloaded{
          [&](const Dense& d) -> WeightShapes {
            require_rank(in, 1, "dense");
            return {{in[0], d.units}, {d.units}};
          },
          [&](const Conv1D& c) -> WeightShapes {
            require_rank(in, 2, "conv1d");
            return {{c.kernel_size, in[1], c.filters}, {c.filters}};
          },
          [&](const Conv2D& c) -> WeightShapes {
            require_rank(in, 3, "conv2d");
            return {{c.kernel_h, c.kernel_w, in[2], c.filters}, {c.filters}};
          },
          [&](const auto&) -> WeightShapes {
            throw ShapeError(std::string(kind_name(kind)) + " layers carry no weights");
          },
      },
      kind);
}

Shape output_shape(const LayerKind& kind, const Shape& in) {
  Shape out = std::visit(
      Overloaded{
          [&](const Dense& d) -> Shape {
            require_rank(in, 1, "dense");
            if (d.units == 0) throw ShapeError("dense units must be >= 1");
            return {d.units};
          },
          [&](const Conv1D& c) -> Shape {
            require_rank(in, 2, "conv1d");
            if (c.filters == 0) throw ShapeError("conv1d filters must be >= 1");
            return {checked_length(in[0], c.kernel_size, c.stride, c.padding, "conv1d"),
                    c.filters};
          },
          [&](const Conv2D& c) -> Shape {
            require_rank(in, 3, "conv2d");
            if (c.filters == 0) throw ShapeError("conv2d filters must be >= 1");
            return {checked_length(in[0], c.kernel_h, c.stride_h, c.padding, "conv2d"),
                    checked_length(in[1], c.kernel_w, c.stride_w, c.padding, "conv2d"),
                    c.filters};
          },
          [&](const MaxPool1D& p) -> Shape {
            require_rank(in, 2, "maxpool1d");
            return {checked_length(in[0], p.pool_size, p.stride, Padding::kValid, "maxpool1d"),
                    in[1]};
          },
          [&](const MaxPool2D& p) -> Shape {
            require_rank(in, 3, "maxpool2d");
            return {checked_length(in[0], p.pool_h, p.stride_h, Padding::kValid, "maxpool2d"),
                    checked_length(in[1], p.pool_w, p.stride_w, Padding::kValid, "maxpool2d"),
                    in[2]};
          },
          [&](const Flatten&) -> Shape { return {element_count(in)}; },
      },
      kind);
  if (activation_of(kind) == Activation::kSoftmax && out.size() != 1) {
    throw ShapeError("softmax requires a rank-1 output, got " + to_string(out));
  }
  return out;
}

}  // namespace mcugen
